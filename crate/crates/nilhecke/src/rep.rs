//! The polynomial representation, used as an independent oracle.

use std::collections::BTreeMap;

use qseries::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::NhError;
use crate::poly::MPoly;

/// A polynomial on which the nil-Hecke algebra acts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRep {
    pub n: usize,
    pub value: MPoly,
}

/// Divides `p` by `x_i - x_{i+1}` exactly, by long division in `x_i`.
fn divide_by_difference(i: usize, p: &MPoly) -> Result<MPoly, NhError> {
    let n = p.n;
    // Group by the exponent of x_i; divide from the top power downward.
    let mut rem: BTreeMap<Vec<u32>, BigInt> =
        p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let mut quot = MPoly::zero(n);
    while let Some((e, c)) = rem
        .iter()
        .filter(|(e, _)| e[i - 1] > 0)
        .max_by_key(|(e, _)| (e[i - 1], (*e).clone()))
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        // c x_i^a m = c x_i^(a-1) m (x_i - x_{i+1}) + c x_i^(a-1) x_{i+1} m
        let mut qe = e.clone();
        qe[i - 1] -= 1;
        quot.add_term(qe.clone(), c.clone());
        rem.remove(&e);
        let mut carry = qe;
        carry[i] += 1;
        let entry = rem.entry(carry.clone()).or_insert_with(|| BigInt::from(0));
        *entry += &c;
        if *entry == BigInt::from(0) {
            rem.remove(&carry);
        }
    }
    if rem.values().any(|c| *c != BigInt::from(0)) {
        return Err(NhError::InexactDivision);
    }
    Ok(quot)
}

/// The Demazure operator `d_i(f) = (f - s_i f) / (x_i - x_{i+1})`.
pub fn demazure(i: usize, f: &MPoly) -> Result<MPoly, NhError> {
    if i == 0 || i >= f.n {
        return Err(NhError::IndexOutOfRange(i, f.n));
    }
    divide_by_difference(i, &(f - &f.swap(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::divided_difference_fast;

    fn x(i: usize) -> MPoly {
        MPoly::var(2, i)
    }

    #[test]
    fn small_demazure_values() {
        assert_eq!(demazure(1, &x(1)).unwrap(), MPoly::one(2));
        assert!(demazure(1, &(&x(1) * &x(2))).unwrap().is_zero());
        assert_eq!(demazure(1, &(&x(1) * &x(1))).unwrap(), &x(1) + &x(2));
        assert!(demazure(2, &x(1)).is_err());
    }

    #[test]
    fn division_matches_monomial_formula() {
        let f = &(&(&x(1) * &x(1)) * &x(1)) - &(&x(2) * &x(2)).scale(&BigInt::from(3));
        assert_eq!(demazure(1, &f).unwrap(), divided_difference_fast(1, &f));
    }
}
