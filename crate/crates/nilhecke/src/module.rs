//! The irreducible module `L_n(n)`: polynomials modulo positive-degree symmetric ones.
//!
//! A basis is `x^r u` with `0 <= r_k <= n - k`. Reduction uses the Groebner
//! basis `h_{n-k+1}(x_1, ..., x_k)` whose leading monomial is `x_k^(n-k+1)`.
//! The generator `u` sits in degree `-n(n-1)/2`, so the graded dimension is `[n]!`.

use std::collections::BTreeMap;

use qseries::{BigInt, LaurentPoly};
use serde::{Deserialize, Serialize};

use crate::algebra::NHElement;
use crate::error::NhError;
use crate::poly::MPoly;

/// A vector `sum_r c_r x^r u` of `L_n(n)` in reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LnVector {
    pub n: usize,
    coords: BTreeMap<Vec<u32>, BigInt>,
}

impl LnVector {
    /// The generator `u`.
    pub fn generator(n: usize) -> Self {
        Self::from_poly(&MPoly::one(n))
    }

    /// The image of `f u`.
    pub fn from_poly(f: &MPoly) -> Self {
        let r = reduce(f);
        Self {
            n: f.n,
            coords: r.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn to_poly(&self) -> MPoly {
        let mut p = MPoly::zero(self.n);
        for (e, c) in &self.coords {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn coords(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// True when `r_k <= n - k` for every `k`.
pub fn is_reduced_exponent(e: &[u32]) -> bool {
    let n = e.len();
    e.iter().enumerate().all(|(i, &r)| r as usize <= n - 1 - i)
}

/// Normal form of `f` modulo the ideal generated by positive-degree symmetric polynomials.
pub fn reduce(f: &MPoly) -> MPoly {
    let n = f.n;
    let gb: Vec<MPoly> = (1..=n)
        .map(|k| MPoly::complete(n, k, (n - k + 1) as u32))
        .collect();
    let mut p = f.clone();
    loop {
        let bad = p
            .terms()
            .filter(|(e, _)| !is_reduced_exponent(e))
            .max_by_key(|(e, _)| e.iter().rev().cloned().collect::<Vec<u32>>())
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = bad else {
            return p;
        };
        let k = (1..=n)
            .find(|&k| e[k - 1] as usize > n - k)
            .expect("unreduced exponent");
        let mut m = e.clone();
        m[k - 1] -= (n - k + 1) as u32;
        let sub = &MPoly::monomial(m, c) * &gb[k - 1];
        p = &p - &sub;
    }
}

/// The action of a nil-Hecke element: `x` multiplies and `tau_i` acts by `d_i`.
pub fn ln_action(a: &NHElement, v: &LnVector) -> Result<LnVector, NhError> {
    if a.n != v.n {
        return Err(NhError::StrandMismatch(a.n, v.n));
    }
    Ok(LnVector::from_poly(&a.act(&v.to_poly())?))
}

/// All reduced exponent vectors.
pub fn ln_basis(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for k in 1..=n {
        let mut next = Vec::new();
        for e in &out {
            for r in 0..=(n - k) as u32 {
                let mut f: Vec<u32> = e.clone();
                f.push(r);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// `sum_r q^-(2|r| - n(n-1)/2)` over the basis.
pub fn ln_graded_dimension(n: usize) -> LaurentPoly {
    let shift = (n * n.saturating_sub(1) / 2) as i64;
    let mut p = LaurentPoly::zero();
    for e in ln_basis(n) {
        let deg = 2 * e.iter().sum::<u32>() as i64 - shift;
        p.add_term(-deg, BigInt::from(1));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    #[test]
    fn lowest_weight_relations() {
        let u = LnVector::generator(2);
        assert!(ln_action(&NHElement::tau(2, 1), &u).unwrap().is_zero());
        let sym = NHElement::x(2, 1).add(&NHElement::x(2, 2)).unwrap();
        assert!(ln_action(&sym, &u).unwrap().is_zero());
        let a = NHElement::tau_w(perm::longest(2))
            .multiply(&NHElement::x(2, 1))
            .unwrap();
        assert_eq!(ln_action(&a, &u).unwrap(), u);
    }

    #[test]
    fn reduction_kills_symmetric_polynomials() {
        for n in 1..=4 {
            for r in 1..=n {
                assert!(reduce(&MPoly::elementary(n, r)).is_zero());
            }
        }
    }

    #[test]
    fn basis_size() {
        assert_eq!(ln_basis(4).len(), 24);
        assert_eq!(ln_graded_dimension(3), qseries::qfactorial(3).unwrap());
    }
}
