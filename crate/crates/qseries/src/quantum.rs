//! Quantum integers, factorials and related products.

use serde::{Deserialize, Serialize};

use crate::error::QError;
use crate::laurent::LaurentPoly;
use crate::rational::RationalQ;

/// The balanced quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: i64) -> Result<LaurentPoly, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    Ok(LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1))))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn qfactorial(n: i64) -> Result<LaurentPoly, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    let mut acc = LaurentPoly::one();
    for k in 2..=n {
        acc = &acc * &qint(k)?;
    }
    Ok(acc)
}

/// The Gaussian binomial `[n choose k]` in balanced form.
pub fn qbinomial(n: i64, k: i64) -> Result<LaurentPoly, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    if k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    // Pascal rule [n,k] = q^k [n-1,k] + q^(k-n) [n-1,k-1].
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); m as usize + 1];
        for j in 0..=m {
            let mut v = LaurentPoly::zero();
            if j >= 1 {
                v += &row[(j - 1) as usize].shift(j - m);
            }
            if j < m {
                v += &row[j as usize].shift(j);
            }
            next[j as usize] = v;
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// The unbalanced quantum integer `{n} = 1 + q + ... + q^(n-1)`.
pub fn qbrace(n: i64) -> Result<LaurentPoly, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    Ok(LaurentPoly::from_terms((0..n).map(|k| (k, 1))))
}

/// `prod_{k=1}^{n} 1 / (1 - q^(-2k))`.
pub fn inv_qpochhammer(n: i64) -> Result<RationalQ, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    let mut den = LaurentPoly::one();
    for k in 1..=n {
        den = &den * &(&LaurentPoly::one() - &LaurentPoly::q_pow(-2 * k));
    }
    RationalQ::new(LaurentPoly::one(), den)
}

/// A quantum integer together with its index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumInt {
    pub n: i64,
    pub value: LaurentPoly,
}

impl QuantumInt {
    pub fn new(n: i64) -> Result<Self, QError> {
        Ok(Self { n, value: qint(n)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_quantum_integers() {
        assert!(qint(0).unwrap().is_zero());
        assert_eq!(qint(2).unwrap().to_string(), "q + q^-1");
        assert_eq!(qint(3).unwrap().to_string(), "q^2 + 1 + q^-2");
        assert_eq!(qint(-1), Err(QError::NegativeArgument(-1)));
    }

    #[test]
    fn small_factorials() {
        assert!(qfactorial(0).unwrap().is_one());
        assert_eq!(qfactorial(2).unwrap().to_string(), "q + q^-1");
        assert_eq!(
            qfactorial(3).unwrap().to_string(),
            "q^3 + 2q + 2q^-1 + q^-3"
        );
        assert!(qfactorial(-2).is_err());
    }

    #[test]
    fn binomials_match_factorial_quotient() {
        for n in 0..7 {
            for k in 0..=n {
                let lhs = &(&qbinomial(n, k).unwrap() * &qfactorial(k).unwrap())
                    * &qfactorial(n - k).unwrap();
                assert_eq!(lhs, qfactorial(n).unwrap());
            }
        }
    }

    #[test]
    fn brace_and_pochhammer() {
        assert_eq!(qbrace(3).unwrap().eval_one(), BigInt::from(3));
        let p = inv_qpochhammer(1).unwrap();
        assert_eq!(p, RationalQ::inv_one_minus_q_pow(-2));
        assert!(inv_qpochhammer(0).unwrap().is_one());
    }

    #[test]
    fn quantum_int_struct() {
        let v = QuantumInt::new(4).unwrap();
        assert!(v.value.is_bar_invariant());
        assert_eq!(v.value.eval_one(), BigInt::from(4));
    }
}
