//! Integer polynomials in `x_1, ..., x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use qseries::BigInt;
use serde::{Deserialize, Serialize};

/// A polynomial in `n` variables stored as exponent vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MPoly {
    pub n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], 1)
    }

    pub fn monomial<T: Into<BigInt>>(exps: Vec<u32>, c: T) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c.into());
        p
    }

    /// The variable `x_i` with `i` counted from 1.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.n);
        if c == BigInt::from(0) {
            return;
        }
        let entry = self
            .terms
            .entry(exps.clone())
            .or_insert_with(|| BigInt::from(0));
        *entry += c;
        if *entry == BigInt::from(0) {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree in the `x` variables, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Applies the transposition `s_i` swapping `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Elementary symmetric polynomial `e_r(x_1, ..., x_n)`.
    pub fn elementary(n: usize, r: usize) -> Self {
        let mut out = Self::zero(n);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == r {
                let e = (0..n).map(|i| (mask >> i) & 1).collect();
                out.add_term(e, BigInt::from(1));
            }
        }
        out
    }

    /// Complete homogeneous symmetric polynomial `h_r(x_1, ..., x_k)` in `n` variables.
    pub fn complete(n: usize, k: usize, r: u32) -> Self {
        let mut out = Self::zero(n);
        let mut e = vec![0u32; n];
        fn rec(pos: usize, k: usize, left: u32, e: &mut Vec<u32>, out: &mut MPoly) {
            if pos + 1 == k {
                e[pos] = left;
                out.add_term(e.clone(), BigInt::from(1));
                e[pos] = 0;
                return;
            }
            for a in 0..=left {
                e[pos] = a;
                rec(pos + 1, k, left - a, e, out);
            }
            e[pos] = 0;
        }
        if k == 0 {
            if r == 0 {
                out.add_term(e, BigInt::from(1));
            }
            return out;
        }
        rec(0, k, r, &mut e, &mut out);
        out
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Writes `x1^2x2` style monomials; the empty monomial is written as nothing.
pub(crate) fn monomial_string(e: &[u32]) -> String {
    let mut s = String::new();
    for (i, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => s.push_str(&format!("x{}", i + 1)),
            _ => s.push_str(&format!("x{}^{}", i + 1, a)),
        }
    }
    s
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let m = monomial_string(e);
            let neg = *c < BigInt::from(0);
            let abs = if neg { -c } else { c.clone() };
            let sep = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            if m.is_empty() {
                write!(f, "{sep}{abs}")?;
            } else if abs == BigInt::from(1) {
                write!(f, "{sep}{m}")?;
            } else {
                write!(f, "{sep}{abs}{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_functions() {
        let e2 = MPoly::elementary(3, 2);
        assert_eq!(e2.terms().count(), 3);
        let h2 = MPoly::complete(3, 2, 2);
        assert_eq!(h2.terms().count(), 3);
        assert_eq!(MPoly::complete(3, 0, 0), MPoly::one(3));
        assert_eq!(e2.swap(1), e2);
    }

    #[test]
    fn display() {
        let p = &MPoly::var(2, 1) + &MPoly::var(2, 2);
        assert_eq!(p.to_string(), "x1 + x2");
    }
}
