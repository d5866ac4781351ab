//! Dense integer polynomials used internally for gcd computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Ascending coefficient vector with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DensePoly(pub Vec<BigInt>);

impl DensePoly {
    /// Converts a Laurent polynomial with non-negative exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let Some(top) = p.max_exp() else {
            return Self(Vec::new());
        };
        debug_assert!(p.is_polynomial());
        let mut v = vec![BigInt::zero(); top as usize + 1];
        for (e, c) in p.terms() {
            v[e as usize] = c.clone();
        }
        Self(v)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.0.last().unwrap().is_negative() {
            c = -c;
        }
        Self(self.0.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dd = d.degree();
        let lc = d.0.last().unwrap().clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lr = r.0.last().unwrap().clone();
            for c in r.0.iter_mut() {
                *c *= &lc;
            }
            for (i, c) in d.0.iter().enumerate() {
                r.0[i + shift] -= &lr * c;
            }
            r.trim();
            // Keep coefficient growth in check; the remainder is only needed up to units.
            let g = r.content();
            if !g.is_zero() && !g.is_one() {
                for c in r.0.iter_mut() {
                    *c = &*c / &g;
                }
            }
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient `self / d`, `None` if `d` does not divide over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let dd = d.degree();
        let lc = d.0.last().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let (c, rem) = r.0.last().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, x) in d.0.iter().enumerate() {
                r.0[i + shift] -= &c * x;
            }
            q[shift] = c;
            r.trim();
        }
        let mut out = Self(q);
        out.trim();
        r.is_zero().then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> DensePoly {
        let mut d = DensePoly(v.iter().map(|&x| BigInt::from(x)).collect());
        d.trim();
        d
    }

    #[test]
    fn gcd_of_products() {
        // (q-1)(q+2) and (q-1)(q-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&p(&[4])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, 1, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[2, 1])));
        assert_eq!(a.div_exact(&p(&[0, 1])), None);
    }
}
