//! Elements of the nil-Hecke algebra in the basis `x^a tau_w`.

use std::collections::BTreeMap;
use std::fmt;

use qseries::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::NhError;
use crate::perm::{self, Perm};
use crate::poly::{monomial_string, MPoly};

/// `d_i(x_i^a x_{i+1}^b m)` computed monomial by monomial.
pub(crate) fn divided_difference_fast(i: usize, p: &MPoly) -> MPoly {
    let mut out = MPoly::zero(p.n);
    for (e, c) in p.terms() {
        let (a, b) = (e[i - 1], e[i]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
        // (x^hi y^lo - x^lo y^hi) / (x - y) = sum_{k=0}^{hi-lo-1} x^(hi-1-k) y^(lo+k)
        for k in 0..(hi - lo) {
            let mut f = e.clone();
            f[i - 1] = hi - 1 - k;
            f[i] = lo + k;
            out.add_term(f, c * sign);
        }
    }
    out
}

/// A `Z`-linear combination of basis elements `x^a tau_w` of the nil-Hecke algebra on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NHElement {
    pub n: usize,
    terms: BTreeMap<(Vec<u32>, Perm), BigInt>,
}

impl NHElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(vec![0; n], perm::identity(n))
    }

    /// The basis element `x^a tau_w`.
    pub fn basis(a: Vec<u32>, w: Perm) -> Self {
        let mut e = Self::zero(a.len());
        e.add_term(a, w, BigInt::from(1));
        e
    }

    /// `x_i`, counted from 1.
    pub fn x(n: usize, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i - 1] = 1;
        Self::basis(a, perm::identity(n))
    }

    /// `tau_i`, counted from 1.
    pub fn tau(n: usize, i: usize) -> Self {
        Self::basis(vec![0; n], perm::right_mul(&perm::identity(n), i))
    }

    /// `tau_w` for a permutation `w`.
    pub fn tau_w(w: Perm) -> Self {
        Self::basis(vec![0; w.len()], w)
    }

    /// A polynomial viewed as an element.
    pub fn from_poly(p: &MPoly) -> Self {
        let mut e = Self::zero(p.n);
        for (a, c) in p.terms() {
            e.add_term(a.clone(), perm::identity(p.n), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, a: Vec<u32>, w: Perm, c: BigInt) {
        if c == BigInt::from(0) {
            return;
        }
        let key = (a, w);
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| BigInt::from(0));
        *entry += c;
        if *entry == BigInt::from(0) {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, Perm), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees `2|a| - 2 l(w)` of the terms, deduplicated.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self
            .terms
            .keys()
            .map(|(a, w)| 2 * a.iter().sum::<u32>() as i64 - 2 * perm::length(w) as i64)
            .collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn add(&self, other: &Self) -> Result<Self, NhError> {
        check(self.n, other.n)?;
        let mut out = self.clone();
        for ((a, w), c) in &other.terms {
            out.add_term(a.clone(), w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, w), v) in &self.terms {
            out.add_term(a.clone(), w.clone(), v * c);
        }
        out
    }

    /// Rewrites `tau_w * f` as a sum of `g_u tau_u`.
    fn straighten(w: &[u8], f: &MPoly) -> Vec<(MPoly, Perm)> {
        let n = f.n;
        let mut cur: BTreeMap<Perm, MPoly> = BTreeMap::new();
        cur.insert(perm::identity(n), f.clone());
        for &i in perm::reduced_word(w).iter().rev() {
            let mut next: BTreeMap<Perm, MPoly> = BTreeMap::new();
            for (u, g) in cur {
                // tau_i g tau_u = s_i(g) tau_i tau_u + d_i(g) tau_u
                let su = perm::left_mul(i, &u);
                if perm::length(&su) > perm::length(&u) {
                    let entry = next.entry(su).or_insert_with(|| MPoly::zero(n));
                    *entry = &*entry + &g.swap(i);
                }
                let d = divided_difference_fast(i, &g);
                if !d.is_zero() {
                    let entry = next.entry(u).or_insert_with(|| MPoly::zero(n));
                    *entry = &*entry + &d;
                }
            }
            cur = next;
        }
        cur.into_iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(u, g)| (g, u))
            .collect()
    }

    /// `tau_u tau_v`, zero unless lengths add.
    fn tau_product(u: &[u8], v: &[u8]) -> Option<Perm> {
        let uv: Perm = v.iter().map(|&j| u[j as usize - 1]).collect();
        (perm::length(&uv) == perm::length(u) + perm::length(v)).then_some(uv)
    }

    /// The product `self * other`, straightened into the basis.
    pub fn multiply(&self, other: &Self) -> Result<Self, NhError> {
        check(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for ((a, w), c) in &self.terms {
            let xa = MPoly::monomial(a.clone(), 1);
            for ((b, v), d) in &other.terms {
                let coeff = c * d;
                for (g, u) in Self::straighten(w, &MPoly::monomial(b.clone(), 1)) {
                    let Some(uv) = Self::tau_product(&u, v) else {
                        continue;
                    };
                    for (e, k) in (&xa * &g).terms() {
                        out.add_term(e.clone(), uv.clone(), k * &coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The action on the polynomial representation: `x` multiplies and `tau_i` is `d_i`.
    pub fn act(&self, f: &MPoly) -> Result<MPoly, NhError> {
        check(self.n, f.n)?;
        let mut out = MPoly::zero(self.n);
        for ((a, w), c) in &self.terms {
            let mut g = f.clone();
            for &i in perm::reduced_word(w).iter().rev() {
                g = crate::rep::demazure(i, &g)?;
            }
            let term = &MPoly::monomial(a.clone(), c.clone()) * &g;
            out = &out + &term;
        }
        Ok(out)
    }
}

fn check(a: usize, b: usize) -> Result<(), NhError> {
    if a == b {
        Ok(())
    } else {
        Err(NhError::StrandMismatch(a, b))
    }
}

/// `e_n = x^rho tau_{w_n}` with `rho = (n-1, ..., 1, 0)`.
pub fn e_idempotent(n: usize) -> NHElement {
    let rho: Vec<u32> = (0..n as u32).rev().collect();
    NHElement::basis(rho, perm::longest(n))
}

impl fmt::Display for NHElement {
    /// E.g. `x1 t[1] + 1`, where `t[i j ...]` is `tau` of the reduced word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, w), c)) in self.terms.iter().enumerate() {
            let mut body = monomial_string(a);
            let word = perm::reduced_word(w);
            if !word.is_empty() {
                let s: Vec<String> = word.iter().map(ToString::to_string).collect();
                body.push_str(&format!("t[{}]", s.join(" ")));
            }
            let neg = *c < BigInt::from(0);
            let abs = if neg { -c } else { c.clone() };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            if body.is_empty() {
                write!(f, "{sep}{abs}")?;
            } else if abs == BigInt::from(1) {
                write!(f, "{sep}{body}")?;
            } else {
                write!(f, "{sep}{abs}{body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let t1 = NHElement::tau(2, 1);
        let x1 = NHElement::x(2, 1);
        let x2 = NHElement::x(2, 2);
        // tau_1 x_1 = 1 + x_2 tau_1
        let lhs = t1.multiply(&x1).unwrap();
        let rhs = NHElement::one(2).add(&x2.multiply(&t1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(t1.multiply(&t1).unwrap().is_zero());
    }

    #[test]
    fn small_idempotents() {
        assert_eq!(e_idempotent(1), NHElement::one(1));
        let e2 = e_idempotent(2);
        assert_eq!(e2, NHElement::basis(vec![1, 0], vec![2, 1]));
        assert_eq!(e2.multiply(&e2).unwrap(), e2);
        let e3 = e_idempotent(3);
        assert_eq!(e3, NHElement::basis(vec![2, 1, 0], vec![3, 2, 1]));
        assert_eq!(e3.multiply(&e3).unwrap(), e3);
        assert_eq!(e2.degrees(), vec![0]);
    }

    #[test]
    fn mismatched_strands() {
        assert_eq!(
            NHElement::one(2).multiply(&NHElement::one(3)),
            Err(NhError::StrandMismatch(2, 3))
        );
    }
}
