//! The algebra `Gamma` of bubbles, freely generated by the odd `O_r`.
//!
//! Even generators are eliminated with
//! `O_2r = (-1)^(r-1) O_r^2 / 2 + sum_{s<r} (-1)^(s-1) O_s O_(2r-s)`,
//! which is the coefficientwise form of `O(u) O(-u) = 1`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use qseries::{BigInt, BigRational};

/// A monomial in the odd generators, stored as a sorted list of indices.
pub type Monomial = Vec<u32>;

/// A polynomial in `O_1, O_3, O_5, ...` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElem {
    terms: BTreeMap<Monomial, BigRational>,
}

thread_local! {
    static GENERATORS: RefCell<HashMap<u32, GammaElem>> = RefCell::new(HashMap::new());
    static PUSHES: RefCell<HashMap<u32, Vec<GammaElem>>> = RefCell::new(HashMap::new());
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl GammaElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(mut m: Monomial, c: BigRational) -> Self {
        m.sort_unstable();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// The generator `O_r`, reduced to odd generators. `O_0 = 1`.
    pub fn generator(r: u32) -> Self {
        if r == 0 {
            return Self::one();
        }
        if r % 2 == 1 {
            return Self::monomial(vec![r], BigRational::one());
        }
        if let Some(g) = GENERATORS.with(|c| c.borrow().get(&r).cloned()) {
            return g;
        }
        let k = r / 2;
        let sign = |e: u32| if e % 2 == 0 { 1 } else { -1 };
        let ok = Self::generator(k);
        let mut out = (&ok * &ok).scale(&BigRational::new(
            BigInt::from(sign(k - 1)),
            BigInt::from(2),
        ));
        for s in 1..k {
            let term = &Self::generator(s) * &Self::generator(r - s);
            out = &out + &term.scale(&rat(sign(s - 1)));
        }
        GENERATORS.with(|c| c.borrow_mut().insert(r, out.clone()));
        out
    }

    /// The bubble with `k` dots on its right: `t` for `k = 0`, else `-(-1)^t O_k / 2`.
    pub fn bubble(k: u32, t: u8) -> Self {
        if k == 0 {
            return Self::constant(rat(t as i64));
        }
        let s = if t % 2 == 0 { -1 } else { 1 };
        Self::generator(k).scale(&BigRational::new(BigInt::from(s), BigInt::from(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Degree of a monomial: `deg O_r = 2r`.
    pub fn monomial_degree(m: &[u32]) -> i64 {
        m.iter().map(|&r| 2 * r as i64).sum()
    }

    /// Image under `O(u) -> ((u-x)/(u+x))^2 O(u)`, as coefficients of `x^j`.
    ///
    /// This moves a bubble from the left of a strand to its right, leaving
    /// `x^j` on the strand.
    pub fn push_across(&self) -> Vec<GammaElem> {
        let mut out: Vec<GammaElem> = Vec::new();
        for (m, c) in &self.terms {
            let mut acc = vec![GammaElem::constant(c.clone())];
            for &r in m {
                let p = push_generator(r);
                let mut next = vec![GammaElem::zero(); acc.len() + p.len() - 1];
                for (i, a) in acc.iter().enumerate() {
                    for (j, b) in p.iter().enumerate() {
                        next[i + j] = &next[i + j] + &(a * b);
                    }
                }
                acc = next;
            }
            if out.len() < acc.len() {
                out.resize(acc.len(), GammaElem::zero());
            }
            for (j, a) in acc.into_iter().enumerate() {
                out[j] = &out[j] + &a;
            }
        }
        while out.last().is_some_and(|g| g.is_zero()) {
            out.pop();
        }
        out
    }
}

/// `phi(O_r) = sum_j c_j x^j O_(r-j)` with `c_0 = 1`, `c_j = (-1)^j 4j`.
fn push_generator(r: u32) -> Vec<GammaElem> {
    if let Some(p) = PUSHES.with(|c| c.borrow().get(&r).cloned()) {
        return p;
    }
    let p: Vec<GammaElem> = (0..=r)
        .map(|j| {
            let c = if j == 0 {
                1
            } else if j % 2 == 0 {
                4 * j as i64
            } else {
                -4 * j as i64
            };
            GammaElem::generator(r - j).scale(&rat(c))
        })
        .collect();
    PUSHES.with(|c| c.borrow_mut().insert(r, p.clone()));
    p
}

impl std::ops::Add for &GammaElem {
    type Output = GammaElem;
    fn add(self, o: &GammaElem) -> GammaElem {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl std::ops::Sub for &GammaElem {
    type Output = GammaElem;
    fn sub(self, o: &GammaElem) -> GammaElem {
        self + &o.scale(&rat(-1))
    }
}

impl std::ops::Mul for &GammaElem {
    type Output = GammaElem;
    fn mul(self, o: &GammaElem) -> GammaElem {
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                *terms.entry(m).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        GammaElem { terms }
    }
}

impl fmt::Display for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mono = monomial_string(m);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Renders a monomial as `O1^2*O3`, or the empty string for `1`.
pub fn monomial_string(m: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("O{}", m[i]));
        } else {
            parts.push(format!("O{}^{}", m[i], j - i));
        }
        i = j;
    }
    parts.join("*")
}

/// All monomials in the odd generators of degree `d` (`deg O_r = 2r`).
pub fn odd_monomials(d: i64) -> Vec<Monomial> {
    if d < 0 || d % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        let mut r = max.min(left);
        if r % 2 == 0 {
            r = r.saturating_sub(1);
        }
        while r >= 1 {
            cur.push(r);
            rec(left - r, r, cur, out);
            cur.pop();
            if r < 2 {
                break;
            }
            r -= 2;
        }
    }
    let half = (d / 2) as u32;
    rec(half, half, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ogf(n: u32, sign: i64) -> Vec<GammaElem> {
        (0..=n)
            .map(|r| GammaElem::generator(r).scale(&rat(if r % 2 == 1 { sign } else { 1 })))
            .collect()
    }

    #[test]
    fn even_generators_satisfy_grassmannian_relation() {
        let a = ogf(8, 1);
        let b = ogf(8, -1);
        for n in 1..=8usize {
            let mut s = GammaElem::zero();
            for i in 0..=n {
                s = &s + &(&a[i] * &b[n - i]);
            }
            assert!(s.is_zero(), "coefficient {n}: {s}");
        }
    }

    #[test]
    fn o2_is_half_o1_squared() {
        assert_eq!(
            GammaElem::generator(2),
            GammaElem::monomial(
                vec![1, 1],
                BigRational::new(BigInt::from(1), BigInt::from(2))
            )
        );
    }

    #[test]
    fn odd_monomial_counts_match_odd_partitions() {
        // Partitions of k into odd parts: 1,1,1,2,2,3,4,5,6 for k=0..8.
        let counts: Vec<usize> = (0..=8).map(|k| odd_monomials(2 * k).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn push_is_multiplicative_and_preserves_grassmannian() {
        let g = &GammaElem::generator(1) * &GammaElem::generator(3);
        let p = g.push_across();
        let p1 = GammaElem::generator(1).push_across();
        let p3 = GammaElem::generator(3).push_across();
        for j in 0..p.len() {
            let mut s = GammaElem::zero();
            for i in 0..=j {
                if i < p1.len() && j - i < p3.len() {
                    s = &s + &(&p1[i] * &p3[j - i]);
                }
            }
            assert_eq!(s, p[j]);
        }
    }

    #[test]
    fn bubble_values() {
        assert_eq!(GammaElem::bubble(0, 1), GammaElem::one());
        assert!(GammaElem::bubble(0, 0).is_zero());
        assert_eq!(
            GammaElem::bubble(1, 0),
            GammaElem::monomial(vec![1], BigRational::new(BigInt::from(-1), BigInt::from(2)))
        );
    }
}
