//! Truncated Laurent series in `q^-1` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::QError;
use crate::laurent::LaurentPoly;
use crate::rational::RationalQ;

/// A series `sum_{e > cutoff} c_e q^e + O(q^cutoff)`.
///
/// Precision is measured in steps of `q^-2` below `top`: a series with
/// precision `p` knows every exponent `e` with `top - 2p < e <= top`.
/// Arithmetic tracks the absolute cutoff, which is never looser than the
/// minimum of the operand precisions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSeriesQinv {
    top: i64,
    cutoff: i64,
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentSeriesQinv {
    /// The zero series known for all exponents above `cutoff`.
    pub fn zero_with_cutoff(top: i64, cutoff: i64) -> Self {
        Self {
            top: top.max(cutoff),
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    /// Truncates a Laurent polynomial to `precision` steps below its top term.
    pub fn from_laurent(p: &LaurentPoly, precision: i64) -> Self {
        let top = p.max_exp().unwrap_or(0);
        Self::from_laurent_with_cutoff(p, top, top - 2 * precision)
    }

    /// Truncates a Laurent polynomial at an absolute cutoff.
    pub fn from_laurent_with_cutoff(p: &LaurentPoly, top: i64, cutoff: i64) -> Self {
        let terms = p
            .terms()
            .filter(|(e, _)| *e > cutoff)
            .map(|(e, c)| (e, BigRational::from_integer(c.clone())))
            .collect();
        Self {
            top: top.max(p.max_exp().unwrap_or(top)),
            cutoff,
            terms,
        }
    }

    /// Builds a series from explicit coefficients of `q^top, q^(top-1), ...`.
    pub fn from_coeffs(top: i64, coeffs: &[BigRational], cutoff: i64) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (top - i as i64, c.clone()))
            .filter(|(e, c)| *e > cutoff && !c.is_zero())
            .collect();
        Self { top, cutoff, terms }
    }

    pub fn top_exponent(&self) -> i64 {
        self.top
    }

    /// Largest unknown exponent: the series is exact above it.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Number of `q^-2` steps known below the top exponent.
    pub fn precision(&self) -> i64 {
        (self.top - self.cutoff + 1).div_euclid(2)
    }

    /// Coefficient of `q^e`, `None` when `e` is at or below the cutoff.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        (e > self.cutoff).then(|| {
            self.terms
                .get(&e)
                .cloned()
                .unwrap_or_else(BigRational::zero)
        })
    }

    /// Nonzero known terms in decreasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    /// Coefficients of `q^top, q^(top-1), ...` down to the cutoff.
    pub fn coeff_vec(&self) -> Vec<BigRational> {
        ((self.cutoff + 1)..=self.top)
            .rev()
            .map(|e| {
                self.terms
                    .get(&e)
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
            })
            .collect()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowers the cutoff-bound to `cutoff`, discarding terms at or below it.
    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = cutoff.max(self.cutoff);
        Self {
            top: self.top.max(cutoff),
            cutoff,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e > cutoff)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Agreement on all exponents known to both series.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let cut = self.cutoff.max(other.cutoff);
        self.truncate(cut).terms == other.truncate(cut).terms
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            top: self.top + k,
            cutoff: self.cutoff + k,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        out.terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, v)| (*e, v * c)).collect()
        };
        out
    }

    /// The known part as a Laurent polynomial, `None` if a coefficient is not integral.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            p.add_term(*e, c.to_integer());
        }
        Some(p)
    }

    fn add_signed(&self, rhs: &Self, sign: bool) -> Self {
        let cutoff = self.cutoff.max(rhs.cutoff);
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms.range(cutoff + 1..) {
            terms.insert(*e, c.clone());
        }
        for (e, c) in rhs.terms.range(cutoff + 1..) {
            let entry = terms.entry(*e).or_insert_with(BigRational::zero);
            if sign {
                *entry += c;
            } else {
                *entry -= c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Self {
            top: self.top.max(rhs.top).max(cutoff),
            cutoff,
            terms,
        }
    }
}

/// Expands `r` in descending powers of `q` keeping `precision` steps of `q^-2`.
pub fn expand(r: &RationalQ, precision: i64) -> Result<LaurentSeriesQinv, QError> {
    let num = r.numerator();
    let den = r.denominator();
    if den.is_zero() {
        return Err(QError::ZeroDenominator);
    }
    let top = match num.max_exp() {
        Some(n) => n - den.max_exp().unwrap(),
        None => 0,
    };
    expand_with_cutoff(r, top, top - 2 * precision)
}

/// Expands `r` down to an absolute cutoff.
pub fn expand_with_cutoff(
    r: &RationalQ,
    top: i64,
    cutoff: i64,
) -> Result<LaurentSeriesQinv, QError> {
    let num = r.numerator();
    let den = r.denominator();
    let dtop = den.max_exp().ok_or(QError::ZeroDenominator)?;
    let lc = BigRational::from_integer(den.leading_coeff().unwrap().clone());
    let mut rem: BTreeMap<i64, BigRational> = num
        .terms()
        .map(|(e, c)| (e, BigRational::from_integer(c.clone())))
        .collect();
    let dterms: Vec<(i64, BigRational)> = den
        .terms()
        .map(|(e, c)| (e, BigRational::from_integer(c.clone())))
        .collect();
    let mut terms = BTreeMap::new();
    let start = match num.max_exp() {
        Some(n) => n - dtop,
        None => cutoff,
    };
    let mut e = start;
    while e > cutoff {
        if let Some(c) = rem.remove(&(e + dtop)) {
            let c = c / &lc;
            for (de, dc) in &dterms {
                if *de == dtop {
                    continue;
                }
                let entry = rem.entry(e + de).or_insert_with(BigRational::zero);
                *entry -= &c * dc;
                if entry.is_zero() {
                    rem.remove(&(e + de));
                }
            }
            terms.insert(e, c);
        }
        e -= 1;
    }
    Ok(LaurentSeriesQinv {
        top: top.max(start).max(cutoff),
        cutoff,
        terms,
    })
}

impl Add for &LaurentSeriesQinv {
    type Output = LaurentSeriesQinv;
    fn add(self, rhs: &LaurentSeriesQinv) -> LaurentSeriesQinv {
        self.add_signed(rhs, true)
    }
}

impl Sub for &LaurentSeriesQinv {
    type Output = LaurentSeriesQinv;
    fn sub(self, rhs: &LaurentSeriesQinv) -> LaurentSeriesQinv {
        self.add_signed(rhs, false)
    }
}

impl Neg for &LaurentSeriesQinv {
    type Output = LaurentSeriesQinv;
    fn neg(self) -> LaurentSeriesQinv {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &LaurentSeriesQinv {
    type Output = LaurentSeriesQinv;
    fn mul(self, rhs: &LaurentSeriesQinv) -> LaurentSeriesQinv {
        let cutoff = (self.top + rhs.cutoff).max(rhs.top + self.cutoff);
        let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in rhs.terms.range(cutoff - e1 + 1..) {
                let entry = terms.entry(e1 + e2).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentSeriesQinv {
            top: (self.top + rhs.top).max(cutoff),
            cutoff,
            terms,
        }
    }
}

/// Renders a rational coefficient times `q^e`.
fn write_rational_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigRational,
    e: i64,
) -> fmt::Result {
    if c.is_integer() {
        return crate::laurent::write_term(f, first, &c.to_integer(), e, "q");
    }
    let abs = c.abs();
    match (first, c.is_negative()) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    match e {
        0 => write!(f, "{abs}"),
        1 => write!(f, "({abs})q"),
        _ => write!(f, "({abs})q^{e}"),
    }
}

impl fmt::Display for LaurentSeriesQinv {
    /// E.g. `1 + q^-2 + O(q^-8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            write_rational_term(f, first, c, e)?;
            first = false;
        }
        let o = match self.cutoff {
            0 => "O(1)".to_string(),
            1 => "O(q)".to_string(),
            k => format!("O(q^{k})"),
        };
        if first {
            write!(f, "{o}")
        } else {
            write!(f, " + {o}")
        }
    }
}

/// Integer coefficient helper for tests and callers.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn geometric_series() {
        let g = RationalQ::inv_one_minus_q_pow(-2);
        let s = expand(&g, 4).unwrap();
        assert_eq!(
            s.to_laurent().unwrap(),
            LaurentPoly::from_terms([(0, 1), (-2, 1), (-4, 1), (-6, 1)])
        );
        assert_eq!(s.precision(), 4);
        assert_eq!(s.to_string(), "1 + q^-2 + q^-4 + q^-6 + O(q^-8)");
    }

    #[test]
    fn quantum_two() {
        let two = RationalQ::from_laurent(&q(1) + &q(-1));
        let s = expand(&two, 4).unwrap();
        assert_eq!(s.to_laurent().unwrap(), &q(1) + &q(-1));
    }

    #[test]
    fn squared_geometric_with_numerator() {
        // (2 + q^2) / (1 - q^-2)^2; oracle: (2 + q^2) * sum (k+1) q^-2k.
        let g = RationalQ::inv_one_minus_q_pow(-2);
        let r = &RationalQ::from_laurent(&LaurentPoly::constant(2) + &q(2)) * &(&g * &g);
        let s = expand(&r, 3).unwrap();
        let mut oracle = LaurentPoly::zero();
        for k in 0..5i64 {
            oracle += &LaurentPoly::from_terms([(2 - 2 * k, k + 1), (-2 * k, 2 * (k + 1))]);
        }
        let oracle = LaurentSeriesQinv::from_laurent_with_cutoff(&oracle, 2, -4);
        assert_eq!(s, oracle);
        assert_eq!(
            s.to_laurent().unwrap(),
            LaurentPoly::from_terms([(2, 1), (0, 4), (-2, 7)])
        );
    }

    #[test]
    fn product_cutoff_is_tight() {
        let g = expand(&RationalQ::inv_one_minus_q_pow(-2), 3).unwrap();
        let h = expand(&RationalQ::from_laurent(q(4)), 5).unwrap();
        let p = &g * &h;
        assert_eq!(p.cutoff(), 4 - 6);
        assert_eq!(
            p.to_laurent().unwrap(),
            LaurentPoly::from_terms([(4, 1), (2, 1), (0, 1)])
        );
    }
}
