//! Transition data between the monomial, PBW and canonical bases.

use std::sync::{Mutex, OnceLock};

use chords::t_recurrence;
use qseries::{qfactorial, qint, LaurentPoly, RationalQ};

use crate::element::{BasisTag, IQElement};

fn congruent(n: usize, t: u8) -> bool {
    n % 2 == t as usize
}

/// `1 / (1 - q^-2)`.
fn geom2() -> RationalQ {
    RationalQ::inv_one_minus_q_pow(-2)
}

/// `prod_{k=1}^{m} 1 / (1 - q^(-4k))`.
fn inv_prod_q4(m: usize) -> RationalQ {
    let mut acc = RationalQ::one();
    for k in 1..=m as i64 {
        acc = &acc * &RationalQ::inv_one_minus_q_pow(-4 * k);
    }
    acc
}

fn qint_r(n: usize) -> RationalQ {
    RationalQ::from_laurent(qint(n as i64).expect("non-negative"))
}

type WTable = Mutex<Vec<Vec<RationalQ>>>;

fn w_table() -> &'static WTable {
    static TABLE: OnceLock<WTable> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![vec![RationalQ::one()]]))
}

/// Row `m` of `B^m = sum_n w_{m,n} Delta_n`, indexed by `n = 0..=m`.
pub fn w_row(m: usize) -> Vec<RationalQ> {
    let mut table = w_table().lock().unwrap();
    while table.len() <= m {
        let prev = table.last().unwrap().clone();
        let r = table.len();
        // w_{r,n} = [n] w_{r-1,n-1} + q^n w_{r-1,n+1} / (1 - q^-2)
        let row = (0..=r)
            .map(|n| {
                let mut v = RationalQ::zero();
                if n >= 1 {
                    if let Some(x) = prev.get(n - 1) {
                        v += &(&qint_r(n) * x);
                    }
                }
                if let Some(x) = prev.get(n + 1) {
                    v += &(&(&RationalQ::q_pow(n as i64) * x) * &geom2());
                }
                v
            })
            .collect();
        table.push(row);
    }
    table[m].clone()
}

/// The coefficient `w_{m,n}` of `Delta_n` in `B^m`.
pub fn w_coeff(m: usize, n: usize) -> RationalQ {
    if n > m || (m - n) % 2 == 1 {
        return RationalQ::zero();
    }
    w_row(m)[n].clone()
}

/// `w_{n+2f,n} = [n]! T_{f,n}(q^2) / (1 - q^-2)^f` from the chord generating functions.
pub fn w_coeff_from_chords(m: usize, n: usize) -> RationalQ {
    if n > m || (m - n) % 2 == 1 {
        return RationalQ::zero();
    }
    let f = (m - n) / 2;
    let t = t_recurrence(f, n).poly.subst_pow(2);
    let fact = qfactorial(n as i64).expect("non-negative");
    &RationalQ::from_laurent(&fact * &t) * &geom2().pow(f as i32)
}

/// Coefficient of `Delta_{n-2m}` in `P_n`.
pub fn canonical_in_pbw(n: usize, m: usize, t: u8) -> RationalQ {
    if 2 * m > n {
        return RationalQ::zero();
    }
    let m_i = m as i64;
    let d = congruent(n, t) as i64;
    RationalQ::q_pow(-m_i * (2 * m_i + 1 - 2 * d)) * inv_prod_q4(m)
}

/// Coefficient of `P_{n-2m}` in `Delta_n`.
pub fn pbw_in_canonical(n: usize, m: usize, t: u8) -> RationalQ {
    if 2 * m > n {
        return RationalQ::zero();
    }
    let m_i = m as i64;
    let d = (!congruent(n, t)) as i64;
    let sign = if m % 2 == 0 { 1 } else { -1 };
    RationalQ::q_pow(-m_i * (2 * d + 1)).scale(&sign.into()) * inv_prod_q4(m)
}

/// `P_n` as a polynomial in `B` from the closed product formula.
///
/// `P_n = B^sigma prod_{k = t mod 2, 0 <= k < n} (B^2 - [k]^2) / [n]!` where
/// `sigma` is 0 for even `n`, -1 for odd `n` with `t = 0` and 1 otherwise.
pub fn canonical_closed_form(n: usize, t: u8) -> IQElement {
    let mut poly: Vec<RationalQ> = vec![RationalQ::one()];
    for k in (0..n).filter(|&k| congruent(k, t)) {
        let k2 = RationalQ::from_laurent(qint(k as i64).unwrap().pow(2));
        let mut next = vec![RationalQ::zero(); poly.len() + 2];
        for (i, c) in poly.iter().enumerate() {
            next[i + 2] += c;
            next[i] -= &(c * &k2);
        }
        poly = next;
    }
    if n % 2 == 1 {
        if t == 1 {
            poly.insert(0, RationalQ::zero());
        } else {
            assert!(poly[0].is_zero(), "product must be divisible by B");
            poly.remove(0);
        }
    }
    let fact = RationalQ::from_laurent(qfactorial(n as i64).unwrap())
        .inv()
        .unwrap();
    IQElement::new(
        t,
        BasisTag::Monomial,
        poly.iter().map(|c| c * &fact).collect(),
    )
}

/// Left multiplication by `B`, staying in the same basis.
pub fn mul_b(e: &IQElement) -> IQElement {
    let len = e.coeffs().len() + 1;
    let mut out = vec![RationalQ::zero(); len];
    for (n, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match e.basis {
            BasisTag::Monomial => out[n + 1] += c,
            BasisTag::Pbw => {
                out[n + 1] += &(c * &qint_r(n + 1));
                if n >= 1 {
                    out[n - 1] += &(&(c * &RationalQ::q_pow(n as i64 - 1)) * &geom2());
                }
            }
            BasisTag::Canonical => {
                out[n + 1] += &(c * &qint_r(n + 1));
                if n >= 1 && congruent(n, e.t) {
                    out[n - 1] += &(c * &qint_r(n));
                }
            }
        }
    }
    IQElement::new(e.t, e.basis, out)
}

fn combine(e: &IQElement, target: BasisTag, column: impl Fn(usize) -> Vec<RationalQ>) -> IQElement {
    let mut out: Vec<RationalQ> = Vec::new();
    for (n, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let col = column(n);
        if out.len() < col.len() {
            out.resize(col.len(), RationalQ::zero());
        }
        for (k, x) in col.iter().enumerate() {
            if !x.is_zero() {
                out[k] += &(c * x);
            }
        }
    }
    IQElement::new(e.t, target, out)
}

/// Column `n` of the change of basis from `from` to PBW.
fn to_pbw_column(from: BasisTag, n: usize, t: u8) -> Vec<RationalQ> {
    match from {
        BasisTag::Pbw => IQElement::basis_vector(t, BasisTag::Pbw, n)
            .coeffs()
            .to_vec(),
        BasisTag::Monomial => w_row(n),
        BasisTag::Canonical => {
            let mut col = vec![RationalQ::zero(); n + 1];
            for m in 0..=n / 2 {
                col[n - 2 * m] = canonical_in_pbw(n, m, t);
            }
            col
        }
    }
}

/// Column `n` of the change of basis from PBW to `to`.
fn from_pbw_column(to: BasisTag, n: usize, t: u8) -> Vec<RationalQ> {
    let mut col = vec![RationalQ::zero(); n + 1];
    for m in 0..=n / 2 {
        col[n - 2 * m] = pbw_in_canonical(n, m, t);
    }
    match to {
        BasisTag::Pbw => IQElement::basis_vector(t, BasisTag::Pbw, n)
            .coeffs()
            .to_vec(),
        BasisTag::Canonical => col,
        BasisTag::Monomial => {
            let as_canonical = IQElement::new(t, BasisTag::Canonical, col);
            canonical_to_monomial(&as_canonical).coeffs().to_vec()
        }
    }
}

fn canonical_to_monomial(e: &IQElement) -> IQElement {
    combine(e, BasisTag::Monomial, |n| {
        canonical_closed_form(n, e.t).coeffs().to_vec()
    })
}

/// Re-expresses `e` in the basis `target`.
pub fn convert(e: &IQElement, target: BasisTag) -> IQElement {
    if e.basis == target {
        return e.clone();
    }
    if e.basis == BasisTag::Canonical && target == BasisTag::Monomial {
        return canonical_to_monomial(e);
    }
    let pbw = combine(e, BasisTag::Pbw, |n| to_pbw_column(e.basis, n, e.t));
    if target == BasisTag::Pbw {
        return pbw;
    }
    combine(&pbw, target, |n| from_pbw_column(target, n, e.t))
}

/// The matrix whose column `j` expresses `from_j` in the basis `to`, for `j <= max_n`.
pub fn transition_matrix(from: BasisTag, to: BasisTag, t: u8, max_n: usize) -> Vec<Vec<RationalQ>> {
    (0..=max_n)
        .map(|j| {
            let v = convert(&IQElement::basis_vector(t, from, j), to);
            (0..=max_n).map(|i| v.coeff(i)).collect()
        })
        .collect()
}

/// Helper for callers that need `[n]` as a rational.
pub fn quantum_int(n: usize) -> RationalQ {
    qint_r(n)
}

/// Helper for callers that need `[n]!` as a Laurent polynomial.
pub fn quantum_factorial(n: usize) -> LaurentPoly {
    qfactorial(n as i64).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qseries::LaurentPoly;

    fn geom(e: i64) -> RationalQ {
        RationalQ::inv_one_minus_q_pow(e)
    }

    #[test]
    fn w_small_values() {
        assert!(w_coeff(0, 0).is_one());
        assert_eq!(w_coeff(2, 0), geom(-2));
        let num = RationalQ::from_laurent(LaurentPoly::from_terms([(0, 2), (2, 1)]));
        assert_eq!(w_coeff(3, 1), &num * &geom(-2));
        assert!(w_coeff(3, 0).is_zero());
        assert!(w_coeff(1, 3).is_zero());
    }

    #[test]
    fn w_matches_chord_closed_form() {
        for m in 0..=10 {
            for n in 0..=m {
                assert_eq!(w_coeff(m, n), w_coeff_from_chords(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn mul_b_examples() {
        let d1 = IQElement::basis_vector(0, BasisTag::Pbw, 1);
        let e = mul_b(&d1);
        assert_eq!(e.coeff(2), quantum_int(2));
        assert_eq!(e.coeff(0), geom(-2));
        let p1 = IQElement::basis_vector(1, BasisTag::Canonical, 1);
        let e = mul_b(&p1);
        assert_eq!(e.coeff(2), quantum_int(2));
        assert!(e.coeff(0).is_one());
        let p1 = IQElement::basis_vector(0, BasisTag::Canonical, 1);
        assert!(mul_b(&p1).coeff(0).is_zero());
    }

    #[test]
    fn conversion_examples() {
        let b2 = IQElement::basis_vector(0, BasisTag::Monomial, 2);
        let d = convert(&b2, BasisTag::Pbw);
        assert_eq!(d.coeff(2), quantum_int(2));
        assert_eq!(d.coeff(0), geom(-2));

        let p2 = IQElement::basis_vector(0, BasisTag::Canonical, 2);
        let d = convert(&p2, BasisTag::Pbw);
        assert!(d.coeff(2).is_one());
        assert_eq!(d.coeff(0), &RationalQ::q_pow(-1) * &geom(-4));

        let d2 = IQElement::basis_vector(0, BasisTag::Pbw, 2);
        let p = convert(&d2, BasisTag::Canonical);
        assert!(p.coeff(2).is_one());
        assert_eq!(p.coeff(0), -(&RationalQ::q_pow(-1) * &geom(-4)));
    }

    #[test]
    fn closed_form_examples() {
        for t in 0..2 {
            assert_eq!(
                canonical_closed_form(1, t),
                IQElement::basis_vector(t, BasisTag::Monomial, 1)
            );
        }
        let inv2 = quantum_int(2).inv().unwrap();
        let p = canonical_closed_form(2, 0);
        assert_eq!(p.coeff(2), inv2);
        assert!(p.coeff(0).is_zero());
        let p = canonical_closed_form(2, 1);
        assert_eq!(p.coeff(2), inv2);
        assert_eq!(p.coeff(0), -inv2.clone());
    }
}
