//! Graded dimensions: the bubble algebra, Hom spaces and standard flags.
//!
//! A space with `d_k` dimensions in degree `k` has graded dimension
//! `sum_k d_k q^-k`.

use iqgroup::{form_i, BasisTag, IQElement};
use qseries::{expand, expand_with_cutoff, BigInt, LaurentPoly, LaurentSeriesQinv, RationalQ};

/// `dim_q Gamma = prod_{j >= 0} 1 / (1 - q^-(4j+2))`, known down to `q^(-2 q_prec + 1)`.
pub fn gamma_dimension(q_prec: i64) -> LaurentSeriesQinv {
    let cutoff = -2 * q_prec;
    let mut p = LaurentPoly::one();
    let mut part = 2;
    while -part > cutoff {
        // Multiply by 1 / (1 - q^-part), truncating below the cutoff.
        let mut next = LaurentPoly::zero();
        for (e, c) in p.terms() {
            let mut k = e;
            while k > cutoff {
                next.add_term(k, c.clone());
                k -= part;
            }
        }
        p = next;
        part += 4;
    }
    LaurentSeriesQinv::from_laurent_with_cutoff(&p, 0, cutoff)
}

/// `dim_q Hom(B^n, B^m) = dim_q Gamma * (B^n, B^m)`, zero when the parities differ.
pub fn hom_dimension(m: usize, n: usize, t: u8, q_prec: i64) -> LaurentSeriesQinv {
    let form = form_i(
        &IQElement::basis_vector(t, BasisTag::Monomial, n),
        &IQElement::basis_vector(t, BasisTag::Monomial, m),
    )
    .expect("same parity");
    if form.is_zero() {
        return LaurentSeriesQinv::zero_with_cutoff(0, -2 * q_prec);
    }
    let f = expand(&form, q_prec).expect("nonzero denominator");
    let top = f.top_exponent();
    let g = gamma_dimension(q_prec + top.max(0));
    &f * &g
}

/// The dimension of the degree-`d` part of `Hom(B^n, B^m)`.
pub fn predicted_homdim(m: usize, n: usize, d: i64) -> BigInt {
    let form = hom_form(m, n);
    if form.is_zero() {
        return BigInt::from(0);
    }
    let f = expand_with_cutoff(&form, 0, -d - 1).expect("nonzero denominator");
    let top = f.top_exponent();
    // Gamma must be known far enough below 0 that the product is exact at q^-d.
    let g = gamma_dimension((d + top).max(0) / 2 + 1);
    (&f * &g)
        .coeff(-d)
        .map(|c| c.to_integer())
        .unwrap_or_default()
}

/// `(Delta(n) : Delta-bar(n))_q = dim_q Gamma / prod_{k<=n} (1 - q^-2k)`.
pub fn standard_flag_multiplicity(n: usize, q_prec: i64) -> LaurentSeriesQinv {
    let r = qseries::inv_qpochhammer(n as i64).expect("non-negative");
    &expand(&r, q_prec).unwrap() * &gamma_dimension(q_prec)
}

/// Helper exposing the exact form as a rational function.
pub fn hom_form(m: usize, n: usize) -> RationalQ {
    form_i(
        &IQElement::basis_vector(0, BasisTag::Monomial, n),
        &IQElement::basis_vector(0, BasisTag::Monomial, m),
    )
    .expect("same parity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_small() {
        let g = gamma_dimension(4);
        assert_eq!(
            g.to_laurent().unwrap(),
            LaurentPoly::from_terms([(0, 1), (-2, 1), (-4, 1), (-6, 2)])
        );
        assert_eq!(g.coeff(0).unwrap(), qseries::rat(1));
    }

    #[test]
    fn hom_examples() {
        let g = gamma_dimension(8);
        assert!(hom_dimension(0, 0, 0, 8).agrees_with(&g));
        let h = hom_dimension(1, 1, 0, 8);
        let geo = expand(&RationalQ::inv_one_minus_q_pow(-2), 8).unwrap();
        assert!(h.agrees_with(&(&geo * &g)));
        assert!(hom_dimension(0, 1, 0, 8).is_zero());
    }

    #[test]
    fn predicted_dimensions() {
        assert_eq!(predicted_homdim(2, 2, 6), BigInt::from(40));
        assert_eq!(predicted_homdim(2, 2, -2), BigInt::from(1));
        assert_eq!(predicted_homdim(1, 1, 0), BigInt::from(1));
        assert_eq!(predicted_homdim(1, 1, 2), BigInt::from(2));
        assert_eq!(predicted_homdim(0, 2, 0), BigInt::from(1));
        assert_eq!(predicted_homdim(0, 1, 0), BigInt::from(0));
    }
}
