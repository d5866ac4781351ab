//! Bilinear and sesquilinear forms, the operator `R` on `U^-` and the map `j`.

use qseries::{inv_qpochhammer, qint, RationalQ};

use crate::bases::convert;
use crate::element::{BasisTag, IQElement, UMinusElement};
use crate::error::IqError;

/// `(F^(n), F^(n))^- = prod_{k<=n} 1 / (1 - q^(-2k))`.
fn norm(n: usize) -> RationalQ {
    inv_qpochhammer(n as i64).expect("non-negative")
}

fn same_parity(a: &IQElement, b: &IQElement) -> Result<(), IqError> {
    if a.t == b.t {
        Ok(())
    } else {
        Err(IqError::ParityMismatch(a.t, b.t))
    }
}

/// The symmetric bilinear form on `U^i_t`, for which the PBW basis is orthogonal.
pub fn form_i(a: &IQElement, b: &IQElement) -> Result<RationalQ, IqError> {
    same_parity(a, b)?;
    let a = convert(a, BasisTag::Pbw);
    let b = convert(b, BasisTag::Pbw);
    let mut acc = RationalQ::zero();
    for (n, (x, y)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
        if !x.is_zero() && !y.is_zero() {
            acc += &(&(x * y) * &norm(n));
        }
    }
    Ok(acc)
}

/// The sesquilinear form `<a, b> = (psi(a), b)`, anti-linear in `a`.
///
/// `psi` fixes every power of `B`, so it acts as bar on monomial coefficients.
pub fn sesq_form_i(a: &IQElement, b: &IQElement) -> Result<RationalQ, IqError> {
    let psi_a = convert(a, BasisTag::Monomial).bar_coeffs();
    form_i(&psi_a, b)
}

/// Lusztig's form on `U^-` in the divided power basis.
pub fn form_minus(a: &UMinusElement, b: &UMinusElement) -> RationalQ {
    let mut acc = RationalQ::zero();
    for (n, (x, y)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
        if !x.is_zero() && !y.is_zero() {
            acc += &(&(x * y) * &norm(n));
        }
    }
    acc
}

/// `R(1) = 0` and `R(F^(n)) = q^(n-1) F^(n-1) / (1 - q^-2)`.
pub fn r_op(y: &UMinusElement) -> UMinusElement {
    let g = RationalQ::inv_one_minus_q_pow(-2);
    let coeffs = (1..y.coeffs().len())
        .map(|n| &(&y.coeff(n) * &RationalQ::q_pow(n as i64 - 1)) * &g)
        .collect();
    UMinusElement::new(coeffs)
}

/// Left multiplication by `F`, using `F F^(n) = [n+1] F^(n+1)`.
pub fn mul_f(y: &UMinusElement) -> UMinusElement {
    let mut coeffs = vec![RationalQ::zero()];
    for (n, c) in y.coeffs().iter().enumerate() {
        coeffs.push(c * &RationalQ::from_laurent(qint(n as i64 + 1).unwrap()));
    }
    UMinusElement::new(coeffs)
}

/// The linear isomorphism `j : U^i -> U^-` sending `Delta_n` to `F^(n)`.
pub fn j_map(e: &IQElement) -> UMinusElement {
    UMinusElement::new(convert(e, BasisTag::Pbw).coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::quantum_int;
    use qseries::LaurentPoly;

    fn b(t: u8, n: usize) -> IQElement {
        IQElement::basis_vector(t, BasisTag::Monomial, n)
    }

    fn geom() -> RationalQ {
        RationalQ::inv_one_minus_q_pow(-2)
    }

    #[test]
    fn monomial_forms() {
        assert_eq!(form_i(&b(0, 1), &b(0, 1)).unwrap(), geom());
        let num = RationalQ::from_laurent(LaurentPoly::from_terms([(0, 2), (2, 1)]));
        assert_eq!(form_i(&b(1, 2), &b(1, 2)).unwrap(), &num * &geom().pow(2));
        assert!(form_i(&b(0, 0), &b(0, 1)).unwrap().is_zero());
        assert!(form_i(&b(0, 1), &b(1, 1)).is_err());
    }

    #[test]
    fn sesquilinear_examples() {
        assert_eq!(sesq_form_i(&b(0, 1), &b(0, 1)).unwrap(), geom());
        let qb = b(0, 1).scale(&RationalQ::q_pow(1));
        assert_eq!(
            sesq_form_i(&qb, &b(0, 1)).unwrap(),
            &RationalQ::q_pow(-1) * &geom()
        );
    }

    #[test]
    fn r_and_minus_form_examples() {
        assert!(r_op(&UMinusElement::divided_power(0)).is_zero());
        assert_eq!(r_op(&UMinusElement::divided_power(1)).coeff(0), geom());
        assert_eq!(
            r_op(&UMinusElement::divided_power(2)).coeff(1),
            &RationalQ::q_pow(1) * &geom()
        );
        let f = |n| UMinusElement::divided_power(n);
        assert!(form_minus(&f(0), &f(0)).is_one());
        assert_eq!(form_minus(&f(1), &f(1)), geom());
        assert!(form_minus(&f(1), &f(2)).is_zero());
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_map(&b(0, 0)), UMinusElement::divided_power(0));
        assert_eq!(j_map(&b(0, 1)), UMinusElement::divided_power(1));
        let j2 = j_map(&b(0, 2));
        assert_eq!(j2.coeff(2), quantum_int(2));
        assert_eq!(j2.coeff(0), geom());
    }

    #[test]
    fn r_is_adjoint_to_f() {
        for m in 0..6 {
            for n in 0..6 {
                let y1 = UMinusElement::divided_power(m);
                let y2 = UMinusElement::divided_power(n);
                assert_eq!(form_minus(&mul_f(&y1), &y2), form_minus(&y1, &r_op(&y2)));
            }
        }
    }
}
