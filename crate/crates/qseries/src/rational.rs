//! The field `Q(q)` as normalized fractions of integer Laurent polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::QError;
use crate::laurent::LaurentPoly;
use crate::poly::DensePoly;

/// An exact element of `Q(q)`.
///
/// Canonical form: the denominator is a polynomial in `q` with nonzero
/// constant term and positive leading coefficient, numerator and denominator
/// are coprime in `Q[q, q^-1]`, and their integer contents are coprime.
/// Zero is `0 / 1`. Equal values therefore have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalQ {
    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `a / b` as a constant.
    pub fn from_ratio<T: Into<BigInt>>(a: T, b: T) -> Result<Self, QError> {
        Self::new(LaurentPoly::constant(a), LaurentPoly::constant(b))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move q-powers so the denominator has a nonzero constant term.
        let s = den.min_exp().unwrap();
        let mut den = den.shift(-s);
        let mut num = num.shift(-s);
        if den.max_exp() != Some(0) {
            let t = num.min_exp().unwrap();
            let pn = DensePoly::from_laurent(&num.shift(-t));
            let pd = DensePoly::from_laurent(&den);
            let g = pn.gcd(&pd);
            if g.0.len() > 1 {
                num = pn.div_exact(&g).expect("gcd divides").to_laurent().shift(t);
                den = pd.div_exact(&g).expect("gcd divides").to_laurent();
            }
        }
        let cn = num.content();
        let cd = den.content();
        let mut c = cn.gcd(&cd);
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        Self { num, den }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, QError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QError> {
        if rhs.is_zero() {
            return Err(QError::ZeroDenominator);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// The substitution `q -> q^k` for `k != 0`.
    pub fn subst_pow(&self, k: i64) -> Self {
        assert!(k != 0, "substitution q -> q^0 is not a field map");
        Self::normalize(self.num.subst_pow(k), self.den.subst_pow(k))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// `1 / (1 - q^e)`, e.g. `e = -2` gives the geometric series in `q^-2`.
    pub fn inv_one_minus_q_pow(e: i64) -> Self {
        assert!(e != 0, "1 - q^0 is zero");
        Self::normalize(
            LaurentPoly::one(),
            &LaurentPoly::one() - &LaurentPoly::q_pow(e),
        )
    }

    /// The value at `q = 1` when the denominator does not vanish there.
    pub fn eval_one(&self) -> Option<num_rational::BigRational> {
        let d = self.den.eval_one();
        (!d.is_zero()).then(|| num_rational::BigRational::new(self.num.eval_one(), d))
    }
}

impl Default for RationalQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalQ {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn add_fractions(a: &RationalQ, b: &RationalQ, sign: i8) -> RationalQ {
    let bn = if sign < 0 { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RationalQ {
            num: bn,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        if a.den.is_one() {
            return RationalQ::from_laurent(&a.num + &bn);
        }
        return RationalQ::normalize(&a.num + &bn, a.den.clone());
    }
    RationalQ::normalize(&(&a.num * &b.den) + &(&bn * &a.den), &a.den * &b.den)
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        add_fractions(self, rhs, 1)
    }
}

impl Add for RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: RationalQ) -> RationalQ {
        add_fractions(&self, &rhs, 1)
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        add_fractions(self, rhs, -1)
    }
}

impl Sub for RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: RationalQ) -> RationalQ {
        add_fractions(&self, &rhs, -1)
    }
}

impl AddAssign<&RationalQ> for RationalQ {
    fn add_assign(&mut self, rhs: &RationalQ) {
        *self = add_fractions(self, rhs, 1);
    }
}

impl SubAssign<&RationalQ> for RationalQ {
    fn sub_assign(&mut self, rhs: &RationalQ) {
        *self = add_fractions(self, rhs, -1);
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalQ::from_laurent(&self.num * &rhs.num);
        }
        RationalQ::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: RationalQ) -> RationalQ {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &LaurentPoly) -> RationalQ {
        RationalQ::normalize(&self.num * rhs, self.den.clone())
    }
}

impl Div for &RationalQ {
    type Output = RationalQ;
    /// Panics on division by zero; see [`RationalQ::checked_div`].
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Div for RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: RationalQ) -> RationalQ {
        &self / &rhs
    }
}

macro_rules! mixed_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<&RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: &RationalQ) -> RationalQ {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalQ> for &RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: RationalQ) -> RationalQ {
                self.$m(&rhs)
            }
        }
    )*};
}

mixed_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl fmt::Display for RationalQ {
    /// `N` when the denominator is 1, otherwise `(N) / (D)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 - 1) / (q - 1) = q + 1
        let a = RationalQ::new(&q(2) - &q(0), &q(1) - &q(0)).unwrap();
        assert_eq!(a, RationalQ::from_laurent(&q(1) + &q(0)));
        // q^-1 / (q^-1 - q^-3) = q^2 / (q^2 - 1)
        let b = RationalQ::new(q(-1), &q(-1) - &q(-3)).unwrap();
        let c = RationalQ::new(q(2), &q(2) - &q(0)).unwrap();
        assert_eq!(b, c);
        assert_eq!(b.denominator(), &(&q(2) - &q(0)));
        // Scalars cancel and the leading coefficient of the denominator is positive.
        let d = RationalQ::new(LaurentPoly::constant(-2), LaurentPoly::constant(-4)).unwrap();
        assert_eq!(d.to_string(), "(1) / (2)");
    }

    #[test]
    fn bar_of_geometric_series() {
        let g = RationalQ::inv_one_minus_q_pow(-2);
        let expected = -&RationalQ::q_pow(-2) * &g;
        assert_eq!(g.bar(), expected);
        assert_eq!(g.bar().bar(), g);
    }

    #[test]
    fn field_operations() {
        let a = RationalQ::inv_one_minus_q_pow(-2);
        let b = RationalQ::from_laurent(&q(1) + &q(-1));
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
        assert_eq!(&(&a / &b) * &b, a);
        assert!(RationalQ::zero().inv().is_err());
        assert_eq!(&a * &a.inv().unwrap(), RationalQ::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalQ::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(QError::ZeroDenominator)
        );
    }
}
