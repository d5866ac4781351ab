//! Elements of `U^i_t` in a chosen basis and elements of `U^-`.

use std::fmt;
use std::str::FromStr;

use qseries::RationalQ;
use serde::{Deserialize, Serialize};

use crate::error::IqError;

/// The three bases `B^n`, `Delta_n` and `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisTag {
    Monomial,
    Pbw,
    Canonical,
}

impl BasisTag {
    /// Symbol used for basis vectors in text output.
    pub fn symbol(self) -> &'static str {
        match self {
            BasisTag::Monomial => "B",
            BasisTag::Pbw => "D",
            BasisTag::Canonical => "P",
        }
    }
}

impl FromStr for BasisTag {
    type Err = IqError;
    fn from_str(s: &str) -> Result<Self, IqError> {
        match s.to_ascii_lowercase().as_str() {
            "b" | "monomial" => Ok(BasisTag::Monomial),
            "pbw" | "d" | "delta" => Ok(BasisTag::Pbw),
            "p" | "canonical" => Ok(BasisTag::Canonical),
            _ => Err(IqError::UnknownBasis(s.to_string())),
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::Monomial => "B",
            BasisTag::Pbw => "PBW",
            BasisTag::Canonical => "P",
        };
        write!(f, "{s}")
    }
}

/// Validates a parity parameter.
pub fn parity(t: i64) -> Result<u8, IqError> {
    match t {
        0 | 1 => Ok(t as u8),
        _ => Err(IqError::InvalidParity(t)),
    }
}

fn trim(coeffs: &mut Vec<RationalQ>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// A finite combination `sum_n c_n X_n` of basis vectors of `U^i_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IQElement {
    pub t: u8,
    pub basis: BasisTag,
    coeffs: Vec<RationalQ>,
}

impl IQElement {
    pub fn new(t: u8, basis: BasisTag, mut coeffs: Vec<RationalQ>) -> Self {
        trim(&mut coeffs);
        Self { t, basis, coeffs }
    }

    pub fn zero(t: u8, basis: BasisTag) -> Self {
        Self::new(t, basis, Vec::new())
    }

    /// The single basis vector `X_n`.
    pub fn basis_vector(t: u8, basis: BasisTag, n: usize) -> Self {
        let mut coeffs = vec![RationalQ::zero(); n + 1];
        coeffs[n] = RationalQ::one();
        Self::new(t, basis, coeffs)
    }

    /// Coefficient of `X_n`.
    pub fn coeff(&self, n: usize) -> RationalQ {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[RationalQ] {
        &self.coeffs
    }

    /// Largest `n` with nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of two elements in the same basis and parity.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.t, self.basis),
            (other.t, other.basis),
            "incompatible elements"
        );
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|n| &self.coeff(n) + &other.coeff(n)).collect();
        Self::new(self.t, self.basis, coeffs)
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        Self::new(
            self.t,
            self.basis,
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    /// Applies the bar involution to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        Self::new(
            self.t,
            self.basis,
            self.coeffs.iter().map(RationalQ::bar).collect(),
        )
    }

    /// Coefficients rendered as canonical strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for IQElement {
    /// E.g. `(q + q^-1)*B^2 + 1*B^0`, highest index first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            let sep = if self.basis == BasisTag::Monomial {
                "^"
            } else {
                "_"
            };
            write!(f, "({c})*{sym}{sep}{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses sums such as `B^4`, `2*B^2 - B^0`, `P_3` or `D_2 + D_0`.
///
/// Coefficients are integers and all terms must use one basis symbol.
pub fn parse_element(s: &str, t: u8) -> Result<IQElement, IqError> {
    let err = |m: &str| IqError::Parse(s.to_string(), m.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    let mut basis: Option<BasisTag> = None;
    let mut coeffs: Vec<RationalQ> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        let end = rest[1..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (coef, vec) = match term.split_once('*') {
            Some((c, v)) => (c.parse::<i64>().map_err(|_| err("bad coefficient"))?, v),
            None => {
                let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
                if digits > 0 && digits < term.len() {
                    (
                        term[..digits]
                            .parse::<i64>()
                            .map_err(|_| err("bad coefficient"))?,
                        &term[digits..],
                    )
                } else if digits == term.len() {
                    (
                        term.parse::<i64>().map_err(|_| err("bad coefficient"))?,
                        "B^0",
                    )
                } else {
                    (1, term)
                }
            }
        };
        let (tag, idx) = if let Some(e) = vec.strip_prefix("B^") {
            (BasisTag::Monomial, e)
        } else if vec == "B" {
            (BasisTag::Monomial, "1")
        } else if let Some(e) = vec.strip_prefix("P_") {
            (BasisTag::Canonical, e)
        } else if let Some(e) = vec.strip_prefix("D_") {
            (BasisTag::Pbw, e)
        } else {
            return Err(err("expected B^n, P_n or D_n"));
        };
        let n: usize = idx.parse().map_err(|_| err("bad index"))?;
        if *basis.get_or_insert(tag) != tag {
            return Err(err("mixed bases"));
        }
        if coeffs.len() <= n {
            coeffs.resize(n + 1, RationalQ::zero());
        }
        coeffs[n] += &RationalQ::from_int(sign * coef);
    }
    Ok(IQElement::new(t, basis.unwrap(), coeffs))
}

/// A finite combination `sum_n c_n F^(n)` in `U^-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UMinusElement {
    coeffs: Vec<RationalQ>,
}

impl UMinusElement {
    pub fn new(mut coeffs: Vec<RationalQ>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    /// The divided power `F^(n)`.
    pub fn divided_power(n: usize) -> Self {
        let mut coeffs = vec![RationalQ::zero(); n + 1];
        coeffs[n] = RationalQ::one();
        Self::new(coeffs)
    }

    pub fn coeff(&self, n: usize) -> RationalQ {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[RationalQ] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|n| &self.coeff(n) + &other.coeff(n)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_elements() {
        let e = parse_element("B^4", 0).unwrap();
        assert_eq!(e, IQElement::basis_vector(0, BasisTag::Monomial, 4));
        let e = parse_element("2*B^2 - B^0", 1).unwrap();
        assert_eq!(e.coeff(2), RationalQ::from_int(2));
        assert_eq!(e.coeff(0), RationalQ::from_int(-1));
        let e = parse_element("P_3 + 3P_1", 0).unwrap();
        assert_eq!(e.basis, BasisTag::Canonical);
        assert_eq!(e.coeff(1), RationalQ::from_int(3));
        assert!(parse_element("B^2 + P_1", 0).is_err());
        assert!(parse_element("X_2", 0).is_err());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let e = IQElement::new(0, BasisTag::Pbw, vec![RationalQ::one(), RationalQ::zero()]);
        assert_eq!(e.degree(), Some(0));
        assert_eq!(BasisTag::from_str("PBW").unwrap(), BasisTag::Pbw);
        assert!(parity(2).is_err());
    }
}
