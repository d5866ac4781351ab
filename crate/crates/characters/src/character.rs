//! Truncated power series in `xi` with coefficients in `Q(q)`.

use qseries::{expand, LaurentSeriesQinv, QError, RationalQ};
use serde::{Deserialize, Serialize};

/// `sum_{k < xi_precision} a_k xi^k` with exact coefficients.
///
/// `q_precision` only controls expansion of coefficients into `q^-1` series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub xi_precision: usize,
    pub q_precision: i64,
    coeffs: Vec<RationalQ>,
}

impl Character {
    pub fn zero(xi_precision: usize, q_precision: i64) -> Self {
        Self {
            xi_precision,
            q_precision,
            coeffs: vec![RationalQ::zero(); xi_precision],
        }
    }

    /// Builds a character, dropping coefficients beyond the precision.
    pub fn from_coeffs(xi_precision: usize, q_precision: i64, mut coeffs: Vec<RationalQ>) -> Self {
        coeffs.resize(xi_precision, RationalQ::zero());
        Self {
            xi_precision,
            q_precision,
            coeffs,
        }
    }

    /// Coefficient of `xi^k`, `None` beyond the precision.
    pub fn coeff(&self, k: usize) -> Option<&RationalQ> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[RationalQ] {
        &self.coeffs
    }

    pub(crate) fn add_to(&mut self, k: usize, v: &RationalQ) {
        if k < self.xi_precision {
            self.coeffs[k] += v;
        }
    }

    /// Sum truncated to the smaller precision.
    pub fn add(&self, other: &Self) -> Self {
        let p = self.xi_precision.min(other.xi_precision);
        let coeffs = (0..p).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Self::from_coeffs(p, self.q_precision.min(other.q_precision), coeffs)
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Self::from_coeffs(self.xi_precision, self.q_precision, coeffs)
    }

    /// Multiplication by `xi`; the precision grows by one.
    pub fn mul_xi(&self) -> Self {
        let mut coeffs = vec![RationalQ::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(self.xi_precision + 1, self.q_precision, coeffs)
    }

    /// The action of `B`: drop the constant term and shift down by one power of `xi`.
    pub fn apply_b(&self) -> Self {
        let p = self.xi_precision.saturating_sub(1);
        Self::from_coeffs(
            p,
            self.q_precision,
            self.coeffs.iter().skip(1).cloned().collect(),
        )
    }

    /// Multiplication by `1 / (1 - c xi^2)`.
    pub fn div_one_minus_xi2(&self, c: &RationalQ) -> Self {
        let mut out = self.coeffs.clone();
        for k in 2..out.len() {
            let prev = &out[k - 2] * c;
            out[k] += &prev;
        }
        Self::from_coeffs(self.xi_precision, self.q_precision, out)
    }

    /// Truncation to a smaller precision.
    pub fn truncate(&self, xi_precision: usize) -> Self {
        let p = xi_precision.min(self.xi_precision);
        Self::from_coeffs(p, self.q_precision, self.coeffs[..p].to_vec())
    }

    /// Equality on the powers of `xi` known to both.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let p = self.xi_precision.min(other.xi_precision);
        self.coeffs[..p] == other.coeffs[..p]
    }

    /// Every coefficient expanded in `q^-1` to the character's precision.
    pub fn series(&self) -> Result<Vec<LaurentSeriesQinv>, QError> {
        self.coeffs
            .iter()
            .map(|c| expand(c, self.q_precision))
            .collect()
    }

    /// True when every coefficient is a Laurent polynomial with non-negative integer coefficients.
    pub fn has_nonnegative_polynomial_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.as_laurent().is_some_and(|p| p.is_nonnegative()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_division() {
        let one = Character::from_coeffs(6, 4, vec![RationalQ::one()]);
        let g = one.div_one_minus_xi2(&RationalQ::from_int(2));
        let expected: Vec<RationalQ> = [1, 0, 2, 0, 4, 0]
            .iter()
            .map(|&c| RationalQ::from_int(c))
            .collect();
        assert_eq!(g.coeffs(), expected.as_slice());
        assert_eq!(g.apply_b().coeff(1), Some(&RationalQ::from_int(2)));
        assert_eq!(g.mul_xi().coeff(3), Some(&RationalQ::from_int(2)));
    }
}
