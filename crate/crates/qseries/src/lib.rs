//! Exact coefficient arithmetic in one variable `q`.
//!
//! Provides integer Laurent polynomials, the field `Q(q)` as normalized
//! fractions, truncated Laurent series in `q^-1` with explicit precision, and
//! quantum integers and factorials.

mod error;
mod laurent;
mod poly;
mod quantum;
mod rational;
mod series;

pub use error::QError;
pub use laurent::LaurentPoly;
pub use quantum::{inv_qpochhammer, qbinomial, qbrace, qfactorial, qint, QuantumInt};
pub use rational::RationalQ;
pub use series::{expand, expand_with_cutoff, rat, LaurentSeriesQinv};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
