//! Graded characters for the rank-one nil-Brauer category.
//!
//! Characters live in `Q(q)[[xi]]` truncated in `xi`; `B` acts by the left
//! shift. Provides characters of proper standard and irreducible modules,
//! decomposition numbers, projective multiplicities and predicted graded
//! dimensions of Hom spaces.

mod character;
mod formulas;
mod graded;

pub use character::Character;
pub use formulas::{
    alpha_tuples, ch_irreducible, ch_irreducible_sum_form, ch_proper_standard,
    decomposition_number, projective_multiplicity, AlphaTuple,
};
pub use graded::{
    gamma_dimension, hom_dimension, hom_form, predicted_homdim, standard_flag_multiplicity,
};
