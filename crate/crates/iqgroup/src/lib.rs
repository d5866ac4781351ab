//! The split rank-one iquantum group `U^i_t` for `t` in `{0, 1}`.
//!
//! The algebra is `Q(q)[B]`. Elements are stored in one of three bases:
//! monomials `B^n`, the PBW basis `Delta_n` and the icanonical basis `P_n`.
//! This crate provides exact change of basis, left multiplication by `B`, the
//! bilinear and sesquilinear forms, and the isomorphism `j` onto `U^-`.

mod bases;
mod element;
mod error;
mod forms;

pub use bases::{
    canonical_closed_form, canonical_in_pbw, convert, mul_b, pbw_in_canonical, quantum_factorial,
    quantum_int, transition_matrix, w_coeff, w_coeff_from_chords, w_row,
};
pub use element::{parity, parse_element, BasisTag, IQElement, UMinusElement};
pub use error::IqError;
pub use forms::{form_i, form_minus, j_map, mul_f, r_op, sesq_form_i};
