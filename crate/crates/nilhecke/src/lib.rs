//! The nil-Hecke algebra on `n` strands over the integers.
//!
//! Elements are stored in the basis `x^a tau_w`. Products are straightened
//! with `tau_i f = s_i(f) tau_i + d_i(f)`. The polynomial representation,
//! where `tau_i` acts by the Demazure operator `d_i`, serves as an
//! independent oracle. The crate also provides the idempotent `e_n` and the
//! irreducible module `L_n(n)`.

mod algebra;
mod error;
mod module;
mod perm;
mod poly;
mod rep;
mod verify;

pub use algebra::{e_idempotent, NHElement};
pub use error::NhError;
pub use module::{is_reduced_exponent, ln_action, ln_basis, ln_graded_dimension, reduce, LnVector};
pub use perm::{all_perms, length, longest, reduced_word, Perm};
pub use poly::MPoly;
pub use rep::{demazure, PolyRep};
pub use verify::{
    check_center, check_demazure_relations, check_faithfulness, check_highest_weight,
    check_idempotents, check_ln_dimension, monomials_up_to, random_element, test_polynomials,
    verify_all, CheckResult,
};
