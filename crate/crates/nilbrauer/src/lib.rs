//! The nil-Brauer category as a finitely presented graded monoidal category.

mod basis;
mod engine;
mod error;
mod gamma;
mod map;
mod named;
mod relations;
mod slot;
mod verify;
mod word;

pub use basis::{
    basis_keys, basis_word, diagram_word, key_gamma, matchings, partitions, spanning_words,
    with_bubbles, BasisKey,
};
pub use engine::{Diagram, Engine, Nf};
pub use error::NbError;
pub use gamma::{monomial_string, odd_monomials, GammaElem, Monomial};
pub use map::{Map, Strand, NIL};
pub use named::{b_star_e, e_rn_alternative, idempotent, named_element, Named};
pub use relations::{random_instance, random_word, relation_generators};
pub use slot::{
    build_slot, build_slot_with, cache_path, enumerate_words, eq_mod_relations, load_cached,
    load_or_build, store_cached, QuotientSlot, SlotBounds, Verdict, CACHE_SCHEMA, CODE_VERSION,
};
pub use verify::{with_big_stack, Check, Report, Verifier};
pub use word::{FreeMor, Gen, GenWord, Mirror, Slice};
