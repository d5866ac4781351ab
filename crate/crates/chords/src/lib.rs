//! Based chord diagrams with tethered and free chords.
//!
//! A diagram on `2f + n` points carries `n` chords tethered to a basepoint and
//! `f` free chords. The crossing generating functions `T_{f,n}(q)` are computed
//! both by exhaustive enumeration and by a memoized recurrence.

mod diagram;
mod error;
mod first_point;
mod generating;

pub use diagram::{diagram_count, enumerate, enumerate_bounded, ChordDiagram, DEFAULT_MAX_POINTS};
pub use error::ChordError;
pub use first_point::{first_point, theta, theta_i, verify_first_point_partition, FirstPoint};
pub use generating::{t_bruteforce, t_recurrence, TPoly};
