//! The set partition behind the recurrence for `T_{f,n}`.
//!
//! Diagrams are split by what happens at position 1. If it is tethered,
//! `theta` deletes that chord. If it is joined to `b` with `i` tethered
//! positions strictly between 1 and `b`, `theta_i` deletes position 1 and
//! tethers `b`. The first map preserves crossings and the second lowers them
//! by `i`, which gives `T_{f,n} = T_{f,n-1} + sum_i q^i T_{f-1,n+1}`.

use std::collections::BTreeSet;

use crate::diagram::{enumerate, ChordDiagram};
use crate::error::ChordError;

/// Which part of the partition a diagram lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstPoint {
    /// Position 1 is tethered.
    Tethered,
    /// Position 1 is free with this many tethered positions under its chord.
    Free(usize),
}

/// Classifies a diagram; panics on the empty diagram.
pub fn first_point(d: &ChordDiagram) -> FirstPoint {
    match d.partner(1) {
        None => FirstPoint::Tethered,
        Some(b) => FirstPoint::Free(d.tethered().iter().filter(|&&p| p < b).count()),
    }
}

fn relabel_drop_first(d: &ChordDiagram, extra_tether: Option<usize>) -> ChordDiagram {
    let total = d.total_points() - 1;
    let mut tethered: Vec<usize> = d.tethered().into_iter().filter(|&p| p != 1).collect();
    tethered.extend(extra_tether);
    let tethered: Vec<usize> = tethered.into_iter().map(|p| p - 1).collect();
    let chords: Vec<(usize, usize)> = d
        .chords()
        .into_iter()
        .filter(|&(a, _)| a != 1)
        .map(|(a, b)| (a - 1, b - 1))
        .collect();
    ChordDiagram::new(total, &tethered, &chords).expect("relabelling keeps validity")
}

/// Deletes a tethered chord at position 1.
pub fn theta(d: &ChordDiagram) -> Option<ChordDiagram> {
    (first_point(d) == FirstPoint::Tethered).then(|| relabel_drop_first(d, None))
}

/// Deletes position 1 and tethers its partner, returning the part index `i`.
pub fn theta_i(d: &ChordDiagram) -> Option<(usize, ChordDiagram)> {
    match first_point(d) {
        FirstPoint::Tethered => None,
        FirstPoint::Free(i) => Some((i, relabel_drop_first(d, d.partner(1)))),
    }
}

/// Checks that `theta` and every `theta_i` are crossing-compatible bijections
/// onto the diagrams with `(f, n - 1)` and `(f - 1, n + 1)` chords respectively.
pub fn verify_first_point_partition(f: usize, n: usize) -> Result<bool, ChordError> {
    if f == 0 && n == 0 {
        return Ok(true);
    }
    let source = enumerate(f, n)?;
    let tethered_target: BTreeSet<ChordDiagram> = if n > 0 {
        enumerate(f, n - 1)?.into_iter().collect()
    } else {
        BTreeSet::new()
    };
    let free_target: BTreeSet<ChordDiagram> = if f > 0 {
        enumerate(f - 1, n + 1)?.into_iter().collect()
    } else {
        BTreeSet::new()
    };
    let mut theta_image = BTreeSet::new();
    let mut theta_i_images = vec![BTreeSet::new(); n + 1];
    for d in &source {
        if let Some(e) = theta(d) {
            if e.crossings() != d.crossings() || !theta_image.insert(e) {
                return Ok(false);
            }
        } else {
            let (i, e) = theta_i(d).expect("free at position 1");
            if i > n || e.crossings() + i != d.crossings() || !theta_i_images[i].insert(e) {
                return Ok(false);
            }
        }
    }
    Ok(theta_image == tethered_target
        && theta_i_images
            .iter()
            .all(|img| f == 0 || *img == free_target))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_is_a_bijection_for_small_sizes() {
        for f in 0..=3 {
            for n in 0..=(5 - f) {
                assert!(verify_first_point_partition(f, n).unwrap(), "f={f} n={n}");
            }
        }
    }
}
