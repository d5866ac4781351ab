//! Based chord diagrams, crossing counts and exhaustive enumeration.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::ChordError;

/// Largest number of points accepted by [`enumerate`].
pub const DEFAULT_MAX_POINTS: usize = 14;

/// A chord diagram on positions `1..=total_points` read clockwise from the basepoint.
///
/// Tethered positions are joined to the basepoint; the remaining positions are
/// paired by free chords. `partner[p - 1]` is `Some(b)` when `p` is joined to `b`
/// and `None` when `p` is tethered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChordDiagram {
    partner: Vec<Option<usize>>,
}

impl ChordDiagram {
    /// Builds a diagram from its tethered positions and free chords.
    pub fn new(
        total_points: usize,
        tethered: &[usize],
        chords: &[(usize, usize)],
    ) -> Result<Self, ChordError> {
        let mut partner: Vec<Option<Option<usize>>> = vec![None; total_points];
        let mut place = |p: usize, v: Option<usize>| -> Result<(), ChordError> {
            if p == 0 || p > total_points {
                return Err(ChordError::PositionOutOfRange(p, total_points));
            }
            if partner[p - 1].is_some() {
                return Err(ChordError::PositionReused(p));
            }
            partner[p - 1] = Some(v);
            Ok(())
        };
        for &p in tethered {
            place(p, None)?;
        }
        for &(a, b) in chords {
            if a == b {
                return Err(ChordError::PositionReused(a));
            }
            place(a, Some(b))?;
            place(b, Some(a))?;
        }
        let partner = partner
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or(ChordError::PositionUnused(i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { partner })
    }

    pub fn total_points(&self) -> usize {
        self.partner.len()
    }

    /// Tethered positions in increasing order.
    pub fn tethered(&self) -> Vec<usize> {
        (1..=self.total_points())
            .filter(|&p| self.partner[p - 1].is_none())
            .collect()
    }

    /// Free chords `(a, b)` with `a < b`, sorted by `a`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (1..=self.total_points())
            .filter_map(|p| self.partner[p - 1].filter(|&b| b > p).map(|b| (p, b)))
            .collect()
    }

    /// Partner of position `p`, `None` when tethered.
    pub fn partner(&self, p: usize) -> Option<usize> {
        self.partner[p - 1]
    }

    pub fn num_tethered(&self) -> usize {
        self.partner.iter().filter(|v| v.is_none()).count()
    }

    pub fn num_free(&self) -> usize {
        (self.total_points() - self.num_tethered()) / 2
    }

    /// Number of crossing chord pairs.
    ///
    /// Free chords cross when their endpoints interleave. A tethered chord at
    /// `p` runs from the basepoint, which precedes position 1, so it crosses a
    /// free chord `(a, b)` exactly when `a < p < b`. Tethered chords share the
    /// basepoint and never cross each other.
    pub fn crossings(&self) -> usize {
        let chords = self.chords();
        let tethered = self.tethered();
        let mut c = 0;
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(x, y) in &chords[i + 1..] {
                if (a < x && x < b && b < y) || (x < a && a < y && y < b) {
                    c += 1;
                }
            }
            c += tethered.iter().filter(|&&p| a < p && p < b).count();
        }
        c
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn double_factorial_odd(f: usize) -> u128 {
    // (2f - 1)!! with (-1)!! = 1.
    (1..=f).fold(1u128, |acc, k| acc * (2 * k - 1) as u128)
}

/// `C(2f + n, n) * (2f - 1)!!`, the number of diagrams with `f` free and `n` tethered chords.
pub fn diagram_count(f: usize, n: usize) -> u128 {
    binomial(2 * f + n, n) * double_factorial_odd(f)
}

/// All diagrams with `f` free and `n` tethered chords, bounded by [`DEFAULT_MAX_POINTS`].
pub fn enumerate(f: usize, n: usize) -> Result<Vec<ChordDiagram>, ChordError> {
    enumerate_bounded(f, n, DEFAULT_MAX_POINTS)
}

/// All diagrams with `f` free and `n` tethered chords on at most `max_points` points.
pub fn enumerate_bounded(
    f: usize,
    n: usize,
    max_points: usize,
) -> Result<Vec<ChordDiagram>, ChordError> {
    let total = 2 * f + n;
    if total > max_points {
        return Err(ChordError::SizeExceeded {
            points: total,
            max: max_points,
        });
    }
    let mut out = Vec::with_capacity(diagram_count(f, n) as usize);
    let mut tethered = BTreeSet::new();
    choose_tethered(total, n, 1, &mut tethered, &mut out);
    Ok(out)
}

fn choose_tethered(
    total: usize,
    remaining: usize,
    start: usize,
    chosen: &mut BTreeSet<usize>,
    out: &mut Vec<ChordDiagram>,
) {
    if remaining == 0 {
        let mut partner = vec![None; total];
        let free: Vec<usize> = (1..=total).filter(|p| !chosen.contains(p)).collect();
        let mut used = vec![false; free.len()];
        match_free(&free, &mut used, &mut partner, out);
        return;
    }
    for p in start..=total {
        if total - p + 1 < remaining {
            break;
        }
        chosen.insert(p);
        choose_tethered(total, remaining - 1, p + 1, chosen, out);
        chosen.remove(&p);
    }
}

fn match_free(
    free: &[usize],
    used: &mut [bool],
    partner: &mut [Option<usize>],
    out: &mut Vec<ChordDiagram>,
) {
    let Some(i) = used.iter().position(|u| !u) else {
        out.push(ChordDiagram {
            partner: partner.to_vec(),
        });
        return;
    };
    used[i] = true;
    for j in i + 1..free.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        partner[free[i] - 1] = Some(free[j]);
        partner[free[j] - 1] = Some(free[i]);
        match_free(free, used, partner, out);
        partner[free[i] - 1] = None;
        partner[free[j] - 1] = None;
        used[j] = false;
    }
    used[i] = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_and_interleaved_chords() {
        let d = ChordDiagram::new(2, &[], &[(1, 2)]).unwrap();
        assert_eq!(d.crossings(), 0);
        let d = ChordDiagram::new(4, &[], &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(d.crossings(), 1);
    }

    #[test]
    fn invalid_diagrams_rejected() {
        assert_eq!(
            ChordDiagram::new(3, &[1], &[(1, 2)]),
            Err(ChordError::PositionReused(1))
        );
        assert_eq!(
            ChordDiagram::new(3, &[3], &[(1, 2), (2, 4)]),
            Err(ChordError::PositionReused(2))
        );
        assert_eq!(
            ChordDiagram::new(3, &[], &[(1, 2)]),
            Err(ChordError::PositionUnused(3))
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(0, 3).unwrap().len(), 1);
        assert_eq!(enumerate(2, 0).unwrap().len(), 3);
        assert_eq!(enumerate(1, 2).unwrap().len(), 6);
        assert!(matches!(
            enumerate_bounded(4, 0, 6),
            Err(ChordError::SizeExceeded { points: 8, max: 6 })
        ));
    }

    #[test]
    fn enumeration_is_distinct() {
        let all = enumerate(2, 2).unwrap();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all.len() as u128, diagram_count(2, 2));
    }
}
