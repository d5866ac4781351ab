//! Spanning sets of reduced diagrams and words realizing them.
//!
//! A basis key is a perfect matching of the boundary points with a dot count
//! on each chord and an odd monomial in `Gamma`. Its degree is twice the dots
//! minus twice the crossings plus the monomial degree.

use qseries::{BigInt, BigRational};

use crate::engine::Diagram;
use crate::gamma::{odd_monomials, GammaElem, Monomial};
use crate::word::{FreeMor, Gen, GenWord, Slice};

/// A basis element: reduced diagram times a monomial in the bubbles.
pub type BasisKey = (Diagram, Monomial);

/// All perfect matchings of `0..total`, as sorted chord lists.
pub fn matchings(total: usize) -> Vec<Vec<(u32, u32)>> {
    fn rec(free: &mut Vec<u32>, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    if total % 2 == 0 {
        rec(&mut (0..total as u32).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// Basis keys of `Hom(n, m)` in degree `d`, in a fixed order.
pub fn basis_keys(n: usize, m: usize, d: i64) -> Vec<BasisKey> {
    let mut out = Vec::new();
    for chords in matchings(n + m) {
        let bare = Diagram {
            dots: vec![0; chords.len()],
            chords,
        };
        let budget = d + 2 * bare.crossings() as i64;
        if budget < 0 || budget % 2 != 0 {
            continue;
        }
        let half = (budget / 2) as u32;
        for dots_total in 0..=half {
            let monos = odd_monomials(2 * (half - dots_total) as i64);
            if monos.is_empty() {
                continue;
            }
            for dots in compositions(dots_total, bare.chords.len()) {
                for mono in &monos {
                    out.push((
                        Diagram {
                            chords: bare.chords.clone(),
                            dots: dots.clone(),
                        },
                        mono.clone(),
                    ));
                }
            }
        }
    }
    out
}

/// Ways to write `k` as an ordered sum of `parts` non-negative integers.
fn compositions(k: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Slices joining the chords among `width` bottom points, innermost first.
///
/// Returns the slices and the positions left over, in order.
fn cap_off(width: usize, chords: &[(usize, usize)]) -> (Vec<Slice>, Vec<usize>) {
    let mut pos: Vec<usize> = (0..width).collect();
    let mut todo: Vec<(usize, usize)> = chords.to_vec();
    let mut slices = Vec::new();
    while !todo.is_empty() {
        let span = |c: &(usize, usize), pos: &[usize]| {
            let p = pos.iter().position(|&x| x == c.0).unwrap();
            let q = pos.iter().position(|&x| x == c.1).unwrap();
            (q - p, p, q)
        };
        let (i, _) = todo
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| span(c, &pos).0)
            .unwrap();
        let c = todo.remove(i);
        let (_, p, q) = span(&c, &pos);
        for o in (p + 1..q).rev() {
            slices.push(Slice::new(o, Gen::Cross));
            pos.swap(o, o + 1);
        }
        slices.push(Slice::new(p, Gen::Cap));
        pos.drain(p..p + 2);
    }
    (slices, pos)
}

/// A word for a reduced diagram with its dots, and the sign relating the two.
pub fn diagram_word(n: usize, m: usize, diagram: &Diagram) -> (GenWord, i64) {
    let total = n + m;
    let top_pos = |s: u32| total - 1 - s as usize;
    let mut slices = Vec::new();
    let mut caps = Vec::new();
    let mut cups = Vec::new();
    let mut props = Vec::new();
    let mut cup_dots = Vec::new();
    for (&(h, o), &k) in diagram.chords.iter().zip(&diagram.dots) {
        let (h, o) = (h as usize, o as usize);
        if h < n {
            for _ in 0..k {
                slices.push(Slice::new(h, Gen::Dot));
            }
            if o < n {
                caps.push((h, o));
            } else {
                props.push((h, top_pos(o as u32)));
            }
        } else {
            let (a, b) = (top_pos(o as u32), top_pos(h as u32));
            cups.push((a, b));
            cup_dots.push((b, k));
        }
    }
    let (cap_slices, left) = cap_off(n, &caps);
    slices.extend(cap_slices);
    // Propagating strands in bottom order, labelled by top position.
    let mut order: Vec<usize> = left
        .iter()
        .map(|&b| props.iter().find(|p| p.0 == b).unwrap().1)
        .collect();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..order.len().saturating_sub(1) {
            if order[i] > order[i + 1] {
                slices.push(Slice::new(i, Gen::Cross));
                order.swap(i, i + 1);
                sorted = false;
            }
        }
    }
    let (cup_slices, _) = cap_off(m, &cups);
    let top = GenWord::new(m, cup_slices)
        .expect("valid caps")
        .reflect_tb();
    slices.extend(top.slices);
    let mut sign = 1i64;
    for (b, k) in cup_dots {
        for _ in 0..k {
            slices.push(Slice::new(b, Gen::Dot));
        }
        if k % 2 == 1 {
            sign = -sign;
        }
    }
    (
        GenWord::new(n, slices).expect("diagram word is well formed"),
        sign,
    )
}

/// Appends bubbles with the given dot counts at the right edge.
pub fn with_bubbles(w: &GenWord, dots: &[u32]) -> GenWord {
    let m = w.target;
    let mut slices = w.slices.clone();
    for &r in dots {
        slices.push(Slice::new(m, Gen::Cup));
        for _ in 0..r {
            slices.push(Slice::new(m + 1, Gen::Dot));
        }
        slices.push(Slice::new(m, Gen::Cap));
    }
    GenWord::new(w.source, slices).expect("bubbles fit")
}

/// A word whose normal form is the basis element `key` with coefficient 1.
pub fn basis_word(n: usize, m: usize, key: &BasisKey, t: u8) -> FreeMor {
    let (w, sign) = diagram_word(n, m, &key.0);
    // O_r = -2 (-1)^t b_r, with b_r a bubble carrying r dots on its right.
    let per = if t % 2 == 0 { -2 } else { 2 };
    let coeff = BigInt::from(sign) * BigInt::from(per).pow(key.1.len() as u32);
    FreeMor::term(with_bubbles(&w, &key.1), BigRational::from_integer(coeff))
}

/// Partitions of `k` into positive parts, largest part first.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(k)).rev() {
            cur.push(p);
            rec(k - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Words spanning `Hom(n, m)` in degree `d`: each reduced dotted diagram
/// times every product of dotted bubbles of the remaining degree.
///
/// Products of all (not only odd) dotted bubbles span `Gamma` with shorter
/// words than odd monomials.
pub fn spanning_words(n: usize, m: usize, d: i64) -> Vec<GenWord> {
    let mut out = Vec::new();
    for chords in matchings(n + m) {
        let bare = Diagram {
            dots: vec![0; chords.len()],
            chords,
        };
        let budget = d + 2 * bare.crossings() as i64;
        if budget < 0 || budget % 2 != 0 {
            continue;
        }
        let half = (budget / 2) as u32;
        for dots_total in 0..=half {
            let parts = partitions(half - dots_total);
            for dots in compositions(dots_total, bare.chords.len()) {
                let diagram = Diagram {
                    chords: bare.chords.clone(),
                    dots,
                };
                let (w, _) = diagram_word(n, m, &diagram);
                for p in &parts {
                    out.push(with_bubbles(&w, p));
                }
            }
        }
    }
    out
}

/// `diagram * mono` as an expected normal-form entry.
pub fn key_gamma(key: &BasisKey) -> GammaElem {
    GammaElem::monomial(key.1.clone(), BigRational::from_integer(BigInt::from(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts_are_double_factorials() {
        let c: Vec<usize> = [0, 2, 4, 6, 8]
            .iter()
            .map(|&k| matchings(k).len())
            .collect();
        assert_eq!(c, vec![1, 1, 3, 15, 105]);
    }

    #[test]
    fn small_key_counts() {
        assert_eq!(basis_keys(1, 1, 0).len(), 1);
        assert_eq!(basis_keys(1, 1, 2).len(), 2);
        assert_eq!(basis_keys(0, 2, 0).len(), 1);
        assert_eq!(basis_keys(0, 1, 0).len(), 0);
    }

    #[test]
    fn partition_counts() {
        let c: Vec<usize> = (0..7).map(|k| partitions(k).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 3, 5, 7, 11]);
    }
}
