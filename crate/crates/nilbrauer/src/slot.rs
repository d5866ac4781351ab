//! Graded pieces `Hom(B^n, B^m)_d` of the quotient by the relation ideal.
//!
//! Seed words of length at most `L` are mapped to normal forms. Since the
//! normal form kills every relation, the rank of the seed images bounds the
//! quotient dimension from below, while reduced diagrams span it from above.
//! A slot is certified when the rank reaches the basis-theorem count, the
//! reduction never got stuck, and sampled relation instances vanish.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::{ToPrimitive, Zero};
use qseries::BigRational;
use serde::{Deserialize, Serialize};

use crate::basis::{basis_keys, spanning_words};
use crate::engine::{Diagram, Engine, Nf};
use crate::error::NbError;
use crate::gamma::Monomial;
use crate::relations::relation_generators;
use crate::word::{FreeMor, Gen, GenWord, Slice};

/// Cache layout version.
pub const CACHE_SCHEMA: u32 = 1;
/// Code version recorded in cache files; stale entries are rebuilt.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+nf1");

/// Limits for slot construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotBounds {
    /// Maximum number of slices in a seed word.
    pub l: usize,
    /// Maximum number of boundary points `m + n`.
    pub max_boundary: usize,
    /// Maximum number of words taken from exhaustive enumeration.
    pub enum_words: usize,
    /// Maximum number of sampled relation instances.
    pub samples: usize,
}

impl Default for SlotBounds {
    fn default() -> Self {
        Self {
            l: 14,
            max_boundary: 6,
            enum_words: 200,
            samples: 24,
        }
    }
}

/// A certified or uncertified graded piece of a Hom space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSlot {
    pub schema: u32,
    pub version: String,
    /// Target strand count.
    pub m: usize,
    /// Source strand count.
    pub n: usize,
    pub d: i64,
    #[serde(rename = "L")]
    pub l: usize,
    pub t: u8,
    /// Seed words whose images form a basis of the quotient.
    pub basis_words: Vec<String>,
    pub seeds: usize,
    /// Dimension of the relation span among the seeds.
    pub relation_rank: usize,
    pub quotient_dim: usize,
    pub predicted: u64,
    pub relation_samples: usize,
    pub certified: bool,
}

/// Outcome of an equality test in a slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Equal,
    NotEqual,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "Equal",
            Verdict::NotEqual => "NotEqual",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Incremental exact row reduction.
#[derive(Default)]
struct Echelon {
    cols: HashMap<(Diagram, Monomial), usize>,
    /// Pivot column to normalized row.
    rows: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn vector(&mut self, nf: &Nf) -> BTreeMap<usize, BigRational> {
        let mut v = BTreeMap::new();
        for (k, c) in nf.coordinates() {
            let n = self.cols.len();
            let i = *self.cols.entry(k).or_insert(n);
            v.insert(i, c);
        }
        v
    }

    /// Adds a vector; true if it was independent of the previous ones.
    fn insert(&mut self, mut v: BTreeMap<usize, BigRational>) -> bool {
        loop {
            let Some(p) = v.keys().copied().find(|k| self.rows.contains_key(k)) else {
                break;
            };
            let c = v[&p].clone();
            for (k, x) in &self.rows[&p] {
                let e = v.entry(*k).or_insert_with(BigRational::zero);
                *e -= &c * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
        let Some((&p, c)) = v.iter().next() else {
            return false;
        };
        let c = c.clone();
        for x in v.values_mut() {
            *x /= &c;
        }
        self.rows.insert(p, v);
        true
    }
}

/// Words with at most `l` slices from `n` to `m` strands of degree `d`,
/// in depth-first order, at most `budget` of them.
pub fn enumerate_words(
    n: usize,
    m: usize,
    d: i64,
    l: usize,
    max_width: usize,
    budget: usize,
) -> Vec<GenWord> {
    struct Dfs {
        m: usize,
        d: i64,
        l: usize,
        max_width: usize,
        budget: usize,
        visits: usize,
        out: Vec<GenWord>,
    }
    fn go(s: &mut Dfs, n: usize, width: usize, deg: i64, cur: &mut Vec<Slice>) {
        if s.out.len() >= s.budget || s.visits >= 50 * s.budget {
            return;
        }
        s.visits += 1;
        if width == s.m && deg == s.d {
            s.out
                .push(GenWord::new(n, cur.clone()).expect("valid by construction"));
        }
        let rem = (s.l - cur.len()) as i64;
        if rem == 0 {
            return;
        }
        for g in [Gen::Dot, Gen::Cross, Gen::Cap, Gen::Cup] {
            if width < g.inputs() {
                continue;
            }
            let w2 = width - g.inputs() + g.outputs();
            let d2 = deg + g.degree();
            let left = rem - 1;
            if w2 > s.max_width
                || (w2 as i64 - s.m as i64).abs() > 2 * left
                || d2 - 2 * left > s.d
                || d2 + 2 * left < s.d
            {
                continue;
            }
            for o in 0..=width - g.inputs() {
                // Far-apart dots and crossings commute; keep one order.
                if let Some(prev) = cur.last() {
                    let keeps = |x: Gen| x.inputs() == x.outputs();
                    if keeps(g) && keeps(prev.gen) && prev.offset + prev.gen.outputs() <= o {
                        continue;
                    }
                }
                cur.push(Slice::new(o, g));
                go(s, n, w2, d2, cur);
                cur.pop();
            }
        }
    }
    let mut s = Dfs {
        m,
        d,
        l,
        max_width,
        budget,
        visits: 0,
        out: Vec::new(),
    };
    go(&mut s, n, n, 0, &mut Vec::new());
    s.out
}

/// Sampled relation instances landing in `Hom(n, m)_d`.
fn relation_samples(n: usize, m: usize, d: i64, t: u8, bounds: &SlotBounds) -> Vec<FreeMor> {
    let mut out = Vec::new();
    let gens = relation_generators(t);
    'outer: for pads in 0..=2usize {
        for (_, rel) in &gens {
            let Some(e) = rel.homogeneous_degree() else {
                continue;
            };
            for left in 0..=pads {
                let p = rel.pad(left, pads - left);
                if p.source + n > bounds.max_boundary + 2 || p.target + m > bounds.max_boundary + 2
                {
                    continue;
                }
                for d1 in [0i64, 2, -2] {
                    let d2 = d - e - d1;
                    let pre = spanning_words(n, p.source, d1);
                    let post = spanning_words(p.target, m, d2);
                    if let (Some(a), Some(b)) = (pre.first(), post.last()) {
                        let a = FreeMor::word(a.clone());
                        let b = FreeMor::word(b.clone());
                        let inst = b.compose(&p.compose(&a).expect("widths")).expect("widths");
                        out.push(inst);
                        if out.len() >= bounds.samples {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Builds `Hom(B^n, B^m)_d` with a fresh engine.
pub fn build_slot(m: usize, n: usize, d: i64, l: usize, t: u8) -> Result<QuotientSlot, NbError> {
    let bounds = SlotBounds {
        l,
        ..SlotBounds::default()
    };
    build_slot_with(&mut Engine::new(t), m, n, d, &bounds)
}

/// Builds `Hom(B^n, B^m)_d` using `engine`.
pub fn build_slot_with(
    engine: &mut Engine,
    m: usize,
    n: usize,
    d: i64,
    bounds: &SlotBounds,
) -> Result<QuotientSlot, NbError> {
    if m + n > bounds.max_boundary {
        return Err(NbError::BoundExceeded {
            m,
            n,
            d,
            what: format!("m+n > {}", bounds.max_boundary),
        });
    }
    let t = engine.t();
    let keys = basis_keys(n, m, d);
    let predicted = characters::predicted_homdim(m, n, d)
        .to_u64()
        .unwrap_or(u64::MAX);
    let mut seeds: Vec<GenWord> = spanning_words(n, m, d)
        .into_iter()
        .filter(|w| w.slices.len() <= bounds.l)
        .collect();
    let max_width = (n.max(m) + 2).min(bounds.max_boundary);
    for w in enumerate_words(n, m, d, bounds.l, max_width, bounds.enum_words) {
        if !seeds.contains(&w) {
            seeds.push(w);
        }
    }
    let mut ech = Echelon::default();
    let mut basis_words = Vec::new();
    let mut stuck = false;
    for w in &seeds {
        let nf = engine.word_nf(w);
        stuck |= nf.stuck;
        let v = ech.vector(&nf);
        if ech.insert(v) {
            basis_words.push(w.to_string());
        }
    }
    let quotient_dim = basis_words.len();
    let samples = relation_samples(n, m, d, t, bounds);
    let mut sound = true;
    for s in &samples {
        let nf = engine.normal_form(s);
        sound &= nf.is_zero() && !nf.stuck;
    }
    let certified =
        !stuck && sound && quotient_dim as u64 == predicted && keys.len() as u64 == predicted;
    Ok(QuotientSlot {
        schema: CACHE_SCHEMA,
        version: CODE_VERSION.to_string(),
        m,
        n,
        d,
        l: bounds.l,
        t,
        basis_words,
        seeds: seeds.len(),
        relation_rank: seeds.len() - quotient_dim,
        quotient_dim,
        predicted,
        relation_samples: samples.len(),
        certified,
    })
}

/// Path of the cache file for a slot.
pub fn cache_path(dir: &Path, m: usize, n: usize, d: i64, l: usize, t: u8) -> PathBuf {
    dir.join(format!("slot_m{m}_n{n}_d{d}_L{l}_t{t}.json"))
}

/// Reads a cached slot if present and current.
pub fn load_cached(
    dir: &Path,
    m: usize,
    n: usize,
    d: i64,
    l: usize,
    t: u8,
) -> Option<QuotientSlot> {
    let text = fs::read_to_string(cache_path(dir, m, n, d, l, t)).ok()?;
    let slot: QuotientSlot = serde_json::from_str(&text).ok()?;
    (slot.schema == CACHE_SCHEMA && slot.version == CODE_VERSION).then_some(slot)
}

/// Writes a slot atomically: temporary file, then rename.
pub fn store_cached(dir: &Path, slot: &QuotientSlot) -> Result<(), NbError> {
    fs::create_dir_all(dir).map_err(|e| NbError::Cache(e.to_string()))?;
    let path = cache_path(dir, slot.m, slot.n, slot.d, slot.l, slot.t);
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    let text = serde_json::to_string_pretty(slot).map_err(|e| NbError::Cache(e.to_string()))?;
    fs::write(&tmp, text).map_err(|e| NbError::Cache(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| NbError::Cache(e.to_string()))
}

/// Loads a slot from `dir` or builds and stores it.
pub fn load_or_build(
    dir: Option<&Path>,
    engine: &mut Engine,
    m: usize,
    n: usize,
    d: i64,
    bounds: &SlotBounds,
) -> Result<QuotientSlot, NbError> {
    if let Some(dir) = dir {
        if let Some(s) = load_cached(dir, m, n, d, bounds.l, engine.t()) {
            return Ok(s);
        }
    }
    let slot = build_slot_with(engine, m, n, d, bounds)?;
    if let Some(dir) = dir {
        store_cached(dir, &slot)?;
    }
    Ok(slot)
}

/// Compares `a` and `b` in the quotient.
///
/// `Equal` iff `a - b` reduces to zero; `NotEqual` only in certified slots.
pub fn eq_mod_relations(
    engine: &mut Engine,
    a: &FreeMor,
    b: &FreeMor,
    slot: &QuotientSlot,
) -> Result<Verdict, NbError> {
    for f in [a, b] {
        if f.source != slot.n || f.target != slot.m {
            return Err(NbError::SignatureMismatch(format!(
                "{}->{} against slot {}->{}",
                f.source, f.target, slot.n, slot.m
            )));
        }
        if let Some(&deg) = f.degrees().iter().find(|&&x| x != slot.d) {
            return Err(NbError::SignatureMismatch(format!(
                "degree {deg} against slot degree {}",
                slot.d
            )));
        }
    }
    if engine.t() != slot.t {
        return Err(NbError::SignatureMismatch(format!(
            "t={} against slot t={}",
            engine.t(),
            slot.t
        )));
    }
    let nf = engine.normal_form(&a.sub(b)?);
    Ok(if nf.stuck {
        Verdict::Unknown
    } else if nf.is_zero() {
        Verdict::Equal
    } else if slot.certified {
        Verdict::NotEqual
    } else {
        Verdict::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_respects_bounds() {
        let ws = enumerate_words(1, 1, 2, 4, 3, 1000);
        assert!(!ws.is_empty());
        for w in ws {
            assert!(w.slices.len() <= 4 && w.target == 1 && w.degree() == 2);
        }
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::default();
        let v = |xs: &[(usize, i64)]| {
            xs.iter()
                .map(|&(i, c)| (i, BigRational::from_integer(c.into())))
                .collect()
        };
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1)])));
        assert!(!e.insert(v(&[(0, 3), (1, 1)])));
    }
}
