//! Words in the generating morphisms and their formal linear combinations.
//!
//! A word lists slices from bottom to top. Each slice applies one generator
//! at an offset on the running strand count. Text form: `n>m:` followed by
//! slices `d<i>` (dot), `x<i>` (crossing), `a<i>` (cap) and `u<i>` (cup),
//! separated by spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use qseries::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::error::NbError;

/// A generating morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    /// Degree 2, one strand.
    Dot,
    /// Degree -2, two strands.
    Cross,
    /// Two strands to none, degree 0.
    Cap,
    /// No strands to two, degree 0.
    Cup,
}

impl Gen {
    pub fn degree(self) -> i64 {
        match self {
            Gen::Dot => 2,
            Gen::Cross => -2,
            Gen::Cap | Gen::Cup => 0,
        }
    }

    /// Strands consumed.
    pub fn inputs(self) -> usize {
        match self {
            Gen::Dot => 1,
            Gen::Cross | Gen::Cap => 2,
            Gen::Cup => 0,
        }
    }

    /// Strands produced.
    pub fn outputs(self) -> usize {
        match self {
            Gen::Dot => 1,
            Gen::Cross | Gen::Cup => 2,
            Gen::Cap => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Gen::Dot => 'd',
            Gen::Cross => 'x',
            Gen::Cap => 'a',
            Gen::Cup => 'u',
        }
    }
}

/// One generator placed at `offset` strands from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slice {
    pub offset: usize,
    pub gen: Gen,
}

impl Slice {
    pub fn new(offset: usize, gen: Gen) -> Self {
        Self { offset, gen }
    }
}

/// A composite of slices, read bottom to top, from `source` to `target` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenWord {
    pub source: usize,
    pub target: usize,
    pub slices: Vec<Slice>,
}

impl GenWord {
    /// Validates the slices and computes the target.
    pub fn new(source: usize, slices: Vec<Slice>) -> Result<Self, NbError> {
        let mut k = source;
        for (index, s) in slices.iter().enumerate() {
            if s.offset + s.gen.inputs() > k {
                return Err(NbError::InvalidSlice {
                    index,
                    reason: format!("{:?} at offset {} on {} strands", s.gen, s.offset, k),
                });
            }
            k = k - s.gen.inputs() + s.gen.outputs();
        }
        Ok(Self {
            source,
            target: k,
            slices,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            source: n,
            target: n,
            slices: Vec::new(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.slices.iter().map(|s| s.gen.degree()).sum()
    }

    pub fn count(&self, g: Gen) -> usize {
        self.slices.iter().filter(|s| s.gen == g).count()
    }

    /// `self` after `g`.
    pub fn compose(&self, g: &GenWord) -> Result<GenWord, NbError> {
        if g.target != self.source {
            return Err(NbError::StrandMismatch {
                expected: self.source,
                found: g.target,
            });
        }
        let mut slices = g.slices.clone();
        slices.extend_from_slice(&self.slices);
        Ok(GenWord {
            source: g.source,
            target: self.target,
            slices,
        })
    }

    /// `self` to the left of `g`.
    pub fn tensor(&self, g: &GenWord) -> GenWord {
        let mut slices: Vec<Slice> = g
            .slices
            .iter()
            .map(|s| Slice::new(s.offset + self.source, s.gen))
            .collect();
        slices.extend_from_slice(&self.slices);
        GenWord {
            source: self.source + g.source,
            target: self.target + g.target,
            slices,
        }
    }

    /// Pads with `left` and `right` identity strands.
    pub fn pad(&self, left: usize, right: usize) -> GenWord {
        GenWord {
            source: self.source + left + right,
            target: self.target + left + right,
            slices: self
                .slices
                .iter()
                .map(|s| Slice::new(s.offset + left, s.gen))
                .collect(),
        }
    }

    /// Left-right mirror image with its sign `(-1)^dots`.
    pub fn reflect_lr(&self) -> (GenWord, i64) {
        let mut k = self.source;
        let mut slices = Vec::with_capacity(self.slices.len());
        for s in &self.slices {
            slices.push(Slice::new(k - s.offset - s.gen.inputs(), s.gen));
            k = k - s.gen.inputs() + s.gen.outputs();
        }
        let odd = self.count(Gen::Dot) % 2 == 1;
        (
            GenWord {
                source: self.source,
                target: self.target,
                slices,
            },
            if odd { -1 } else { 1 },
        )
    }

    /// Top-bottom mirror image; caps and cups swap.
    pub fn reflect_tb(&self) -> GenWord {
        let slices = self
            .slices
            .iter()
            .rev()
            .map(|s| {
                let gen = match s.gen {
                    Gen::Cap => Gen::Cup,
                    Gen::Cup => Gen::Cap,
                    g => g,
                };
                Slice::new(s.offset, gen)
            })
            .collect();
        GenWord {
            source: self.target,
            target: self.source,
            slices,
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}:", self.source, self.target)?;
        for s in &self.slices {
            write!(f, " {}{}", s.gen.letter(), s.offset)?;
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = NbError;
    fn from_str(s: &str) -> Result<Self, NbError> {
        let bad = |m: &str| NbError::Parse(format!("{m} in {s:?}"));
        let (head, body) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let (src, tgt) = head
            .trim()
            .split_once('>')
            .ok_or_else(|| bad("missing '>'"))?;
        let source: usize = src.parse().map_err(|_| bad("bad source"))?;
        let target: usize = tgt.parse().map_err(|_| bad("bad target"))?;
        let mut slices = Vec::new();
        for tok in body.split_whitespace() {
            let gen = match tok.chars().next() {
                Some('d') => Gen::Dot,
                Some('x') => Gen::Cross,
                Some('a') => Gen::Cap,
                Some('u') => Gen::Cup,
                _ => return Err(bad("unknown generator")),
            };
            let offset: usize = tok[1..].parse().map_err(|_| bad("bad offset"))?;
            slices.push(Slice::new(offset, gen));
        }
        let w = GenWord::new(source, slices)?;
        if w.target != target {
            return Err(NbError::StrandMismatch {
                expected: target,
                found: w.target,
            });
        }
        Ok(w)
    }
}

/// A formal linear combination of words with a common source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMor {
    pub source: usize,
    pub target: usize,
    pub terms: BTreeMap<GenWord, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FreeMor {
    pub fn zero(source: usize, target: usize) -> Self {
        Self {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: GenWord) -> Self {
        Self::term(w, BigRational::one())
    }

    pub fn term(w: GenWord, c: BigRational) -> Self {
        let mut f = Self::zero(w.source, w.target);
        f.add_word(w, c);
        f
    }

    pub fn identity(n: usize) -> Self {
        Self::word(GenWord::identity(n))
    }

    /// A single generator on `n` strands at `offset`.
    pub fn gen(n: usize, offset: usize, g: Gen) -> Result<Self, NbError> {
        Ok(Self::word(GenWord::new(n, vec![Slice::new(offset, g)])?))
    }

    /// Builds a word from slices on `n` source strands.
    pub fn slices(n: usize, slices: &[(usize, Gen)]) -> Result<Self, NbError> {
        let s = slices.iter().map(|&(o, g)| Slice::new(o, g)).collect();
        Ok(Self::word(GenWord::new(n, s)?))
    }

    pub fn add_word(&mut self, w: GenWord, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(w.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.source, self.target);
        for (w, v) in &self.terms {
            out.add_word(w.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn add(&self, o: &FreeMor) -> Result<Self, NbError> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (w, v) in &o.terms {
            out.add_word(w.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &FreeMor) -> Result<Self, NbError> {
        self.add(&o.scale_int(-1))
    }

    fn check_same(&self, o: &FreeMor) -> Result<(), NbError> {
        if self.source != o.source || self.target != o.target {
            return Err(NbError::SignatureMismatch(format!(
                "{}>{} vs {}>{}",
                self.source, self.target, o.source, o.target
            )));
        }
        Ok(())
    }

    /// Degrees of the words present, sorted.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|w| w.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The common degree, if all words share one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// `self` after `g`.
    pub fn compose(&self, g: &FreeMor) -> Result<Self, NbError> {
        if g.target != self.source {
            return Err(NbError::StrandMismatch {
                expected: self.source,
                found: g.target,
            });
        }
        let mut out = Self::zero(g.source, self.target);
        for (a, ca) in &self.terms {
            for (b, cb) in &g.terms {
                out.add_word(a.compose(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, g: &FreeMor) -> Self {
        let mut out = Self::zero(self.source + g.source, self.target + g.target);
        for (a, ca) in &self.terms {
            for (b, cb) in &g.terms {
                out.add_word(a.tensor(b), ca * cb);
            }
        }
        out
    }

    pub fn pad(&self, left: usize, right: usize) -> Self {
        let mut out = Self::zero(self.source + left + right, self.target + left + right);
        for (w, c) in &self.terms {
            out.add_word(w.pad(left, right), c.clone());
        }
        out
    }

    pub fn apply(&self, which: Mirror) -> Self {
        let (s, t) = match which {
            Mirror::R => (self.source, self.target),
            Mirror::T => (self.target, self.source),
        };
        let mut out = Self::zero(s, t);
        for (w, c) in &self.terms {
            match which {
                Mirror::R => {
                    let (v, sign) = w.reflect_lr();
                    out.add_word(v, c * rat(sign));
                }
                Mirror::T => out.add_word(w.reflect_tb(), c.clone()),
            }
        }
        out
    }
}

impl fmt::Display for FreeMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c}) [{w}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The two reflection symmetries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mirror {
    /// Left-right reflection with sign `(-1)^dots`.
    R,
    /// Top-bottom reflection.
    T,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_tensor_examples() {
        let cross = FreeMor::gen(2, 0, Gen::Cross).unwrap();
        assert_eq!(FreeMor::identity(2).compose(&cross).unwrap(), cross);
        let cc = cross.compose(&cross).unwrap();
        let w = cc.terms.keys().next().unwrap();
        assert_eq!(w.slices.len(), 2);
        let bubble = FreeMor::gen(2, 0, Gen::Cap)
            .unwrap()
            .compose(&FreeMor::gen(0, 0, Gen::Cup).unwrap())
            .unwrap();
        assert_eq!((bubble.source, bubble.target), (0, 0));
        let dot = FreeMor::gen(1, 0, Gen::Dot).unwrap();
        let id = FreeMor::identity(1);
        assert_eq!(dot.tensor(&id), FreeMor::gen(2, 0, Gen::Dot).unwrap());
        assert_eq!(id.tensor(&dot), FreeMor::gen(2, 1, Gen::Dot).unwrap());
        let cap = FreeMor::gen(2, 0, Gen::Cap).unwrap();
        let cup = FreeMor::gen(0, 0, Gen::Cup).unwrap();
        let ct = cap.tensor(&cup);
        assert_eq!((ct.source, ct.target), (2, 2));
    }

    #[test]
    fn mirror_examples() {
        let dot = FreeMor::gen(1, 0, Gen::Dot).unwrap();
        assert_eq!(dot.apply(Mirror::R), dot.scale_int(-1));
        let cap = FreeMor::gen(2, 0, Gen::Cap).unwrap();
        assert_eq!(cap.apply(Mirror::T), FreeMor::gen(0, 0, Gen::Cup).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let w = GenWord::new(
            2,
            vec![
                Slice::new(0, Gen::Cross),
                Slice::new(1, Gen::Dot),
                Slice::new(0, Gen::Cap),
            ],
        )
        .unwrap();
        let s = w.to_string();
        assert_eq!(s, "2>0: x0 d1 a0");
        assert_eq!(s.parse::<GenWord>().unwrap(), w);
    }

    #[test]
    fn invalid_slices_rejected() {
        assert!(GenWord::new(1, vec![Slice::new(0, Gen::Cross)]).is_err());
        assert!(FreeMor::identity(1).compose(&FreeMor::identity(2)).is_err());
    }
}
