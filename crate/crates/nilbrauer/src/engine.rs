//! Normal forms of morphisms.
//!
//! A word is turned into a planar map, with closed components evaluated to
//! bubbles and bubbles moved to the right edge. Maps are then reduced, with
//! memoization on a canonical relabelling:
//!
//! - a curl vanishes unless dotted, and its dots are moved out;
//! - a bigon face vanishes unless dotted, and its dots are moved out;
//! - otherwise, while two strands cross twice, a strand crosses itself or a
//!   strand is closed, an innermost lens is shrunk by braid moves;
//! - in a reduced diagram, dots are moved along each strand to the edge at
//!   its endpoint with the smaller boundary index.
//!
//! Moving a dot through a crossing uses the dot-slide relation, whose error
//! terms are the two smoothings of that crossing.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};
use qseries::{BigInt, BigRational};

use crate::gamma::GammaElem;
use crate::map::{parity, Map, NIL};
use crate::word::{FreeMor, Gen, GenWord};

/// A reduced diagram with dots at the home end of each strand.
///
/// Chords are pairs of boundary slots `(home, other)` with `home < other`,
/// sorted by home; `dots[i]` counts dots on chord `i` at its home end,
/// oriented into the diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub chords: Vec<(u32, u32)>,
    pub dots: Vec<u32>,
}

impl Diagram {
    /// Number of crossings: pairs of interleaving chords.
    pub fn crossings(&self) -> usize {
        let c = &self.chords;
        let mut k = 0;
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let (a, b) = c[i];
                let (x, y) = c[j];
                if (a < x && x < b) != (a < y && y < b) {
                    k += 1;
                }
            }
        }
        k
    }

    pub fn degree(&self) -> i64 {
        2 * self.dots.iter().map(|&d| d as i64).sum::<i64>() - 2 * self.crossings() as i64
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chords
            .iter()
            .zip(&self.dots)
            .map(|(&(a, b), &k)| format!("{a}-{b}:{k}"))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A normal form: reduced diagrams with coefficients in `Gamma`.
///
/// `stuck` records that some reduction had no applicable move, in which case
/// the terms are incomplete.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Nf {
    pub terms: BTreeMap<Diagram, GammaElem>,
    pub stuck: bool,
}

impl Nf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &Nf, c: &BigRational, g: &GammaElem) {
        self.stuck |= o.stuck;
        if c.is_zero() || g.is_zero() {
            return;
        }
        let cg = g.scale(c);
        for (d, h) in &o.terms {
            let v = &(h * &cg) + &self.terms.get(d).cloned().unwrap_or_default();
            if v.is_zero() {
                self.terms.remove(d);
            } else {
                self.terms.insert(d.clone(), v);
            }
        }
    }

    /// Coordinates in the basis of diagrams times odd monomials.
    pub fn coordinates(&self) -> BTreeMap<(Diagram, Vec<u32>), BigRational> {
        let mut out = BTreeMap::new();
        for (d, g) in &self.terms {
            for (m, c) in g.terms() {
                out.insert((d.clone(), m.clone()), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, g)| format!("({g}){d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weighted maps awaiting reduction.
#[derive(Default)]
struct Terms {
    items: Vec<(Map, BigRational, GammaElem)>,
    stuck: bool,
}

impl Terms {
    fn one(m: Map, c: BigRational) -> Self {
        Self {
            items: vec![(m, c, GammaElem::one())],
            stuck: false,
        }
    }

    fn extend_scaled(&mut self, o: Terms, c: &BigRational) {
        self.stuck |= o.stuck;
        for (m, d, g) in o.items {
            self.items.push((m, d * c, g));
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduction limits.
const MAX_DEPTH: usize = 20_000;

/// Memoizing normal-form engine for a fixed bubble parameter `t`.
pub struct Engine {
    t: u8,
    memo: HashMap<Map, Rc<Nf>>,
    active: HashSet<Map>,
    depth: usize,
}

impl Engine {
    pub fn new(t: u8) -> Self {
        Self {
            t: t % 2,
            memo: HashMap::new(),
            active: HashSet::new(),
            depth: 0,
        }
    }

    pub fn t(&self) -> u8 {
        self.t
    }

    /// Number of memoized maps.
    pub fn memo_size(&self) -> usize {
        self.memo.len()
    }

    /// Normal form of a formal combination of words.
    pub fn normal_form(&mut self, f: &FreeMor) -> Nf {
        let mut out = Nf::zero();
        for (w, c) in &f.terms {
            let nf = self.word_nf(w);
            out.add_scaled(&nf, c, &GammaElem::one());
        }
        out
    }

    /// Normal form of one word.
    pub fn word_nf(&mut self, w: &GenWord) -> Nf {
        let terms = self.build(w);
        self.reduce_terms(terms)
    }

    fn reduce_terms(&mut self, terms: Terms) -> Nf {
        let mut out = Nf {
            terms: BTreeMap::new(),
            stuck: terms.stuck,
        };
        for (m, c, g) in terms.items {
            let nf = self.reduce(&m);
            out.add_scaled(&nf, &c, &g);
        }
        out
    }

    /// Normal form of a map whose crossings all connect to the boundary.
    pub fn reduce(&mut self, map: &Map) -> Nf {
        let (cm, sign) = map.canonical();
        let nf = match self.memo.get(&cm) {
            Some(r) => r.clone(),
            None => {
                if self.active.contains(&cm) || self.depth > MAX_DEPTH {
                    return Nf {
                        terms: BTreeMap::new(),
                        stuck: true,
                    };
                }
                self.active.insert(cm.clone());
                self.depth += 1;
                let r = Rc::new(self.reduce_canonical(&cm));
                self.depth -= 1;
                self.active.remove(&cm);
                self.memo.insert(cm, r.clone());
                r
            }
        };
        if sign == 1 {
            (*nf).clone()
        } else {
            let mut out = Nf::zero();
            out.add_scaled(&nf, &rat(-1), &GammaElem::one());
            out
        }
    }

    fn reduce_canonical(&mut self, map: &Map) -> Nf {
        let terms = match self.step(map) {
            Step::Zero => return Nf::zero(),
            Step::Done(d, c) => {
                let mut terms = BTreeMap::new();
                terms.insert(d, GammaElem::constant(rat(c)));
                return Nf {
                    terms,
                    stuck: false,
                };
            }
            Step::Stuck => {
                return Nf {
                    terms: BTreeMap::new(),
                    stuck: true,
                }
            }
            Step::Rewrite(t) => t,
        };
        self.reduce_terms(terms)
    }

    fn step(&mut self, map: &Map) -> Step {
        // Curls.
        for v in 0..map.nv() {
            for s in 0..4 {
                if map.link[map.dart(v, s) as usize] == map.dart(v, s + 1) {
                    if map.edge_dots(map.dart(v, s)).0 == 0 {
                        return Step::Zero;
                    }
                    return Step::Rewrite(self.move_dot(map, v, s + 1));
                }
            }
        }
        // Bigon faces.
        let (face, count) = map.faces();
        let mut sizes = vec![0usize; count];
        for d in 0..map.darts() {
            sizes[face[d]] += 1;
        }
        for d in map.total() as u32..map.darts() as u32 {
            if sizes[face[d as usize]] != 2 {
                continue;
            }
            let e = map.next(d);
            let (Some(u), Some(w)) = (map.vertex(d), map.vertex(e)) else {
                continue;
            };
            if u == w {
                continue;
            }
            let ld = map.link[d as usize];
            if map.edge_dots(d).0 > 0 {
                return Step::Rewrite(self.move_dot(map, w, map.slot(ld)));
            }
            let le = map.link[e as usize];
            if map.edge_dots(e).0 > 0 {
                return Step::Rewrite(self.move_dot(map, u, map.slot(le)));
            }
            return Step::Zero;
        }
        let strands = map.strands();
        if !is_reduced(map, &strands) {
            return match self.lens_step(map, &strands) {
                Some(t) => Step::Rewrite(t),
                None => Step::Stuck,
            };
        }
        // Move dots toward the home end of each strand.
        for st in &strands {
            for i in 1..st.darts.len() {
                let d = st.darts[i];
                if map.edge_dots(d).0 > 0 {
                    let w = map.vertex(d).expect("inner edge starts at a crossing");
                    return Step::Rewrite(self.move_dot(map, w, map.slot(d)));
                }
            }
        }
        let mut chords = Vec::new();
        let mut sign = 1;
        for st in &strands {
            let home = st.darts[0];
            let other = map.link[*st.darts.last().unwrap() as usize];
            let (k, s) = map.edge_dots(home);
            sign *= s;
            chords.push(((home, other), k));
        }
        chords.sort();
        let diagram = Diagram {
            chords: chords.iter().map(|c| c.0).collect(),
            dots: chords.iter().map(|c| c.1).collect(),
        };
        Step::Done(diagram, sign)
    }

    /// One dot moves from the edge at slot `s` of `v` to the opposite edge:
    /// `x_in = x_out - S(s, s+1) + S(s, s-1)`, where `S(a, b)` joins slots
    /// `a, b` and the other two.
    fn move_dot(&mut self, map: &Map, v: usize, s: usize) -> Terms {
        let (main, sign) = map.shift_dot(v, s);
        let mut out = Terms::one(main, rat(sign));
        let mut base = map.clone();
        let from = map.link[map.dart(v, s) as usize];
        let rs = base.remove_dot(from);
        let next = self.smooth(&base, v, s % 2);
        out.extend_scaled(next, &rat(-rs));
        let prev = self.smooth(&base, v, (s + 1) % 2);
        out.extend_scaled(prev, &rat(rs));
        out
    }

    /// Replaces crossing `v` by the smoothing joining slots `a, a+1` and `a+2, a+3`.
    fn smooth(&mut self, map: &Map, v: usize, a: usize) -> Terms {
        let pair = |s: usize| -> usize {
            match (s + 4 - a) % 4 {
                0 => (a + 1) % 4,
                1 => a % 4,
                2 => (a + 3) % 4,
                _ => (a + 2) % 4,
            }
        };
        let mut out = map.clone();
        for s in 0..4 {
            let d = map.dart(v, s) as usize;
            out.link[d] = NIL;
            out.dots[d] = 0;
        }
        let mut sign = 1i64;
        let mut visited = [false; 4];
        // (P, Q, between dart)
        let mut arcs: Vec<(u32, u32, u32)> = Vec::new();
        for s in 0..4 {
            let p = map.link[map.dart(v, s) as usize];
            if visited[s] || map.vertex(p) == Some(v) {
                continue;
            }
            visited[s] = true;
            let (mut k, sg) = map.edge_dots(p);
            sign *= sg;
            let next_turn = pair(s) == (s + 1) % 4;
            let mut cur = pair(s);
            let q = loop {
                visited[cur] = true;
                let dc = map.dart(v, cur);
                let (kk, sg) = map.edge_dots(dc);
                k += kk;
                sign *= sg;
                let e = map.link[dc as usize];
                if map.vertex(e) == Some(v) {
                    let s2 = map.slot(e);
                    visited[s2] = true;
                    cur = pair(s2);
                } else {
                    break e;
                }
            };
            sign *= out.put_edge(p, q, k);
            arcs.push((p, q, if next_turn { p } else { q }));
        }
        let mut pieces = GammaElem::constant(rat(sign));
        let mut has_piece = false;
        for s in 0..4 {
            if visited[s] {
                continue;
            }
            // A loop edge at v joining paired slots.
            let d = map.dart(v, s);
            let e = map.link[d as usize];
            let s2 = map.slot(e);
            visited[s] = true;
            visited[s2] = true;
            let (k, sg) = map.edge_dots(d);
            let ccw = s2 == (s + 1) % 4;
            let val =
                GammaElem::bubble(k, self.t).scale(&rat(sg * if ccw { 1 } else { parity(k) }));
            pieces = &pieces * &val;
            has_piece = true;
        }
        let mut dead = out.reachable_from_boundary();
        for x in dead.iter_mut() {
            *x = !*x;
        }
        let mut stuck = false;
        let mut location = arcs.first().map(|a| a.2);
        if arcs.len() == 2 {
            let floating = |d: u32| map.vertex(d).is_some_and(|w| dead[w]);
            let (main, other) = if floating(arcs[0].0) {
                (arcs[1], arcs[0])
            } else {
                (arcs[0], arcs[1])
            };
            location = Some(main.2);
            if floating(other.0) {
                let members = out.component_of(map.vertex(other.0).unwrap());
                let (cut, cs) = out.cut_open(other.2, &members);
                let (val, st) = self.eval_closed(&cut);
                stuck |= st;
                pieces = &pieces * &val.scale(&rat(cs));
                has_piece = true;
            }
        }
        dead[v] = true;
        let (compact, renum) = out.compact(&dead);
        let mut terms = if has_piece {
            let loc = location.map(|d| renum[d as usize]);
            self.push_to_right(compact, loc, pieces)
        } else {
            Terms::one(compact, rat(sign))
        };
        terms.stuck |= stuck;
        terms
    }

    /// Moves a bubble from the face left of `from` to the right edge.
    fn push_to_right(&self, map: Map, from: Option<u32>, g: GammaElem) -> Terms {
        let (Some(from), Some(goal)) = (from, map.rightmost_dart()) else {
            return Terms {
                items: vec![(map, BigRational::one(), g)],
                stuck: false,
            };
        };
        let path = map.dual_path(from, goal);
        let mut items = vec![(map, BigRational::one(), g)];
        for d in path {
            let mut next = Vec::new();
            for (m, c, h) in items {
                for (j, hj) in h.push_across().into_iter().enumerate() {
                    if hj.is_zero() {
                        continue;
                    }
                    let mut m2 = m.clone();
                    let s = m2.add_dots(d, j as u32);
                    next.push((m2, &c * rat(s), hj));
                }
            }
            items = next;
        }
        Terms {
            items,
            stuck: false,
        }
    }

    /// Value of the closure of a one-strand map, closed on its left.
    fn eval_closed(&mut self, cut: &Map) -> (GammaElem, bool) {
        let nf = self.reduce(cut);
        let mut out = GammaElem::zero();
        for (d, g) in &nf.terms {
            out = &out + &(g * &GammaElem::bubble(d.dots[0], self.t));
        }
        (out, nf.stuck)
    }

    /// Shrinks an innermost lens by one braid move, after clearing dots
    /// from the triangle. `None` if no move makes progress.
    fn lens_step(&mut self, map: &Map, strands: &[crate::map::Strand]) -> Option<Terms> {
        let (best, interior) = innermost_lens(map, strands)?;
        let (face, _) = map.faces();
        let mut tried = HashSet::new();
        for d in 0..map.darts() as u32 {
            let f = face[d as usize];
            if !interior.contains(&f) || !tried.insert(f) {
                continue;
            }
            let Some((x, a, edges)) = triangle(map, d) else {
                continue;
            };
            let mut bare = map.clone();
            for &e in &edges {
                let c = bare.canon(e);
                bare.dots[c as usize] = 0;
            }
            let (flipped, _) = bare.r3(x, a);
            let after = innermost_lens(&flipped, &flipped.strands()).map(|l| l.0);
            if after.is_some_and(|b| b >= best) {
                continue;
            }
            for (i, &e) in edges.iter().enumerate() {
                if map.edge_dots(e).0 > 0 {
                    let far = x[(i + 1) % 3];
                    return Some(self.move_dot(map, far, map.slot(map.link[e as usize])));
                }
            }
            let (flipped, sign) = map.r3(x, a);
            return Some(Terms::one(flipped, rat(sign)));
        }
        None
    }

    /// Turns a word into weighted maps.
    fn build(&mut self, w: &GenWord) -> Terms {
        let start = BuildState::new(w.source, w.target);
        let mut out = Terms::default();
        let mut stack = vec![(start, 0usize)];
        'outer: while let Some((mut st, mut i)) = stack.pop() {
            while i < w.slices.len() {
                let s = w.slices[i];
                i += 1;
                match s.gen {
                    Gen::Dot => st.dot(s.offset, 1),
                    Gen::Cup => st.cup(s.offset),
                    Gen::Cross => st.cross(s.offset),
                    Gen::Cap => {
                        if let Some((val, stuck)) = st.cap(s.offset, self) {
                            out.stuck |= stuck;
                            for b in st.push_right(s.offset, val) {
                                stack.push((b, i));
                            }
                            continue 'outer;
                        }
                    }
                }
            }
            out.items.push(st.finish());
        }
        out
    }
}

enum Step {
    Zero,
    Done(Diagram, i64),
    Stuck,
    Rewrite(Terms),
}

/// True if no strand is closed, crosses itself or crosses another twice.
fn is_reduced(map: &Map, strands: &[crate::map::Strand]) -> bool {
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); map.nv()];
    for (i, st) in strands.iter().enumerate() {
        if st.closed {
            return false;
        }
        for &d in &st.darts {
            if let Some(v) = map.vertex(map.link[d as usize]) {
                owner[v].push(i);
            }
        }
    }
    let mut seen = HashSet::new();
    for o in &owner {
        if o[0] == o[1] {
            return false;
        }
        let key = (o[0].min(o[1]), o[0].max(o[1]));
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

/// The crossings and arrival slots of a triangle face through `d`, with its edges.
fn triangle(map: &Map, d: u32) -> Option<([usize; 3], [usize; 3], [u32; 3])> {
    let f0 = d;
    let f1 = map.next(f0);
    let f2 = map.next(f1);
    if map.next(f2) != f0 {
        return None;
    }
    let x = [map.vertex(f0)?, map.vertex(f1)?, map.vertex(f2)?];
    if x[0] == x[1] || x[1] == x[2] || x[0] == x[2] {
        return None;
    }
    let a = [
        map.slot(map.link[f2 as usize]),
        map.slot(map.link[f0 as usize]),
        map.slot(map.link[f1 as usize]),
    ];
    Some((x, a, [f0, f1, f2]))
}

/// Smallest number of faces inside a simple closed curve made of one or two
/// strand segments between repeated crossings, with the inside faces.
fn innermost_lens(map: &Map, strands: &[crate::map::Strand]) -> Option<(usize, HashSet<usize>)> {
    // Passes: for each strand, the crossings entered after each edge.
    struct Seg {
        edges: Vec<u32>,
        inner: Vec<usize>,
    }
    let passes: Vec<Vec<usize>> = strands
        .iter()
        .map(|st| {
            let mut p: Vec<usize> = Vec::new();
            for &d in &st.darts {
                if let Some(v) = map.vertex(map.link[d as usize]) {
                    p.push(v);
                }
            }
            p
        })
        .collect();
    // Segments between pass i and pass j (edges i+1..=j), and wrapping for closed strands.
    let segments = |si: usize, i: usize, j: usize| -> Vec<Seg> {
        let st = &strands[si];
        let p = &passes[si];
        let l = st.darts.len();
        let mut out = Vec::new();
        let mk = |from: usize, count: usize| -> Seg {
            let edges: Vec<u32> = (1..=count).map(|k| st.darts[(from + k) % l]).collect();
            let inner: Vec<usize> = (1..count).map(|k| p[(from + k) % l]).collect();
            Seg { edges, inner }
        };
        out.push(mk(i, j - i));
        if st.closed {
            out.push(mk(j, l - (j - i)));
        }
        out
    };
    let simple = |s: &Seg, ends: &[usize]| -> bool {
        let mut seen: HashSet<usize> = ends.iter().copied().collect();
        s.inner.iter().all(|v| seen.insert(*v))
    };
    let mut curves: Vec<Vec<u32>> = Vec::new();
    for si in 0..strands.len() {
        let p = &passes[si];
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] == p[j] {
                    for s in segments(si, i, j) {
                        if simple(&s, &[p[i]]) {
                            curves.push(s.edges);
                        }
                    }
                }
            }
        }
    }
    for sa in 0..strands.len() {
        for sb in sa + 1..strands.len() {
            let (pa, pb) = (&passes[sa], &passes[sb]);
            for i in 0..pa.len() {
                for j in i + 1..pa.len() {
                    let (u, w) = (pa[i], pa[j]);
                    if u == w {
                        continue;
                    }
                    for k in 0..pb.len() {
                        for l in 0..pb.len() {
                            if k == l || pb[k] != u || pb[l] != w {
                                continue;
                            }
                            let (k0, l0) = (k.min(l), k.max(l));
                            for s1 in segments(sa, i, j) {
                                if !simple(&s1, &[u, w]) {
                                    continue;
                                }
                                for s2 in segments(sb, k0, l0) {
                                    if !simple(&s2, &[u, w])
                                        || s2.inner.iter().any(|v| s1.inner.contains(v))
                                    {
                                        continue;
                                    }
                                    let mut e = s1.edges.clone();
                                    e.extend_from_slice(&s2.edges);
                                    curves.push(e);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let (face, count) = map.faces();
    let mut best: Option<(usize, HashSet<usize>)> = None;
    for c in curves {
        let on_curve: HashSet<u32> = c.iter().flat_map(|&d| [d, map.link[d as usize]]).collect();
        // Union faces across edges off the curve.
        let mut parent: Vec<usize> = (0..count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        for d in 0..map.darts() as u32 {
            if on_curve.contains(&d) {
                continue;
            }
            let a = find(&mut parent, face[d as usize]);
            let b = find(&mut parent, face[map.link[d as usize] as usize]);
            parent[a] = b;
        }
        let mut outside = HashSet::new();
        for k in 0..map.total() {
            outside.insert(find(&mut parent, face[k]));
        }
        let inside: HashSet<usize> = (0..count)
            .filter(|&f| !outside.contains(&find(&mut parent, f)))
            .collect();
        if inside.is_empty() {
            continue;
        }
        if best.as_ref().is_none_or(|b| inside.len() < b.0) {
            best = Some((inside.len(), inside));
        }
    }
    best
}

/// A word being assembled into a map, bottom to top.
#[derive(Clone)]
struct BuildState {
    map: Map,
    segs: Vec<SegEnds>,
    /// Open strand ends at the current height: segment and whether it is the `b` end.
    pending: Vec<(usize, bool)>,
    dead: Vec<bool>,
    coeff: BigRational,
    gamma: GammaElem,
}

/// A path with dots oriented from `a` to `b`; `NIL` ends are still open.
#[derive(Clone, Copy)]
struct SegEnds {
    a: u32,
    b: u32,
    dots: u32,
}

impl BuildState {
    fn new(source: usize, target: usize) -> Self {
        let map = Map::blank(source, target, 0);
        let segs: Vec<SegEnds> = (0..source)
            .map(|i| SegEnds {
                a: i as u32,
                b: NIL,
                dots: 0,
            })
            .collect();
        let pending = (0..source).map(|i| (i, true)).collect();
        Self {
            map,
            segs,
            pending,
            dead: Vec::new(),
            coeff: BigRational::one(),
            gamma: GammaElem::one(),
        }
    }

    fn dot(&mut self, i: usize, k: u32) {
        let (s, is_b) = self.pending[i];
        self.segs[s].dots += k;
        if !is_b && k % 2 == 1 {
            self.coeff = -self.coeff.clone();
        }
    }

    fn cup(&mut self, i: usize) {
        let s = self.segs.len();
        self.segs.push(SegEnds {
            a: NIL,
            b: NIL,
            dots: 0,
        });
        self.pending.insert(i, (s, true));
        self.pending.insert(i, (s, false));
    }

    fn attach(&mut self, end: (usize, bool), d: u32) {
        let (s, is_b) = end;
        if is_b {
            self.segs[s].b = d;
        } else {
            self.segs[s].a = d;
        }
        let g = self.segs[s];
        if g.a != NIL && g.b != NIL {
            let sign = self.map.put_edge(g.a, g.b, g.dots);
            if sign < 0 {
                self.coeff = -self.coeff.clone();
            }
        }
    }

    fn cross(&mut self, i: usize) {
        let v = self.map.nv();
        self.map.link.extend([NIL; 4]);
        self.map.dots.extend([0; 4]);
        self.dead.push(false);
        let (bl, br, tl, tr) = (
            self.map.dart(v, 2),
            self.map.dart(v, 3),
            self.map.dart(v, 1),
            self.map.dart(v, 0),
        );
        self.attach(self.pending[i], bl);
        self.attach(self.pending[i + 1], br);
        let s = self.segs.len();
        self.segs.push(SegEnds {
            a: tl,
            b: NIL,
            dots: 0,
        });
        self.segs.push(SegEnds {
            a: tr,
            b: NIL,
            dots: 0,
        });
        self.pending[i] = (s, true);
        self.pending[i + 1] = (s + 1, true);
    }

    /// Applies a cap. Returns the value of a closed component if one formed.
    fn cap(&mut self, i: usize, engine: &mut Engine) -> Option<(GammaElem, bool)> {
        let (s1, b1) = self.pending[i];
        let (s2, b2) = self.pending[i + 1];
        self.pending.drain(i..i + 2);
        if s1 == s2 {
            let k = self.segs[s1].dots;
            let sign = if b2 { 1 } else { parity(k) };
            return Some((GammaElem::bubble(k, engine.t).scale(&rat(sign)), false));
        }
        let g1 = self.segs[s1];
        let g2 = self.segs[s2];
        let o1 = if b1 { g1.a } else { g1.b };
        let o2 = if b2 { g2.a } else { g2.b };
        let mut sign = 1;
        if !b1 {
            sign *= parity(g1.dots);
        }
        if b2 {
            sign *= parity(g2.dots);
        }
        if sign < 0 {
            self.coeff = -self.coeff.clone();
        }
        let s = self.segs.len();
        self.segs.push(SegEnds {
            a: o1,
            b: o2,
            dots: g1.dots + g2.dots,
        });
        for p in self.pending.iter_mut() {
            if *p == (s1, !b1) {
                *p = (s, false);
            } else if *p == (s2, !b2) {
                *p = (s, true);
            }
        }
        if o1 == NIL || o2 == NIL {
            return None;
        }
        let sign = self.map.put_edge(o1, o2, g1.dots + g2.dots);
        if sign < 0 {
            self.coeff = -self.coeff.clone();
        }
        let v0 = self.map.vertex(o1)?;
        let members = self.map.component_of(v0);
        for v in 0..self.map.nv() {
            if !members[v] {
                continue;
            }
            for sl in 0..4 {
                let e = self.map.link[self.map.dart(v, sl) as usize];
                if e == NIL || self.map.is_boundary(e) {
                    return None;
                }
            }
        }
        let (cut, cs) = self.map.cut_open(o1, &members);
        let (val, stuck) = engine.eval_closed(&cut);
        for v in 0..self.map.nv() {
            if members[v] {
                self.dead[v] = true;
                for sl in 0..4 {
                    let d = self.map.dart(v, sl) as usize;
                    self.map.link[d] = NIL;
                    self.map.dots[d] = 0;
                }
            }
        }
        Some((val.scale(&rat(cs)), stuck))
    }

    /// Moves a bubble from position `i` past the open strands to its right.
    fn push_right(self, i: usize, val: GammaElem) -> Vec<BuildState> {
        let mut items = vec![(self, val)];
        let len = items[0].0.pending.len();
        for p in i..len {
            let mut next = Vec::new();
            for (st, g) in items {
                for (j, gj) in g.push_across().into_iter().enumerate() {
                    if gj.is_zero() {
                        continue;
                    }
                    let mut s2 = st.clone();
                    s2.dot(p, j as u32);
                    next.push((s2, gj));
                }
            }
            items = next;
        }
        items
            .into_iter()
            .map(|(mut st, g)| {
                st.gamma = &st.gamma * &g;
                st
            })
            .collect()
    }

    fn finish(mut self) -> (Map, BigRational, GammaElem) {
        for j in 0..self.pending.len() {
            let d = self.map.top_slot(j);
            self.attach(self.pending[j], d);
        }
        let (map, _) = self.map.compact(&self.dead);
        (map, self.coeff, self.gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Slice;

    fn word(n: usize, s: &[(usize, Gen)]) -> GenWord {
        GenWord::new(n, s.iter().map(|&(o, g)| Slice::new(o, g)).collect()).unwrap()
    }

    #[test]
    fn double_crossing_vanishes() {
        let mut e = Engine::new(0);
        let nf = e.word_nf(&word(2, &[(0, Gen::Cross), (0, Gen::Cross)]));
        assert!(nf.is_zero() && !nf.stuck, "{nf}");
    }

    #[test]
    fn bubble_is_t() {
        for t in 0..2u8 {
            let mut e = Engine::new(t);
            let nf = e.word_nf(&word(0, &[(0, Gen::Cup), (0, Gen::Cap)]));
            if t == 0 {
                assert!(nf.is_zero());
            } else {
                assert_eq!(nf.terms.values().next().unwrap(), &GammaElem::one());
            }
        }
    }

    #[test]
    fn identity_and_dot_are_basis_elements() {
        let mut e = Engine::new(0);
        let id = e.word_nf(&GenWord::identity(1));
        assert_eq!(id.terms.len(), 1);
        let dot = e.word_nf(&word(1, &[(0, Gen::Dot)]));
        let (d, g) = dot.terms.iter().next().unwrap();
        assert_eq!(d.dots, vec![1]);
        assert_eq!(g, &GammaElem::one());
    }
}
