//! Planar maps of string diagrams.
//!
//! Boundary darts come first: bottom points `b_0..b_(n-1)` left to right,
//! then top points `t_(m-1)..t_0`, which is counterclockwise around the
//! disk. Crossing `v` owns darts `total + 4v + s` with slots `s` in
//! counterclockwise order: 0 top right, 1 top left, 2 bottom left, 3 bottom
//! right. The crossing is invariant under rotation, so only the cyclic order
//! matters.
//!
//! Dots live on edges. An edge stores its dot count on its smaller dart,
//! oriented away from that dart. An oriented dot is `x` where the strand
//! points up; reversing the orientation of `k` dots costs `(-1)^k`.

use std::collections::VecDeque;

/// Marker for an absent dart.
pub const NIL: u32 = u32::MAX;

/// A string diagram as a planar map with dotted edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Map {
    /// Bottom boundary points.
    pub n: usize,
    /// Top boundary points.
    pub m: usize,
    pub link: Vec<u32>,
    pub dots: Vec<u32>,
}

pub(crate) fn parity(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Map {
    /// A map with `nv` crossings and nothing linked.
    pub fn blank(n: usize, m: usize, nv: usize) -> Self {
        let len = n + m + 4 * nv;
        Self {
            n,
            m,
            link: vec![NIL; len],
            dots: vec![0; len],
        }
    }

    pub fn total(&self) -> usize {
        self.n + self.m
    }

    pub fn nv(&self) -> usize {
        (self.link.len() - self.total()) / 4
    }

    pub fn darts(&self) -> usize {
        self.link.len()
    }

    pub fn is_boundary(&self, d: u32) -> bool {
        (d as usize) < self.total()
    }

    /// Crossing owning dart `d`.
    pub fn vertex(&self, d: u32) -> Option<usize> {
        let t = self.total();
        (d as usize >= t).then(|| (d as usize - t) / 4)
    }

    pub fn slot(&self, d: u32) -> usize {
        (d as usize - self.total()) % 4
    }

    pub fn dart(&self, v: usize, s: usize) -> u32 {
        (self.total() + 4 * v + s % 4) as u32
    }

    /// Boundary slot of the top point `t_j`.
    pub fn top_slot(&self, j: usize) -> u32 {
        (self.n + self.m - 1 - j) as u32
    }

    /// The next dart clockwise around the vertex of `d`.
    pub fn turn(&self, d: u32) -> u32 {
        match self.vertex(d) {
            None => ((d as usize + 1) % self.total()) as u32,
            Some(v) => self.dart(v, self.slot(d) + 3),
        }
    }

    /// Face walk: the face on the left of `d -> link[d]` contains `d` and `next(d)`.
    pub fn next(&self, d: u32) -> u32 {
        self.turn(self.link[d as usize])
    }

    pub fn canon(&self, d: u32) -> u32 {
        d.min(self.link[d as usize])
    }

    /// Dots on the edge of `d`, read oriented away from `d`, with the sign of that reading.
    pub fn edge_dots(&self, d: u32) -> (u32, i64) {
        let c = self.canon(d);
        let k = self.dots[c as usize];
        (k, if c == d { 1 } else { parity(k) })
    }

    /// Adds one dot oriented away from `d`; returns the sign picked up.
    pub fn add_dot(&mut self, d: u32) -> i64 {
        let c = self.canon(d);
        self.dots[c as usize] += 1;
        if c == d {
            1
        } else {
            -1
        }
    }

    /// Adds `k` dots oriented away from `d`.
    pub fn add_dots(&mut self, d: u32, k: u32) -> i64 {
        let c = self.canon(d);
        self.dots[c as usize] += k;
        if c == d {
            1
        } else {
            parity(k)
        }
    }

    /// Removes one dot oriented away from `d`; the edge must be dotted.
    pub fn remove_dot(&mut self, d: u32) -> i64 {
        let c = self.canon(d);
        debug_assert!(self.dots[c as usize] > 0);
        self.dots[c as usize] -= 1;
        if c == d {
            1
        } else {
            -1
        }
    }

    /// Links `a` and `b` with `k` dots oriented from `a`; returns the storage sign.
    pub fn put_edge(&mut self, a: u32, b: u32, k: u32) -> i64 {
        self.link[a as usize] = b;
        self.link[b as usize] = a;
        self.dots[a as usize] = 0;
        self.dots[b as usize] = 0;
        let c = a.min(b);
        self.dots[c as usize] = k;
        if c == a {
            1
        } else {
            parity(k)
        }
    }

    /// Face index of every dart.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.darts()];
        let mut count = 0;
        for d in 0..self.darts() as u32 {
            if face[d as usize] != usize::MAX || self.link[d as usize] == NIL {
                continue;
            }
            let mut e = d;
            loop {
                face[e as usize] = count;
                e = self.next(e);
                if e == d {
                    break;
                }
            }
            count += 1;
        }
        (face, count)
    }

    /// A dart of the face touching the right side of the rectangle.
    pub fn rightmost_dart(&self) -> Option<u32> {
        let t = self.total();
        (t > 0).then(|| (self.n % t) as u32)
    }

    /// Darts crossed, in order, to walk from the face of `from` to the face of `to`.
    ///
    /// Crossing dart `d` goes from the face left of `d -> link[d]` to the face on its right.
    pub fn dual_path(&self, from: u32, to: u32) -> Vec<u32> {
        let (face, count) = self.faces();
        let start = face[from as usize];
        let goal = face[to as usize];
        let mut prev: Vec<Option<(usize, u32)>> = vec![None; count];
        let mut seen = vec![false; count];
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        let mut by_face: Vec<Vec<u32>> = vec![Vec::new(); count];
        for d in 0..self.darts() as u32 {
            if self.link[d as usize] != NIL {
                by_face[face[d as usize]].push(d);
            }
        }
        while let Some(f) = q.pop_front() {
            if f == goal {
                break;
            }
            for &d in &by_face[f] {
                let g = face[self.link[d as usize] as usize];
                if !seen[g] {
                    seen[g] = true;
                    prev[g] = Some((f, d));
                    q.push_back(g);
                }
            }
        }
        let mut path = Vec::new();
        let mut f = goal;
        while f != start {
            let (p, d) = prev[f].expect("faces of a connected map are connected");
            path.push(d);
            f = p;
        }
        path.reverse();
        path
    }

    /// Canonical relabelling: breadth-first from the boundary, each crossing
    /// rotated so that its discovery slot becomes slot 0. Returns the map and
    /// the sign from re-orienting stored dots.
    pub fn canonical(&self) -> (Map, i64) {
        let t = self.total();
        let nv = self.nv();
        let mut new_index: Vec<Option<(usize, usize)>> = vec![None; nv];
        let mut order: Vec<usize> = Vec::with_capacity(nv);
        let discover =
            |d: u32, order: &mut Vec<usize>, new_index: &mut Vec<Option<(usize, usize)>>| {
                if let Some(v) = self.vertex(d) {
                    if new_index[v].is_none() {
                        new_index[v] = Some((order.len(), self.slot(d)));
                        order.push(v);
                    }
                }
            };
        for k in 0..t as u32 {
            discover(self.link[k as usize], &mut order, &mut new_index);
        }
        let mut i = 0;
        loop {
            while i < order.len() {
                let v = order[i];
                let r = new_index[v].unwrap().1;
                for s in 0..4 {
                    let d = self.link[self.dart(v, s + r) as usize];
                    discover(d, &mut order, &mut new_index);
                }
                i += 1;
            }
            match (0..nv).find(|&v| new_index[v].is_none()) {
                Some(v) => {
                    new_index[v] = Some((order.len(), 0));
                    order.push(v);
                }
                None => break,
            }
        }
        let renum = |d: u32| -> u32 {
            match self.vertex(d) {
                None => d,
                Some(v) => {
                    let (ni, r) = new_index[v].unwrap();
                    (t + 4 * ni + (self.slot(d) + 4 - r) % 4) as u32
                }
            }
        };
        self.relabel(renum)
    }

    /// Applies a dart bijection, keeping dots on the smaller dart.
    fn relabel(&self, f: impl Fn(u32) -> u32) -> (Map, i64) {
        let mut out = Map {
            n: self.n,
            m: self.m,
            link: vec![NIL; self.darts()],
            dots: vec![0; self.darts()],
        };
        let mut sign = 1;
        for d in 0..self.darts() as u32 {
            let e = self.link[d as usize];
            if e == NIL || e < d {
                continue;
            }
            let k = self.dots[self.canon(d) as usize];
            sign *= out.put_edge(f(d), f(e), k);
        }
        (out, sign)
    }

    /// Drops the crossings marked dead and renumbers the rest monotonically.
    ///
    /// No live dart may link into a dead crossing.
    pub fn compact(&self, dead: &[bool]) -> (Map, Vec<u32>) {
        let t = self.total();
        let mut newv = vec![usize::MAX; self.nv()];
        let mut c = 0;
        for v in 0..self.nv() {
            if !dead[v] {
                newv[v] = c;
                c += 1;
            }
        }
        let mut renum = vec![NIL; self.darts()];
        for (d, r) in renum.iter_mut().enumerate() {
            match self.vertex(d as u32) {
                None => *r = d as u32,
                Some(v) if !dead[v] => *r = (t + 4 * newv[v] + self.slot(d as u32)) as u32,
                _ => {}
            }
        }
        let mut out = Map::blank(self.n, self.m, c);
        for d in 0..self.darts() {
            if renum[d] == NIL {
                continue;
            }
            let e = self.link[d];
            out.link[renum[d] as usize] = if e == NIL { NIL } else { renum[e as usize] };
            out.dots[renum[d] as usize] = self.dots[d];
        }
        (out, renum)
    }

    /// Crossings reachable from the boundary.
    pub fn reachable_from_boundary(&self) -> Vec<bool> {
        let mut seen = vec![false; self.nv()];
        let mut q = VecDeque::new();
        for k in 0..self.total() {
            let d = self.link[k];
            if d != NIL {
                if let Some(v) = self.vertex(d) {
                    if !seen[v] {
                        seen[v] = true;
                        q.push_back(v);
                    }
                }
            }
        }
        self.flood(&mut seen, q);
        seen
    }

    /// Crossings connected to crossing `v0`.
    pub fn component_of(&self, v0: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nv()];
        seen[v0] = true;
        self.flood(&mut seen, VecDeque::from([v0]));
        seen
    }

    fn flood(&self, seen: &mut [bool], mut q: VecDeque<usize>) {
        while let Some(v) = q.pop_front() {
            for s in 0..4 {
                let d = self.link[self.dart(v, s) as usize];
                if d == NIL {
                    continue;
                }
                if let Some(w) = self.vertex(d) {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
    }

    /// Cuts the closed component through dart `d1` open into a one-strand
    /// map: `b_0` joins `d1` and `t_0` joins `link[d1]`. The face left of
    /// `d1 -> link[d1]` ends up on the right of the strand.
    pub fn cut_open(&self, d1: u32, members: &[bool]) -> (Map, i64) {
        let verts: Vec<usize> = (0..self.nv()).filter(|&v| members[v]).collect();
        let mut newv = vec![usize::MAX; self.nv()];
        for (i, &v) in verts.iter().enumerate() {
            newv[v] = i;
        }
        let mut out = Map::blank(1, 1, verts.len());
        let renum = |d: u32| -> u32 {
            let v = self.vertex(d).unwrap();
            (2 + 4 * newv[v] + self.slot(d)) as u32
        };
        let d2 = self.link[d1 as usize];
        let mut sign = 1;
        for &v in &verts {
            for s in 0..4 {
                let d = self.dart(v, s);
                let e = self.link[d as usize];
                if e < d || d == d1 || d == d2 {
                    continue;
                }
                let (k, sg) = self.edge_dots(d);
                sign *= sg * out.put_edge(renum(d), renum(e), k);
            }
        }
        let (k, sg) = self.edge_dots(d1);
        sign *= sg * out.put_edge(renum(d1), 0, k);
        out.put_edge(renum(d2), 1, 0);
        (out, sign)
    }

    /// Traces strands. Each strand lists the darts starting its edges, in order.
    pub fn strands(&self) -> Vec<Strand> {
        let mut used = vec![false; self.darts()];
        let mut out = Vec::new();
        let trace = |start: u32, used: &mut Vec<bool>| -> (Vec<u32>, bool) {
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                used[d as usize] = true;
                darts.push(d);
                let e = self.link[d as usize];
                used[e as usize] = true;
                match self.vertex(e) {
                    None => return (darts, false),
                    Some(v) => {
                        d = self.dart(v, self.slot(e) + 2);
                        if d == start {
                            return (darts, true);
                        }
                    }
                }
            }
        };
        for k in 0..self.total() as u32 {
            if !used[k as usize] {
                let (darts, closed) = trace(k, &mut used);
                out.push(Strand { darts, closed });
            }
        }
        for d in self.total() as u32..self.darts() as u32 {
            if !used[d as usize] {
                let (darts, closed) = trace(d, &mut used);
                out.push(Strand { darts, closed });
            }
        }
        out
    }

    /// Moves one dot from the edge at slot `s` of `v` (oriented toward `v`)
    /// to the opposite edge (oriented away from `v`). The full identity also
    /// has smoothing terms, which the caller adds.
    pub fn shift_dot(&self, v: usize, s: usize) -> (Map, i64) {
        let mut out = self.clone();
        let from = self.link[self.dart(v, s) as usize];
        let sign = out.remove_dot(from) * out.add_dot(self.dart(v, s + 2));
        (out, sign)
    }

    /// Braid move on an undotted triangle with crossings `x` and arrival slots `a`.
    /// Returns the new map and the sign from re-storing outer dots.
    pub fn r3(&self, x: [usize; 3], a: [usize; 3]) -> (Map, i64) {
        let e = [
            self.dart(x[0], a[0] + 1),
            self.dart(x[0], a[0] + 2),
            self.dart(x[1], a[1] + 1),
            self.dart(x[1], a[1] + 2),
            self.dart(x[2], a[2] + 1),
            self.dart(x[2], a[2] + 2),
        ];
        let partners: Vec<u32> = e.iter().map(|&d| self.link[d as usize]).collect();
        // New positions: V23 at x0, V45 at x1, V61 at x2.
        let (v23, v45, v61) = (x[0], x[1], x[2]);
        let target = [
            self.dart(v61, 1),
            self.dart(v23, 0),
            self.dart(v23, 1),
            self.dart(v45, 0),
            self.dart(v45, 1),
            self.dart(v61, 0),
        ];
        let mut out = self.clone();
        for v in [v23, v45, v61] {
            for s in 0..4 {
                let d = self.dart(v, s) as usize;
                out.link[d] = NIL;
                out.dots[d] = 0;
            }
        }
        let map_old = |d: u32| -> u32 {
            e.iter()
                .position(|&x| x == d)
                .map(|i| target[i])
                .unwrap_or(d)
        };
        let mut sign = 1i64;
        for i in 0..6 {
            let a = target[i];
            let b = map_old(partners[i]);
            if out.link[a as usize] != NIL {
                continue;
            }
            let (k, s0) = self.edge_dots(e[i]);
            sign *= s0 * out.put_edge(a, b, k);
        }
        out.put_edge(self.dart(v23, 2), self.dart(v45, 3), 0);
        out.put_edge(self.dart(v23, 3), self.dart(v61, 2), 0);
        out.put_edge(self.dart(v45, 2), self.dart(v61, 3), 0);
        (out, sign)
    }
}

/// A strand traced through the crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub darts: Vec<u32>,
    pub closed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_crossing() -> Map {
        let mut m = Map::blank(2, 2, 1);
        let (bl, br, tl, tr) = (m.dart(0, 2), m.dart(0, 3), m.dart(0, 1), m.dart(0, 0));
        m.put_edge(0, bl, 0);
        m.put_edge(1, br, 0);
        let t1 = m.top_slot(1);
        let t0 = m.top_slot(0);
        m.put_edge(t1, tr, 0);
        m.put_edge(t0, tl, 0);
        m
    }

    #[test]
    fn crossing_has_four_faces() {
        let m = single_crossing();
        assert_eq!(m.faces().1, 4);
        assert_eq!(m.strands().len(), 2);
    }

    #[test]
    fn canonical_is_idempotent_and_rotation_invariant() {
        let m = single_crossing();
        let (c, s) = m.canonical();
        assert_eq!(s, 1);
        assert_eq!(c.canonical().0, c);
        let (r, _) = m.relabel(|d| {
            if m.vertex(d).is_some() {
                4 + (d - 4 + 1) % 4
            } else {
                d
            }
        });
        assert_eq!(r.canonical().0, c);
    }

    #[test]
    fn dot_orientation_signs() {
        let mut m = single_crossing();
        let bl = m.dart(0, 2);
        assert_eq!(m.add_dot(bl), -1);
        assert_eq!(m.edge_dots(0), (1, 1));
        assert_eq!(m.edge_dots(bl), (1, -1));
    }
}
