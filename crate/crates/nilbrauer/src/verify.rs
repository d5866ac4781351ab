//! Verification suites evaluated in certified slots.

use std::collections::HashMap;
use std::path::PathBuf;

use qseries::{BigInt, BigRational};
use serde::Serialize;

use crate::engine::Engine;
use crate::error::NbError;
use crate::named::{b_star_e, e_rn_alternative, idempotent, named_element, Named};
use crate::relations::relation_generators;
use crate::slot::{eq_mod_relations, load_or_build, QuotientSlot, SlotBounds, Verdict};
use crate::word::{FreeMor, Gen, Mirror};

/// One identity check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// What is checked.
    pub name: String,
    /// The identity family the check belongs to.
    pub family: String,
    pub expected: Verdict,
    pub verdict: Verdict,
    /// Slot signature `(m, n, d)` used for the comparison.
    pub slot: Option<(usize, usize, i64)>,
    pub certified: bool,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.verdict == self.expected
    }

    pub fn inconclusive(&self) -> bool {
        self.verdict == Verdict::Unknown
    }
}

/// Results of a suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub t: u8,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn extend(&mut self, o: Report) {
        self.checks.extend(o.checks);
    }
}

/// Engine, slot cache and bounds shared by the suites.
pub struct Verifier {
    engine: Engine,
    bounds: SlotBounds,
    cache_dir: Option<PathBuf>,
    slots: HashMap<(usize, usize, i64), QuotientSlot>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn w(n: usize, s: &[(usize, Gen)]) -> FreeMor {
    FreeMor::slices(n, s).expect("suite words are well formed")
}

fn dots_on(pos: usize, k: usize) -> Vec<(usize, Gen)> {
    vec![(pos, Gen::Dot); k]
}

impl Verifier {
    pub fn new(t: u8, bounds: SlotBounds, cache_dir: Option<PathBuf>) -> Self {
        Self {
            engine: Engine::new(t),
            bounds,
            cache_dir,
            slots: HashMap::new(),
        }
    }

    pub fn t(&self) -> u8 {
        self.engine.t()
    }

    /// The slot `Hom(B^n, B^m)_d`, loaded or built.
    pub fn slot(&mut self, m: usize, n: usize, d: i64) -> Result<&QuotientSlot, NbError> {
        if !self.slots.contains_key(&(m, n, d)) {
            let s = load_or_build(
                self.cache_dir.as_deref(),
                &mut self.engine,
                m,
                n,
                d,
                &self.bounds,
            )?;
            self.slots.insert((m, n, d), s);
        }
        Ok(&self.slots[&(m, n, d)])
    }

    /// Compares `a` and `b`, expecting `expected`.
    pub fn compare(
        &mut self,
        family: &str,
        name: &str,
        a: &FreeMor,
        b: &FreeMor,
        expected: Verdict,
    ) -> Check {
        let mut check = Check {
            name: name.to_string(),
            family: family.to_string(),
            expected,
            verdict: Verdict::Unknown,
            slot: None,
            certified: false,
            detail: String::new(),
        };
        let (m, n) = (a.target, a.source);
        if (b.target, b.source) != (m, n) {
            check.detail = format!("shapes differ: {n}->{m} and {}->{}", b.source, b.target);
            return check;
        }
        let mut degs = a.degrees();
        degs.extend(b.degrees());
        degs.sort_unstable();
        degs.dedup();
        if degs.len() > 1 {
            check.detail = format!("not homogeneous: degrees {degs:?}");
            return check;
        }
        let d = degs.first().copied().unwrap_or(0);
        check.slot = Some((m, n, d));
        let slot = match self.slot(m, n, d) {
            Ok(s) => s.clone(),
            Err(e) => {
                check.detail = e.to_string();
                return check;
            }
        };
        check.certified = slot.certified;
        match eq_mod_relations(&mut self.engine, a, b, &slot) {
            Ok(v) => check.verdict = v,
            Err(e) => check.detail = e.to_string(),
        }
        if check.verdict != expected && check.detail.is_empty() {
            let diff = a.sub(b).expect("same shape");
            check.detail = format!("difference reduces to {}", self.engine.normal_form(&diff));
        }
        check
    }

    fn equal(&mut self, report: &mut Report, family: &str, name: &str, a: &FreeMor, b: &FreeMor) {
        let c = self.compare(family, name, a, b, Verdict::Equal);
        report.checks.push(c);
    }

    fn nonzero(&mut self, report: &mut Report, family: &str, name: &str, a: &FreeMor) {
        let z = FreeMor::zero(a.source, a.target);
        let c = self.compare(family, name, a, &z, Verdict::NotEqual);
        report.checks.push(c);
    }

    /// Decomposition of `B * e_n` into orthogonal idempotents conjugate to
    /// `e_{n+1}` and `e_{n-1}`, with the grading shifts of the conjugations.
    pub fn verify_idempotents(&mut self, n: usize) -> Result<Report, NbError> {
        let t = self.t();
        let mut rep = Report {
            suite: format!("idempotents n={n}"),
            t,
            checks: Vec::new(),
        };
        let same = n % 2 == t as usize % 2;
        let get = |name, r| named_element(name, n, r, t);
        let es: Vec<FreeMor> = (0..=n)
            .map(|r| get(Named::Er, r))
            .collect::<Result<_, _>>()?;
        let fs: Vec<FreeMor> = (0..=n)
            .map(|r| get(Named::F, r))
            .collect::<Result<_, _>>()?;
        let fam = "B*e_n decomposition";

        let mut total = FreeMor::zero(n + 1, n + 1);
        for r in 0..=n {
            total = total.add(&es[r])?.add(&fs[r])?;
        }
        self.equal(
            &mut rep,
            fam,
            "sum of e_{r,n} + f_{r,n} is B*e_n",
            &total,
            &b_star_e(n),
        );
        self.equal(
            &mut rep,
            fam,
            "e_{0,n} = e_{n+1}",
            &es[0],
            &idempotent(n + 1),
        );
        for r in 0..=n {
            self.equal(
                &mut rep,
                fam,
                &format!("e_{{{r},{n}}} alternative form"),
                &es[r],
                &e_rn_alternative(n, r),
            );
        }

        let family: Vec<(String, FreeMor)> = if same {
            let mut v: Vec<_> = (0..=n)
                .map(|r| (format!("e_{{{r},{n}}}"), es[r].clone()))
                .collect();
            v.extend((1..=n).map(|s| (format!("f_{{{s},{n}}}"), fs[s].clone())));
            v
        } else {
            (0..=n)
                .map(|r| {
                    (
                        format!("e_{{{r},{n}}}+f_{{{r},{n}}}"),
                        es[r].add(&fs[r]).expect("same shape"),
                    )
                })
                .collect()
        };
        let fam = if same {
            "orthogonal idempotents, n = t mod 2"
        } else {
            "orthogonal idempotents, n != t mod 2"
        };
        for (i, (na, a)) in family.iter().enumerate() {
            self.nonzero(&mut rep, fam, &format!("{na} is nonzero"), a);
            self.equal(
                &mut rep,
                fam,
                &format!("{na} is idempotent"),
                &a.compose(a)?,
                a,
            );
            for (j, (nb, b)) in family.iter().enumerate() {
                if i != j {
                    let z = FreeMor::zero(n + 1, n + 1);
                    self.equal(&mut rep, fam, &format!("{na} {nb} = 0"), &a.compose(b)?, &z);
                }
            }
        }

        let fam = "conjugacy";
        let e_up = idempotent(n + 1);
        for r in 1..=n {
            let u = get(Named::U, r)?;
            let v = get(Named::V, r)?;
            if same {
                self.equal(
                    &mut rep,
                    fam,
                    &format!("u_{{{r},{n}}} v_{{{r},{n}}} = e_{{{}}}", n + 1),
                    &u.compose(&v)?,
                    &e_up,
                );
                self.equal(
                    &mut rep,
                    fam,
                    &format!("v_{{{r},{n}}} u_{{{r},{n}}} = e_{{{r},{n}}}"),
                    &v.compose(&u)?,
                    &es[r],
                );
            } else {
                let wr = get(Named::W, r)?;
                let ef = es[r].add(&fs[r])?;
                self.equal(
                    &mut rep,
                    fam,
                    &format!("w_{{{r},{n}}} v_{{{r},{n}}} = e_{{{}}}", n + 1),
                    &wr.compose(&v)?,
                    &e_up,
                );
                self.equal(
                    &mut rep,
                    fam,
                    &format!("v_{{{r},{n}}} w_{{{r},{n}}} = e+f_{{{r},{n}}}"),
                    &v.compose(&wr)?,
                    &ef,
                );
            }
        }
        if same && n >= 1 {
            let e_down = idempotent(n - 1);
            for s in 1..=n {
                let x = get(Named::X, s)?;
                let y = get(Named::Y, s)?;
                self.equal(
                    &mut rep,
                    fam,
                    &format!("x_{{{s},{n}}} y_{{{s},{n}}} = e_{{{}}}", n - 1),
                    &x.compose(&y)?,
                    &e_down,
                );
                self.equal(
                    &mut rep,
                    fam,
                    &format!("y_{{{s},{n}}} x_{{{s},{n}}} = f_{{{s},{n}}}"),
                    &y.compose(&x)?,
                    &fs[s],
                );
            }
        }
        rep.checks.push(self.grading_check(n)?);
        Ok(rep)
    }

    /// Shifts `n + deg v_{r,n}` and `n + 1 + deg y_{s,n} - 2n` against the
    /// exponents of the quantum integers `[n+1]` and `[n]`.
    fn grading_check(&self, n: usize) -> Result<Check, NbError> {
        let t = self.t();
        let quantum =
            |k: usize| -> Vec<i64> { (0..k).map(|i| k as i64 - 1 - 2 * i as i64).collect() };
        let mut up = Vec::new();
        for r in 0..=n {
            let v = named_element(Named::V, n, r, t)?;
            up.push(n as i64 + v.homogeneous_degree().unwrap_or(i64::MIN));
        }
        let mut down = Vec::new();
        if n % 2 == t as usize % 2 {
            for s in 1..=n {
                let y = named_element(Named::Y, n, s, t)?;
                down.push(1 - n as i64 + y.homogeneous_degree().unwrap_or(i64::MIN));
            }
        }
        up.sort_unstable_by(|a, b| b.cmp(a));
        down.sort_unstable_by(|a, b| b.cmp(a));
        let want_down = if n % 2 == t as usize % 2 {
            quantum(n)
        } else {
            Vec::new()
        };
        let ok = up == quantum(n + 1) && down == want_down;
        Ok(Check {
            name: format!(
                "B P({n}) shifts: P({}) at {up:?}, P({}) at {down:?}",
                n + 1,
                n as i64 - 1
            ),
            family: "grading shifts".into(),
            expected: Verdict::Equal,
            verdict: if ok {
                Verdict::Equal
            } else {
                Verdict::NotEqual
            },
            slot: None,
            certified: true,
            detail: String::new(),
        })
    }

    /// `q_{r,n}`: coefficient of `u^-r` in `prod_i (u + x_i)/(u - x_i)`.
    pub fn central_element(n: usize, r: usize) -> FreeMor {
        let mut out = FreeMor::zero(n, n);
        fn comps(k: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 0 {
                return if k == 0 { vec![vec![]] } else { vec![] };
            }
            let mut v = Vec::new();
            for a in 0..=k {
                for mut rest in comps(k - a, parts - 1) {
                    rest.insert(0, a);
                    v.push(rest);
                }
            }
            v
        }
        for c in comps(r, n) {
            let coeff: i64 = c.iter().map(|&k| if k > 0 { 2 } else { 1 }).product();
            let mut s = Vec::new();
            for (i, &k) in c.iter().enumerate() {
                s.extend(dots_on(i, k));
            }
            out = out.add(&w(n, &s).scale(&rat(coeff))).expect("same shape");
        }
        if r == 0 {
            return FreeMor::identity(n);
        }
        out
    }

    /// `q_{r,m} f = f q_{r,n}` for generators on at most two strands.
    pub fn verify_central(&mut self, r: usize) -> Result<Report, NbError> {
        let t = self.t();
        let mut rep = Report {
            suite: format!("central q_{r}"),
            t,
            checks: Vec::new(),
        };
        let gens: Vec<(&str, FreeMor)> = vec![
            ("dot", w(1, &[(0, Gen::Dot)])),
            ("dot (x) id", w(2, &[(0, Gen::Dot)])),
            ("id (x) dot", w(2, &[(1, Gen::Dot)])),
            ("crossing", w(2, &[(0, Gen::Cross)])),
            ("cap", w(2, &[(0, Gen::Cap)])),
            ("cup", w(0, &[(0, Gen::Cup)])),
            ("id (x) cap", w(3, &[(1, Gen::Cap)])),
            ("cap (x) id", w(3, &[(0, Gen::Cap)])),
            ("id (x) cup", w(1, &[(1, Gen::Cup)])),
            ("cup (x) id", w(1, &[(0, Gen::Cup)])),
        ];
        for (name, f) in gens {
            let lhs = Self::central_element(f.target, r).compose(&f)?;
            let rhs = f.compose(&Self::central_element(f.source, r))?;
            self.equal(
                &mut rep,
                "centrality",
                &format!("q_{{{r}}} commutes with {name}"),
                &lhs,
                &rhs,
            );
        }
        Ok(rep)
    }

    /// Relations derived from the defining ones, including generating
    /// functions compared coefficientwise through `u^-4`.
    pub fn verify_derived(&mut self) -> Result<Report, NbError> {
        use Gen::*;
        let t = self.t();
        let mut rep = Report {
            suite: "derived relations".into(),
            t,
            checks: Vec::new(),
        };
        let zero = |a: usize, b: usize| FreeMor::zero(a, b);

        let fam = "cup and cap slides";
        self.equal(
            &mut rep,
            fam,
            "strand slides under cup",
            &w(1, &[(1, Cup), (0, Cross)]),
            &w(1, &[(0, Cup), (1, Cross)]),
        );
        self.equal(
            &mut rep,
            fam,
            "right curl vanishes",
            &w(1, &[(1, Cup), (0, Cross), (1, Cap)]),
            &zero(1, 1),
        );
        self.equal(
            &mut rep,
            fam,
            "left curl vanishes",
            &w(1, &[(0, Cup), (1, Cross), (0, Cap)]),
            &zero(1, 1),
        );
        self.equal(
            &mut rep,
            fam,
            "crossing after cup vanishes",
            &w(0, &[(0, Cup), (0, Cross)]),
            &zero(0, 2),
        );
        self.equal(
            &mut rep,
            fam,
            "cap and cup crossing twice vanish",
            &w(2, &[(1, Cup), (0, Cross), (2, Cross), (1, Cap)]),
            &zero(2, 2),
        );
        let lhs = w(2, &[(0, Dot), (0, Cross)]).sub(&w(2, &[(0, Cross), (1, Dot)]))?;
        let rhs = FreeMor::identity(2).sub(&w(2, &[(0, Cap), (0, Cup)]))?;
        self.equal(
            &mut rep,
            fam,
            "dot slide, bottom left to top right",
            &lhs,
            &rhs,
        );
        self.equal(
            &mut rep,
            fam,
            "dot through cup",
            &w(0, &[(0, Cup), (1, Dot)]),
            &w(0, &[(0, Cup), (0, Dot)]).scale_int(-1),
        );

        let fam = "dot slides with n dots";
        for n in 1..=4usize {
            let mut s1 = dots_on(0, n);
            s1.push((0, Cross));
            let mut s2 = vec![(0, Cross)];
            s2.extend(dots_on(1, n));
            let lhs = w(2, &s1).sub(&w(2, &s2))?;
            let mut rhs = zero(2, 2);
            for i in 0..n {
                let j = n - 1 - i;
                let mut a = dots_on(0, i);
                a.extend(dots_on(1, j));
                let mut b = dots_on(0, i);
                b.extend([(0, Cap), (0, Cup)]);
                b.extend(dots_on(1, j));
                rhs = rhs.add(&w(2, &a))?.sub(&w(2, &b))?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("bottom-left/top-right n={n}"),
                &lhs,
                &rhs,
            );

            let mut s1 = vec![(0, Cross)];
            s1.extend(dots_on(0, n));
            let mut s2 = dots_on(1, n);
            s2.push((0, Cross));
            let lhs = w(2, &s1).sub(&w(2, &s2))?;
            let mut rhs = zero(2, 2);
            for i in 0..n {
                let j = n - 1 - i;
                let mut a = dots_on(1, j);
                a.extend(dots_on(0, i));
                let mut b = dots_on(1, j);
                b.extend([(0, Cap), (0, Cup)]);
                b.extend(dots_on(0, i));
                rhs = rhs.add(&w(2, &a))?.sub(&w(2, &b))?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("top-left/bottom-right n={n}"),
                &lhs,
                &rhs,
            );
        }

        // Dotted curls, bubbles and bubble products as words.
        let curl = |k: usize| {
            let mut s = vec![(1, Cup), (0, Cross)];
            s.extend(dots_on(2, k));
            s.push((1, Cap));
            w(1, &s)
        };
        let strand_bubble = |a: usize, b: usize| {
            let mut s = dots_on(0, a);
            s.push((1, Cup));
            s.extend(dots_on(2, b));
            s.push((1, Cap));
            w(1, &s)
        };
        let strand = |a: usize| w(1, &dots_on(0, a));
        let bubble = |k: usize| {
            let mut s = vec![(0, Cup)];
            s.extend(dots_on(1, k));
            s.push((0, Cap));
            w(0, &s)
        };
        let o_right = |r: usize| -> FreeMor {
            if r == 0 {
                FreeMor::identity(0)
            } else {
                bubble(r).scale_int(if t % 2 == 0 { -2 } else { 2 })
            }
        };
        let pm = |e: usize| if e % 2 == 0 { 1 } else { -1 };

        let fam = "curl generating function";
        for big_n in 1..=4usize {
            let lhs = curl(big_n).scale_int(2);
            let mut rhs = zero(1, 1);
            for a in 0..big_n {
                rhs = rhs.add(&strand_bubble(a, big_n - 1 - a).scale_int(2 * pm(a)))?;
            }
            let k = big_n - 1;
            rhs = rhs.sub(&strand(k))?.sub(&strand(k).scale_int(pm(k)))?;
            self.equal(
                &mut rep,
                fam,
                &format!("coefficient of u^-{big_n}"),
                &lhs,
                &rhs,
            );
        }

        let fam = "bubble generating function";
        for big_n in 1..=4usize {
            let k = big_n - 1;
            let lhs = bubble(k).scale_int(1 + pm(k));
            let mut rhs = zero(0, 0);
            for a in 0..=k {
                rhs = rhs.add(&bubble(a).tensor(&bubble(k - a)).scale_int(2 * pm(a)))?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("bubble identity, coefficient of u^-{big_n}"),
                &lhs,
                &rhs,
            );

            let mut prod = zero(0, 0);
            for a in 0..=big_n {
                prod = prod.add(
                    &o_right(a)
                        .tensor(&o_right(big_n - a))
                        .scale_int(pm(big_n - a)),
                )?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("O(u)O(-u) = 1, coefficient of u^-{big_n}"),
                &prod,
                &zero(0, 0),
            );

            let lhs = o_right(big_n).tensor(&FreeMor::identity(1));
            let mut rhs = zero(1, 1);
            for j in 0..=big_n {
                let c = if j == 0 { 1 } else { pm(j) * 4 * j as i64 };
                rhs = rhs.add(&strand(j).tensor(&o_right(big_n - j)).scale_int(c))?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("bubble passes a strand, coefficient of u^-{big_n}"),
                &lhs,
                &rhs,
            );
        }

        let fam = "dotted curls";
        for n in 0..=3usize {
            let lhs = curl(n + 1);
            let mut rhs = zero(1, 1);
            for r in 0..n {
                rhs = rhs.add(&strand_bubble(r, n - r).scale_int(pm(r)))?;
            }
            if n % 2 == t as usize % 2 {
                rhs = rhs.sub(&strand(n))?;
            }
            self.equal(
                &mut rep,
                fam,
                &format!("curl with {} dots", n + 1),
                &lhs,
                &rhs,
            );
        }

        let fam = "mirror symmetry";
        for (name, rel) in relation_generators(t) {
            for m in [Mirror::R, Mirror::T] {
                let img = rel.apply(m);
                let z = zero(img.source, img.target);
                self.equal(&mut rep, fam, &format!("{m:?} image of {name}"), &img, &z);
            }
        }

        for r in [1usize, 3] {
            rep.extend(self.verify_central(r)?);
        }
        Ok(rep)
    }
}

/// Runs `f` on a thread with a large stack; normal forms recurse deeply.
pub fn with_big_stack<R: Send + 'static>(f: impl FnOnce() -> R + Send + 'static) -> R {
    std::thread::Builder::new()
        .stack_size(512 << 20)
        .spawn(f)
        .expect("spawn verification thread")
        .join()
        .expect("verification thread panicked")
}
