//! Verification suites, each returning one line per check.

use std::path::PathBuf;

use characters::{
    ch_irreducible, ch_irreducible_sum_form, ch_proper_standard, decomposition_number,
    predicted_homdim, projective_multiplicity, Character,
};
use chords::{t_bruteforce, t_recurrence};
use clap::ValueEnum;
use iqgroup::{
    canonical_closed_form, canonical_in_pbw, convert, form_i, form_minus, j_map, mul_b, mul_f,
    pbw_in_canonical, quantum_factorial, quantum_int, r_op, sesq_form_i, BasisTag, IQElement,
};
use nilbrauer::{
    load_or_build, matchings, with_big_stack, Diagram, Engine, SlotBounds, Verdict, Verifier,
};
use qseries::{
    expand, inv_qpochhammer, qbinomial, qfactorial, qint, BigInt, LaurentPoly, RationalQ,
};

use crate::config::RunConfig;
use crate::report::{Status, SuiteReport};

/// Suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Qseries,
    Chords,
    Iqgroup,
    Characters,
    Nilhecke,
    /// Basis certification, idempotent decomposition and derived relations.
    Nilbrauer,
    /// Quotient dimensions of small Hom spaces against the predicted ones.
    Basis,
    Idempotents,
    Derived,
    Central,
}

/// Suite-specific options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOpts {
    pub n: Option<usize>,
    pub r: Option<usize>,
}

fn monomial(t: u8, n: usize) -> IQElement {
    IQElement::basis_vector(t, BasisTag::Monomial, n)
}

fn geom() -> RationalQ {
    RationalQ::inv_one_minus_q_pow(-2)
}

/// Identities of quantum integers and series expansion.
pub fn qseries_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("qseries");
    let anchor = "quantum integers";
    for n in 0..=8i64 {
        let mut prod = LaurentPoly::one();
        for k in 1..=n {
            prod = &prod * &qint(k).expect("non-negative");
        }
        let f = qfactorial(n).expect("non-negative");
        rep.push(
            anchor,
            format!("[{n}]! = prod [k]"),
            None,
            f == prod && f.is_bar_invariant(),
            "",
        );
        for k in 0..=n {
            let b = qbinomial(n, k).expect("valid");
            let ok = b == qbinomial(n, n - k).expect("valid") && b.is_bar_invariant();
            rep.push(
                anchor,
                format!("[{n} choose {k}] symmetric and bar invariant"),
                None,
                ok,
                "",
            );
        }
    }
    let s = expand(&geom(), 4).expect("nonzero denominator").to_string();
    rep.push(
        "series expansion",
        "1/(1-q^-2) to precision 4",
        None,
        s == "1 + q^-2 + q^-4 + q^-6 + O(q^-8)",
        s,
    );
    for n in 0..=6i64 {
        let mut prod = RationalQ::one();
        for k in 1..=n {
            prod = &prod * &RationalQ::inv_one_minus_q_pow(-2 * k);
        }
        let ok = inv_qpochhammer(n).expect("non-negative") == prod;
        rep.push(
            "series expansion",
            format!("1/(q^-2; q^-2)_{n}"),
            None,
            ok,
            "",
        );
    }
    rep
}

/// `C(2f+n, n) (2f-1)!!`, the number of tethered chord diagrams.
fn diagram_total(f: usize, n: usize) -> BigInt {
    let mut binom = BigInt::from(1);
    for i in 0..n {
        binom = binom * BigInt::from(2 * f + n - i) / BigInt::from(i + 1);
    }
    let mut dfact = BigInt::from(1);
    for k in (1..2 * f).step_by(2) {
        dfact *= BigInt::from(k);
    }
    binom * dfact
}

/// Chord generating functions: brute force, recurrence and totals for `f + n <= max_total`.
pub fn chords_suite(max_total: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("chords");
    let anchor = "tethered chord diagrams";
    let lit = |cs: &[i64]| {
        let mut p = LaurentPoly::zero();
        for (e, &c) in cs.iter().enumerate() {
            p = &p + &LaurentPoly::monomial(c, e as i64);
        }
        p
    };
    let t20 = t_recurrence(2, 0).poly;
    rep.push(
        anchor,
        "T_{2,0} = 2+q",
        None,
        t20 == lit(&[2, 1]),
        t20.to_string(),
    );
    let t30 = t_recurrence(3, 0).poly;
    rep.push(
        anchor,
        "T_{3,0} = 5+6q+3q^2+q^3",
        None,
        t30 == lit(&[5, 6, 3, 1]),
        t30.to_string(),
    );
    for f in 0..=max_total {
        for n in 0..=max_total - f {
            let r = t_recurrence(f, n);
            match t_bruteforce(f, n) {
                Ok(b) => rep.push(
                    anchor,
                    format!("T_{{{f},{n}}} brute force = recurrence"),
                    None,
                    b == r,
                    "",
                ),
                Err(e) => rep.push_status(
                    anchor,
                    format!("T_{{{f},{n}}} brute force"),
                    None,
                    Status::Unknown,
                    e.to_string(),
                ),
            }
            let total = r.poly.eval_one();
            let want = diagram_total(f, n);
            rep.push(
                anchor,
                format!("T_{{{f},{n}}}(1) = C(2f+n,n)(2f-1)!!"),
                None,
                total == want,
                format!("{total}"),
            );
        }
    }
    rep
}

/// Values of the bilinear form on monomials, including the chord formula for `m + n <= max_total`.
pub fn forms_suite(ts: &[u8], max_total: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("forms");
    for &t in ts {
        let anchor = "bilinear form on monomials";
        let b11 = form_i(&monomial(t, 1), &monomial(t, 1)).expect("same t");
        rep.push(
            anchor,
            "(B,B) = 1/(1-q^-2)",
            Some(t),
            b11 == geom(),
            b11.to_string(),
        );
        let two_q2 = RationalQ::from_laurent(&LaurentPoly::constant(2) + &LaurentPoly::q_pow(2));
        let want = &two_q2 * &geom().pow(2);
        let b22 = form_i(&monomial(t, 2), &monomial(t, 2)).expect("same t");
        rep.push(
            anchor,
            "(B^2,B^2) = (2+q^2)/(1-q^-2)^2",
            Some(t),
            b22 == want,
            b22.to_string(),
        );
        for m in 0..=max_total {
            for n in 0..=max_total - m {
                let v = form_i(&monomial(t, m), &monomial(t, n)).expect("same t");
                let want = if (m + n) % 2 == 1 {
                    RationalQ::zero()
                } else {
                    let f = (m + n) / 2;
                    &RationalQ::from_laurent(t_recurrence(f, 0).poly.subst_pow(2))
                        * &geom().pow(f as i32)
                };
                rep.push(
                    "form from chord counts",
                    format!("(B^{m},B^{n})"),
                    Some(t),
                    v == want,
                    "",
                );
            }
        }
    }
    rep
}

/// Canonical/PBW transition matrices are inverse; closed form of `P_n` matches its recurrence.
pub fn basis_change_suite(ts: &[u8], max_inverse: usize, max_recurrence: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("basis change");
    for &t in ts {
        for n in 0..=max_inverse {
            let mut ok = true;
            for k in 0..=n / 2 {
                let mut acc = RationalQ::zero();
                for a in 0..=k {
                    acc += &(&canonical_in_pbw(n, a, t) * &pbw_in_canonical(n - 2 * a, k - a, t));
                }
                ok &= if k == 0 { acc.is_one() } else { acc.is_zero() };
            }
            rep.push(
                "canonical and PBW transitions",
                format!("mutually inverse at n={n}"),
                Some(t),
                ok,
                "",
            );
        }
        let mut prev = IQElement::zero(t, BasisTag::Monomial);
        let mut cur = monomial(t, 0);
        let ok0 = canonical_closed_form(0, t) == cur;
        rep.push("canonical basis recurrence", "P_0 = 1", Some(t), ok0, "");
        for n in 0..max_recurrence {
            let mut next = mul_b(&cur);
            if n % 2 == t as usize && n >= 1 {
                next = next.add(&prev.scale(&-quantum_int(n)));
            }
            let next = next.scale(&quantum_int(n + 1).inv().expect("nonzero"));
            let ok = canonical_closed_form(n + 1, t) == next;
            rep.push(
                "canonical basis recurrence",
                format!("closed form of P_{}", n + 1),
                Some(t),
                ok,
                "",
            );
            prev = cur;
            cur = next;
        }
    }
    rep
}

/// `j(B u) = F j(u) + R j(u)` and `j` preserves the forms, on monomials of degree `<= max_deg`.
pub fn j_suite(ts: &[u8], max_deg: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("j-isomorphism");
    for &t in ts {
        for m in 0..max_deg {
            let je = j_map(&monomial(t, m));
            let ok = j_map(&monomial(t, m + 1)) == mul_f(&je).add(&r_op(&je));
            rep.push(
                "j intertwines B with F + R",
                format!("j(B^{}) = (F + R) j(B^{m})", m + 1),
                Some(t),
                ok,
                "",
            );
        }
        for a in 0..=max_deg {
            for b in 0..=max_deg {
                let x = monomial(t, a);
                let y = monomial(t, b);
                let ok = form_i(&x, &y).expect("same t") == form_minus(&j_map(&x), &j_map(&y));
                rep.push(
                    "j is an isometry",
                    format!("(B^{a},B^{b})"),
                    Some(t),
                    ok,
                    "",
                );
            }
        }
    }
    rep
}

/// `<P_m, P_n> - delta_{m,n}` lies in `q^-1 Z[[q^-1]]`.
pub fn orthonormal_suite(ts: &[u8], max_n: usize, precision: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("almost orthonormal");
    for &t in ts {
        for m in 0..=max_n {
            for n in 0..=max_n {
                let p = |k| IQElement::basis_vector(t, BasisTag::Canonical, k);
                let v = sesq_form_i(&p(m), &p(n)).expect("same t");
                let d = if m == n {
                    RationalQ::one()
                } else {
                    RationalQ::zero()
                };
                let s = expand(&(&v - &d), precision).expect("nonzero denominator");
                let ok = s.terms().all(|(e, _)| e < 0);
                rep.push(
                    "canonical basis almost orthonormal",
                    format!("<P_{m},P_{n}>"),
                    Some(t),
                    ok,
                    "",
                );
            }
        }
    }
    rep
}

/// Irreducible characters, decomposition numbers and branching for `n <= max_n`.
pub fn characters_suite(
    ts: &[u8],
    max_n: usize,
    xi_prec: usize,
    xi_decomp: usize,
    q_prec: i64,
) -> SuiteReport {
    let mut rep = SuiteReport::new("characters");
    for &t in ts {
        for n in 0..=max_n {
            let p = ch_irreducible(n, t, xi_prec, q_prec);
            let s = ch_irreducible_sum_form(n, t, xi_prec, q_prec);
            rep.push(
                "irreducible character",
                format!("product form = sum form, n={n}"),
                Some(t),
                p == s,
                "",
            );
            rep.push(
                "irreducible character",
                format!("polynomial nonnegative coefficients, n={n}"),
                Some(t),
                p.has_nonnegative_polynomial_coeffs(),
                "",
            );
        }
        for n in 0..=max_n {
            let lhs = ch_proper_standard(n, t, xi_decomp, q_prec);
            let mut rhs = Character::zero(xi_decomp, q_prec);
            let mut m = 0;
            while n + 2 * m < xi_decomp {
                rhs = rhs.add(
                    &ch_irreducible(n + 2 * m, t, xi_decomp, q_prec)
                        .scale(&decomposition_number(n, m, t)),
                );
                m += 1;
            }
            rep.push(
                "proper standard composition factors",
                format!("n={n}"),
                Some(t),
                lhs == rhs,
                "",
            );
        }
        for n in 0..=max_n {
            let lhs = ch_irreducible(n, t, xi_prec + 2, q_prec).apply_b();
            let mut rhs = Character::zero(xi_prec + 1, q_prec);
            if n >= 1 {
                rhs =
                    rhs.add(&ch_irreducible(n - 1, t, xi_prec + 1, q_prec).scale(&quantum_int(n)));
            }
            if n % 2 != t as usize {
                rhs = rhs
                    .add(&ch_irreducible(n + 1, t, xi_prec + 1, q_prec).scale(&quantum_int(n + 1)));
            }
            rep.push(
                "branching B L(n)",
                format!("n={n}"),
                Some(t),
                lhs == rhs,
                "",
            );
        }
    }
    rep
}

/// Projective multiplicities reconstruct `B^n` in the canonical basis.
pub fn projective_suite(ts: &[u8], max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("projective multiplicities");
    for &t in ts {
        for n in 0..=max_n {
            let mut coeffs = vec![RationalQ::zero(); n + 1];
            let mut nonneg = true;
            for m in 0..=n / 2 {
                let mult = projective_multiplicity(n, m, t);
                nonneg &= mult.is_nonnegative();
                coeffs[n - 2 * m] = RationalQ::from_laurent(mult);
            }
            let via_p = IQElement::new(t, BasisTag::Canonical, coeffs);
            let ok = convert(&via_p, BasisTag::Monomial) == monomial(t, n) && nonneg;
            rep.push("B^n as a sum of P_m", format!("n={n}"), Some(t), ok, "");
        }
        let two = RationalQ::from_laurent(quantum_factorial(2));
        let mut want = vec![RationalQ::zero(), RationalQ::zero(), two];
        if t == 1 {
            want[0] = RationalQ::one();
        }
        let got = convert(&monomial(t, 2), BasisTag::Canonical);
        let text = if t == 1 {
            "B^2 = [2]P_2 + P_0"
        } else {
            "B^2 = [2]P_2"
        };
        rep.push(
            "B^n as a sum of P_m",
            text,
            Some(t),
            got == IQElement::new(t, BasisTag::Canonical, want),
            "",
        );
    }
    rep
}

/// Nil-Hecke algebra against its polynomial representation.
pub fn nilhecke_suite(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("nilhecke");
    for c in nilhecke::verify_all(max_n) {
        rep.push("nil-Hecke algebra", c.name, None, c.passed, c.detail);
    }
    rep
}

/// Smallest degree of a Hom space between `total` boundary points.
fn min_degree(total: usize) -> Option<i64> {
    matchings(total)
        .into_iter()
        .map(|chords| {
            -2 * Diagram {
                dots: vec![0; chords.len()],
                chords,
            }
            .crossings() as i64
        })
        .min()
}

/// Quotient dimensions against `predicted_homdim` for `m + n <= max_boundary`,
/// even degrees from the minimum to `window` above it.
pub fn basis_suite(
    ts: &[u8],
    max_boundary: usize,
    window: i64,
    bounds: &SlotBounds,
    cache: Option<PathBuf>,
) -> SuiteReport {
    let ts = ts.to_vec();
    let bounds = bounds.clone();
    with_big_stack(move || {
        let mut rep = SuiteReport::new("basis");
        for t in ts {
            let mut engine = Engine::new(t);
            for total in (0..=max_boundary).step_by(2) {
                let dmin = min_degree(total).expect("even boundary");
                for n in 0..=total {
                    let m = total - n;
                    for d in (dmin..=dmin + window).step_by(2) {
                        let check = format!("Hom(B^{n}, B^{m}) degree {d}");
                        match load_or_build(cache.as_deref(), &mut engine, m, n, d, &bounds) {
                            Ok(s) => {
                                let want = predicted_homdim(m, n, d);
                                let ok = s.certified && BigInt::from(s.quotient_dim) == want;
                                let detail = format!(
                                    "dim {} predicted {} certified {}",
                                    s.quotient_dim, want, s.certified
                                );
                                rep.push(
                                    "graded dimension of Hom spaces",
                                    check,
                                    Some(t),
                                    ok,
                                    detail,
                                );
                            }
                            Err(e) => rep.push_status(
                                "graded dimension of Hom spaces",
                                check,
                                Some(t),
                                Status::Unknown,
                                e.to_string(),
                            ),
                        }
                    }
                }
            }
        }
        rep
    })
}

fn push_nb(rep: &mut SuiteReport, c: &nilbrauer::Check, t: u8, strict: bool) {
    let status = if c.passed() && (!strict || c.certified) {
        Status::Pass
    } else if c.verdict == Verdict::Unknown {
        Status::Unknown
    } else {
        Status::Fail
    };
    let slot = c
        .slot
        .map(|(m, n, d)| format!(" in Hom(B^{n},B^{m})_{d}"))
        .unwrap_or_default();
    let mut detail = format!("{} (expected {}){slot}", c.verdict, c.expected);
    if c.slot.is_some() && !c.certified {
        detail.push_str(" uncertified");
    }
    if !c.detail.is_empty() {
        detail.push_str(": ");
        detail.push_str(&c.detail);
    }
    rep.push_status(&c.family, c.name.clone(), Some(t), status, detail);
}

fn run_verifier<F>(
    name: &str,
    ts: &[u8],
    bounds: &SlotBounds,
    cache: Option<PathBuf>,
    strict: bool,
    f: F,
) -> SuiteReport
where
    F: Fn(&mut Verifier) -> Result<Vec<nilbrauer::Report>, nilbrauer::NbError> + Send + 'static,
{
    let (name, ts, bounds) = (name.to_string(), ts.to_vec(), bounds.clone());
    with_big_stack(move || {
        let mut rep = SuiteReport::new(&name);
        for t in ts {
            let mut v = Verifier::new(t, bounds.clone(), cache.clone());
            match f(&mut v) {
                Ok(reports) => {
                    for r in reports {
                        for c in &r.checks {
                            push_nb(&mut rep, c, t, strict);
                        }
                    }
                }
                Err(e) => rep.push(&name, "suite setup", Some(t), false, e.to_string()),
            }
        }
        rep
    })
}

/// Decomposition of `B * e_n` for each `n` in `ns`; every check must hold in a certified slot.
pub fn idempotents_suite(
    ts: &[u8],
    ns: &[usize],
    bounds: &SlotBounds,
    cache: Option<PathBuf>,
) -> SuiteReport {
    let ns = ns.to_vec();
    run_verifier("idempotents", ts, bounds, cache, true, move |v| {
        ns.iter().map(|&n| v.verify_idempotents(n)).collect()
    })
}

/// Derived relations, generating-function identities and centrality of `q_1`, `q_3`.
pub fn derived_suite(ts: &[u8], bounds: &SlotBounds, cache: Option<PathBuf>) -> SuiteReport {
    run_verifier("derived", ts, bounds, cache, false, |v| {
        Ok(vec![v.verify_derived()?])
    })
}

/// Centrality of `q_r` for each `r` in `rs`.
pub fn central_suite(
    ts: &[u8],
    rs: &[usize],
    bounds: &SlotBounds,
    cache: Option<PathBuf>,
) -> SuiteReport {
    let rs = rs.to_vec();
    run_verifier("central", ts, bounds, cache, false, move |v| {
        rs.iter().map(|&r| v.verify_central(r)).collect()
    })
}

/// Runs a suite with the configured bounds.
pub fn run_suite(suite: Suite, cfg: &RunConfig, opts: &SuiteOpts) -> SuiteReport {
    let ts = cfg.ts();
    let bounds = cfg.bounds();
    let cache = cfg.cache_dir.clone();
    let nb_ns: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (0..=cfg.max_n.unwrap_or(2)).collect(),
    };
    let mut rep = match suite {
        Suite::Qseries => qseries_suite(),
        Suite::Chords => chords_suite(cfg.max_n.unwrap_or(6)),
        Suite::Iqgroup => {
            let mut r = forms_suite(&ts, cfg.max_n.unwrap_or(10));
            r.extend(basis_change_suite(&ts, 10, 8));
            r.extend(j_suite(&ts, 8));
            r.extend(orthonormal_suite(&ts, 6, 20));
            r
        }
        Suite::Characters => {
            let mut r = characters_suite(
                &ts,
                cfg.max_n.unwrap_or(5),
                cfg.xi_prec,
                cfg.xi_prec,
                cfg.q_prec,
            );
            r.extend(projective_suite(&ts, 8));
            r
        }
        Suite::Nilhecke => nilhecke_suite(cfg.max_n.unwrap_or(5)),
        Suite::Basis => basis_suite(&ts, 4, 8, &bounds, cache),
        Suite::Idempotents => idempotents_suite(&ts, &nb_ns, &bounds, cache),
        Suite::Derived => derived_suite(&ts, &bounds, cache),
        Suite::Central => {
            let rs = opts.r.map(|r| vec![r]).unwrap_or_else(|| vec![1, 3]);
            central_suite(&ts, &rs, &bounds, cache)
        }
        Suite::Nilbrauer => {
            let mut r = basis_suite(&ts, 4, 8, &bounds, cache.clone());
            r.extend(idempotents_suite(&ts, &nb_ns, &bounds, cache.clone()));
            r.extend(derived_suite(&ts, &bounds, cache));
            r
        }
        Suite::All => {
            let mut r = SuiteReport::new("all");
            for s in [
                Suite::Qseries,
                Suite::Chords,
                Suite::Iqgroup,
                Suite::Characters,
                Suite::Nilhecke,
                Suite::Nilbrauer,
            ] {
                let sub = run_suite(s, cfg, opts);
                for mut l in sub.lines {
                    l.anchor = format!("{}: {}", sub.suite, l.anchor);
                    r.lines.push(l);
                }
            }
            r
        }
    };
    rep.suite = suite
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_totals() {
        // f = 2, n = 0: three matchings of four points; f = 1, n = 2: C(4,2) = 6.
        assert_eq!(diagram_total(2, 0), BigInt::from(3));
        assert_eq!(diagram_total(1, 2), BigInt::from(6));
        assert_eq!(diagram_total(0, 5), BigInt::from(1));
    }

    #[test]
    fn minimal_degrees() {
        assert_eq!(min_degree(0), Some(0));
        assert_eq!(min_degree(2), Some(0));
        assert_eq!(min_degree(4), Some(-2));
        assert_eq!(min_degree(6), Some(-6));
        assert_eq!(min_degree(3), None);
    }
}
