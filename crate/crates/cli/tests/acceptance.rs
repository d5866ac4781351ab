//! Acceptance criteria: one pass/fail line per criterion with its timing.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cli::suites::{
    basis_change_suite, basis_suite, characters_suite, chords_suite, derived_suite, forms_suite,
    idempotents_suite, j_suite, nilhecke_suite, orthonormal_suite, projective_suite,
};
use cli::{Status, SuiteReport};
use nilbrauer::SlotBounds;

const BOTH: [u8; 2] = [0, 1];

struct Outcome {
    ok: bool,
    summary: String,
}

fn judge(rep: &SuiteReport, elapsed: Duration, limit: Duration) -> Outcome {
    let within = elapsed <= limit;
    let mut summary = format!(
        "{} checks, {} fail, {} unknown, {:.2} s (limit {} s)",
        rep.lines.len(),
        rep.count(Status::Fail),
        rep.count(Status::Unknown),
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    if let Some(l) = rep.lines.iter().find(|l| l.status != Status::Pass) {
        summary.push_str(&format!(
            "; first: {} / {} / {}",
            l.anchor, l.check, l.detail
        ));
    }
    if !within {
        summary.push_str("; time limit exceeded");
    }
    Outcome {
        ok: rep.all_pass() && within,
        summary,
    }
}

fn timed(limit_s: u64, f: impl FnOnce() -> SuiteReport) -> Outcome {
    let start = Instant::now();
    let rep = f();
    judge(&rep, start.elapsed(), Duration::from_secs(limit_s))
}

fn main() -> ExitCode {
    let bounds = SlotBounds::default();
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (
            1,
            "chord generating functions",
            timed(10, || chords_suite(6)),
        ),
        (
            2,
            "form values and chord formula",
            timed(5, || forms_suite(&BOTH, 10)),
        ),
        (
            3,
            "basis-change coherence",
            timed(10, || basis_change_suite(&BOTH, 10, 8)),
        ),
        (4, "j-isomorphism", timed(10, || j_suite(&BOTH, 8))),
        (
            5,
            "almost orthonormality",
            timed(10, || orthonormal_suite(&BOTH, 6, 20)),
        ),
        (
            6,
            "characters",
            timed(30, || characters_suite(&BOTH, 5, 12, 10, 12)),
        ),
        (
            7,
            "projective multiplicities",
            timed(5, || projective_suite(&BOTH, 8)),
        ),
        (8, "nil-Hecke algebra", timed(30, || nilhecke_suite(5))),
    ];

    let cache = tempfile::tempdir().expect("temporary cache directory");
    let dir = Some(cache.path().to_path_buf());
    let cold = timed(600, || basis_suite(&BOTH, 4, 8, &bounds, dir.clone()));
    let warm = timed(10, || basis_suite(&BOTH, 4, 8, &bounds, dir.clone()));
    results.push((
        9,
        "basis theorem certification",
        Outcome {
            ok: cold.ok && warm.ok,
            summary: format!("cold: {}; warm: {}", cold.summary, warm.summary),
        },
    ));

    let cache10 = tempfile::tempdir().expect("temporary cache directory");
    let dir10 = Some(cache10.path().to_path_buf());
    results.push((
        10,
        "idempotent decomposition",
        timed(900, || idempotents_suite(&BOTH, &[0, 1, 2], &bounds, dir10)),
    ));

    let cache11 = tempfile::tempdir().expect("temporary cache directory");
    let dir11 = Some(cache11.path().to_path_buf());
    results.push((
        11,
        "derived relations and centrality",
        timed(600, || derived_suite(&BOTH, &bounds, dir11)),
    ));

    let mut all = true;
    for (k, name, o) in &results {
        all &= o.ok;
        println!(
            "criterion {k:>2} {} {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.summary
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        results.iter().filter(|r| r.2.ok).count(),
        results.len()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
