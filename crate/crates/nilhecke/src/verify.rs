//! Self-checks of the nil-Hecke implementation against the polynomial oracle.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use qseries::{qfactorial, BigInt};

use crate::algebra::{e_idempotent, NHElement};
use crate::module::{ln_action, ln_basis, ln_graded_dimension, LnVector};
use crate::perm;
use crate::poly::MPoly;
use crate::rep::demazure;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn result(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// A random element with up to three terms.
pub fn random_element<R: Rng>(rng: &mut R, n: usize) -> NHElement {
    let perms = perm::all_perms(n);
    let mut e = NHElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let w = perms[rng.gen_range(0..perms.len())].clone();
        e.add_term(a, w, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    e
}

/// Polynomials `x^r` with `r_k <= n - k`.
///
/// They form a basis of all polynomials over the symmetric ones, and every
/// algebra element acts linearly over the symmetric polynomials, so two
/// elements agree as operators iff they agree on these.
pub fn test_polynomials(n: usize) -> Vec<MPoly> {
    ln_basis(n)
        .into_iter()
        .map(|e| MPoly::monomial(e, 1))
        .collect()
}

/// Products computed by straightening agree with composition of operators.
pub fn check_faithfulness(pairs: usize, max_n: usize, seed: u64) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..pairs {
        let n = 1 + k % max_n;
        let a = random_element(&mut rng, n);
        let b = random_element(&mut rng, n);
        let ab = a.multiply(&b).expect("same n");
        for f in test_polynomials(n) {
            let lhs = ab.act(&f).unwrap();
            let rhs = a.act(&b.act(&f).unwrap()).unwrap();
            if lhs != rhs {
                return result("faithfulness", false, format!("a={a} b={b} f={f}"));
            }
        }
    }
    result(
        "faithfulness",
        true,
        format!("{pairs} random pairs, n<={max_n}"),
    )
}

pub fn check_idempotents(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let e = e_idempotent(n);
        if e.multiply(&e).unwrap() != e {
            return result("idempotent", false, format!("e_{n}^2 != e_{n}"));
        }
    }
    result("idempotent", true, format!("e_n^2 = e_n for n<={max_n}"))
}

pub fn check_ln_dimension(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        if ln_graded_dimension(n) != qfactorial(n as i64).unwrap() {
            return result("ln_dimension", false, format!("n={n}"));
        }
    }
    result(
        "ln_dimension",
        true,
        format!("dim_q L_n(n) = [n]! for n<={max_n}"),
    )
}

/// `tau_{w_n} x^rho u = u` and every `tau_i` kills `u`.
pub fn check_highest_weight(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let u = LnVector::generator(n);
        let rho: Vec<u32> = (0..n as u32).rev().collect();
        let a = NHElement::tau_w(perm::longest(n))
            .multiply(&NHElement::basis(rho, perm::identity(n)))
            .unwrap();
        if ln_action(&a, &u).unwrap() != u {
            return result("highest_weight", false, format!("n={n}"));
        }
        for i in 1..n {
            if !ln_action(&NHElement::tau(n, i), &u).unwrap().is_zero() {
                return result("highest_weight", false, format!("tau_{i} u != 0 for n={n}"));
            }
        }
    }
    result("highest_weight", true, format!("n<={max_n}"))
}

/// All monomials in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<MPoly> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(pos: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<MPoly>) {
        if pos == e.len() {
            out.push(MPoly::monomial(e.clone(), 1));
            return;
        }
        for a in 0..=left {
            e[pos] = a;
            rec(pos + 1, left - a, e, out);
        }
        e[pos] = 0;
    }
    rec(0, d, &mut e, &mut out);
    out
}

/// Nil, commutation and braid relations of Demazure operators, and the twisted Leibniz rule.
pub fn check_demazure_relations(max_n: usize, max_deg: u32) -> CheckResult {
    for n in 2..=max_n {
        let polys = monomials_up_to(n, max_deg);
        for f in &polys {
            for i in 1..n {
                let di = demazure(i, f).unwrap();
                if !demazure(i, &di).unwrap().is_zero() {
                    return result("demazure", false, format!("d_{i}^2 f != 0, f={f}"));
                }
                for j in 1..n {
                    let dj = demazure(j, f).unwrap();
                    if i.abs_diff(j) > 1 && demazure(i, &dj).unwrap() != demazure(j, &di).unwrap() {
                        return result("demazure", false, format!("far commutation {i},{j}"));
                    }
                }
                if i + 1 < n {
                    let l = demazure(i, &demazure(i + 1, &di).unwrap()).unwrap();
                    let r = demazure(i + 1, &demazure(i, &demazure(i + 1, f).unwrap()).unwrap())
                        .unwrap();
                    if l != r {
                        return result("demazure", false, format!("braid at {i}, f={f}"));
                    }
                }
                let g = MPoly::var(n, i);
                let lhs = demazure(i, &(&g * f)).unwrap();
                let rhs = &(&demazure(i, &g).unwrap() * f) + &(&g.swap(i) * &di);
                if lhs != rhs {
                    return result("demazure", false, format!("Leibniz at {i}, f={f}"));
                }
            }
        }
    }
    result("demazure", true, format!("n<={max_n}, degree<={max_deg}"))
}

/// Symmetric polynomials commute with every `tau_i`.
pub fn check_center(max_n: usize) -> CheckResult {
    for n in 2..=max_n {
        for r in 1..=n {
            let s = NHElement::from_poly(&MPoly::elementary(n, r));
            for i in 1..n {
                let t = NHElement::tau(n, i);
                if s.multiply(&t).unwrap() != t.multiply(&s).unwrap() {
                    return result("center", false, format!("e_{r} and tau_{i}, n={n}"));
                }
            }
        }
    }
    result("center", true, format!("n<={max_n}"))
}

/// Runs every check at the given size.
pub fn verify_all(n: usize) -> Vec<CheckResult> {
    vec![
        check_faithfulness(200, n.min(4), 0x6e68),
        check_idempotents(n.max(1)),
        check_ln_dimension(n.max(1)),
        check_highest_weight(n.max(1)),
        check_demazure_relations(n.min(4), if n >= 4 { 8 } else { 6 }),
        check_center(n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_pass_at_small_size() {
        for r in verify_all(3) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
