//! Tables of the algebraic invariants.

use std::str::FromStr;

use characters::{ch_irreducible, decomposition_number, hom_dimension};
use chords::t_recurrence;
use clap::ValueEnum;
use iqgroup::{form_i, transition_matrix, w_coeff, BasisTag, IQElement};
use qseries::{expand, LaurentSeriesQinv, RationalQ};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::Table;

/// The available tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Coefficients `w_{m,n}` of `B^m` in the PBW basis.
    W,
    /// Chord generating functions `T_{f,n}(q)`.
    #[value(name = "T")]
    T,
    /// Change-of-basis matrices.
    Transition,
    /// The bilinear form on monomials.
    Form,
    /// Characters of irreducible modules.
    Char,
    /// Decomposition numbers of proper standard modules.
    Decomp,
    /// Graded dimensions of Hom spaces.
    Homdim,
}

/// Table-specific options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableOpts {
    pub max: Option<usize>,
    pub max_m: Option<usize>,
    pub n: Option<usize>,
    pub from: Option<String>,
    pub to: Option<String>,
}

fn int(x: usize) -> (String, Value) {
    (x.to_string(), json!(x))
}

fn rational(r: &RationalQ) -> (String, Value) {
    (
        r.to_string(),
        json!(format!("{} / {}", r.numerator(), r.denominator())),
    )
}

fn series(s: &LaurentSeriesQinv) -> (String, Value) {
    let coeffs: Vec<String> = s.coeff_vec().iter().map(|c| c.to_string()).collect();
    (
        s.to_string(),
        json!({ "top": s.top_exponent(), "precision": s.precision(), "coeffs": coeffs }),
    )
}

fn push(table: &mut Table, cells: Vec<(String, Value)>) {
    let (text, values) = cells.into_iter().unzip();
    table.push(text, values);
}

fn check_bound(name: &str, v: usize, max: usize) -> Result<usize, String> {
    if v > max {
        Err(format!("{name} = {v} exceeds the supported maximum {max}"))
    } else {
        Ok(v)
    }
}

fn basis(s: &Option<String>, default: BasisTag) -> Result<BasisTag, String> {
    match s {
        None => Ok(default),
        Some(s) => BasisTag::from_str(s).map_err(|e| e.to_string()),
    }
}

/// Builds the requested table; errors are usage errors.
pub fn build_table(kind: TableKind, cfg: &RunConfig, opts: &TableOpts) -> Result<Table, String> {
    let ts = cfg.ts();
    Ok(match kind {
        TableKind::W => {
            let max = check_bound("max-n", cfg.max_n.unwrap_or(6), 16)?;
            let mut t = Table::new(
                "w_{m,n}: B^m = sum_n w_{m,n} Delta_n",
                &["m", "n", "w_{m,n}"],
            );
            for m in 0..=max {
                for n in (m % 2..=m).step_by(2) {
                    push(&mut t, vec![int(m), int(n), rational(&w_coeff(m, n))]);
                }
            }
            t
        }
        TableKind::T => {
            let max_f = check_bound("max-f", cfg.max_f.unwrap_or(3), 8)?;
            let max_n = check_bound("max-n", cfg.max_n.unwrap_or(3), 8)?;
            let mut t = Table::new(
                "T_{f,n}(q): tethered chord diagrams by crossings",
                &["f", "n", "T_{f,n}(q)"],
            );
            for f in 0..=max_f {
                for n in 0..=max_n {
                    let p = t_recurrence(f, n).poly;
                    push(
                        &mut t,
                        vec![int(f), int(n), (p.to_string(), json!(p.to_string()))],
                    );
                }
            }
            t
        }
        TableKind::Transition => {
            let from = basis(&opts.from, BasisTag::Canonical)?;
            let to = basis(&opts.to, BasisTag::Pbw)?;
            let max = check_bound("max-n", cfg.max_n.unwrap_or(6), 16)?;
            let coeff = format!("coefficient of {}_i in {}_j", to.symbol(), from.symbol());
            let mut t = Table::new(
                &format!("transition {} -> {}", from, to),
                &["t", "j", "i", &coeff],
            );
            for &tp in &ts {
                for (j, col) in transition_matrix(from, to, tp, max).iter().enumerate() {
                    for (i, c) in col.iter().enumerate() {
                        if !c.is_zero() {
                            push(&mut t, vec![int(tp as usize), int(j), int(i), rational(c)]);
                        }
                    }
                }
            }
            t
        }
        TableKind::Form => {
            let max = check_bound("max", opts.max.or(cfg.max_n).unwrap_or(4), 12)?;
            let mut t = Table::new(
                "(B^m, B^n): bilinear form on monomials",
                &["t", "m", "n", "(B^m,B^n)"],
            );
            for &tp in &ts {
                for m in 0..=max {
                    for n in 0..=max {
                        let v = IQElement::basis_vector(tp, BasisTag::Monomial, m);
                        let w = IQElement::basis_vector(tp, BasisTag::Monomial, n);
                        let f = form_i(&v, &w).map_err(|e| e.to_string())?;
                        push(&mut t, vec![int(tp as usize), int(m), int(n), rational(&f)]);
                    }
                }
            }
            t
        }
        TableKind::Char => {
            let max = check_bound("max-n", cfg.max_n.unwrap_or(3), 8)?;
            let xi = check_bound("xi-prec", cfg.xi_prec, 16)?;
            let mut t = Table::new(
                "ch L_n: coefficients of xi^k",
                &["t", "n", "k", "coefficient", "expansion"],
            );
            for &tp in &ts {
                for n in 0..=max {
                    let ch = ch_irreducible(n, tp, xi, cfg.q_prec);
                    for (k, c) in ch.coeffs().iter().enumerate() {
                        let s = expand(c, cfg.q_prec).map_err(|e| e.to_string())?;
                        push(
                            &mut t,
                            vec![int(tp as usize), int(n), int(k), rational(c), series(&s)],
                        );
                    }
                }
            }
            t
        }
        TableKind::Decomp => {
            let n = check_bound("n", opts.n.unwrap_or(0), 12)?;
            let max_m = check_bound("max-m", opts.max_m.unwrap_or(3), 8)?;
            let mut t = Table::new(
                "decomposition numbers [Delta-bar(n) : L(n+2m)]",
                &["t", "n", "m", "multiplicity"],
            );
            for &tp in &ts {
                for m in 0..=max_m {
                    push(
                        &mut t,
                        vec![
                            int(tp as usize),
                            int(n),
                            int(m),
                            rational(&decomposition_number(n, m, tp)),
                        ],
                    );
                }
            }
            t
        }
        TableKind::Homdim => {
            let max = check_bound("max-n", cfg.max_n.unwrap_or(3), 6)?;
            let mut t = Table::new("dim_q Hom(B^n, B^m)", &["t", "m", "n", "dim_q"]);
            for &tp in &ts {
                for m in 0..=max {
                    for n in 0..=max {
                        let h = hom_dimension(m, n, tp, cfg.q_prec);
                        push(&mut t, vec![int(tp as usize), int(m), int(n), series(&h)]);
                    }
                }
            }
            t
        }
    })
}
