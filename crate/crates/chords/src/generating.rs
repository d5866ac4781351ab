//! Crossing generating functions `T_{f,n}(q)` by enumeration and by recurrence.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use qseries::{qbrace, BigInt, LaurentPoly};
use serde::{Deserialize, Serialize};

use crate::diagram::{diagram_count, enumerate};
use crate::error::ChordError;

/// The generating function `sum_d q^crossings(d)` over diagrams with `f` free and `n` tethered chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPoly {
    pub f: usize,
    pub n: usize,
    pub poly: LaurentPoly,
}

impl TPoly {
    /// `n f + f (f - 1) / 2`, the largest possible crossing number.
    pub fn max_crossings(f: usize, n: usize) -> usize {
        n * f + f * f.saturating_sub(1) / 2
    }

    /// Number of diagrams with exactly `c` crossings.
    pub fn count(&self, c: usize) -> BigInt {
        self.poly.coeff(c as i64)
    }

    /// `(c, N(f, n, c))` for `c = 0..=deg`.
    pub fn rows(&self) -> Vec<(usize, BigInt)> {
        (0..=self.poly.max_exp().unwrap_or(0) as usize)
            .map(|c| (c, self.count(c)))
            .collect()
    }

    /// True when the value at `q = 1` is the total diagram count.
    pub fn has_expected_total(&self) -> bool {
        self.poly.eval_one() == BigInt::from(diagram_count(self.f, self.n))
    }
}

/// `T_{f,n}` by summing over all enumerated diagrams.
pub fn t_bruteforce(f: usize, n: usize) -> Result<TPoly, ChordError> {
    let mut poly = LaurentPoly::zero();
    for d in enumerate(f, n)? {
        poly.add_term(d.crossings() as i64, BigInt::from(1));
    }
    Ok(TPoly { f, n, poly })
}

type Cache = Mutex<HashMap<(usize, usize), LaurentPoly>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `T_{f,n}` from `T_{f,n} = T_{f,n-1} + {n+1} T_{f-1,n+1}` with `T_{0,n} = 1`.
///
/// Results are memoized in a process-wide cache.
pub fn t_recurrence(f: usize, n: usize) -> TPoly {
    TPoly {
        f,
        n,
        poly: t_poly(f, n),
    }
}

fn t_poly(f: usize, n: usize) -> LaurentPoly {
    if f == 0 {
        return LaurentPoly::one();
    }
    if let Some(p) = cache().lock().unwrap().get(&(f, n)) {
        return p.clone();
    }
    // Fill row f for all n' <= n iteratively to keep recursion depth at most f.
    let mut prev = LaurentPoly::zero();
    let mut value = LaurentPoly::zero();
    for m in 0..=n {
        let cached = cache().lock().unwrap().get(&(f, m)).cloned();
        value = match cached {
            Some(p) => p,
            None => {
                let brace = qbrace(m as i64 + 1).expect("non-negative");
                let p = &prev + &(&brace * &t_poly(f - 1, m + 1));
                cache().lock().unwrap().insert((f, m), p.clone());
                p
            }
        };
        prev = value.clone();
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_terms(c.iter().enumerate().map(|(i, &v)| (i as i64, v)))
    }

    #[test]
    fn small_values() {
        for n in 0..5 {
            assert!(t_bruteforce(0, n).unwrap().poly.is_one());
            assert!(t_recurrence(0, n).poly.is_one());
        }
        assert_eq!(t_bruteforce(2, 0).unwrap().poly, poly(&[2, 1]));
        assert_eq!(t_bruteforce(3, 0).unwrap().poly, poly(&[5, 6, 3, 1]));
        assert_eq!(t_recurrence(3, 0).poly, poly(&[5, 6, 3, 1]));
    }

    #[test]
    fn one_free_chord() {
        // One free chord among n+1 points gives sum_{k<=n} {k}.
        assert_eq!(t_recurrence(1, 1).poly, poly(&[2, 1]));
        assert_eq!(t_recurrence(1, 2).poly, poly(&[3, 2, 1]));
        assert_eq!(t_bruteforce(1, 2).unwrap().poly, poly(&[3, 2, 1]));
    }

    #[test]
    fn rows_and_totals() {
        let t = t_recurrence(2, 1);
        assert!(t.has_expected_total());
        let total: BigInt = t.rows().into_iter().map(|(_, c)| c).sum();
        assert_eq!(total, BigInt::from(diagram_count(2, 1)));
    }
}
