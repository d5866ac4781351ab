//! Characters of proper standard and irreducible modules and multiplicities.

use iqgroup::{quantum_factorial, quantum_int, w_coeff_from_chords};
use qseries::{LaurentPoly, RationalQ};
use serde::{Deserialize, Serialize};

use crate::character::Character;

/// A weakly increasing tuple `a_1 <= ... <= a_m` in `[0, n]` with every `a_i != t mod 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTuple {
    pub n: usize,
    pub entries: Vec<usize>,
}

impl AlphaTuple {
    /// `[a_1 + 1]^2 ... [a_m + 1]^2`.
    pub fn weight(&self) -> LaurentPoly {
        self.entries.iter().fold(LaurentPoly::one(), |acc, &a| {
            let v = qseries::qint(a as i64 + 1).unwrap();
            &acc * &(&v * &v)
        })
    }
}

/// All tuples of length `m` with entries in `[0, n]` avoiding parity `t`.
pub fn alpha_tuples(m: usize, n: usize, t: u8) -> Vec<AlphaTuple> {
    let allowed: Vec<usize> = (0..=n).filter(|a| a % 2 != t as usize).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(
        allowed: &[usize],
        start: usize,
        m: usize,
        n: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<AlphaTuple>,
    ) {
        if cur.len() == m {
            out.push(AlphaTuple {
                n,
                entries: cur.clone(),
            });
            return;
        }
        for i in start..allowed.len() {
            cur.push(allowed[i]);
            rec(allowed, i, m, n, cur, out);
            cur.pop();
        }
    }
    rec(&allowed, 0, m, n, &mut cur, &mut out);
    out
}

fn fact(n: usize) -> RationalQ {
    RationalQ::from_laurent(quantum_factorial(n))
}

/// `ch Delta-bar_n = [n]! sum_f T_{f,n}(q^2) / (1 - q^-2)^f xi^(n+2f)`.
pub fn ch_proper_standard(n: usize, _t: u8, xi_prec: usize, q_prec: i64) -> Character {
    let mut ch = Character::zero(xi_prec, q_prec);
    let mut k = n;
    while k < xi_prec {
        ch.add_to(k, &w_coeff_from_chords(k, n));
        k += 2;
    }
    ch
}

/// `ch L_n = [n]! xi^n prod_{1 <= k <= n+1, k = t mod 2} 1 / (1 - [k]^2 xi^2)`.
pub fn ch_irreducible(n: usize, t: u8, xi_prec: usize, q_prec: i64) -> Character {
    let mut ch = Character::zero(xi_prec, q_prec);
    ch.add_to(n, &fact(n));
    for k in (1..=n + 1).filter(|k| k % 2 == t as usize) {
        let k2 = &quantum_int(k) * &quantum_int(k);
        ch = ch.div_one_minus_xi2(&k2);
    }
    ch
}

/// The same character as a sum over [`alpha_tuples`].
pub fn ch_irreducible_sum_form(n: usize, t: u8, xi_prec: usize, q_prec: i64) -> Character {
    let mut ch = Character::zero(xi_prec, q_prec);
    let f = fact(n);
    let mut m = 0;
    while n + 2 * m < xi_prec {
        let mut s = LaurentPoly::zero();
        for a in alpha_tuples(m, n, t) {
            s += &a.weight();
        }
        ch.add_to(n + 2 * m, &(&f * &RationalQ::from_laurent(s)));
        m += 1;
    }
    ch
}

/// `[Delta-bar(n) : L(n+2m)]_q`.
///
/// Equals `q^(-m(2m-1))` when `n = t mod 2` and `q^(-m(2m+1))` otherwise,
/// divided by `prod_{k<=m} (1 - q^(-4k))`.
pub fn decomposition_number(n: usize, m: usize, t: u8) -> RationalQ {
    let mi = m as i64;
    let e = if n % 2 == t as usize {
        -mi * (2 * mi - 1)
    } else {
        -mi * (2 * mi + 1)
    };
    let mut r = RationalQ::q_pow(e);
    for k in 1..=mi {
        r = &r * &RationalQ::inv_one_minus_q_pow(-4 * k);
    }
    r
}

/// The coefficient of `P_{n-2m}` in `B^n`.
pub fn projective_multiplicity(n: usize, m: usize, t: u8) -> LaurentPoly {
    if 2 * m > n {
        return LaurentPoly::zero();
    }
    let l = n - 2 * m;
    let mut s = LaurentPoly::zero();
    for a in alpha_tuples(m, l, t) {
        s += &a.weight();
    }
    &quantum_factorial(l) * &s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> RationalQ {
        RationalQ::from_laurent(LaurentPoly::from_terms(c.iter().copied()))
    }

    #[test]
    fn proper_standard_examples() {
        let ch = ch_proper_standard(0, 0, 6, 8);
        let g = RationalQ::inv_one_minus_q_pow(-2);
        assert!(ch.coeff(0).unwrap().is_one());
        assert_eq!(ch.coeff(2).unwrap(), &g);
        assert_eq!(
            ch.coeff(4).unwrap(),
            &(&poly(&[(0, 2), (2, 1)]) * &g.pow(2))
        );
        assert!(ch.coeff(1).unwrap().is_zero());
        assert!(ch_proper_standard(1, 0, 4, 8).coeff(1).unwrap().is_one());
        assert_eq!(ch_proper_standard(2, 1, 4, 8).coeff(2).unwrap(), &fact(2));
    }

    #[test]
    fn irreducible_examples() {
        let ch = ch_irreducible(0, 0, 8, 8);
        assert!(ch.coeff(0).unwrap().is_one());
        assert!(ch.coeffs()[1..].iter().all(RationalQ::is_zero));
        let ch = ch_irreducible(0, 1, 8, 8);
        for k in 0..8 {
            assert_eq!(ch.coeff(k).unwrap().is_one(), k % 2 == 0);
        }
        let ch = ch_irreducible(1, 0, 6, 8);
        let two2 = &quantum_int(2) * &quantum_int(2);
        assert!(ch.coeff(1).unwrap().is_one());
        assert_eq!(ch.coeff(3).unwrap(), &two2);
        assert_eq!(ch.coeff(5).unwrap(), &(&two2 * &two2));
    }

    #[test]
    fn decomposition_examples() {
        for t in 0..2 {
            for n in 0..4 {
                assert!(decomposition_number(n, 0, t).is_one());
            }
        }
        let g4 = RationalQ::inv_one_minus_q_pow(-4);
        assert_eq!(decomposition_number(0, 1, 0), &RationalQ::q_pow(-1) * &g4);
        assert_eq!(decomposition_number(1, 1, 0), &RationalQ::q_pow(-3) * &g4);
    }

    #[test]
    fn projective_examples() {
        assert!(projective_multiplicity(2, 1, 1).is_one());
        assert!(projective_multiplicity(2, 1, 0).is_zero());
        for t in 0..2 {
            assert_eq!(projective_multiplicity(2, 0, t), quantum_factorial(2));
        }
    }

    #[test]
    fn alpha_tuple_enumeration() {
        assert_eq!(alpha_tuples(1, 0, 1).len(), 1);
        assert!(alpha_tuples(1, 0, 0).is_empty());
        assert_eq!(alpha_tuples(0, 3, 0).len(), 1);
        // entries from {1, 3}, length 2: (1,1), (1,3), (3,3)
        assert_eq!(alpha_tuples(2, 3, 0).len(), 3);
    }
}
