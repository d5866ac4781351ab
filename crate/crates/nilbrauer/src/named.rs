//! Named morphisms built from thick strands.
//!
//! A thick strand of thickness `k` is `k` parallel strands. Its crossing is
//! the longest reduced word `w_k`, `rho` puts `k-1-i` dots on its `i`-th
//! strand, `varpi_r + rho` adds one more dot on the first `r` strands, and a
//! pin `e_r` is the elementary symmetric polynomial in its dots. Splits and
//! merges of thick strands are juxtapositions.

use std::fmt;
use std::str::FromStr;

use crate::error::NbError;
use crate::word::{FreeMor, Gen, GenWord, Slice};

/// The named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    /// `e_n`, an idempotent on `n` strands.
    E,
    /// `e_{r,n}` on `n+1` strands.
    Er,
    /// `f_{r,n}` on `n+1` strands.
    F,
    /// `u_{r,n}` on `n+1` strands.
    U,
    /// `v_{r,n}` on `n+1` strands.
    V,
    /// `w_{r,n} = u_{r,n} - u_{r,n} v_{0,n}`.
    W,
    /// `x_{s,n}` from `n+1` to `n-1` strands.
    X,
    /// `y_{s,n}` from `n-1` to `n+1` strands.
    Y,
}

impl FromStr for Named {
    type Err = NbError;
    fn from_str(s: &str) -> Result<Self, NbError> {
        Ok(match s {
            "e" => Named::E,
            "er" => Named::Er,
            "f" => Named::F,
            "u" => Named::U,
            "v" => Named::V,
            "w" => Named::W,
            "x" => Named::X,
            "y" => Named::Y,
            _ => {
                return Err(NbError::Unsupported {
                    name: s.to_string(),
                    n: 0,
                    r: 0,
                })
            }
        })
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Named::E => "e",
            Named::Er => "er",
            Named::F => "f",
            Named::U => "u",
            Named::V => "v",
            Named::W => "w",
            Named::X => "x",
            Named::Y => "y",
        })
    }
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn slices(width: usize, s: Vec<Slice>) -> FreeMor {
    FreeMor::word(GenWord::new(width, s).expect("named element slices are valid"))
}

/// Composite of layers listed bottom to top.
fn seq(parts: Vec<FreeMor>) -> FreeMor {
    let mut it = parts.into_iter();
    let mut acc = it.next().expect("at least one layer");
    for p in it {
        acc = p.compose(&acc).expect("layer widths agree");
    }
    acc
}

/// `w_k` on strands `a..a+k`.
fn thick_cross(width: usize, a: usize, k: usize) -> FreeMor {
    let mut s = Vec::new();
    for top in 1..k {
        for j in (0..top).rev() {
            s.push(Slice::new(a + j, Gen::Cross));
        }
    }
    slices(width, s)
}

/// Dots with the given counts at consecutive positions from `a`.
fn dots(width: usize, a: usize, counts: &[usize]) -> FreeMor {
    let mut s = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            s.push(Slice::new(a + i, Gen::Dot));
        }
    }
    slices(width, s)
}

fn rho(k: usize) -> Vec<usize> {
    (0..k).map(|i| k - 1 - i).collect()
}

/// `varpi_r + rho` on a thick strand of thickness `k`.
fn varpi_rho(k: usize, r: usize) -> Vec<usize> {
    (0..k).map(|i| k - 1 - i + usize::from(i < r)).collect()
}

/// Pin `e_r` on strands `a..a+k`; zero if `r` is negative or exceeds `k`.
fn pin(width: usize, a: usize, k: usize, r: i64) -> FreeMor {
    let mut out = FreeMor::zero(width, width);
    if r < 0 || r as usize > k {
        return out;
    }
    let r = r as usize;
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize == r {
            let s = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| Slice::new(a + i, Gen::Dot))
                .collect();
            out = out.add(&slices(width, s)).expect("same shape");
        }
    }
    out
}

/// Crossings moving the strand at `from` to `to`, one position at a time.
fn travel(width: usize, from: usize, to: usize) -> FreeMor {
    let s = if from < to {
        (from..to).map(|o| Slice::new(o, Gen::Cross)).collect()
    } else {
        (to..from)
            .rev()
            .map(|o| Slice::new(o, Gen::Cross))
            .collect()
    };
    slices(width, s)
}

fn gen(width: usize, offset: usize, g: Gen) -> FreeMor {
    slices(width, vec![Slice::new(offset, g)])
}

/// `e_n`: `rho` dots over `w_n`.
pub fn idempotent(n: usize) -> FreeMor {
    seq(vec![thick_cross(n, 0, n), dots(n, 0, &rho(n))])
}

/// Cap across the thick strand `1..k+1`, pinned thick part, cup back across it.
///
/// The bottom cap joins strand `0` and strand `k+1`; the top cup has `n-r`
/// dots on its left end.
fn capped(n: usize, r: usize, pin_r: i64) -> FreeMor {
    let k = n - 1;
    seq(vec![
        travel(n + 1, n, 1),
        gen(n + 1, 0, Gen::Cap),
        thick_cross(k, 0, k),
        pin(k, 0, k, pin_r),
        gen(k, k, Gen::Cup),
        travel(n + 1, n - 1, 0),
        dots(n + 1, 0, &[n - r]),
    ])
}

/// The correction term shared by `e_{r,n}` and `f_{r,n}` when `n = t` mod 2.
fn correction(n: usize, r: usize) -> FreeMor {
    if n < 2 || r < 2 {
        return FreeMor::zero(n + 1, n + 1);
    }
    let k = n - 2;
    seq(vec![
        travel(n + 1, n, 2),
        gen(n + 1, 1, Gen::Cap),
        thick_cross(n - 1, 1, k),
        pin(n - 1, 1, k, r as i64 - 2),
        travel(n - 1, 0, k),
        gen(n - 1, n - 1, Gen::Cup),
        travel(n + 1, n - 1, 0),
        dots(n + 1, 0, &[n - r]),
    ])
}

fn rho_top(n: usize) -> FreeMor {
    dots(n + 1, 1, &rho(n))
}

fn e_rn(n: usize, r: usize, t: u8) -> FreeMor {
    let main = seq(vec![
        thick_cross(n + 1, 1, n),
        pin(n + 1, 1, n, r as i64),
        travel(n + 1, 0, n),
        dots(n + 1, 0, &[n - r]),
    ]);
    let mut body = main;
    if n % 2 == t as usize % 2 {
        body = body.sub(&correction(n, r)).expect("same shape");
    }
    seq(vec![body, rho_top(n)]).scale_int(sign(r))
}

fn f_rn(n: usize, r: usize, t: u8) -> FreeMor {
    if r == 0 {
        return FreeMor::zero(n + 1, n + 1);
    }
    let mut body = capped(n, r, r as i64 - 1);
    if n % 2 == t as usize % 2 {
        body = body.sub(&correction(n, r)).expect("same shape");
    }
    seq(vec![body, rho_top(n)]).scale_int(sign(r - 1))
}

fn u_rn(n: usize, r: usize) -> FreeMor {
    seq(vec![
        thick_cross(n + 1, 1, n),
        dots(n + 1, 1, &varpi_rho(n, r)),
        thick_cross(n + 1, 0, n + 1),
        dots(n + 1, 0, &rho(n + 1)),
    ])
    .scale_int(sign(r))
}

fn v_rn(n: usize, r: usize) -> FreeMor {
    let mut counts = vec![n - r];
    counts.extend(rho(n));
    seq(vec![thick_cross(n + 1, 0, n + 1), dots(n + 1, 0, &counts)])
}

fn x_sn(n: usize, s: usize, t: u8) -> FreeMor {
    let k = n - 1;
    let first = seq(vec![
        thick_cross(n + 1, 1, n),
        gen(n + 1, 0, Gen::Cap),
        dots(k, 0, &varpi_rho(k, s - 1)),
        thick_cross(k, 0, k),
        dots(k, 0, &rho(k)),
    ])
    .scale_int(sign(s - 1));
    if n % 2 != t as usize % 2 || s < 2 {
        return first;
    }
    let second = seq(vec![
        thick_cross(n + 1, 2, n - 1),
        gen(n + 1, 1, Gen::Cap),
        dots(k, 1, &varpi_rho(k - 1, s - 2)),
        thick_cross(k, 0, k),
        dots(k, 0, &rho(k)),
    ])
    .scale_int(sign(s));
    first.add(&second).expect("same shape")
}

fn y_sn(n: usize, s: usize) -> FreeMor {
    let mut counts = vec![n - s];
    counts.extend(rho(n));
    seq(vec![
        gen(n - 1, 0, Gen::Cup),
        thick_cross(n + 1, 1, n),
        dots(n + 1, 0, &counts),
    ])
}

/// The named element with parameters `n` and `r` (or `s`) for bubble parameter `t`.
pub fn named_element(name: Named, n: usize, r: usize, t: u8) -> Result<FreeMor, NbError> {
    let bad = || NbError::Unsupported {
        name: name.to_string(),
        n,
        r,
    };
    if n > 3 {
        return Err(bad());
    }
    Ok(match name {
        Named::E => idempotent(n),
        Named::Er if r <= n => e_rn(n, r, t),
        Named::F if r <= n => f_rn(n, r, t),
        Named::U if r <= n => u_rn(n, r),
        Named::V if r <= n => v_rn(n, r),
        Named::W if r <= n => {
            let u = u_rn(n, r);
            u.sub(&u.compose(&v_rn(n, 0))?)?
        }
        Named::X if (1..=n).contains(&r) => x_sn(n, r, t),
        Named::Y if (1..=n).contains(&r) => y_sn(n, r),
        _ => return Err(bad()),
    })
}

/// `e_{r,n}` in the alternative form with `varpi_r + rho` in place of the pin.
pub fn e_rn_alternative(n: usize, r: usize) -> FreeMor {
    let mut counts = vec![n - r];
    counts.extend(rho(n));
    seq(vec![
        thick_cross(n + 1, 1, n),
        dots(n + 1, 1, &varpi_rho(n, r)),
        thick_cross(n + 1, 0, n + 1),
        dots(n + 1, 0, &counts),
    ])
    .scale_int(sign(r))
}

/// `B * e_n`: a strand to the left of `e_n`.
pub fn b_star_e(n: usize) -> FreeMor {
    idempotent(n).pad(1, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_elements_have_expected_words() {
        assert_eq!(idempotent(1), FreeMor::identity(1));
        assert_eq!(idempotent(2).to_string(), "(1) [2>2: x0 d0]");
        let e01 = named_element(Named::Er, 1, 0, 0).unwrap();
        assert_eq!(e01.to_string(), "(1) [2>2: x0 d0]");
        let f11 = named_element(Named::F, 1, 1, 1).unwrap();
        assert_eq!(f11.to_string(), "(1) [2>2: a0 u0]");
    }

    #[test]
    fn degrees() {
        for n in 1..=3 {
            for r in 0..=n {
                let v = named_element(Named::V, n, r, 0).unwrap();
                assert_eq!(v.homogeneous_degree(), Some(-2 * r as i64));
            }
            for s in 1..=n {
                let y = named_element(Named::Y, n, s, 0).unwrap();
                assert_eq!(y.homogeneous_degree(), Some(2 * (n - s) as i64));
            }
        }
    }
}
