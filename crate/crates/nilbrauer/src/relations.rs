//! Defining relations and random instances of them.

use qseries::{BigInt, BigRational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::word::{FreeMor, Gen, GenWord, Slice};

fn w(n: usize, s: &[(usize, Gen)]) -> FreeMor {
    FreeMor::slices(n, s).expect("relation words are well formed")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The defining relations, each as a combination that must vanish.
pub fn relation_generators(t: u8) -> Vec<(&'static str, FreeMor)> {
    use Gen::*;
    let sub = |a: FreeMor, b: FreeMor| a.sub(&b).expect("same shape");
    let add = |a: FreeMor, b: FreeMor| a.add(&b).expect("same shape");
    vec![
        ("double crossing", w(2, &[(0, Cross), (0, Cross)])),
        (
            "braid",
            sub(
                w(3, &[(0, Cross), (1, Cross), (0, Cross)]),
                w(3, &[(1, Cross), (0, Cross), (1, Cross)]),
            ),
        ),
        (
            "bubble",
            sub(
                w(0, &[(0, Cup), (0, Cap)]),
                FreeMor::identity(0).scale_int(t as i64 % 2),
            ),
        ),
        (
            "left zigzag",
            sub(w(1, &[(1, Cup), (0, Cap)]), FreeMor::identity(1)),
        ),
        (
            "right zigzag",
            sub(w(1, &[(0, Cup), (1, Cap)]), FreeMor::identity(1)),
        ),
        ("cap after crossing", w(2, &[(0, Cross), (0, Cap)])),
        (
            "pitchfork",
            sub(w(3, &[(1, Cross), (0, Cap)]), w(3, &[(0, Cross), (1, Cap)])),
        ),
        (
            "dot slide",
            add(
                sub(
                    sub(w(2, &[(0, Cross), (0, Dot)]), w(2, &[(1, Dot), (0, Cross)])),
                    FreeMor::identity(2),
                ),
                w(2, &[(0, Cap), (0, Cup)]),
            ),
        ),
        (
            "dot through cap",
            add(w(2, &[(1, Dot), (0, Cap)]), w(2, &[(0, Dot), (0, Cap)])),
        ),
    ]
}

/// A random word on `n` bottom strands with at most `len` slices and at most
/// `max_width` strands at any height.
pub fn random_word(rng: &mut StdRng, n: usize, len: usize, max_width: usize) -> GenWord {
    let mut k = n;
    let mut slices = Vec::new();
    for _ in 0..len {
        let mut options = vec![];
        // Dots and crossings twice as likely as caps and cups.
        if k >= 1 {
            options.extend([Gen::Dot, Gen::Dot]);
        }
        if k >= 2 {
            options.extend([Gen::Cross, Gen::Cross, Gen::Cap]);
        }
        if k + 2 <= max_width {
            options.push(Gen::Cup);
        }
        if options.is_empty() {
            break;
        }
        let g = options[rng.gen_range(0..options.len())];
        let offset = rng.gen_range(0..=k - g.inputs());
        slices.push(Slice::new(offset, g));
        k = k - g.inputs() + g.outputs();
    }
    GenWord::new(n, slices).expect("generated word is valid")
}

/// `after o (left (x) rel (x) right) o before`, with random context of the given size.
pub fn random_instance(rel: &FreeMor, seed: u64, len: usize, max_width: usize) -> FreeMor {
    let mut rng = StdRng::seed_from_u64(seed);
    let left = rng.gen_range(0..=2usize);
    let right = rng.gen_range(0..=2usize);
    let padded = rel.pad(left, right);
    let width = padded.source;
    // A word ending in `width` strands: reflect a random word that starts there.
    let before = random_word(&mut rng, width, len, max_width).reflect_tb();
    let after = random_word(&mut rng, padded.target, len, max_width);
    let mid = padded
        .compose(&FreeMor::term(before, rat(1)))
        .expect("widths agree");
    FreeMor::term(after, rat(1))
        .compose(&mid)
        .expect("widths agree")
}
