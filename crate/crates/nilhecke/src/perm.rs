//! Permutations in one-line notation and their reduced words.

/// A permutation of `1..=n` as the one-line vector `w(1), ..., w(n)`.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (1..=n as u8).collect()
}

/// The longest element `w_n = n, n-1, ..., 1`.
pub fn longest(n: usize) -> Perm {
    (1..=n as u8).rev().collect()
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// `s_i w`: swaps the values `i` and `i+1`.
pub fn left_mul(i: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&v| {
            if v as usize == i {
                v + 1
            } else if v as usize == i + 1 {
                v - 1
            } else {
                v
            }
        })
        .collect()
}

/// `w s_i`: swaps positions `i` and `i+1`.
pub fn right_mul(w: &[u8], i: usize) -> Perm {
    let mut v = w.to_vec();
    v.swap(i - 1, i);
    v
}

/// The lexicographically smallest reduced word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = w.to_vec();
    while length(&cur) > 0 {
        // Smallest left descent i: s_i cur is shorter.
        let i = (1..cur.len())
            .find(|&i| length(&left_mul(i, &cur)) < length(&cur))
            .expect("non-identity has a descent");
        word.push(i);
        cur = left_mul(i, &cur);
    }
    word
}

/// All permutations of `1..=n`.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![Vec::new()];
    for k in 1..=n as u8 {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for w in all_perms(4) {
            let word = reduced_word(&w);
            assert_eq!(word.len(), length(&w));
            let mut p = identity(4);
            for &i in word.iter().rev() {
                p = left_mul(i, &p);
            }
            assert_eq!(p, w);
        }
        assert_eq!(length(&longest(4)), 6);
        assert_eq!(all_perms(4).len(), 24);
    }

    #[test]
    fn left_and_right_multiplication() {
        let w = vec![2, 3, 1];
        assert_eq!(left_mul(1, &w), vec![1, 3, 2]);
        assert_eq!(right_mul(&w, 1), vec![3, 2, 1]);
    }
}
