use characters::predicted_homdim;
use nilbrauer::{basis_keys, basis_word, key_gamma, Engine};
use qseries::BigInt;

#[test]
fn basis_words_reduce_to_their_keys() {
    for t in 0..2u8 {
        let mut e = Engine::new(t);
        for (n, m) in [
            (1, 1),
            (2, 0),
            (0, 2),
            (2, 2),
            (3, 1),
            (1, 3),
            (4, 0),
            (3, 3),
        ] {
            for d in -4..=4i64 {
                for key in basis_keys(n, m, d) {
                    let w = basis_word(n, m, &key, t);
                    let nf = e.normal_form(&w);
                    assert!(!nf.stuck, "stuck {n}->{m} {}", key.0);
                    assert_eq!(
                        nf.terms.len(),
                        1,
                        "{n}->{m} t={t} {} {:?}: {nf}",
                        key.0,
                        key.1
                    );
                    assert_eq!(
                        nf.terms.get(&key.0),
                        Some(&key_gamma(&key)),
                        "{n}->{m} t={t} {}: {nf}",
                        key.0
                    );
                }
            }
        }
    }
}

#[test]
fn key_counts_match_graded_dimension() {
    for (n, m) in [
        (0, 0),
        (1, 1),
        (2, 0),
        (0, 2),
        (2, 2),
        (3, 1),
        (4, 0),
        (3, 3),
    ] {
        for d in -8..=6i64 {
            let k = basis_keys(n, m, d).len();
            assert_eq!(
                BigInt::from(k),
                predicted_homdim(m, n, d),
                "{n}->{m} degree {d}"
            );
        }
    }
}
