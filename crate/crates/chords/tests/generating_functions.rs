use chords::{
    diagram_count, first_point, t_bruteforce, t_recurrence, theta_i, ChordDiagram, FirstPoint,
    TPoly,
};
use proptest::prelude::*;
use qseries::{BigInt, LaurentPoly};

/// Three tethered and four free chords with eleven crossings.
fn worked_example() -> ChordDiagram {
    ChordDiagram::new(11, &[4, 7, 9], &[(1, 8), (2, 11), (3, 6), (5, 10)]).unwrap()
}

#[test]
fn worked_example_has_eleven_crossings() {
    let d = worked_example();
    assert_eq!(d.num_tethered(), 3);
    assert_eq!(d.num_free(), 4);
    assert_eq!(d.crossings(), 11);
    assert_eq!(first_point(&d), FirstPoint::Free(2));
    let (i, e) = theta_i(&d).unwrap();
    assert_eq!(i, 2);
    assert_eq!(e.crossings(), 9);
    assert_eq!(e.tethered(), vec![3, 6, 7, 8]);
}

#[test]
fn bruteforce_equals_recurrence() {
    for f in 0..=6 {
        for n in 0..=(6 - f) {
            let b = t_bruteforce(f, n).unwrap();
            let r = t_recurrence(f, n);
            assert_eq!(b, r, "f={f} n={n}");
            assert!(r.has_expected_total());
        }
    }
}

#[test]
fn degree_and_leading_coefficient() {
    for f in 0..=4 {
        for n in 0..=4 {
            let t = t_recurrence(f, n);
            assert_eq!(t.poly.max_exp(), Some(TPoly::max_crossings(f, n) as i64));
            assert_eq!(t.poly.leading_coeff(), Some(&BigInt::from(1)));
        }
    }
}

#[test]
fn one_free_chord_is_a_sum_of_q_integers() {
    for n in 1..8usize {
        let mut expected = LaurentPoly::zero();
        for k in 1..=n as i64 {
            expected += &qseries::qbrace(k).unwrap();
        }
        assert_eq!(t_recurrence(1, n - 1).poly, expected);
    }
}

proptest! {
    #[test]
    fn counts_match_closed_formula(f in 0usize..6, n in 0usize..8) {
        let t = t_recurrence(f, n);
        prop_assert_eq!(t.poly.eval_one(), BigInt::from(diagram_count(f, n)));
        prop_assert!(t.poly.is_nonnegative());
    }
}
