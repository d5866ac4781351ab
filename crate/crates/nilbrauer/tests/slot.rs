use nilbrauer::*;

fn word(n: usize, s: &[(usize, Gen)]) -> FreeMor {
    FreeMor::slices(n, s).unwrap()
}

#[test]
fn spec_slot_examples() {
    for t in 0..2u8 {
        for (m, n, d, l, dim) in [(1, 1, 0, 4, 1), (1, 1, 2, 6, 2), (0, 2, 0, 4, 1)] {
            let s = build_slot(m, n, d, l, t).unwrap();
            assert_eq!(s.quotient_dim, dim, "{s:?}");
            assert!(s.certified, "{s:?}");
        }
    }
}

#[test]
fn equality_verdicts() {
    let mut e = Engine::new(0);
    let bounds = SlotBounds::default();
    let s22 = build_slot_with(&mut e, 2, 2, -4, &bounds).unwrap();
    let xx = word(2, &[(0, Gen::Cross), (0, Gen::Cross)]);
    assert_eq!(
        eq_mod_relations(&mut e, &xx, &FreeMor::zero(2, 2), &s22).unwrap(),
        Verdict::Equal
    );
    let s11 = build_slot_with(&mut e, 1, 1, 2, &bounds).unwrap();
    let dot = word(1, &[(0, Gen::Dot)]);
    assert_eq!(
        eq_mod_relations(&mut e, &dot, &FreeMor::zero(1, 1), &s11).unwrap(),
        Verdict::NotEqual
    );
    assert!(matches!(
        eq_mod_relations(&mut e, &xx, &FreeMor::zero(2, 2), &s11),
        Err(NbError::SignatureMismatch(_))
    ));
}

#[test]
fn curl_and_pitchfork_are_equal_to_zero_or_each_other() {
    let mut e = Engine::new(1);
    let b = SlotBounds::default();
    let s = build_slot_with(&mut e, 1, 1, -2, &b).unwrap();
    let curl = word(1, &[(1, Gen::Cup), (0, Gen::Cross), (1, Gen::Cap)]);
    assert_eq!(
        eq_mod_relations(&mut e, &curl, &FreeMor::zero(1, 1), &s).unwrap(),
        Verdict::Equal
    );
    let s31 = build_slot_with(&mut e, 1, 3, -2, &b).unwrap();
    let p1 = word(3, &[(1, Gen::Cross), (0, Gen::Cap)]);
    let p2 = word(3, &[(0, Gen::Cross), (1, Gen::Cap)]);
    assert_eq!(
        eq_mod_relations(&mut e, &p1, &p2, &s31).unwrap(),
        Verdict::Equal
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut e = Engine::new(0);
    let b = SlotBounds::default();
    let s = load_or_build(Some(dir.path()), &mut e, 2, 0, 0, &b).unwrap();
    assert!(cache_path(dir.path(), 2, 0, 0, b.l, 0).exists());
    assert_eq!(load_cached(dir.path(), 2, 0, 0, b.l, 0), Some(s));
}

#[test]
fn bound_error_names_the_slot() {
    let r = build_slot(4, 4, 0, 14, 0);
    assert!(matches!(
        r,
        Err(NbError::BoundExceeded {
            m: 4,
            n: 4,
            d: 0,
            ..
        })
    ));
}
