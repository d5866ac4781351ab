use nilbrauer::{
    idempotent, named_element, with_big_stack, FreeMor, Named, SlotBounds, Verdict, Verifier,
};

#[test]
fn decomposition_holds_for_small_n() {
    for t in 0..2u8 {
        for n in 0..=2usize {
            with_big_stack(move || {
                let mut v = Verifier::new(t, SlotBounds::default(), None);
                let rep = v.verify_idempotents(n).unwrap();
                for c in rep.checks.iter().filter(|c| c.slot.is_some()) {
                    assert!(
                        c.passed() && c.certified,
                        "t={t} n={n} {}: {:?} {}",
                        c.name,
                        c.verdict,
                        c.detail
                    );
                }
                assert!(rep.passed());
            });
        }
    }
}

#[test]
fn n1_idempotents_sum_to_identity() {
    with_big_stack(|| {
        // n = t: e_{0,1}, e_{1,1}, f_{1,1} are orthogonal idempotents summing to the identity.
        let mut v = Verifier::new(1, SlotBounds::default(), None);
        let parts: Vec<FreeMor> = vec![
            named_element(Named::Er, 1, 0, 1).unwrap(),
            named_element(Named::Er, 1, 1, 1).unwrap(),
            named_element(Named::F, 1, 1, 1).unwrap(),
        ];
        let mut sum = FreeMor::zero(2, 2);
        for p in &parts {
            sum = sum.add(p).unwrap();
        }
        let c = v.compare("", "sum", &sum, &FreeMor::identity(2), Verdict::Equal);
        assert_eq!(c.verdict, Verdict::Equal);
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate() {
                let want = if i == j {
                    a.clone()
                } else {
                    FreeMor::zero(2, 2)
                };
                let c = v.compare("", "product", &a.compose(b).unwrap(), &want, Verdict::Equal);
                assert_eq!(c.verdict, Verdict::Equal, "{i} {j}");
            }
        }
    });
}

#[test]
fn n0_is_the_identity_strand() {
    with_big_stack(|| {
        let mut v = Verifier::new(0, SlotBounds::default(), None);
        let e00 = named_element(Named::Er, 0, 0, 0).unwrap();
        let c = v.compare("", "e00", &e00, &FreeMor::identity(1), Verdict::Equal);
        assert_eq!(c.verdict, Verdict::Equal);
        assert_eq!(idempotent(1), FreeMor::identity(1));
    });
}

#[test]
fn derived_relations_hold() {
    for t in 0..2u8 {
        with_big_stack(move || {
            let mut v = Verifier::new(t, SlotBounds::default(), None);
            let rep = v.verify_derived().unwrap();
            let bad: Vec<_> = rep
                .failures()
                .map(|c| format!("{}: {:?} {}", c.name, c.verdict, c.detail))
                .collect();
            assert!(bad.is_empty(), "t={t}: {bad:?}");
        });
    }
}

#[test]
fn central_element_q1_on_two_strands() {
    // q_{1,2} = 2 x_1 + 2 x_2.
    let q = Verifier::central_element(2, 1);
    let dots = |p| {
        FreeMor::slices(2, &[(p, nilbrauer::Gen::Dot)])
            .unwrap()
            .scale_int(2)
    };
    assert_eq!(q, dots(0).add(&dots(1)).unwrap());
    assert_eq!(Verifier::central_element(0, 0), FreeMor::identity(0));
}
