use nilbrauer::{relation_generators, Engine, FreeMor, Gen, Mirror};
use proptest::prelude::*;

fn w(n: usize, s: &[(usize, Gen)]) -> FreeMor {
    FreeMor::slices(n, s).unwrap()
}

#[test]
fn reflection_examples() {
    let dot = w(1, &[(0, Gen::Dot)]);
    assert_eq!(dot.apply(Mirror::R), dot.scale_int(-1));
    assert_eq!(
        w(2, &[(0, Gen::Cap)]).apply(Mirror::T),
        w(0, &[(0, Gen::Cup)])
    );
    let f = w(3, &[(0, Gen::Dot), (1, Gen::Cross), (0, Gen::Cap)]);
    assert_eq!(f.apply(Mirror::R).apply(Mirror::R), f);
    assert_eq!(f.apply(Mirror::T).apply(Mirror::T), f);
    // Left-right mirror of a dot on the left strand sits on the right strand.
    assert_eq!(
        w(2, &[(0, Gen::Dot)]).apply(Mirror::R),
        w(2, &[(1, Gen::Dot)]).scale_int(-1)
    );
}

#[test]
fn reflected_relations_vanish() {
    for t in 0..2u8 {
        let mut e = Engine::new(t);
        for (name, rel) in relation_generators(t) {
            for m in [Mirror::R, Mirror::T] {
                let nf = e.normal_form(&rel.apply(m));
                assert!(nf.is_zero() && !nf.stuck, "t={t} {m:?} {name}: {nf}");
            }
        }
    }
}

fn arb_word(n: usize) -> impl Strategy<Value = FreeMor> {
    (any::<u64>(), 0usize..6).prop_map(move |(seed, len)| {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        FreeMor::word(nilbrauer::random_word(&mut rng, n, len, n + 2))
    })
}

proptest! {
    #[test]
    fn degrees_add(a in arb_word(2), b in arb_word(1)) {
        let (da, db) = (a.homogeneous_degree().unwrap(), b.homogeneous_degree().unwrap());
        prop_assert_eq!(a.tensor(&b).homogeneous_degree(), Some(da + db));
        let top = FreeMor::identity(a.target);
        prop_assert_eq!(top.compose(&a).unwrap().homogeneous_degree(), Some(da));
        let r = a.apply(Mirror::R);
        prop_assert_eq!(r.homogeneous_degree(), Some(da));
    }

    #[test]
    fn relation_instances_vanish(seed in any::<u64>(), which in 0usize..9, t in 0u8..2) {
        let (name, rel) = relation_generators(t).swap_remove(which);
        let inst = nilbrauer::random_instance(&rel, seed, 5, 5);
        let nf = Engine::new(t).normal_form(&inst);
        prop_assert!(nf.is_zero() && !nf.stuck, "{}: {}", name, nf);
    }

    #[test]
    fn normal_form_is_linear(a in arb_word(2), b in arb_word(2), t in 0u8..2) {
        prop_assume!(a.target == b.target);
        let mut e = Engine::new(t);
        let lhs = e.normal_form(&a.add(&b).unwrap().sub(&b).unwrap());
        let rhs = e.normal_form(&a);
        prop_assert_eq!(lhs.coordinates(), rhs.coordinates());
    }
}
