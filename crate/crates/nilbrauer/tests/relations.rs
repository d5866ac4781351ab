use nilbrauer::{random_instance, relation_generators, Engine};

#[test]
fn defining_relations_vanish() {
    for t in 0..2u8 {
        let mut e = Engine::new(t);
        for (name, rel) in relation_generators(t) {
            let nf = e.normal_form(&rel);
            assert!(nf.is_zero() && !nf.stuck, "t={t} {name}: {nf}");
        }
    }
}

#[test]
fn random_relation_instances_vanish() {
    for t in 0..2u8 {
        let mut e = Engine::new(t);
        for (i, (name, rel)) in relation_generators(t).into_iter().enumerate() {
            for seed in 0..40u64 {
                let inst = random_instance(&rel, seed * 31 + i as u64, 6, 5);
                let nf = e.normal_form(&inst);
                assert!(
                    nf.is_zero() && !nf.stuck,
                    "t={t} {name} seed {seed}: {inst}\n{nf}"
                );
            }
        }
    }
}
