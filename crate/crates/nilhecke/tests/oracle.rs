use nilhecke::{
    check_center, check_demazure_relations, check_faithfulness, check_highest_weight,
    check_idempotents, check_ln_dimension, random_element, test_polynomials, NHElement,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn straightening_matches_operator_composition() {
    let r = check_faithfulness(200, 4, 2024);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn idempotents_up_to_five() {
    assert!(check_idempotents(5).passed);
}

#[test]
fn irreducible_dimension_is_quantum_factorial() {
    assert!(check_ln_dimension(5).passed);
}

#[test]
fn highest_weight_vector() {
    assert!(check_highest_weight(4).passed);
}

#[test]
fn demazure_relations_to_degree_eight() {
    let r = check_demazure_relations(4, 8);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn symmetric_polynomials_are_central() {
    assert!(check_center(4).passed);
}

#[test]
fn tau_squared_vanishes() {
    for n in 2..=4 {
        for i in 1..n {
            let t = NHElement::tau(n, i);
            assert!(t.multiply(&t).unwrap().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn multiplication_is_associative(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_element(&mut rng, n);
        let b = random_element(&mut rng, n);
        let c = random_element(&mut rng, n);
        let l = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn action_is_a_module_map(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_element(&mut rng, n);
        let b = random_element(&mut rng, n);
        let s = a.add(&b).unwrap();
        for f in test_polynomials(n) {
            let lhs = s.act(&f).unwrap();
            let rhs = &a.act(&f).unwrap() + &b.act(&f).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
