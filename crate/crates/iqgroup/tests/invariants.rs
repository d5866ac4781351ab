use chords::t_recurrence;
use iqgroup::{
    canonical_closed_form, canonical_in_pbw, convert, form_i, form_minus, j_map, mul_b, mul_f,
    pbw_in_canonical, r_op, sesq_form_i, BasisTag, IQElement,
};
use proptest::prelude::*;
use qseries::{expand, RationalQ};

const BASES: [BasisTag; 3] = [BasisTag::Monomial, BasisTag::Pbw, BasisTag::Canonical];

fn vector(t: u8, basis: BasisTag, n: usize) -> IQElement {
    IQElement::basis_vector(t, basis, n)
}

#[test]
fn conversions_round_trip() {
    for t in 0..2 {
        for n in 0..=10 {
            for from in BASES {
                let e = vector(t, from, n);
                for via in BASES {
                    assert_eq!(
                        convert(&convert(&e, via), from),
                        e,
                        "t={t} n={n} {from}->{via}"
                    );
                    for to in BASES {
                        assert_eq!(convert(&convert(&e, via), to), convert(&e, to));
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_and_pbw_transitions_are_inverse() {
    for t in 0..2u8 {
        for n in 0..=10usize {
            for k in 0..=n / 2 {
                // sum_{a+b=k} canonical_in_pbw(n, a) * pbw_in_canonical(n - 2a, b) = delta_{k,0}
                let mut acc = RationalQ::zero();
                for a in 0..=k {
                    acc += &(&canonical_in_pbw(n, a, t) * &pbw_in_canonical(n - 2 * a, k - a, t));
                }
                assert_eq!(acc.is_one(), k == 0);
                assert!(k == 0 || acc.is_zero(), "t={t} n={n} k={k}");
            }
        }
    }
}

#[test]
fn closed_form_matches_recurrence() {
    for t in 0..2 {
        let mut p_prev = IQElement::zero(t, BasisTag::Monomial);
        let mut p_cur = vector(t, BasisTag::Monomial, 0);
        assert_eq!(canonical_closed_form(0, t), p_cur);
        for n in 0..8usize {
            // P_{n+1} = (B P_n - delta_{n = t} [n] P_{n-1}) / [n+1]
            let mut next = mul_b(&p_cur);
            if n % 2 == t as usize && n >= 1 {
                next = next.add(&p_prev.scale(&-iqgroup::quantum_int(n)));
            }
            let next = next.scale(&iqgroup::quantum_int(n + 1).inv().unwrap());
            assert_eq!(canonical_closed_form(n + 1, t), next, "t={t} n={}", n + 1);
            p_prev = p_cur;
            p_cur = next;
        }
    }
}

#[test]
fn mul_b_commutes_with_conversion() {
    for t in 0..2 {
        for n in 0..8 {
            for from in BASES {
                let e = vector(t, from, n);
                for to in BASES {
                    assert_eq!(convert(&mul_b(&e), to), mul_b(&convert(&e, to)));
                }
            }
        }
    }
}

#[test]
fn j_intertwines_b_with_f_plus_r() {
    for t in 0..2 {
        for m in 0..=8 {
            let e = vector(t, BasisTag::Monomial, m);
            let je = j_map(&e);
            assert_eq!(j_map(&mul_b(&e)), mul_f(&je).add(&r_op(&je)));
        }
    }
}

#[test]
fn j_is_an_isometry() {
    for t in 0..2 {
        for a in 0..=6 {
            for b in 0..=6 {
                let x = vector(t, BasisTag::Monomial, a);
                let y = vector(t, BasisTag::Monomial, b);
                assert_eq!(form_i(&x, &y).unwrap(), form_minus(&j_map(&x), &j_map(&y)));
            }
        }
    }
}

#[test]
fn monomial_forms_match_chord_count() {
    for m in 0..=10usize {
        for n in 0..=(10 - m) {
            let v = form_i(
                &vector(0, BasisTag::Monomial, m),
                &vector(0, BasisTag::Monomial, n),
            )
            .unwrap();
            if (m + n) % 2 == 1 {
                assert!(v.is_zero());
                continue;
            }
            let f = (m + n) / 2;
            let expected = &RationalQ::from_laurent(t_recurrence(f, 0).poly.subst_pow(2))
                * &RationalQ::inv_one_minus_q_pow(-2).pow(f as i32);
            assert_eq!(v, expected, "m={m} n={n}");
        }
    }
}

#[test]
fn canonical_basis_is_almost_orthonormal() {
    for t in 0..2 {
        for m in 0..=6 {
            for n in 0..=6 {
                let v = sesq_form_i(
                    &vector(t, BasisTag::Canonical, m),
                    &vector(t, BasisTag::Canonical, n),
                )
                .unwrap();
                let d = if m == n {
                    RationalQ::one()
                } else {
                    RationalQ::zero()
                };
                let s = expand(&(&v - &d), 20).unwrap();
                assert!(s.terms().all(|(e, _)| e < 0), "t={t} m={m} n={n}: {s}");
            }
        }
    }
}

#[test]
fn p1_norm_is_geometric() {
    let v = sesq_form_i(
        &vector(0, BasisTag::Canonical, 1),
        &vector(0, BasisTag::Canonical, 1),
    )
    .unwrap();
    assert_eq!(
        expand(&v, 4).unwrap().to_string(),
        "1 + q^-2 + q^-4 + q^-6 + O(q^-8)"
    );
}

proptest! {
    #[test]
    fn form_is_bilinear_and_symmetric(
        t in 0u8..2,
        a in prop::collection::vec(-3i64..4, 1..6),
        b in prop::collection::vec(-3i64..4, 1..6),
        basis in 0usize..3,
    ) {
        let mk = |v: &[i64]| IQElement::new(t, BASES[basis], v.iter().map(|&c| RationalQ::from_int(c)).collect());
        let x = mk(&a);
        let y = mk(&b);
        prop_assert_eq!(form_i(&x, &y).unwrap(), form_i(&y, &x).unwrap());
        let two = RationalQ::from_int(2);
        prop_assert_eq!(form_i(&x.scale(&two), &y).unwrap(), &two * &form_i(&x, &y).unwrap());
        prop_assert_eq!(form_i(&x.add(&x), &y).unwrap(), &two * &form_i(&x, &y).unwrap());
    }
}
