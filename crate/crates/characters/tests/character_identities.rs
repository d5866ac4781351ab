use characters::{
    ch_irreducible, ch_irreducible_sum_form, ch_proper_standard, decomposition_number,
    gamma_dimension, hom_dimension, projective_multiplicity, standard_flag_multiplicity, Character,
};
use iqgroup::{convert, quantum_factorial, quantum_int, BasisTag, IQElement};
use qseries::{BigInt, RationalQ};

#[test]
fn product_and_sum_forms_agree() {
    for t in 0..2 {
        for n in 0..=5 {
            let p = ch_irreducible(n, t, 12, 12);
            let s = ch_irreducible_sum_form(n, t, 12, 12);
            assert_eq!(p, s, "t={t} n={n}");
            assert!(p.has_nonnegative_polynomial_coeffs());
        }
    }
}

#[test]
fn proper_standard_is_sum_of_irreducibles() {
    for t in 0..2 {
        for n in 0..=5usize {
            let lhs = ch_proper_standard(n, t, 10, 12);
            let mut rhs = Character::zero(10, 12);
            let mut m = 0;
            while n + 2 * m < 10 {
                rhs = rhs.add(
                    &ch_irreducible(n + 2 * m, t, 10, 12).scale(&decomposition_number(n, m, t)),
                );
                m += 1;
            }
            assert_eq!(lhs, rhs, "t={t} n={n}");
        }
    }
}

#[test]
fn branching_rule() {
    for t in 0..2u8 {
        for n in 0..=5usize {
            let lhs = ch_irreducible(n, t, 14, 12).apply_b();
            let mut rhs = Character::zero(13, 12);
            if n >= 1 {
                rhs = rhs.add(&ch_irreducible(n - 1, t, 13, 12).scale(&quantum_int(n)));
            }
            if n % 2 != t as usize {
                rhs = rhs.add(&ch_irreducible(n + 1, t, 13, 12).scale(&quantum_int(n + 1)));
            }
            assert_eq!(lhs, rhs, "t={t} n={n}");
        }
    }
}

#[test]
fn irreducible_recursions() {
    for t in 0..2u8 {
        for n in 1..=5usize {
            let prev = ch_irreducible(n - 1, t, 11, 12)
                .mul_xi()
                .scale(&quantum_int(n));
            let expected = if n % 2 == t as usize {
                prev
            } else {
                let c = &quantum_int(n + 1) * &quantum_int(n + 1);
                prev.div_one_minus_xi2(&c)
            };
            assert!(
                ch_irreducible(n, t, 12, 12).agrees_with(&expected),
                "t={t} n={n}"
            );
        }
    }
}

#[test]
fn projective_multiplicities_reconstruct_powers() {
    for t in 0..2 {
        for n in 0..=8usize {
            let mut coeffs = vec![RationalQ::zero(); n + 1];
            for m in 0..=n / 2 {
                let mult = projective_multiplicity(n, m, t);
                assert!(mult.is_nonnegative());
                coeffs[n - 2 * m] = RationalQ::from_laurent(mult);
            }
            let via_p = IQElement::new(t, BasisTag::Canonical, coeffs);
            let b_n = IQElement::basis_vector(t, BasisTag::Monomial, n);
            assert_eq!(convert(&via_p, BasisTag::Monomial), b_n, "t={t} n={n}");
            assert_eq!(convert(&b_n, BasisTag::Canonical), via_p);
        }
    }
}

#[test]
fn b_squared_in_canonical_basis() {
    let two = RationalQ::from_laurent(quantum_factorial(2));
    let b2 = |t| {
        convert(
            &IQElement::basis_vector(t, BasisTag::Monomial, 2),
            BasisTag::Canonical,
        )
    };
    assert_eq!(
        b2(1),
        IQElement::new(
            1,
            BasisTag::Canonical,
            vec![RationalQ::one(), RationalQ::zero(), two.clone()]
        )
    );
    assert_eq!(
        b2(0),
        IQElement::new(
            0,
            BasisTag::Canonical,
            vec![RationalQ::zero(), RationalQ::zero(), two]
        )
    );
}

/// Counts partitions of `k` into parts from `parts`.
fn partition_count(k: usize, parts: &[usize]) -> u64 {
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &p in parts {
        for j in p..=k {
            ways[j] += ways[j - p];
        }
    }
    ways[k]
}

#[test]
fn gamma_counts_odd_monomials() {
    let g = gamma_dimension(15);
    for k in 0..15usize {
        // Monomials in q_1, q_3, q_5, ... of degree 2k are partitions of k into odd parts.
        let odd: Vec<usize> = (1..=k).step_by(2).collect();
        let c = g.coeff(-2 * k as i64).unwrap();
        assert_eq!(c.to_integer(), BigInt::from(partition_count(k, &odd)));
        assert!(g.coeff(-2 * k as i64 - 1).unwrap() == qseries::rat(0));
    }
}

#[test]
fn standard_flag_counts_symmetric_polynomials() {
    for n in 0..=4usize {
        let s = standard_flag_multiplicity(n, 12);
        let g = gamma_dimension(12);
        for k in 0..12usize {
            // Symmetric polynomials in n variables of degree 2j: partitions of j into parts <= n.
            let parts: Vec<usize> = (1..=n).collect();
            let mut expected = 0u64;
            for j in 0..=k {
                let gamma_part = g.coeff(-2 * (k - j) as i64).unwrap().to_integer();
                expected += partition_count(j, &parts) * u64::try_from(gamma_part).unwrap();
            }
            assert_eq!(
                s.coeff(-2 * k as i64).unwrap().to_integer(),
                BigInt::from(expected)
            );
        }
    }
}

#[test]
fn hom_dimensions_are_nonnegative_integers() {
    for m in 0..=4 {
        for n in 0..=4 {
            let h = hom_dimension(m, n, 0, 10);
            for (_, c) in h.terms() {
                assert!(c.is_integer() && *c >= qseries::rat(0));
            }
        }
    }
}
