use petrie_core::oracle::multiply_oracle;
use petrie_core::petrie::{
    is_petrie_matrix, pet_alpha, pet_det, pet_det_padded, pet_explicit, petrie_g, petrie_matrix,
    petrie_via_frobenius, pieri_expand, VanishingReason,
};
use petrie_core::hopf::v_map;
use petrie_core::symfunc::mul_power_sum;
use petrie_core::verify::g_times;
use petrie_core::{partitions_of, Basis, Partition, SymFunc};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|i| partitions_of(i, None)).collect()
}

#[test]
fn pet_routes_agree_and_stay_in_range() {
    let lambdas = up_to(8);
    let mus = up_to(6);
    for k in 1..=5 {
        for lambda in &lambdas {
            for mu in &mus {
                let det = pet_det(k, lambda, mu);
                assert!((-1..=1).contains(&det), "k={k} {lambda:?} {mu:?}");
                assert_eq!(det, pet_alpha(k, lambda, mu), "k={k} {lambda:?} {mu:?}");
                let l = lambda.len().max(mu.len());
                assert!(is_petrie_matrix(&petrie_matrix(k, lambda, mu, l)));
            }
            assert_eq!(pet_det(k, lambda, &Partition::empty()), pet_explicit(k, lambda).0);
        }
    }
}

#[test]
fn padding_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let lambdas = up_to(10);
    let mus = up_to(6);
    for _ in 0..200 {
        let k = rng.gen_range(1..=6);
        let lambda = lambdas.choose(&mut rng).unwrap();
        let mu = mus.choose(&mut rng).unwrap();
        let l = lambda.len().max(mu.len());
        assert_eq!(
            pet_det_padded(k, lambda, mu, l),
            pet_det_padded(k, lambda, mu, l + 3),
            "k={k} {lambda:?} {mu:?}"
        );
    }
}

#[test]
fn explicit_formula_reports_its_clause() {
    let (value, data) = pet_explicit(2, &Partition::from_parts(vec![2]));
    assert_eq!((value, data.vanishing_reason), (0, VanishingReason::MuKNonzero));
    let (value, data) = pet_explicit(3, &Partition::from_parts(vec![2, 2]));
    assert_eq!((value, data.gamma, data.g), (1, vec![1, 3], 1));
    let mut seen = Vec::new();
    for k in 1..=6 {
        for lambda in up_to(10) {
            let (value, data) = pet_explicit(k, &lambda);
            assert_eq!(value == 0, data.vanishing_reason != VanishingReason::None, "k={k} {lambda:?}");
            if !seen.contains(&data.vanishing_reason) {
                seen.push(data.vanishing_reason);
            }
        }
    }
    assert_eq!(seen.len(), 3);
}

#[test]
fn pieri_rule_matches_oracle() {
    for k in 1..=4 {
        for m in 0..=6 {
            let g = petrie_g(k, m);
            for mu in up_to(4) {
                let rule = pieri_expand(k, m, &mu);
                assert!(rule.has_unit_coefficients());
                assert_eq!(rule.to_basis(Basis::M), multiply_oracle(&g, &SymFunc::s(mu.clone())), "k={k} m={m} {mu:?}");
            }
        }
    }
}

#[test]
fn g_four_ways() {
    for k in 1..=5 {
        for m in 0..=8 {
            let g = petrie_g(k, m);
            assert_eq!(pieri_expand(k, m, &Partition::empty()).to_basis(Basis::M), g);
            assert_eq!(petrie_via_frobenius(k, m).to_basis(Basis::M), g);
            assert_eq!(v_map(k, &SymFunc::h(m as i64)).to_basis(Basis::M), g);
        }
    }
}

#[test]
fn g_is_the_bounded_monomial_sum() {
    for k in 1..=4 {
        for m in 0..=6 {
            let g = petrie_g(k, m);
            let expected = partitions_of(m, None).into_iter().filter(|l| l.first() < k);
            let expected = SymFunc::from_terms(Basis::M, expected.map(|l| (l, petrie_core::symfunc::coeff(1))));
            assert_eq!(g, expected);
        }
    }
}

#[test]
fn power_sum_scan_route_matches_conversion() {
    for k in 1..=11 {
        for m in 0..=12 - k {
            let strips = mul_power_sum(&pieri_expand(k, m, &Partition::empty()), 2);
            assert_eq!(strips, g_times(k, m, &SymFunc::p(2)), "k={k} m={m}");
        }
    }
}
