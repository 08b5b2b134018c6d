use num_traits::Zero;
use petrie_core::oracle::{from_polynomial, multiply_oracle, to_polynomial};
use petrie_core::symfunc::{alpha_eval, coeff, hall, jacobi_trudi_e, skew_apply};
use petrie_core::{partitions_of, Basis, Coeff, Partition, SymFunc};
use proptest::prelude::*;

fn up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|i| partitions_of(i, None)).collect()
}

#[test]
fn basis_round_trips() {
    for lambda in up_to(8) {
        for from in Basis::ALL {
            let f = SymFunc::gen(from, lambda.clone());
            for to in Basis::ALL {
                let there = f.to_basis(to);
                assert_eq!(there.basis(), to);
                assert_eq!(there.to_basis(from), f, "{from} -> {to} -> {from} on {lambda:?}");
            }
        }
    }
}

#[test]
fn conversions_agree_with_polynomials() {
    for lambda in up_to(6) {
        for basis in Basis::ALL {
            let f = SymFunc::gen(basis, lambda.clone());
            let d = lambda.size();
            let via_poly = from_polynomial(&to_polynomial(&f, d), d, d);
            assert_eq!(f.to_basis(Basis::M), via_poly, "{basis} {lambda:?}");
        }
    }
}

#[test]
fn multiplication_matches_oracle() {
    let gens = up_to(8);
    for a in &gens {
        for b in &gens {
            if a.size() + b.size() > 8 || a > b {
                continue;
            }
            for (ba, bb) in [(Basis::S, Basis::S), (Basis::M, Basis::M), (Basis::P, Basis::E), (Basis::H, Basis::S), (Basis::M, Basis::P)] {
                let f = SymFunc::gen(ba, a.clone());
                let g = SymFunc::gen(bb, b.clone());
                let fast = f.multiply(&g).to_basis(Basis::M);
                assert_eq!(fast, multiply_oracle(&f, &g), "{ba}{a:?} * {bb}{b:?}");
            }
        }
    }
}

#[test]
fn newton_truncation() {
    for d in 1..=10i64 {
        let mut total = SymFunc::zero(Basis::H);
        for i in 0..=d {
            let term = SymFunc::e(i).to_basis(Basis::H).multiply(&SymFunc::h(d - i));
            total = if i % 2 == 0 { total.add(&term) } else { total.sub(&term) }.unwrap();
        }
        assert!(total.is_zero(), "d={d}");
    }
}

#[test]
fn hall_duality_symmetry_and_grading() {
    let parts = up_to(8);
    for lambda in &parts {
        let h = SymFunc::gen(Basis::H, lambda.clone());
        for mu in &parts {
            let m = SymFunc::m(mu.clone());
            let expected = coeff((lambda == mu) as i64);
            assert_eq!(hall(&h, &m), expected, "{lambda:?} {mu:?}");
            assert_eq!(hall(&m, &h), expected);
        }
    }
    for lambda in up_to(6) {
        let s = SymFunc::s(lambda.clone());
        let p = SymFunc::gen(Basis::P, lambda.clone());
        for mu in up_to(6) {
            let other = SymFunc::gen(Basis::E, mu.clone());
            assert_eq!(hall(&s, &other), hall(&other, &s));
            assert_eq!(hall(&p, &other), hall(&other, &p));
            if lambda.size() != mu.size() {
                assert!(hall(&s, &other).is_zero());
            }
            assert_eq!(hall(&s, &SymFunc::s(mu.clone())), coeff((lambda == mu) as i64));
        }
    }
}

#[test]
fn jacobi_trudi_forms_agree() {
    for lambda in up_to(8) {
        let dual = jacobi_trudi_e(&lambda);
        assert_eq!(dual, SymFunc::s(lambda.transpose()).to_basis(Basis::H), "{lambda:?}");
    }
}

#[test]
fn skewing_is_adjoint_to_multiplication() {
    for lambda in up_to(7) {
        let s_lambda = SymFunc::s(lambda.clone());
        for mu in up_to(lambda.size()) {
            let skewed = skew_apply(&SymFunc::s(mu.clone()), &s_lambda);
            for nu in partitions_of(lambda.size().saturating_sub(mu.size()), None) {
                let s_nu = SymFunc::s(nu.clone());
                let left = hall(&s_nu, &skewed);
                let right = hall(&SymFunc::s(mu.clone()).multiply(&s_nu), &s_lambda);
                assert_eq!(left, right, "{lambda:?} {mu:?} {nu:?}");
            }
        }
    }
}

#[test]
fn alpha_is_multiplicative() {
    let gens = up_to(8);
    for k in 1..=5 {
        for a in &gens {
            for b in &gens {
                if a.size() + b.size() > 8 {
                    continue;
                }
                let f = SymFunc::gen(Basis::H, a.clone());
                let g = SymFunc::gen(Basis::H, b.clone());
                assert_eq!(alpha_eval(k, &f.multiply(&g)), alpha_eval(k, &f) * alpha_eval(k, &g));
            }
        }
    }
}

#[test]
fn json_round_trip_is_exact() {
    let f = SymFunc::p(3).to_basis(Basis::S).scale(&(coeff(3) / coeff(4)));
    let text = serde_json::to_string(&f).unwrap();
    let back: SymFunc = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

fn arb_symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    let basis = prop::sample::select(Basis::ALL.to_vec());
    let parts = up_to(max_degree);
    let term = (prop::sample::select(parts), -3i64..=3, 1i64..=3);
    (basis, prop::collection::vec(term, 0..4)).prop_map(|(basis, terms)| {
        SymFunc::from_terms(
            basis,
            terms.into_iter().map(|(l, n, d)| (l, Coeff::new(n.into(), d.into()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative_and_distributive(f in arb_symfunc(4), g in arb_symfunc(4), h in arb_symfunc(3)) {
        let g = g.to_basis(f.basis());
        let h = h.to_basis(f.basis());
        prop_assert!(f.multiply(&g).same_as(&g.multiply(&f)));
        let left = f.multiply(&g.add(&h).unwrap());
        let right = f.multiply(&g).add(&f.multiply(&h)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conversion_is_linear(f in arb_symfunc(5), g in arb_symfunc(5), target in prop::sample::select(Basis::ALL.to_vec())) {
        let g = g.to_basis(f.basis());
        let sum = f.add(&g).unwrap().to_basis(target);
        prop_assert_eq!(sum, f.to_basis(target).add(&g.to_basis(target)).unwrap());
    }

    #[test]
    fn display_json_and_sameness(f in arb_symfunc(5)) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SymFunc>(&text).unwrap(), f.clone());
        for basis in Basis::ALL {
            prop_assert!(f.same_as(&f.to_basis(basis)));
        }
    }
}
