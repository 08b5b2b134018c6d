use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::transition::e_in_h;
use super::{add_into, Basis, Coeff, SymFunc};
use crate::partition::Partition;

fn mul_h(a: &SymFunc, b: &SymFunc) -> SymFunc {
    debug_assert!(a.basis == Basis::H && b.basis == Basis::H);
    let mut terms = BTreeMap::new();
    for (k1, c1) in &a.terms {
        for (k2, c2) in &b.terms {
            add_into(&mut terms, k1.concat_sort(k2), c1 * c2);
        }
    }
    SymFunc { basis: Basis::H, terms }
}

/// Determinant of an `n × n` matrix of symmetric functions, returned in the
/// `h` basis.
///
/// Laplace expansion from the bottom row up, memoized on the set of columns
/// already used. Jacobi–Trudi matrices vanish below a staircase, so few
/// column sets are reachable from the bottom.
pub fn symfunc_det(n: usize, entry: impl Fn(usize, usize) -> SymFunc) -> SymFunc {
    assert!(n < 64, "determinant too large");
    let entries: Vec<Vec<SymFunc>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j).to_basis(Basis::H)).collect())
        .collect();

    fn rec(used: u64, n: usize, entries: &[Vec<SymFunc>], memo: &mut HashMap<u64, SymFunc>) -> SymFunc {
        let rows_left = n - used.count_ones() as usize;
        if rows_left == 0 {
            return SymFunc::one(Basis::H);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let row = rows_left - 1;
        let mut acc = SymFunc::zero(Basis::H);
        let mut pos = 0;
        for j in 0..n {
            if used & (1 << j) != 0 {
                continue;
            }
            let a = &entries[row][j];
            if !a.is_zero() {
                let minor = rec(used | (1 << j), n, entries, memo);
                if !minor.is_zero() {
                    let sign = if (row + pos).is_multiple_of(2) { Coeff::one() } else { -Coeff::one() };
                    acc.add_scaled(&sign, &mul_h(a, &minor));
                }
            }
            pos += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }

    rec(0, n, &entries, &mut HashMap::new())
}

pub(crate) fn skew_schur_h(lambda: &Partition, mu: &Partition) -> SymFunc {
    let l = lambda.len().max(mu.len());
    symfunc_det(l, |i, j| {
        let (i, j) = (i + 1, j + 1);
        SymFunc::h(lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64)
    })
}

/// The skew Schur function `s_{λ/μ} = det(h_{λ_i − μ_j − i + j})`, in the
/// Schur basis. Zero unless `μ ⊆ λ`.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> SymFunc {
    skew_schur_h(lambda, mu).to_basis(Basis::S)
}

/// `det(e_{λ_i − i + j})`, which is `s_{λ^t}`. Returned in the `h` basis.
pub fn jacobi_trudi_e(lambda: &Partition) -> SymFunc {
    symfunc_det(lambda.len(), |i, j| {
        let r = lambda.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1);
        if r < 0 {
            return SymFunc::zero(Basis::H);
        }
        SymFunc::from_terms(
            Basis::H,
            e_in_h(&Partition::row(r as usize)).iter().map(|(k, c)| (k.clone(), Coeff::from_integer(c.clone()))),
        )
    })
}

/// Hall inner product, using `(h_λ, m_μ) = δ_{λμ}`.
pub fn hall(f: &SymFunc, g: &SymFunc) -> Coeff {
    let a = f.to_basis(Basis::H);
    let b = g.to_basis(Basis::M);
    let mut total = Coeff::zero();
    for (lambda, c) in &a.terms {
        if let Some(d) = b.terms.get(lambda) {
            total += c * d;
        }
    }
    total
}

/// All `(sort(a), sort(λ − a))` over integer vectors `0 ≤ a ≤ λ`, with
/// repetition. These are the tensor keys of `Δ(h_λ)`.
pub(crate) fn coproduct_splits(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut left = vec![0usize; parts.len()];
    loop {
        let right: Vec<usize> = parts.iter().zip(&left).map(|(p, a)| p - a).collect();
        out.push((Partition::from_parts(left.clone()), Partition::from_parts(right)));
        // odometer increment
        let mut i = 0;
        loop {
            if i == parts.len() {
                return out;
            }
            if left[i] < parts[i] {
                left[i] += 1;
                break;
            }
            left[i] = 0;
            i += 1;
        }
    }
}

/// The skewing operator `f^⊥` applied to `g`, i.e. the adjoint of
/// multiplication by `f` under the Hall inner product. Returned in the basis
/// of `g`.
///
/// Computed as `Σ (f, g_(1)) g_(2)` over the coproduct of `g` in the `h`
/// basis, where `(f, h_α)` is the `m_α` coefficient of `f`.
pub fn skew_apply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let fm = f.to_basis(Basis::M);
    if fm.is_zero() {
        return SymFunc::zero(g.basis);
    }
    let gh = g.to_basis(Basis::H);
    let mut terms = BTreeMap::new();
    for (lambda, c) in &gh.terms {
        for (left, right) in coproduct_splits(lambda) {
            if let Some(d) = fm.terms.get(&left) {
                add_into(&mut terms, right, c * d);
            }
        }
    }
    SymFunc { basis: Basis::H, terms }.to_basis(g.basis)
}

/// The algebra map `α_k` sending `h_i` to `1` for `i < k` and to `0` otherwise.
pub fn alpha_eval(k: usize, f: &SymFunc) -> Coeff {
    f.to_basis(Basis::H)
        .terms
        .iter()
        .filter(|(lambda, _)| lambda.first() < k)
        .fold(Coeff::zero(), |acc, (_, c)| acc + c)
}

/// `f · p_r` in the Schur basis, by adding border strips of size `r`
/// (Murnaghan–Nakayama). Works on beta sets: a strip is a bead moved `r`
/// steps up, signed by the beads it jumps over.
pub fn mul_power_sum(f: &SymFunc, r: usize) -> SymFunc {
    assert!(r >= 1, "power sums start at p_1");
    let f = f.to_basis(Basis::S);
    let mut out = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let len = lambda.len() + r;
        let beads: Vec<usize> = (1..=len).map(|i| lambda.part(i) + len - i).collect();
        for (i, &b) in beads.iter().enumerate() {
            let target = b + r;
            if beads.contains(&target) {
                continue;
            }
            let jumped = beads.iter().filter(|&&x| x > b && x < target).count();
            let mut moved = beads.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts = moved.iter().enumerate().map(|(j, &x)| x + j + 1 - len).collect();
            let term = if jumped % 2 == 0 { c.clone() } else { -c.clone() };
            add_into(&mut out, Partition::from_parts(parts), term);
        }
    }
    SymFunc::from_terms(Basis::S, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::coeff;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn hall_examples() {
        assert_eq!(hall(&SymFunc::h(3), &SymFunc::p(3)), coeff(1));
        assert_eq!(hall(&SymFunc::e(3), &SymFunc::p(3)), coeff(1));
        assert_eq!(hall(&SymFunc::e(4), &SymFunc::p(4)), coeff(-1));
        let s21 = SymFunc::s(p(&[2, 1]));
        assert_eq!(hall(&s21, &s21), coeff(1));
        assert_eq!(hall(&s21, &SymFunc::s(p(&[3]))), coeff(0));
    }

    #[test]
    fn skew_schur_examples() {
        assert!(skew_schur(&p(&[4]), &p(&[1])).same_as(&SymFunc::h(3)));
        assert!(skew_schur(&p(&[2]), &p(&[1, 1])).is_zero());
        assert_eq!(skew_schur(&p(&[2, 1]), &Partition::empty()), SymFunc::s(p(&[2, 1])));
        // s_{(2,1)/(1)} = s_2 + s_11
        assert_eq!(
            skew_schur(&p(&[2, 1]), &p(&[1])),
            SymFunc::from_terms(Basis::S, [(p(&[2]), coeff(1)), (p(&[1, 1]), coeff(1))])
        );
    }

    #[test]
    fn second_jacobi_trudi() {
        assert!(jacobi_trudi_e(&p(&[3])).same_as(&SymFunc::e(3)));
        assert!(jacobi_trudi_e(&p(&[2, 1])).same_as(&SymFunc::s(p(&[2, 1]))));
        assert!(jacobi_trudi_e(&p(&[3, 1])).same_as(&SymFunc::s(p(&[2, 1, 1]))));
    }

    #[test]
    fn skewing() {
        let e = |i| SymFunc::e(i);
        assert!(skew_apply(&e(1), &SymFunc::h(4)).same_as(&SymFunc::h(3)));
        assert!(skew_apply(&e(2), &SymFunc::h(4)).is_zero());
        let g = SymFunc::s(p(&[3, 1]));
        assert_eq!(skew_apply(&SymFunc::one(Basis::H), &g), g);
        assert_eq!(skew_apply(&SymFunc::s(p(&[1])), &g), skew_schur(&p(&[3, 1]), &p(&[1])));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_eval(3, &SymFunc::h(2)), coeff(1));
        assert_eq!(alpha_eval(3, &SymFunc::h(3)), coeff(0));
        assert_eq!(alpha_eval(3, &SymFunc::e(3)), coeff(-1));
        assert_eq!(alpha_eval(3, &SymFunc::e(2)), coeff(0));
        assert_eq!(alpha_eval(3, &SymFunc::e(4)), coeff(-1));
        assert_eq!(alpha_eval(3, &SymFunc::gen(Basis::H, p(&[2, 2]))), coeff(1));
        assert_eq!(alpha_eval(1, &SymFunc::one(Basis::S)), coeff(1));
    }

    #[test]
    fn splits_of_h2() {
        let mut splits = coproduct_splits(&p(&[2]));
        splits.sort();
        assert_eq!(
            splits,
            vec![(Partition::empty(), p(&[2])), (p(&[1]), p(&[1])), (p(&[2]), Partition::empty())]
        );
        assert_eq!(coproduct_splits(&p(&[2, 1])).len(), 6);
    }

    #[test]
    fn power_sum_products() {
        // p_2 = s_2 − s_11
        let got = mul_power_sum(&SymFunc::one(Basis::S), 2);
        let expected = SymFunc::from_terms(Basis::S, [(p(&[2]), coeff(1)), (p(&[1, 1]), coeff(-1))]);
        assert_eq!(got, expected);
        for lambda in (0..=5).flat_map(|n| crate::partition::partitions_of(n, None)) {
            for r in 1..=3i64 {
                let f = SymFunc::s(lambda.clone());
                let direct = f.to_basis(Basis::H).multiply(&SymFunc::p(r)).to_basis(Basis::S);
                assert_eq!(mul_power_sum(&f, r as usize), direct, "{lambda:?} r={r}");
            }
        }
    }
}
