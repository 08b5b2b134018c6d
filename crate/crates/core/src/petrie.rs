//! Petrie symmetric functions and k-Petrie numbers.
//!
//! `G(k,m)` is the sum of all degree-`m` monomials in which every exponent is
//! below `k`. Its Schur coefficients, and more generally those of
//! `G(k,m)·s_μ`, are the k-Petrie numbers `pet_k(λ,μ)`, which can be computed
//! three ways here: as a 0/1 determinant ([`pet_det`]), by a closed formula
//! for `μ = ∅` ([`pet_explicit`]), and as `α_k(s_{λ/μ})` ([`pet_alpha`]).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::frobenius;
use crate::partition::{partitions_of, rem_floor, Partition};
use crate::symfunc::{alpha_eval, coeff, Basis, Coeff, SymFunc};

/// Dense square integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix { dim, entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// All entries are 0 or 1 and the 1s of each column are consecutive.
    pub fn is_petrie(&self) -> bool {
        let n = self.dim;
        if self.entries.iter().any(|x| !x.is_zero() && !x.is_one()) {
            return false;
        }
        (0..n).all(|j| {
            let ones: Vec<usize> = (0..n).filter(|&i| self.get(i, j).is_one()).collect();
            ones.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Free-function form of [`IntMatrix::det`].
pub fn det_int(m: &IntMatrix) -> BigInt {
    m.det()
}

pub fn is_petrie_matrix(m: &IntMatrix) -> bool {
    m.is_petrie()
}

/// `G(k,m)` in the monomial basis: `Σ m_λ` over `λ ⊢ m` with all parts `< k`.
pub fn petrie_g(k: usize, m: usize) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    SymFunc::from_terms(Basis::M, partitions_of(m, Some(k - 1)).into_iter().map(|l| (l, Coeff::one())))
}

/// `Σ m_λ` over `λ ⊢ m` whose parts all lie in `[kp, k−1]`. The lower bound
/// applies to the parts only; zero exponents are always allowed.
pub fn petrie_modified(k: usize, kp: usize, m: usize) -> Result<SymFunc> {
    if kp == 0 || kp > k {
        return Err(Error::InvalidParameter(format!("need 0 < k' <= k, got k = {k}, k' = {kp}")));
    }
    let terms = partitions_of(m, Some(k - 1))
        .into_iter()
        .filter(|l| l.parts().iter().all(|&p| p >= kp))
        .map(|l| (l, Coeff::one()));
    Ok(SymFunc::from_terms(Basis::M, terms))
}

/// The `ℓ × ℓ` matrix `([0 ≤ λ_i − μ_j − i + j < k])`.
pub fn petrie_matrix(k: usize, lambda: &Partition, mu: &Partition, l: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(l);
    for i in 1..=l {
        for j in 1..=l {
            let v = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            if 0 <= v && v < k as i64 {
                m.set(i - 1, j - 1, BigInt::one());
            }
        }
    }
    m
}

/// `pet_k(λ,μ)` as a determinant of size `ℓ`, which must be at least
/// `max(ℓ(λ), ℓ(μ))`; the value does not depend on the choice.
pub fn pet_det_padded(k: usize, lambda: &Partition, mu: &Partition, l: usize) -> i64 {
    assert!(l >= lambda.len().max(mu.len()), "padding length too small");
    petrie_matrix(k, lambda, mu, l).det().to_i64().expect("Petrie determinant out of range")
}

/// `pet_k(λ,μ)` with `ℓ = max(ℓ(λ), ℓ(μ))`.
pub fn pet_det(k: usize, lambda: &Partition, mu: &Partition) -> i64 {
    pet_det_padded(k, lambda, mu, lambda.len().max(mu.len()))
}

/// `pet_k(λ,μ) = α_k(s_{λ/μ})`.
pub fn pet_alpha(k: usize, lambda: &Partition, mu: &Partition) -> i64 {
    let v = alpha_eval(k, &crate::symfunc::skew_schur_h(lambda, mu));
    assert!(v.is_integer());
    v.to_integer().to_i64().expect("pet out of range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VanishingReason {
    /// `(λ^t)_k ≠ 0`, i.e. `λ_1 ≥ k`
    MuKNonzero,
    /// two of the `γ_i` coincide
    GammaCollision,
    /// the number is `±1`
    None,
}

/// Intermediate quantities of the closed formula for `pet_k(λ, ∅)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetrieExplicitData {
    /// `β_i = μ_i − i` for `i < k`, where `μ = λ^t`
    pub beta: Vec<i64>,
    /// `γ_i = 1 + (β_i − 1) % k`
    pub gamma: Vec<i64>,
    /// number of pairs `i < j` with `γ_i < γ_j`
    pub g: usize,
    pub vanishing_reason: VanishingReason,
}

/// `pet_k(λ, ∅)` from the transpose `μ = λ^t`, without a determinant.
pub fn pet_explicit(k: usize, lambda: &Partition) -> (i64, PetrieExplicitData) {
    assert!(k >= 1, "k must be positive");
    let mu = lambda.transpose();
    if mu.part(k) != 0 {
        let data = PetrieExplicitData {
            beta: Vec::new(),
            gamma: Vec::new(),
            g: 0,
            vanishing_reason: VanishingReason::MuKNonzero,
        };
        return (0, data);
    }
    let kk = k as i64;
    let beta: Vec<i64> = (1..k).map(|i| mu.part(i) as i64 - i as i64).collect();
    let gamma: Vec<i64> = beta.iter().map(|b| 1 + rem_floor(b - 1, kk)).collect();
    let mut seen = vec![false; k + 1];
    let distinct = gamma.iter().all(|&x| !std::mem::replace(&mut seen[x as usize], true));
    if !distinct {
        let data = PetrieExplicitData { beta, gamma, g: 0, vanishing_reason: VanishingReason::GammaCollision };
        return (0, data);
    }
    let g = (0..gamma.len())
        .flat_map(|i| (i + 1..gamma.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| gamma[i] < gamma[j])
        .count();
    let exponent = beta.iter().sum::<i64>() + g as i64 + gamma.iter().sum::<i64>();
    let sign = if rem_floor(exponent, 2) == 0 { 1 } else { -1 };
    (sign, PetrieExplicitData { beta, gamma, g, vanishing_reason: VanishingReason::None })
}

/// Decides `pet_k(λ, ∅) ≠ 0` from the beta-set `B = {λ_i − i}`: every residue
/// class mod `k` may miss at most one element of `W = {z < k−1}` from `B`.
pub fn pet_nonzero_criterion(k: usize, lambda: &Partition) -> Result<bool> {
    if lambda.first() >= k {
        return Err(Error::Precondition(format!("criterion needs λ_1 < k, got λ_1 = {}, k = {k}", lambda.first())));
    }
    let kk = k as i64;
    let len = lambda.len() as i64;
    let in_b = |z: i64| {
        // λ_i − i is strictly decreasing and equals −i once i > ℓ(λ)
        if z <= -(len + 1) {
            return true;
        }
        (1..=lambda.len()).any(|i| lambda.part(i) as i64 - i as i64 == z)
    };
    let mut missing_per_class = vec![0usize; k];
    for z in -len..=kk - 2 {
        if !in_b(z) {
            missing_per_class[rem_floor(z, kk) as usize] += 1;
        }
    }
    Ok(missing_per_class.iter().all(|&c| c <= 1))
}

/// `G(k,m)·s_μ = Σ_{λ ⊢ m+|μ|} pet_k(λ,μ) s_λ`.
pub fn pieri_expand(k: usize, m: usize, mu: &Partition) -> SymFunc {
    let terms = partitions_of(m + mu.size(), None).into_iter().map(|lambda| {
        let c = pet_det(k, &lambda, mu);
        (lambda, coeff(c))
    });
    SymFunc::from_terms(Basis::S, terms)
}

/// `G(k,m) = Σ_i (−1)^i h_{m−ki} f_k(e_i)`, in the `h` basis.
pub fn petrie_via_frobenius(k: usize, m: usize) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    let mut out = SymFunc::zero(Basis::H);
    for i in 0..=m / k {
        let term = SymFunc::h((m - k * i) as i64).multiply(&frobenius(k, &SymFunc::e(i as i64)));
        let sign = if i % 2 == 0 { coeff(1) } else { coeff(-1) };
        out.add_scaled(&sign, &term);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PetMethod {
    Det,
    Explicit,
    Alpha,
}

impl PetMethod {
    pub fn compute(self, k: usize, lambda: &Partition, mu: &Partition) -> Result<i64> {
        match self {
            PetMethod::Det => Ok(pet_det(k, lambda, mu)),
            PetMethod::Alpha => Ok(pet_alpha(k, lambda, mu)),
            PetMethod::Explicit if mu.is_empty() => Ok(pet_explicit(k, lambda).0),
            PetMethod::Explicit => Err(Error::Precondition("the explicit formula needs μ = ∅".into())),
        }
    }
}

/// One computed Petrie number, as serialized on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetRecord {
    pub k: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub pet: i64,
    pub method: PetMethod,
}
