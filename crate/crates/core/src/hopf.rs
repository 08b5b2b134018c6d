//! Hopf algebra structure maps on symmetric functions.
//!
//! The coproduct is determined by `Δ(h_n) = Σ_{i+j=n} h_i ⊗ h_j` and
//! multiplicativity, so tensors are stored in the `h ⊗ h` basis. All maps
//! return their result in the basis of their input.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::symfunc::{coproduct_splits, parse_coeff, skew_apply, transition, Basis, Coeff, SymFunc};

/// Element of `Λ ⊗ Λ` in the `h_λ ⊗ h_μ` basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorFunc {
    terms: BTreeMap<(Partition, Partition), Coeff>,
}

impl TensorFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((Partition, Partition), Coeff)>) -> Self {
        let mut out = Self::zero();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    /// `a ⊗ b`.
    pub fn tensor(a: &SymFunc, b: &SymFunc) -> Self {
        let (a, b) = (a.to_basis(Basis::H), b.to_basis(Basis::H));
        let mut out = Self::zero();
        for (l, c) in a.terms() {
            for (r, d) in b.terms() {
                out.add_term((l.clone(), r.clone()), c * d);
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (Partition, Partition), c: Coeff) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Coeff::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &TensorFunc) -> TensorFunc {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// Componentwise product in `Λ ⊗ Λ`.
    pub fn multiply(&self, other: &TensorFunc) -> TensorFunc {
        let mut out = Self::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term((l1.concat_sort(l2), r1.concat_sort(r2)), c1 * c2);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    left: Partition,
    right: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    terms: Vec<TensorTermRepr>,
}

impl Serialize for TensorFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TensorRepr {
            terms: self
                .terms
                .iter()
                .map(|((l, r), c)| TensorTermRepr { left: l.clone(), right: r.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TensorRepr::deserialize(deserializer)?;
        let mut out = TensorFunc::zero();
        for t in repr.terms {
            let c = parse_coeff(&t.coeff).map_err(serde::de::Error::custom)?;
            out.add_term((t.left, t.right), c);
        }
        Ok(out)
    }
}

/// `Δ(f)`.
pub fn coproduct(f: &SymFunc) -> TensorFunc {
    let mut out = TensorFunc::zero();
    for (lambda, c) in f.to_basis(Basis::H).terms() {
        for key in coproduct_splits(lambda) {
            out.add_term(key, c.clone());
        }
    }
    out
}

fn map_h_keys(f: &SymFunc, mut image: impl FnMut(&Partition) -> Option<SymFunc>) -> SymFunc {
    let mut out = SymFunc::zero(Basis::H);
    for (lambda, c) in f.to_basis(Basis::H).terms() {
        if let Some(img) = image(lambda) {
            out.add_scaled(c, &img.to_basis(Basis::H));
        }
    }
    out.to_basis(f.basis())
}

/// The antipode, `S(h_n) = (−1)^n e_n`.
pub fn antipode(f: &SymFunc) -> SymFunc {
    map_h_keys(f, |lambda| {
        let sign = if lambda.size() % 2 == 0 { Coeff::one() } else { -Coeff::one() };
        let row = transition::e_in_h(lambda);
        Some(SymFunc::from_terms(
            Basis::H,
            row.iter().map(|(k, c)| (k.clone(), &sign * Coeff::from_integer(c.clone()))),
        ))
    })
}

/// The Frobenius endomorphism `x_i ↦ x_i^k`, i.e. `m_λ ↦ m_{kλ}`.
pub fn frobenius(k: usize, f: &SymFunc) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    let fm = f.to_basis(Basis::M);
    SymFunc::from_terms(Basis::M, fm.terms().iter().map(|(l, c)| (l.scale(k), c.clone()))).to_basis(f.basis())
}

/// The Verschiebung endomorphism: `h_m ↦ h_{m/k}` if `k ∣ m`, else `0`.
pub fn verschiebung(k: usize, f: &SymFunc) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    map_h_keys(f, |lambda| lambda.divide(k).map(|l| SymFunc::gen(Basis::H, l)))
}

/// `U_k = f_k ∘ S ∘ v_k`.
pub fn u_map(k: usize, f: &SymFunc) -> SymFunc {
    frobenius(k, &antipode(&verschiebung(k, f)))
}

/// `(id ⋆ u)(f) = Σ f_(1) · u(f_(2))` over the coproduct of `f`.
pub fn convolve_with_identity(u: impl Fn(&SymFunc) -> SymFunc, f: &SymFunc) -> SymFunc {
    let delta = coproduct(f);
    let mut images: HashMap<Partition, SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(Basis::H);
    for ((left, right), c) in delta.terms() {
        let img = images
            .entry(right.clone())
            .or_insert_with(|| u(&SymFunc::gen(Basis::H, right.clone())).to_basis(Basis::H));
        if img.is_zero() {
            continue;
        }
        out.add_scaled(c, &SymFunc::gen(Basis::H, left.clone()).multiply(img));
    }
    out.to_basis(f.basis())
}

/// `V_k = id ⋆ U_k`, which sends `h_m` to `G(k,m)`.
pub fn v_map(k: usize, f: &SymFunc) -> SymFunc {
    convolve_with_identity(|x| u_map(k, x), f)
}

/// The Bernstein creation operator `B_m = Σ_i (−1)^i h_{m+i} e_i^⊥`.
pub fn bernstein(m: usize, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::H);
    for i in 0..=f.degree() {
        let skewed = skew_apply(&SymFunc::e(i as i64), f);
        if skewed.is_zero() {
            continue;
        }
        let term = SymFunc::h((m + i) as i64).multiply(&skewed);
        let sign = if i % 2 == 0 { Coeff::one() } else { -Coeff::one() };
        out.add_scaled(&sign, &term);
    }
    out.to_basis(f.basis())
}
