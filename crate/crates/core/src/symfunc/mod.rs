//! The ring of symmetric functions with exact rational coefficients.
//!
//! A [`SymFunc`] is a sparse linear combination of basis elements of one of
//! the five classical bases, indexed by partitions. For the multiplicative
//! bases (`h`, `e`, `p`) the key `λ` stands for the product
//! `h_{λ_1} h_{λ_2} ⋯`. Products and most structure maps are computed in the
//! complete homogeneous basis, where multiplication is concatenation of keys;
//! the other bases are reached through cached transition rows (see
//! [`transition`]).

mod ops;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use ops::{alpha_eval, hall, jacobi_trudi_e, mul_power_sum, skew_apply, skew_schur, symfunc_det};
pub(crate) use ops::{coproduct_splits, skew_schur_h};

/// Exact coefficient. Integers are rationals with denominator one.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// `true` if `c` has denominator one.
pub fn is_integral(c: &Coeff) -> bool {
    c.is_integer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// monomial `m_λ`
    #[serde(rename = "m")]
    M,
    /// complete homogeneous `h_λ`
    #[serde(rename = "h")]
    H,
    /// elementary `e_λ`
    #[serde(rename = "e")]
    E,
    /// power sum `p_λ`
    #[serde(rename = "p")]
    P,
    /// Schur `s_λ`
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::H, Basis::E, Basis::P, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(Basis::M),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A symmetric function of bounded degree, stored in a single basis.
///
/// No zero coefficient is ever stored. Structural equality (`==`) compares
/// basis and terms; use [`SymFunc::same_as`] to compare values across bases.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::gen(basis, Partition::empty())
    }

    /// The basis element indexed by `lambda`, with coefficient one.
    pub fn gen(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Coeff::one());
        SymFunc { basis, terms }
    }

    /// `h_n`, zero for negative `n`.
    pub fn h(n: i64) -> Self {
        Self::single_part(Basis::H, n)
    }

    /// `e_n`, zero for negative `n`.
    pub fn e(n: i64) -> Self {
        Self::single_part(Basis::E, n)
    }

    /// `p_n` for `n ≥ 1`; `p_0` is taken to be `1`.
    pub fn p(n: i64) -> Self {
        Self::single_part(Basis::P, n)
    }

    pub fn s(lambda: Partition) -> Self {
        Self::gen(Basis::S, lambda)
    }

    pub fn m(lambda: Partition) -> Self {
        Self::gen(Basis::M, lambda)
    }

    fn single_part(basis: Basis, n: i64) -> Self {
        if n < 0 {
            Self::zero(basis)
        } else {
            Self::gen(basis, Partition::row(n as usize))
        }
    }

    /// Builds a function from (key, coefficient) pairs, summing repeated keys.
    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Coeff)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Coeff> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Coeff> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest size of a stored key, 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Coeff) {
        add_into(&mut self.terms, lambda, c);
    }

    /// `self += c · other`, both in the same basis.
    pub(crate) fn add_scaled(&mut self, c: &Coeff, other: &SymFunc) {
        debug_assert_eq!(self.basis, other.basis);
        for (lambda, d) in &other.terms {
            self.add_term(lambda.clone(), c * d);
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), other);
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Coeff::one())
    }

    /// The homogeneous component of degree `d`.
    pub fn degree_component(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// The same function re-expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        SymFunc { basis: target, terms: transition::convert(self.basis, &self.terms, target) }
    }

    /// Ring product, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_basis(Basis::H);
        let b = other.to_basis(Basis::H);
        let mut terms = BTreeMap::new();
        for (k1, c1) in &a.terms {
            for (k2, c2) in &b.terms {
                add_into(&mut terms, k1.concat_sort(k2), c1 * c2);
            }
        }
        SymFunc { basis: Basis::H, terms }.to_basis(self.basis)
    }

    pub fn pow(&self, n: usize) -> SymFunc {
        let mut out = SymFunc::one(self.basis);
        for _ in 0..n {
            out = out.multiply(self);
        }
        out
    }

    /// Value equality regardless of the bases the two sides are stored in.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        if self.basis == other.basis {
            return self == other;
        }
        // Conversions out of P may introduce fractions; compare in H, which
        // every basis reaches with integral rows except P→H (also integral).
        self.to_basis(Basis::H) == other.to_basis(Basis::H)
    }

    /// `true` if every coefficient is one of −1, 0, 1.
    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && c.abs() <= Coeff::one())
    }

    /// `true` if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Coeff::is_integer)
    }
}

pub(crate) fn add_into(terms: &mut BTreeMap<Partition, Coeff>, lambda: Partition, c: Coeff) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(lambda) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `s[2,1]: 1, s[1,1,1]: -2`; the empty key prints as its bare coefficient
/// and the zero function as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (lambda, c) in &self.terms {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            if lambda.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}{}: {}", self.basis, lambda, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermRepr { partition: k.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let mut out = SymFunc::zero(repr.basis);
        for t in repr.terms {
            let c = parse_coeff(&t.coeff).map_err(serde::de::Error::custom)?;
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}

/// Parses `"-2"` or `"3/4"`.
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let c: Coeff = s.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
    Ok(c)
}
