//! Change of basis.
//!
//! Every basis element has an integral expansion in the complete homogeneous
//! basis (or, for Schur functions, also in the monomial basis). Those
//! expansions are computed once per partition and cached as [`Row`]s:
//!
//! * `h_λ` in `m`: built from `h_n = Σ_{ν ⊢ n} m_ν` by multiplying in one
//!   part at a time;
//! * `e_λ`, `p_λ` in `h`: Newton's identities, then key concatenation;
//! * `s_λ` in `h`: Jacobi–Trudi;
//! * `s_λ` in `m` (Kostka numbers): the two above composed.
//!
//! The reverse directions are triangular solves. With partitions of one size
//! listed reverse-lexicographically, `e_λ` and `p_λ` only involve `h_μ` with
//! `μ` weakly after `λ`, `s_λ` only `h_μ` weakly before `λ`, and `s_λ` only
//! `m_μ` weakly after `λ`; the diagonal entries are `±1`, `∏ λ_i` and `1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{add_into, symfunc_det, Basis, Coeff, SymFunc};
use crate::partition::{partitions_of, Partition};

/// Integral expansion of one basis element, sorted by partition.
pub type Row = Arc<Vec<(Partition, BigInt)>>;

struct RowCache(OnceLock<RwLock<HashMap<Partition, Row>>>);

impl RowCache {
    const fn new() -> Self {
        RowCache(OnceLock::new())
    }

    fn get(&self, key: &Partition, build: impl FnOnce() -> Row) -> Row {
        let map = self.0.get_or_init(Default::default);
        if let Some(row) = map.read().expect("row cache poisoned").get(key) {
            return row.clone();
        }
        // Built without holding the lock: builders recurse into the caches.
        let row = build();
        map.write().expect("row cache poisoned").entry(key.clone()).or_insert(row).clone()
    }
}

static H_IN_M: RowCache = RowCache::new();
static E_IN_H: RowCache = RowCache::new();
static P_IN_H: RowCache = RowCache::new();
static S_IN_H: RowCache = RowCache::new();
static S_IN_M: RowCache = RowCache::new();

fn freeze(map: BTreeMap<Partition, BigInt>) -> Row {
    Arc::new(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

fn accumulate(map: &mut BTreeMap<Partition, BigInt>, key: Partition, c: BigInt) {
    let entry = map.entry(key).or_insert_with(BigInt::zero);
    *entry += c;
}

/// Number of distinct rearrangements `ν'` of `ν` (as exponent vectors over the
/// variables of `γ`) with `ν' ≤ γ` entrywise. This is the coefficient of
/// `m_γ` in `h_{|γ|−|ν|} · m_ν`.
fn placements(nu: &Partition, gamma: &Partition) -> u128 {
    if nu.len() > gamma.len() {
        return 0;
    }
    let mut count: u128 = 1;
    for (i, &p) in nu.parts().iter().enumerate() {
        let avail = gamma.parts().iter().take_while(|&&g| g >= p).count();
        if avail <= i {
            return 0;
        }
        count *= (avail - i) as u128;
    }
    for m in nu.multiplicities() {
        for f in 2..=m as u128 {
            count /= f;
        }
    }
    count
}

/// `h_λ` in the monomial basis.
pub fn h_in_m(lambda: &Partition) -> Row {
    H_IN_M.get(lambda, || {
        if lambda.is_empty() {
            return Arc::new(vec![(Partition::empty(), BigInt::one())]);
        }
        let rest = Partition::from_parts(lambda.parts()[1..].to_vec());
        let rest_row = h_in_m(&rest);
        let mut out = Vec::new();
        for gamma in partitions_of(lambda.size(), None) {
            let mut total = BigInt::zero();
            for (nu, c) in rest_row.iter() {
                let k = placements(nu, &gamma);
                if k != 0 {
                    total += c * BigInt::from(k);
                }
            }
            if !total.is_zero() {
                out.push((gamma, total));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Arc::new(out)
    })
}

fn row_product(a: &Row, b: &Row) -> Row {
    let mut map = BTreeMap::new();
    for (k1, c1) in a.iter() {
        for (k2, c2) in b.iter() {
            accumulate(&mut map, k1.concat_sort(k2), c1 * c2);
        }
    }
    freeze(map)
}

/// Splits off the first part and multiplies the cached rows of both pieces.
fn multiplicative(cache: &'static RowCache, lambda: &Partition, single: fn(usize) -> Row) -> Row {
    cache.get(lambda, || match lambda.len() {
        0 => Arc::new(vec![(Partition::empty(), BigInt::one())]),
        1 => single(lambda.first()),
        _ => {
            let head = multiplicative(cache, &Partition::row(lambda.first()), single);
            let tail = multiplicative(cache, &Partition::from_parts(lambda.parts()[1..].to_vec()), single);
            row_product(&head, &tail)
        }
    })
}

/// `e_λ` in the complete homogeneous basis.
pub fn e_in_h(lambda: &Partition) -> Row {
    // e_n = Σ_{i=1}^{n} (−1)^{i−1} h_i e_{n−i}
    fn single(n: usize) -> Row {
        let mut map = BTreeMap::new();
        for i in 1..=n {
            let sign = if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            for (k, c) in e_in_h(&Partition::row(n - i)).iter() {
                accumulate(&mut map, k.concat_sort(&Partition::row(i)), &sign * c);
            }
        }
        freeze(map)
    }
    multiplicative(&E_IN_H, lambda, single)
}

/// `p_λ` in the complete homogeneous basis.
pub fn p_in_h(lambda: &Partition) -> Row {
    // n h_n = Σ_{i=1}^{n} p_i h_{n−i}
    fn single(n: usize) -> Row {
        let mut map = BTreeMap::new();
        accumulate(&mut map, Partition::row(n), BigInt::from(n));
        for i in 1..n {
            for (k, c) in p_in_h(&Partition::row(i)).iter() {
                accumulate(&mut map, k.concat_sort(&Partition::row(n - i)), -c);
            }
        }
        freeze(map)
    }
    multiplicative(&P_IN_H, lambda, single)
}

/// `s_λ` in the complete homogeneous basis, via `det(h_{λ_i − i + j})`.
pub fn s_in_h(lambda: &Partition) -> Row {
    S_IN_H.get(lambda, || {
        let l = lambda.len();
        let det = symfunc_det(l, |i, j| {
            SymFunc::h(lambda.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1))
        });
        let map = det
            .into_terms()
            .into_iter()
            .map(|(k, c)| {
                assert!(c.is_integer(), "Jacobi–Trudi produced a fraction");
                (k, c.to_integer())
            })
            .collect();
        freeze(map)
    })
}

/// `s_λ` in the monomial basis; the entries are Kostka numbers.
pub fn s_in_m(lambda: &Partition) -> Row {
    S_IN_M.get(lambda, || {
        let mut map = BTreeMap::new();
        for (mu, c) in s_in_h(lambda).iter() {
            for (nu, d) in h_in_m(mu).iter() {
                accumulate(&mut map, nu.clone(), c * d);
            }
        }
        freeze(map)
    })
}

fn expand(terms: &BTreeMap<Partition, Coeff>, row: fn(&Partition) -> Row) -> BTreeMap<Partition, Coeff> {
    let mut out = BTreeMap::new();
    for (lambda, c) in terms {
        for (mu, d) in row(lambda).iter() {
            add_into(&mut out, mu.clone(), c * Coeff::from_integer(d.clone()));
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Pivot {
    /// reverse-lex first key of the lowest degree
    First,
    /// reverse-lex last key of the highest degree
    Last,
}

/// Finds `x` with `Σ_λ x_λ row(λ) = terms` for a triangular family of rows.
fn solve(terms: &BTreeMap<Partition, Coeff>, row: fn(&Partition) -> Row, pivot: Pivot) -> BTreeMap<Partition, Coeff> {
    let mut residual = terms.clone();
    let mut out = BTreeMap::new();
    loop {
        let next = match pivot {
            Pivot::First => residual.first_key_value(),
            Pivot::Last => residual.last_key_value(),
        };
        let Some((key, c)) = next.map(|(k, c)| (k.clone(), c.clone())) else {
            break;
        };
        let r = row(&key);
        let lead = r
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, d)| Coeff::from_integer(d.clone()))
            .expect("transition row is missing its diagonal entry");
        let x = c / lead;
        for (mu, d) in r.iter() {
            add_into(&mut residual, mu.clone(), -(&x * Coeff::from_integer(d.clone())));
        }
        debug_assert!(!residual.contains_key(&key));
        add_into(&mut out, key, x);
    }
    out
}

fn to_h(from: Basis, terms: &BTreeMap<Partition, Coeff>) -> BTreeMap<Partition, Coeff> {
    match from {
        Basis::H => terms.clone(),
        Basis::E => expand(terms, e_in_h),
        Basis::P => expand(terms, p_in_h),
        Basis::S => expand(terms, s_in_h),
        Basis::M => expand(&solve(terms, s_in_m, Pivot::First), s_in_h),
    }
}

fn from_h(terms: &BTreeMap<Partition, Coeff>, target: Basis) -> BTreeMap<Partition, Coeff> {
    match target {
        Basis::H => terms.clone(),
        Basis::E => solve(terms, e_in_h, Pivot::First),
        Basis::P => solve(terms, p_in_h, Pivot::First),
        Basis::S => solve(terms, s_in_h, Pivot::Last),
        Basis::M => expand(terms, h_in_m),
    }
}

/// Re-expresses `terms`, given in basis `from`, in basis `target`.
pub fn convert(from: Basis, terms: &BTreeMap<Partition, Coeff>, target: Basis) -> BTreeMap<Partition, Coeff> {
    match (from, target) {
        (a, b) if a == b => terms.clone(),
        (Basis::S, Basis::M) => expand(terms, s_in_m),
        (Basis::M, Basis::S) => solve(terms, s_in_m, Pivot::First),
        _ => from_h(&to_h(from, terms), target),
    }
}
