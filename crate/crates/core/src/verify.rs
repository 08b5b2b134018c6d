//! Executable checks of identities about Petrie functions.
//!
//! Every check returns a [`VerifyReport`]. A report that did not pass always
//! carries a counterexample. Reports are deterministic except for
//! `elapsed_ms`: scans run in parallel but always report the first failure
//! in enumeration order.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{bernstein, coproduct, frobenius, v_map, verschiebung, TensorFunc};
use crate::oracle::multiply_oracle;
use crate::partition::{partitions_of, Partition};
use crate::petrie::{
    is_petrie_matrix, pet_alpha, pet_det, pet_det_padded, pet_explicit, pet_nonzero_criterion,
    petrie_g, petrie_matrix, petrie_modified, petrie_via_frobenius, pieri_expand, IntMatrix,
};
use crate::symfunc::{coeff, hall, mul_power_sum, Basis, Coeff, SymFunc};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: String,
    pub range: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn timed(name: &str, range: String, body: impl FnOnce() -> (Option<Value>, Option<Value>)) -> VerifyReport {
    let start = Instant::now();
    let (counterexample, details) = body();
    VerifyReport {
        name: name.to_string(),
        range,
        passed: counterexample.is_none(),
        counterexample,
        details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// First failing item in enumeration order.
fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Option<Value> + Sync + Send) -> Option<Value> {
    items.par_iter().find_map_first(check)
}

fn mismatch(what: &str, left: &SymFunc, right: &SymFunc) -> Value {
    json!({ "identity": what, "left": left, "right": right })
}

/// Caps the global thread pool at `PETRIE_THREADS` if that is set.
/// Returns the number of threads in use.
pub fn configure_threads() -> usize {
    if let Some(n) = std::env::var("PETRIE_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        // ignore the error if the pool was already built
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    rayon::current_num_threads()
}

fn hook_list(n: usize) -> SymFunc {
    // Σ_{i=0}^{n−2} (−1)^i s_{(n−1−i, 1^{i+1})}
    let mut out = SymFunc::zero(Basis::S);
    for i in 0..n.saturating_sub(1) {
        let sign = if i % 2 == 0 { coeff(1) } else { coeff(-1) };
        out.add_scaled(&sign, &SymFunc::s(Partition::hook(n - 1 - i, i + 1)));
    }
    out
}

/// The Liu–Polo expansion of the dominance-filtered monomial sum below
/// `(n−1, n−1, 1)`, together with the identities leading to it.
pub fn check_liu_polo(n: usize) -> Result<VerifyReport> {
    if n <= 1 {
        return Err(Error::InvalidParameter(format!("Liu–Polo needs n > 1, got {n}")));
    }
    Ok(timed("liu_polo", format!("n={n}"), || {
        let top = Partition::from_parts(vec![n - 1, n - 1, 1]);
        let below: Vec<Partition> = partitions_of(2 * n - 1, None)
            .into_iter()
            .filter(|l| top.dominates(l).expect("same size"))
            .collect();
        if let Some(bad) = partitions_of(2 * n - 1, None)
            .into_iter()
            .find(|l| top.dominates(l).unwrap() != (l.first() < n))
        {
            return (Some(json!({ "identity": "dominated iff all parts < n", "partition": bad })), None);
        }
        let lhs = SymFunc::from_terms(Basis::M, below.into_iter().map(|l| (l, Coeff::one())));

        let mut rhs = SymFunc::zero(Basis::S);
        for i in 0..=n - 2 {
            let mut parts = vec![n - 1, n - 1 - i];
            parts.extend(std::iter::repeat_n(1, i + 1));
            let sign = if i % 2 == 0 { coeff(1) } else { coeff(-1) };
            rhs.add_scaled(&sign, &SymFunc::s(Partition::from_parts(parts)));
        }
        let rhs_m = rhs.to_basis(Basis::M);
        if lhs != rhs_m {
            return (Some(mismatch("monomial sum = alternating Schur sum", &lhs, &rhs_m)), None);
        }

        let g = petrie_g(n, 2 * n - 1);
        if lhs != g {
            return (Some(mismatch("monomial sum = G(n,2n-1)", &lhs, &g)), None);
        }

        let h_minus = SymFunc::h(2 * n as i64 - 1)
            .sub(&SymFunc::h(n as i64 - 1).multiply(&SymFunc::p(n as i64)))
            .expect("same basis");
        if !lhs.same_as(&h_minus) {
            return (Some(mismatch("monomial sum = h_{2n-1} - h_{n-1} p_n", &lhs, &h_minus.to_basis(Basis::M))), None);
        }

        let hn_minus_pn = SymFunc::h(n as i64).sub(&SymFunc::p(n as i64).to_basis(Basis::H)).expect("same basis");
        let hooks = hook_list(n);
        if !hn_minus_pn.same_as(&hooks) {
            return (Some(mismatch("h_n - p_n = alternating hook sum", &hn_minus_pn, &hooks.to_basis(Basis::H))), None);
        }

        let bern = bernstein(n - 1, &hn_minus_pn);
        if !bern.same_as(&h_minus) {
            return (Some(mismatch("B_{n-1}(h_n - p_n) = h_{2n-1} - h_{n-1} p_n", &bern, &h_minus)), None);
        }
        if !bern.same_as(&rhs) {
            return (Some(mismatch("B_{n-1}(h_n - p_n) = alternating Schur sum", &bern, &rhs.to_basis(Basis::H))), None);
        }
        (None, Some(json!({ "lhs": lhs, "rhs": rhs })))
    }))
}

/// `c_{m,n} = (−1)^{m−n} · (2 if 3 ∣ m−n, else −1)`.
pub fn gessel_coefficient(m: usize, n: usize) -> i64 {
    let diff = n.abs_diff(m);
    let sign = if diff.is_multiple_of(2) { 1 } else { -1 };
    sign * if diff.is_multiple_of(3) { 2 } else { -1 }
}

/// Degree-`d` part of `Σ_n e_n² + Σ_{m<n} c_{m,n} e_m e_n`, in the `e` basis.
pub fn gessel_component(d: usize) -> SymFunc {
    let mut out = SymFunc::zero(Basis::E);
    for m in 0..=d / 2 {
        let n = d - m;
        let c = if m == n { 1 } else { gessel_coefficient(m, n) };
        let key = Partition::from_parts(vec![m, n]);
        out.add_scaled(&coeff(c), &SymFunc::gen(Basis::E, key));
    }
    out
}

/// Gessel's quadratic `e`-expansion of `G(3)`, degree by degree.
pub fn check_gessel(d_max: usize) -> VerifyReport {
    timed("gessel", format!("d=0..{d_max}"), || {
        for d in 0..=d_max {
            let lhs = petrie_g(3, d);
            let rhs = gessel_component(d);
            if !lhs.same_as(&rhs) {
                return (Some(json!({ "degree": d, "g": lhs, "e_expansion": rhs })), None);
            }
        }
        (None, None)
    })
}

/// The products `∏ G(k, λ_i)` over `λ ⊢ n` in the monomial basis, as an
/// integer matrix with rows and columns in reverse-lex order.
pub fn genset_matrix(k: usize, n: usize) -> IntMatrix {
    let parts = partitions_of(n, None);
    let dim = parts.len();
    let mut mat = IntMatrix::zeros(dim);
    for (i, lambda) in parts.iter().enumerate() {
        let prod = lambda
            .parts()
            .iter()
            .fold(SymFunc::one(Basis::M), |acc, &p| acc.multiply(&petrie_g(k, p)));
        for (j, mu) in parts.iter().enumerate() {
            let c = prod.coeff(mu);
            assert!(c.is_integer());
            mat.set(i, j, c.to_integer());
        }
    }
    mat
}

/// `G(k,1), G(k,2), …` generate `Λ` freely: the transition matrix from their
/// products to the monomial basis is invertible in every degree up to
/// `n_max`; for `k = 2` it is unimodular.
pub fn check_genset(k: usize, n_max: usize) -> Result<VerifyReport> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("generating-set check needs k >= 2, got {k}")));
    }
    Ok(timed("genset", format!("k={k}, n=1..{n_max}"), || {
        let mut dets = Vec::new();
        for n in 1..=n_max {
            let det = genset_matrix(k, n).det();
            let ok = !det.is_zero() && (k != 2 || det.abs() == BigInt::one());
            if !ok {
                return (Some(json!({ "k": k, "degree": n, "det": det.to_string() })), None);
            }
            dets.push(det.to_string());
        }
        (None, Some(json!({ "determinants": dets })))
    }))
}

fn s_terms(terms: &[(&[usize], i64)]) -> SymFunc {
    SymFunc::from_terms(
        Basis::S,
        terms.iter().map(|(parts, c)| (Partition::from_parts(parts.to_vec()), coeff(*c))),
    )
}

/// Schur expansion of `G(3,4)·p_2`.
pub fn g34_times_p2_expected() -> SymFunc {
    s_terms(&[(&[1, 1, 1, 1, 1, 1], 1), (&[2, 2, 2], 1), (&[3, 1, 1, 1], -1), (&[3, 3], -1), (&[4, 2], 1)])
}

/// `G(3,4)·p_3`, which has a coefficient `−2`.
pub fn g34_times_p3_expected() -> SymFunc {
    s_terms(&[
        (&[1, 1, 1, 1, 1, 1, 1], -1),
        (&[2, 2, 1, 1, 1], 1),
        (&[2, 2, 2, 1], -2),
        (&[3, 2, 1, 1], 1),
        (&[4, 1, 1, 1], -1),
        (&[4, 3], -1),
        (&[5, 2], 1),
    ])
}

/// Schur expansion of `G(k,m)·f`.
pub fn g_times(k: usize, m: usize, f: &SymFunc) -> SymFunc {
    petrie_g(k, m).to_basis(Basis::H).multiply(f).to_basis(Basis::S)
}

/// Alexandersson's conjecture: `G(k,m)·p_2` has all Schur coefficients in
/// `{−1,0,1}`, for `k + m ≤ bound`. Also checks the known `G(3,4)·p_2` and
/// `p_3` examples.
pub fn scan_alexandersson(bound: usize) -> VerifyReport {
    timed("alexandersson", format!("k+m<={bound}"), || {
        let ex2 = g_times(3, 4, &SymFunc::p(2));
        if ex2 != g34_times_p2_expected() {
            return (Some(mismatch("G(3,4) p_2 expansion", &ex2, &g34_times_p2_expected())), None);
        }
        let ex3 = g_times(3, 4, &SymFunc::p(3));
        if ex3 != g34_times_p3_expected() {
            return (Some(mismatch("G(3,4) p_3 expansion", &ex3, &g34_times_p3_expected())), None);
        }
        let pairs: Vec<(usize, usize)> =
            (1..=bound).flat_map(|k| (0..=bound - k).map(move |m| (k, m))).collect();
        // the scan multiplies the Petrie-rule expansion by p_2 with border strips
        let failure = first_failure(&pairs, |&(k, m)| {
            let f = mul_power_sum(&pieri_expand(k, m, &Partition::empty()), 2);
            f.terms()
                .iter()
                .find(|(_, c)| !(c.is_integer() && c.abs() <= Coeff::one()))
                .map(|(l, c)| json!({ "k": k, "m": m, "partition": l, "coeff": c.to_string() }))
        });
        (failure, Some(json!({ "pairs": pairs.len() })))
    })
}

/// `V_k(s_λ)` in the Schur basis, and whether all its coefficients lie in
/// `{−1,0,1}`.
pub fn petriefication(k: usize, lambda: &Partition) -> (SymFunc, bool) {
    let image = v_map(k, &SymFunc::s(lambda.clone())).to_basis(Basis::S);
    let flag = image.has_unit_coefficients();
    (image, flag)
}

/// Report form of [`petriefication`]: passes iff the flag is true.
pub fn petriefication_report(k: usize, lambda: &Partition) -> VerifyReport {
    timed("petriefication", format!("k={k}, lambda={}", lambda.to_csv()), || {
        let (image, flag) = petriefication(k, lambda);
        let offending = image
            .terms()
            .iter()
            .find(|(_, c)| !(c.is_integer() && c.abs() <= Coeff::one()))
            .map(|(l, c)| json!({ "k": k, "lambda": lambda, "partition": l, "coeff": c.to_string() }));
        (offending, Some(json!({ "flag": flag, "expansion": image })))
    })
}

/// Single rows and single columns always have unit-coefficient images; the
/// three known counterexamples do not.
pub fn check_petriefication_known(k_max: usize, size_max: usize) -> VerifyReport {
    timed("petriefication_known", format!("k=1..{k_max}, rows/columns up to {size_max}"), || {
        let mut cases = Vec::new();
        for k in 1..=k_max {
            for m in 0..=size_max {
                cases.push((k, Partition::row(m)));
                cases.push((k, Partition::column(m)));
            }
        }
        if let Some(bad) = first_failure(&cases, |(k, l)| {
            (!petriefication(*k, l).1).then(|| json!({ "k": k, "lambda": l, "expected_flag": true }))
        }) {
            return (Some(bad), None);
        }
        let known = [
            (3, Partition::from_parts(vec![4, 4, 4])),
            (4, Partition::from_parts(vec![4, 4])),
            (4, Partition::from_parts(vec![5, 1, 1, 1, 1])),
        ];
        let bad = first_failure(&known, |(k, l)| {
            petriefication(*k, l).1.then(|| json!({ "k": k, "lambda": l, "expected_flag": false }))
        });
        (bad, None)
    })
}

/// `G(k,m)` four ways: monomial sum, Schur expansion with Petrie
/// coefficients, the Frobenius formula and `V_k(h_m)`.
pub fn check_g_four_way(k_max: usize, m_max: usize) -> VerifyReport {
    timed("g_four_way", format!("k=1..{k_max}, m=0..{m_max}"), || {
        let pairs: Vec<(usize, usize)> = (1..=k_max).flat_map(|k| (0..=m_max).map(move |m| (k, m))).collect();
        let bad = first_failure(&pairs, |&(k, m)| {
            let g = petrie_g(k, m);
            let routes = [
                ("schur", pieri_expand(k, m, &Partition::empty())),
                ("frobenius", petrie_via_frobenius(k, m)),
                ("v_k(h_m)", v_map(k, &SymFunc::h(m as i64))),
            ];
            routes.iter().find_map(|(name, f)| {
                let fm = f.to_basis(Basis::M);
                (fm != g).then(|| json!({ "k": k, "m": m, "route": name, "got": fm, "expected": g }))
            })
        });
        (bad, None)
    })
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|i| partitions_of(i, None)).collect()
}

/// `pet_det = pet_alpha ∈ {−1,0,1}` and the matrix is a Petrie matrix.
pub fn check_pet_agreement(k_max: usize, lambda_max: usize, mu_max: usize) -> VerifyReport {
    timed("pet_agreement", format!("k=1..{k_max}, |lambda|<={lambda_max}, |mu|<={mu_max}"), || {
        let mut cases = Vec::new();
        for k in 1..=k_max {
            for lambda in partitions_up_to(lambda_max) {
                for mu in partitions_up_to(mu_max) {
                    cases.push((k, lambda.clone(), mu));
                }
            }
        }
        let bad = first_failure(&cases, |(k, lambda, mu)| {
            let det = pet_det(*k, lambda, mu);
            let alpha = pet_alpha(*k, lambda, mu);
            let structured = is_petrie_matrix(&petrie_matrix(*k, lambda, mu, lambda.len().max(mu.len())));
            (det != alpha || det.abs() > 1 || !structured)
                .then(|| json!({ "k": k, "lambda": lambda, "mu": mu, "det": det, "alpha": alpha, "petrie": structured }))
        });
        (bad, Some(json!({ "cases": cases.len() })))
    })
}

/// The closed formula and the beta-set criterion against the determinant.
pub fn check_pet_explicit(k_max: usize, n_max: usize) -> VerifyReport {
    timed("pet_explicit", format!("k=1..{k_max}, |lambda|<={n_max}"), || {
        let mut cases = Vec::new();
        for k in 1..=k_max {
            for lambda in partitions_up_to(n_max) {
                cases.push((k, lambda));
            }
        }
        let empty = Partition::empty();
        let bad = first_failure(&cases, |(k, lambda)| {
            let det = pet_det(*k, lambda, &empty);
            let (explicit, data) = pet_explicit(*k, lambda);
            if det != explicit {
                return Some(json!({ "k": k, "lambda": lambda, "det": det, "explicit": explicit, "data": data }));
            }
            if lambda.first() < *k {
                let crit = pet_nonzero_criterion(*k, lambda).expect("precondition holds");
                if crit != (det != 0) {
                    return Some(json!({ "k": k, "lambda": lambda, "det": det, "criterion": crit }));
                }
            }
            None
        });
        (bad, Some(json!({ "cases": cases.len() })))
    })
}

/// `pet_k(λ,μ)` does not depend on the padding length.
pub fn check_padding(samples: &[(usize, Partition, Partition)], extra: usize) -> VerifyReport {
    timed("pet_padding", format!("{} samples, +{extra} rows", samples.len()), || {
        let bad = first_failure(samples, |(k, lambda, mu)| {
            let l = lambda.len().max(mu.len());
            let a = pet_det_padded(*k, lambda, mu, l);
            let b = pet_det_padded(*k, lambda, mu, l + extra);
            (a != b).then(|| json!({ "k": k, "lambda": lambda, "mu": mu, "short": a, "padded": b }))
        });
        (bad, None)
    })
}

/// `G(k,m)·s_μ` by the Petrie rule: unit coefficients, and equal to the
/// brute-force polynomial product.
pub fn check_pieri(k_max: usize, m_max: usize, mu_max: usize) -> VerifyReport {
    timed("pieri", format!("k=1..{k_max}, m=0..{m_max}, |mu|<={mu_max}"), || {
        let mut cases = Vec::new();
        for k in 1..=k_max {
            for m in 0..=m_max {
                for mu in partitions_up_to(mu_max) {
                    cases.push((k, m, mu));
                }
            }
        }
        let bad = first_failure(&cases, |(k, m, mu)| {
            let rule = pieri_expand(*k, *m, mu);
            if !rule.has_unit_coefficients() {
                return Some(json!({ "k": k, "m": m, "mu": mu, "expansion": rule }));
            }
            let oracle = multiply_oracle(&petrie_g(*k, *m), &SymFunc::s(mu.clone()));
            let rule_m = rule.to_basis(Basis::M);
            (rule_m != oracle).then(|| json!({ "k": k, "m": m, "mu": mu, "rule": rule_m, "oracle": oracle }))
        });
        (bad, Some(json!({ "cases": cases.len() })))
    })
}

fn iverson(b: bool) -> i64 {
    b as i64
}

/// Hall pairings of power sums with `h_n`, `e_n`, `G(k,m)` and `f_k(e_j)`.
pub fn check_hall_pairings(n_max: usize, k_max: usize, m_max: usize) -> VerifyReport {
    timed("hall_pairings", format!("n<={n_max}, k<={k_max}, m<={m_max}"), || {
        for n in 1..=n_max as i64 {
            let p = SymFunc::p(n);
            let hp = hall(&SymFunc::h(n), &p);
            if hp != coeff(1) {
                return (Some(json!({ "pairing": "(h_n, p_n)", "n": n, "got": hp.to_string() })), None);
            }
            let ep = hall(&SymFunc::e(n), &p);
            let expected = if n % 2 == 1 { 1 } else { -1 };
            if ep != coeff(expected) {
                return (Some(json!({ "pairing": "(e_n, p_n)", "n": n, "got": ep.to_string() })), None);
            }
        }
        for k in 1..=k_max {
            for m in 1..=m_max {
                let got = hall(&SymFunc::p(m as i64), &petrie_g(k, m));
                let expected = 1 - iverson(m % k == 0) * k as i64;
                if got != coeff(expected) {
                    return (Some(json!({ "pairing": "(p_m, G(k,m))", "k": k, "m": m, "got": got.to_string() })), None);
                }
            }
        }
        for k in 1..=k_max.min(4) {
            for j in 1..=3usize {
                let fe = frobenius(k, &SymFunc::e(j as i64));
                for m in 1..=m_max.min(8) {
                    let got = hall(&SymFunc::p(m as i64), &fe);
                    let sign = if j % 2 == 1 { 1 } else { -1 };
                    let expected = sign * iverson(m == k * j) * k as i64;
                    if got != coeff(expected) {
                        return (
                            Some(json!({ "pairing": "(p_m, f_k(e_j))", "k": k, "m": m, "j": j, "got": got.to_string() })),
                            None,
                        );
                    }
                }
            }
        }
        (None, None)
    })
}

/// Coproduct of Petrie functions, Frobenius/Verschiebung adjointness and the
/// action of `V_k` on power sums.
pub fn check_hopf(k_max: usize, m_max: usize, adj_degree: usize, adj_n: usize) -> VerifyReport {
    timed("hopf", format!("k<={k_max}, m<={m_max}; adjointness deg<={adj_degree}, n<={adj_n}"), || {
        let pairs: Vec<(usize, usize)> = (1..=k_max).flat_map(|k| (0..=m_max).map(move |m| (k, m))).collect();
        let bad = first_failure(&pairs, |&(k, m)| {
            let lhs = coproduct(&petrie_g(k, m));
            let rhs = (0..=m).fold(TensorFunc::zero(), |acc, i| {
                acc.add(&TensorFunc::tensor(&petrie_g(k, i), &petrie_g(k, m - i)))
            });
            (lhs != rhs).then(|| json!({ "identity": "coproduct of G(k,m)", "k": k, "m": m, "left": lhs, "right": rhs }))
        });
        if bad.is_some() {
            return (bad, None);
        }

        let basis: Vec<Partition> = partitions_up_to(adj_degree);
        for n in 1..=adj_n {
            // both sides vanish unless |a| = n|b|
            let small: Vec<&Partition> = basis.iter().filter(|b| n * b.size() <= adj_degree).collect();
            let lifted: Vec<SymFunc> = small.iter().map(|b| frobenius(n, &SymFunc::s((*b).clone()))).collect();
            let bad = first_failure(&basis, |a| {
                let va = verschiebung(n, &SymFunc::s(a.clone()));
                small.iter().zip(&lifted).find_map(|(b, fb)| {
                    let left = hall(&SymFunc::s(a.clone()), fb);
                    let right = hall(&va, &SymFunc::s((*b).clone()));
                    (left != right).then(|| {
                        json!({ "identity": "(a, f_n b) = (v_n a, b)", "n": n, "a": a, "b": b,
                                "left": left.to_string(), "right": right.to_string() })
                    })
                })
            });
            if bad.is_some() {
                return (bad, None);
            }
        }

        for k in 1..=k_max {
            for n in 1..=m_max {
                let p = SymFunc::p(n as i64);
                let expected = p.scale(&coeff(1 - iverson(n % k == 0) * k as i64));
                let got = v_map(k, &p);
                if !got.same_as(&expected) {
                    return (Some(json!({ "identity": "V_k(p_n)", "k": k, "n": n, "got": got })), None);
                }
                // the same through V_k(h_i) = G(k,i), applied termwise to p_n
                let termwise = p.to_basis(Basis::H).terms().iter().fold(SymFunc::zero(Basis::M), |mut acc, (l, c)| {
                    let prod = l
                        .parts()
                        .iter()
                        .fold(SymFunc::one(Basis::M), |x, &i| x.multiply(&petrie_g(k, i)));
                    acc.add_scaled(c, &prod);
                    acc
                });
                if !termwise.same_as(&expected) {
                    return (Some(json!({ "identity": "p_n via G(k,i)", "k": k, "n": n, "got": termwise })), None);
                }
            }
        }
        (None, None)
    })
}

/// Bernstein operators on `h_n`, `p_n` and Schur functions.
pub fn check_bernstein(max: usize, schur_max: usize) -> VerifyReport {
    timed("bernstein", format!("m,n<={max}; |lambda|<={schur_max}"), || {
        let h = |n: i64| SymFunc::h(n);
        for m in 0..=max as i64 {
            for n in 0..=max as i64 {
                let got = bernstein(m as usize, &h(n));
                let expected = h(m).multiply(&h(n)).sub(&h(m + 1).multiply(&h(n - 1))).expect("same basis");
                if !got.same_as(&expected) {
                    return (Some(json!({ "identity": "B_m(h_n)", "m": m, "n": n, "got": got })), None);
                }
                if n >= 1 {
                    let got = bernstein(m as usize, &SymFunc::p(n));
                    let expected = h(m).multiply(&SymFunc::p(n)).sub(&h(m + n)).expect("same basis");
                    if !got.same_as(&expected) {
                        return (Some(json!({ "identity": "B_m(p_n)", "m": m, "n": n, "got": got })), None);
                    }
                }
            }
        }
        let mut cases = Vec::new();
        for lambda in partitions_up_to(schur_max) {
            for m in lambda.first()..=schur_max.max(lambda.first()) {
                cases.push((m, lambda.clone()));
            }
        }
        let bad = first_failure(&cases, |(m, lambda)| {
            let got = bernstein(*m, &SymFunc::s(lambda.clone()));
            let expected = SymFunc::s(lambda.prepend(*m).expect("m >= lambda_1"));
            (got != expected).then(|| json!({ "identity": "B_m(s_lambda)", "m": m, "lambda": lambda, "got": got }))
        });
        (bad, None)
    })
}

/// `G̃(4,2,5) = m_{(3,2)}` and its Schur expansion.
pub fn check_modified_example() -> VerifyReport {
    timed("modified_petrie", "k=4, k'=2, m=5".into(), || {
        let f = petrie_modified(4, 2, 5).expect("valid parameters");
        if f != SymFunc::m(Partition::from_parts(vec![3, 2])) {
            return (Some(json!({ "identity": "G~(4,2,5) = m_(3,2)", "got": f })), None);
        }
        let expected = s_terms(&[(&[1, 1, 1, 1, 1], -2), (&[2, 1, 1, 1], 2), (&[2, 2, 1], -1), (&[3, 1, 1], -1), (&[3, 2], 1)]);
        let got = f.to_basis(Basis::S);
        (got != expected).then(|| mismatch("Schur expansion of G~(4,2,5)", &got, &expected)).map_or((None, None), |c| (Some(c), None))
    })
}

/// Default-range suite: every check above.
pub fn invariants_all() -> Vec<VerifyReport> {
    let mut reports = Vec::new();
    for n in 2..=8 {
        reports.push(check_liu_polo(n).expect("n > 1"));
    }
    reports.push(check_gessel(8));
    for k in 2..=5 {
        reports.push(check_genset(k, 7).expect("k >= 2"));
    }
    reports.push(scan_alexandersson(14));
    reports.push(check_petriefication_known(4, 6));
    reports.push(check_modified_example());
    reports.push(check_g_four_way(5, 8));
    reports.push(check_pet_agreement(5, 8, 6));
    reports.push(check_pet_explicit(6, 10));
    reports.push(check_pieri(4, 6, 4));
    reports.push(check_hall_pairings(10, 5, 10));
    reports.push(check_hopf(4, 8, 8, 3));
    reports.push(check_bernstein(6, 6));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gessel_low_degrees() {
        assert_eq!(gessel_coefficient(0, 2), -1);
        assert_eq!(gessel_coefficient(0, 1), 1);
        assert_eq!(gessel_coefficient(0, 3), -2);
        assert_eq!(gessel_component(0), SymFunc::one(Basis::E));
        // e_1² − e_2 = h_2 = G(3,2)
        assert!(gessel_component(2).same_as(&SymFunc::h(2)));
    }

    #[test]
    fn liu_polo_small() {
        assert!(check_liu_polo(1).is_err());
        let r = check_liu_polo(2).unwrap();
        assert!(r.passed, "{r:?}");
        let r = check_liu_polo(3).unwrap();
        assert!(r.passed, "{r:?}");
        let expected_lhs = SymFunc::from_terms(
            Basis::M,
            [
                (Partition::from_parts(vec![2, 2, 1]), coeff(1)),
                (Partition::from_parts(vec![2, 1, 1, 1]), coeff(1)),
                (Partition::column(5), coeff(1)),
            ],
        );
        let details = r.details.unwrap();
        assert_eq!(details["lhs"], serde_json::to_value(&expected_lhs).unwrap());
        let expected_rhs = s_terms(&[(&[2, 2, 1], 1), (&[2, 1, 1, 1], -1)]);
        assert_eq!(details["rhs"], serde_json::to_value(&expected_rhs).unwrap());
    }

    #[test]
    fn genset_small() {
        assert_eq!(genset_matrix(3, 1).det(), BigInt::one());
        assert!(check_genset(1, 3).is_err());
        let r = check_genset(2, 5).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn failing_report_has_counterexample() {
        let r = petriefication_report(4, &Partition::from_parts(vec![4, 4]));
        assert!(!r.passed);
        assert!(r.counterexample.is_some());
        assert_eq!(r.details.as_ref().unwrap()["flag"], json!(false));
        let line = r.to_json_line();
        let back: VerifyReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn report_json_shape() {
        let r = VerifyReport {
            name: "liu_polo".into(),
            range: "n=2..8".into(),
            passed: true,
            counterexample: None,
            details: None,
            elapsed_ms: 412,
        };
        assert_eq!(r.to_json_line(), r#"{"name":"liu_polo","range":"n=2..8","passed":true,"elapsed_ms":412}"#);
    }
}
