//! Brute-force reference arithmetic on honest polynomials.
//!
//! A symmetric function of degree at most `d` is determined by its image in
//! `d` variables. This module expands basis elements into explicit
//! polynomials in `x_1, …, x_d` straight from their combinatorial
//! definitions (Schur functions via semistandard tableaux) and reads
//! monomial coefficients back off. It shares no code with the transition
//! machinery in [`crate::symfunc`], so it can be used to check it.

use std::collections::HashMap;

use num_traits::Zero;

use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, Coeff, SymFunc};

/// Exponent vector of length `d` mapped to its coefficient.
pub type Polynomial = HashMap<Vec<u8>, Coeff>;

fn add_mono(poly: &mut Polynomial, expo: Vec<u8>, c: Coeff) {
    if c.is_zero() {
        return;
    }
    let e = poly.entry(expo).or_insert_with(Coeff::zero);
    *e += c;
}

fn unit(d: usize) -> Polynomial {
    let mut p = Polynomial::new();
    p.insert(vec![0; d], Coeff::from_integer(1.into()));
    p
}

fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_mono(&mut out, e, ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// All weak compositions of `n` into `d` parts, each part at most `cap`.
fn compositions(n: usize, d: usize, cap: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, d: usize, cap: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == d {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=n.min(cap) {
            cur.push(x as u8);
            go(n - x, d, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, cap, &mut Vec::with_capacity(d), &mut out);
    out
}

fn monomial(lambda: &Partition, d: usize) -> Polynomial {
    // every distinct rearrangement of λ padded with zeros
    let mut out = Polynomial::new();
    if lambda.len() > d {
        return out;
    }
    let one = Coeff::from_integer(1.into());
    for e in compositions(lambda.size(), d, lambda.first()) {
        let mut sorted: Vec<usize> = e.iter().map(|&x| x as usize).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if Partition::from_parts(sorted) == *lambda {
            out.insert(e, one.clone());
        }
    }
    out
}

fn single_h(n: usize, d: usize) -> Polynomial {
    let one = Coeff::from_integer(1.into());
    compositions(n, d, n).into_iter().map(|e| (e, one.clone())).collect()
}

fn single_e(n: usize, d: usize) -> Polynomial {
    let one = Coeff::from_integer(1.into());
    compositions(n, d, 1).into_iter().map(|e| (e, one.clone())).collect()
}

fn single_p(n: usize, d: usize) -> Polynomial {
    let one = Coeff::from_integer(1.into());
    (0..d)
        .map(|i| {
            let mut e = vec![0u8; d];
            e[i] = n as u8;
            (e, one.clone())
        })
        .collect()
}

/// Semistandard tableaux of shape `λ` with entries in `1..=d`, tallied by content.
fn schur(lambda: &Partition, d: usize) -> Polynomial {
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Polynomial::new();
    let one = Coeff::from_integer(1.into());

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        d: usize,
        out: &mut Polynomial,
        one: &Coeff,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u8; d];
            for row in grid.iter() {
                for &x in row {
                    e[x - 1] += 1;
                }
            }
            add_mono(out, e, one.clone());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=d {
            grid[r][c] = x;
            fill(idx + 1, cells, grid, d, out, one);
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, d, &mut out, &one);
    out
}

/// Expands `f` as a polynomial in `d` variables.
pub fn to_polynomial(f: &SymFunc, d: usize) -> Polynomial {
    let mut out = Polynomial::new();
    for (lambda, c) in f.terms() {
        let poly = match f.basis() {
            Basis::M => monomial(lambda, d),
            Basis::S => schur(lambda, d),
            Basis::H | Basis::E | Basis::P => {
                let single = match f.basis() {
                    Basis::H => single_h,
                    Basis::E => single_e,
                    _ => single_p,
                };
                lambda.parts().iter().fold(unit(d), |acc, &n| poly_mul(&acc, &single(n, d)))
            }
        };
        for (e, x) in poly {
            add_mono(&mut out, e, c * x);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Reads a symmetric polynomial back into the monomial basis. Only
/// partitions with at most `d` parts can occur.
pub fn from_polynomial(poly: &Polynomial, d: usize, max_degree: usize) -> SymFunc {
    let mut terms = Vec::new();
    for n in 0..=max_degree {
        for lambda in partitions_of(n, None) {
            if lambda.len() > d {
                continue;
            }
            let mut e = vec![0u8; d];
            for (i, &p) in lambda.parts().iter().enumerate() {
                e[i] = p as u8;
            }
            if let Some(c) = poly.get(&e) {
                terms.push((lambda, c.clone()));
            }
        }
    }
    SymFunc::from_terms(Basis::M, terms)
}

/// Coefficients of `a · b` at every partition-shaped exponent vector of
/// total degree at most `max_degree`. Since the product is symmetric these
/// coefficients determine it.
pub fn product_at_partitions(a: &Polynomial, b: &Polynomial, d: usize, max_degree: usize) -> SymFunc {
    let mut terms = Vec::new();
    for n in 0..=max_degree {
        for gamma in partitions_of(n, None) {
            if gamma.len() > d {
                continue;
            }
            let mut target = vec![0u8; d];
            for (i, &p) in gamma.parts().iter().enumerate() {
                target[i] = p as u8;
            }
            // Σ over all α ≤ γ entrywise of a[α] b[γ − α]
            let mut total = Coeff::zero();
            let mut alpha = vec![0u8; d];
            loop {
                if let Some(x) = a.get(&alpha) {
                    let beta: Vec<u8> = target.iter().zip(&alpha).map(|(t, s)| t - s).collect();
                    if let Some(y) = b.get(&beta) {
                        total += x * y;
                    }
                }
                let mut i = 0;
                while i < d && alpha[i] == target[i] {
                    alpha[i] = 0;
                    i += 1;
                }
                if i == d {
                    break;
                }
                alpha[i] += 1;
            }
            terms.push((gamma, total));
        }
    }
    SymFunc::from_terms(Basis::M, terms)
}

/// Product of two symmetric functions computed from their explicit
/// polynomial expansions in `deg f + deg g` variables. Returned in the
/// monomial basis.
pub fn multiply_oracle(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let d = f.degree() + g.degree();
    product_at_partitions(&to_polynomial(f, d), &to_polynomial(g, d), d, d)
}
