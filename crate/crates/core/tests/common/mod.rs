//! Shared helpers for integration tests, including dense linear-algebra
//! oracles that do not use Groebner bases.

#![allow(dead_code)]

use std::collections::HashMap;

use linkage::arith::Poly;
use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{FpModule, Matrix};

pub const P: u64 = 32003;

pub fn ring(vars: &[&str], rels: &[&str]) -> GradedRing {
    GradedRing::from_text(vars, rels, P as u32).expect("ring")
}

pub fn ideal(r: &GradedRing, text: &str) -> Ideal {
    Ideal::parse(r, text).expect("ideal")
}

pub fn quotient(r: &GradedRing, text: &str) -> FpModule {
    FpModule::quotient(&ideal(r, text))
}

/// Cokernel of the matrix with the given rows of polynomial texts.
pub fn coker(r: &GradedRing, rows: &[&[&str]]) -> FpModule {
    let rows = rows
        .iter()
        .map(|row| row.iter().map(|s| r.parse(s).expect("poly")).collect())
        .collect();
    FpModule::coker(Matrix::from_rows(r, rows, None).expect("matrix"))
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    acc
}

/// Rank of a dense matrix over `F_P`.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(P)) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = pow_mod(rows[r][c], P - 2);
        for v in rows[r].iter_mut() {
            *v = *v * inv % P;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v = (*v + P * P - f * p) % P;
                }
            }
        }
        r += 1;
    }
    r
}

/// Multiplication by `x^e` on `k[x]/(x^b)` in the basis `1, x, ..., x^(b-1)`.
fn shift_matrix(e: usize, b: usize) -> Vec<Vec<u64>> {
    (0..b)
        .map(|row| (0..b).map(|col| u64::from(col + e == row)).collect())
        .collect()
}

fn mult_rank(e: Option<usize>, b: usize) -> usize {
    match e {
        None => 0,
        Some(e) => rank(shift_matrix(e, b)),
    }
}

/// `(length Ext^i(A/x^a, A/x^b), length Tor_i(A/x^a, A/x^b))` over
/// `A = k[x]/(x^m)`, from the periodic resolution with differentials
/// `x^a, x^(m-a), x^a, ...` and dense ranks on `A/x^b`.
pub fn cyclic_ext_tor_oracle(m: usize, a: usize, b: usize, i: usize) -> (usize, usize) {
    let b = b.min(m);
    if a == 0 || b == 0 {
        return (0, 0);
    }
    if a >= m {
        return if i == 0 { (b, b) } else { (0, 0) };
    }
    // exponent of d_j, with d_0 = 0
    let d = |j: usize| -> Option<usize> {
        match j {
            0 => None,
            j if j % 2 == 1 => Some(a),
            _ => Some(m - a),
        }
    };
    let ker = |j: usize| b - mult_rank(d(j), b);
    let tor = ker(i) - mult_rank(d(i + 1), b);
    let ext = (b - mult_rank(d(i + 1), b)) - mult_rank(d(i), b);
    (ext, tor)
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<u16>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e as u16);
            out.push(rest);
        }
    }
    out
}

/// `dim_k (P/I)_d` for homogeneous generators in standard-graded `P`, as
/// `dim P_d` minus the rank of all products `m g` of degree `d`.
pub fn dense_hilbert(nvars: usize, gens: &[Poly], d: usize) -> usize {
    let basis = monomials(nvars, d);
    let index: HashMap<&Vec<u16>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd < 0 || gd as usize > d {
            continue;
        }
        for m in monomials(nvars, d - gd as usize) {
            let mut row = vec![0u64; basis.len()];
            for (mono, c) in g.terms() {
                let e: Vec<u16> = mono.exponents().iter().zip(&m).map(|(x, y)| x + y).collect();
                row[index[&e]] = u64::from(c.value());
            }
            rows.push(row);
        }
    }
    basis.len() - rank(rows)
}
