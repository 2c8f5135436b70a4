//! Hilbert series of monomial ideals by the staircase recursion
//! `N(M) = N(M') - t^deg(m) N(M' : m)` for `M = M' + (m)`.
//!
//! Series are written `N(t) / prod(1 - t^w_i)` with integer numerators.

use crate::arith::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator coefficients, constant term first.
    pub numerator: Vec<i64>,
    /// Krull dimension of `P/M`; −1 when `M` is the unit ideal.
    pub dim: i32,
    /// `Q(1)` where `N(t) = (1-t)^(n-dim) Q(t)`. For standard grading this is
    /// the degree; with weights it is the degree times the product of weights.
    pub multiplicity: i64,
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

fn trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn colon_mono(m: &Monomial, by: &Monomial, weights: &[i32]) -> Monomial {
    let e: Vec<u16> = m
        .exponents()
        .iter()
        .zip(by.exponents())
        .map(|(&a, &b)| a.saturating_sub(b))
        .collect();
    Monomial::new(&e, weights)
}

/// Numerator `N(t)` of the Hilbert series of `P/(gens)`.
pub fn numerator(gens: &[Monomial], weights: &[i32]) -> Vec<i64> {
    let g = minimalize(gens);
    trim(numerator_rec(&g, weights))
}

fn numerator_rec(g: &[Monomial], weights: &[i32]) -> Vec<i64> {
    if g.is_empty() {
        return vec![1];
    }
    if g.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let coprime = g
        .iter()
        .enumerate()
        .all(|(i, a)| g[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for m in g {
            let mut next = acc.clone();
            poly_sub_shifted(&mut next, &acc, m.degree() as usize);
            acc = next;
        }
        return acc;
    }
    let (last, rest) = g.split_last().unwrap();
    let mut n = numerator_rec(rest, weights);
    let col: Vec<Monomial> = rest.iter().map(|m| colon_mono(m, last, weights)).collect();
    let nc = numerator_rec(&minimalize(&col), weights);
    poly_sub_shifted(&mut n, &nc, last.degree() as usize);
    n
}

/// Divides by `(1 - t)` as often as possible; returns (quotient, count).
fn strip_roots_at_one(mut a: Vec<i64>) -> (Vec<i64>, usize) {
    let mut k = 0;
    while !a.is_empty() && a.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q_j = sum_{i<=j} a_i
        let mut q = Vec::with_capacity(a.len() - 1);
        let mut s = 0;
        for &c in &a[..a.len() - 1] {
            s += c;
            q.push(s);
        }
        a = trim(q);
        k += 1;
    }
    (a, k)
}

pub fn hilbert_data(gens: &[Monomial], weights: &[i32]) -> HilbertData {
    let n = weights.len() as i32;
    let num = numerator(gens, weights);
    if num.is_empty() {
        return HilbertData {
            numerator: num,
            dim: -1,
            multiplicity: 0,
        };
    }
    let (q, k) = strip_roots_at_one(num.clone());
    HilbertData {
        numerator: num,
        dim: n - k as i32,
        multiplicity: q.iter().sum(),
    }
}

/// Dimension of `P/(gens)` as the size of the largest set of variables `S`
/// such that no generator is supported inside `S`. Exponential in the number
/// of variables; an independent check of [`hilbert_data`].
pub fn dim_by_independent_sets(gens: &[Monomial], nvars: usize) -> i32 {
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    (0u64..(1 << nvars))
        .filter(|s| supports.iter().all(|&g| g & !s != 0))
        .map(|s| s.count_ones() as i32)
        .max()
        .unwrap_or(0)
}

/// Number of monomials of each weighted degree `0..=upto`.
pub fn monomial_counts(weights: &[i32], upto: usize) -> Vec<i64> {
    let mut c = vec![0i64; upto + 1];
    c[0] = 1;
    for &w in weights {
        let w = w as usize;
        if w == 0 {
            continue;
        }
        for d in w..=upto {
            c[d] += c[d - w];
        }
    }
    c
}

/// Hilbert series of a graded module `⊕ P(-twist_i) / M_i` with monomial
/// submodules `M_i`.
#[derive(Clone, Debug)]
pub struct ModuleSeries {
    weights: Vec<i32>,
    parts: Vec<(i32, Vec<i64>, i32)>,
}

impl ModuleSeries {
    pub fn new(weights: &[i32], components: &[(i32, Vec<Monomial>)]) -> ModuleSeries {
        let parts = components
            .iter()
            .map(|(tw, gens)| {
                let h = hilbert_data(gens, weights);
                (*tw, h.numerator, h.dim)
            })
            .filter(|p| p.2 >= 0)
            .collect();
        ModuleSeries {
            weights: weights.to_vec(),
            parts,
        }
    }

    /// Krull dimension of the module; −1 for the zero module.
    pub fn dim(&self) -> i32 {
        self.parts.iter().map(|p| p.2).max().unwrap_or(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Dimension of the degree-`d` piece.
    pub fn value(&self, d: i32) -> i64 {
        let mut total = 0;
        for (tw, num, _) in &self.parts {
            let top = d - tw;
            if top < 0 {
                continue;
            }
            let counts = monomial_counts(&self.weights, top as usize);
            for (k, &c) in num.iter().enumerate() {
                if (k as i32) <= top {
                    total += c * counts[(top - k as i32) as usize];
                }
            }
        }
        total
    }

    /// Lowest degree with a possibly nonzero piece.
    pub fn min_degree(&self) -> Option<i32> {
        self.parts.iter().map(|p| p.0).min()
    }

    /// When the module has finite length: the inclusive degree range that
    /// contains every nonzero piece.
    pub fn finite_support(&self) -> Option<(i32, i32)> {
        if self.dim() > 0 {
            return None;
        }
        let lo = self.min_degree()?;
        let hi = self
            .parts
            .iter()
            .map(|(tw, num, _)| tw + num.len() as i32)
            .max()
            .unwrap_or(lo);
        // N_i / prod(1 - t^w) is a polynomial of degree deg N_i - sum(w)
        Some((lo, hi))
    }

    /// Exact length (sum of all piece dimensions) when finite.
    pub fn length(&self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        let (lo, hi) = self.finite_support()?;
        Some((lo..=hi).map(|d| self.value(d)).sum::<i64>() as u64)
    }
}
