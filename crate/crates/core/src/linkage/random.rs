//! Seeded random inputs and property suites.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::{geometric_link_report, tor_nonvanishing_check, GEOMETRIC_CONDITIONS};
use super::report::{LinkageReport, Status};
use crate::arith::{Monomial, Poly};
use crate::error::Result;
use crate::groebner::{GradedRing, Ideal};
use crate::homology::{FpModule, Matrix};

/// Default seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 20_240_607;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn monomials_of_degree(ring: &GradedRing, d: i32) -> Vec<Monomial> {
    let base = ring.base();
    let n = base.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn go(base: &crate::arith::PolyRing, i: usize, left: i32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            if left == 0 {
                out.push(base.monomial(exps));
            }
            return;
        }
        let w = base.weights()[i];
        let mut e = 0;
        while e * w <= left {
            exps[i] = e as u16;
            go(base, i + 1, left - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
    go(base, 0, d, &mut exps, &mut out);
    out
}

/// Nonzero coefficient in `1..p`, kept small for readable output.
fn coeff<R: Rng>(ring: &GradedRing, rng: &mut R) -> i64 {
    let p = ring.field().characteristic() as i64;
    rng.gen_range(1..p.min(10))
}

/// A homogeneous form of degree `d`: a single monomial with probability
/// `mono`, else a combination of two.
fn random_form<R: Rng>(ring: &GradedRing, d: i32, mono: f64, rng: &mut R) -> Poly {
    let ms = monomials_of_degree(ring, d);
    let base = ring.base();
    let count = if rng.gen_bool(mono) { 1 } else { 2 };
    let terms = ms
        .choose_multiple(rng, count.min(ms.len()))
        .map(|m| (m.clone(), base.field().elem(coeff(ring, rng))))
        .collect();
    ring.reduce(&base.from_terms(terms))
}

/// Pairs `(I, J)` with `I = (0 : J)` and `J = (0 : I)`, from `J = (0 : (0 : J0))`
/// for random `J0`. Pairs where either ideal is zero or the unit ideal are
/// skipped.
pub fn random_linked_pairs<R: Rng>(ring: &GradedRing, count: usize, rng: &mut R) -> Result<Vec<(Ideal, Ideal)>> {
    let zero = Ideal::zero(ring);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let k = rng.gen_range(1..=2);
        let gens: Vec<Poly> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=2);
                random_form(ring, d, 0.75, rng)
            })
            .filter(|f| !f.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let j0 = Ideal::new(ring, gens)?;
        let i = zero.colon(&j0)?;
        if i.is_zero() || i.is_unit() {
            continue;
        }
        let j = zero.colon(&i)?;
        if j.is_zero() || j.is_unit() {
            continue;
        }
        out.push((i, j));
    }
    Ok(out)
}

/// A finite-length module: `coker` of a random matrix of linear forms on
/// generators of degree 0, with `m^s e_i` added for every generator.
pub fn random_finite_length_module<R: Rng>(ring: &GradedRing, rng: &mut R) -> Result<FpModule> {
    let base = ring.base();
    let gens = rng.gen_range(1..=2);
    let mut cols: Vec<Vec<Poly>> = Vec::new();
    let mut col_degs = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let col: Vec<Poly> = (0..gens)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    Poly::zero()
                } else {
                    random_form(ring, 1, 0.6, rng)
                }
            })
            .collect();
        cols.push(col);
        col_degs.push(1);
    }
    for i in 0..gens {
        let s = rng.gen_range(1..=3);
        for m in monomials_of_degree(ring, s) {
            let mut col = vec![Poly::zero(); gens];
            col[i] = ring.reduce(&base.from_terms(vec![(m, base.field().elem(1))]));
            cols.push(col);
            col_degs.push(s);
        }
    }
    let mat = Matrix::new(ring, vec![0; gens], col_degs, cols)?;
    Ok(FpModule::coker(mat))
}

/// Counts of a randomized suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct SuiteSummary {
    pub cases: usize,
    pub vacuous: usize,
    pub failures: Vec<String>,
}

/// Agreement of the five geometric-linkage conditions on random pairs linked
/// by `(0)` in each ring.
pub fn geolink_battery_suite(rings: &[GradedRing], per_ring: usize, seed: u64) -> Result<(SuiteSummary, LinkageReport)> {
    let mut r = rng(seed);
    let mut summary = SuiteSummary::default();
    let mut seen: HashMap<(String, String, String), bool> = HashMap::new();
    for ring in rings {
        for (i, j) in random_linked_pairs(ring, per_ring, &mut r)? {
            summary.cases += 1;
            let key = (ring.describe(), i.format(), j.format());
            let agree = match seen.get(&key) {
                Some(&a) => a,
                None => {
                    let rep = geometric_link_report(&i, &j, true)?;
                    let a = rep.consistency
                        && GEOMETRIC_CONDITIONS.iter().all(|c| rep.get(c) != Some(Status::NotComputed));
                    seen.insert(key.clone(), a);
                    a
                }
            };
            if !agree {
                summary.failures.push(format!("{} : {} ~ {}", key.0, key.1, key.2));
            }
        }
    }
    let mut rep = LinkageReport::new("random_geolink_battery");
    rep.verdict(
        "conditions_agree",
        summary.failures.is_empty() && summary.cases > 0,
        Some(format!("{} cases, seed {seed}", summary.cases)),
    );
    rep.consistency = summary.failures.is_empty();
    Ok((summary, rep))
}

/// `Tor_n(M, λΩ^n M) ≠ 0` on random finite-length modules for `n ≤ nmax`.
pub fn tor_nonvanishing_suite(
    rings: &[GradedRing],
    modules_per_ring: usize,
    nmax: usize,
    seed: u64,
) -> Result<(SuiteSummary, LinkageReport)> {
    let mut r = rng(seed);
    let mut summary = SuiteSummary::default();
    for ring in rings {
        for k in 0..modules_per_ring {
            let m = random_finite_length_module(ring, &mut r)?;
            for n in 0..=nmax {
                summary.cases += 1;
                let rep = tor_nonvanishing_check(&m, n)?;
                match rep.get("tor_nonzero") {
                    Some(Status::True) => {}
                    Some(Status::NotComputed) => summary.vacuous += 1,
                    _ => summary
                        .failures
                        .push(format!("{} module {k} n {n}", ring.describe())),
                }
            }
        }
    }
    let mut rep = LinkageReport::new("random_tor_nonvanishing");
    rep.verdict(
        "tor_nonzero_whenever_defined",
        summary.failures.is_empty(),
        Some(format!(
            "{} cases, {} vacuous, seed {seed}",
            summary.cases, summary.vacuous
        )),
    );
    Ok((summary, rep))
}
