//! Depth, grade, projective and Gorenstein dimension, stability, canonical modules.

use std::fmt;

use serde::{Serialize, Serializer};

use super::functors::{dual, ext, ext_is_zero};
use super::matrix::Matrix;
use super::module::FpModule;
use super::resolution::{record_ab, record_bridger};
use super::submodule::{kernel, span_contains};
use crate::error::{Error, Result};
use crate::groebner::{GradedRing, Ideal};

/// An integer extended by `-∞` and `+∞`, used for dimensions, depth and grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomDim {
    NegInfinite,
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == HomDim::Infinite
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::NegInfinite => f.write_str("-inf"),
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(n) => s.serialize_u64(*n as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

fn ring_module(ring: &GradedRing) -> FpModule {
    FpModule::free(ring, &[0])
}

/// `depth M = min { i : Ext^i(k, M) ≠ 0 }`; `+∞` for the zero module.
pub fn depth(m: &FpModule) -> Result<HomDim> {
    if m.is_zero() {
        return Ok(HomDim::Infinite);
    }
    let ring = m.ring();
    let k = FpModule::residue_field(ring);
    for i in 0..=ring.nvars() {
        if !ext_is_zero(i, &k, m)? {
            return Ok(HomDim::Finite(i));
        }
    }
    Err(Error::Invariant("depth exceeds the number of variables".into()))
}

pub fn ring_depth(ring: &GradedRing) -> Result<usize> {
    depth(&ring_module(ring))?
        .finite()
        .ok_or_else(|| Error::precondition("ring_depth", "zero ring"))
}

/// `grade I = min { i : Ext^i(R/I, R) ≠ 0 }`; `+∞` for the unit ideal.
pub fn grade(ideal: &Ideal) -> Result<HomDim> {
    if ideal.is_unit() {
        return Ok(HomDim::Infinite);
    }
    let ring = ideal.ring();
    let q = FpModule::quotient(ideal);
    let r = ring_module(ring);
    for i in 0..=ring.nvars() {
        if !ext_is_zero(i, &q, &r)? {
            return Ok(HomDim::Finite(i));
        }
    }
    Err(Error::Invariant("grade exceeds the number of variables".into()))
}

/// Grade of a module: the grade of its annihilator.
pub fn module_grade(m: &FpModule) -> Result<HomDim> {
    grade(&m.annihilator())
}

/// Projective dimension, decided by whether `Ω^{depth R} M` is free.
/// Finite answers are cross-checked against `pd + depth M = depth R`.
pub fn projective_dimension(m: &FpModule) -> Result<HomDim> {
    if m.is_zero() {
        return Ok(HomDim::NegInfinite);
    }
    let t = ring_depth(m.ring())?;
    let res = m.resolution(t + 1)?;
    if !res.is_complete() || res.len() > t {
        return Ok(HomDim::Infinite);
    }
    let pd = res.len();
    let dm = depth(m)?.finite().unwrap_or(0);
    let ok = pd + dm == t;
    record_ab(ok);
    if !ok {
        return Err(Error::Invariant(format!(
            "pd {pd} + depth {dm} differs from depth R = {t}"
        )));
    }
    Ok(HomDim::Finite(pd))
}

/// `Ω^n M` presented by `d_{n+1}` on the generators of `F_n`.
pub fn syzygy_module(m: &FpModule, n: usize) -> Result<FpModule> {
    if n == 0 {
        return Ok(m.minimal_presentation());
    }
    let res = m.resolution(n + 1)?;
    Ok(FpModule::coker(res.differential(n + 1)).minimal_presentation())
}

/// `M ≅ M**` via `Ext^1(Tr M, R) = Ext^2(Tr M, R) = 0`, computed from
/// `K = ker A^T` and `L = ker K`.
pub fn is_reflexive(m: &FpModule) -> Result<bool> {
    let mm = m.minimal_presentation();
    let a = mm.presentation();
    let ring = m.ring();
    let k = kernel(&a.transpose());
    let kt = k.transpose();
    // ker K^T ⊆ im A
    let z1 = kernel(&kt);
    if !span_contains(ring, z1.row_degs(), a.columns(), z1.columns()) {
        return Ok(false);
    }
    // ker L^T ⊆ im K^T
    let l = kernel(&k);
    let z2 = kernel(&l.transpose());
    Ok(span_contains(ring, z2.row_degs(), kt.columns(), z2.columns()))
}

/// Totally reflexive: reflexive, and `Ext^i(M, R) = Ext^i(M*, R) = 0` for
/// `1 ≤ i ≤ dim R + 1`.
pub fn is_totally_reflexive(m: &FpModule) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    if !is_reflexive(m)? {
        return Ok(false);
    }
    let ring = m.ring();
    let r = ring_module(ring);
    let top = ring.dim().max(0) as usize + 1;
    let md = dual(m)?;
    for i in 1..=top {
        if !ext_is_zero(i, m, &r)? || !ext_is_zero(i, &md, &r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(M totally reflexive, G-dim M)`. G-dimension is the least `n ≤ depth R`
/// with `Ω^n M` totally reflexive, `+∞` if there is none; finite values are
/// cross-checked against `gdim + depth M = depth R`.
pub fn gdim_suite(m: &FpModule) -> Result<(bool, HomDim)> {
    if m.is_zero() {
        return Ok((true, HomDim::NegInfinite));
    }
    let t = ring_depth(m.ring())?;
    let tr = is_totally_reflexive(m)?;
    let mut found = if tr { Some(0) } else { None };
    if found.is_none() {
        for n in 1..=t {
            let om = syzygy_module(m, n)?;
            if is_totally_reflexive(&om)? {
                found = Some(n);
                break;
            }
        }
    }
    let Some(g) = found else {
        return Ok((tr, HomDim::Infinite));
    };
    let dm = depth(m)?.finite().unwrap_or(0);
    let ok = g + dm == t;
    record_bridger(ok);
    if !ok {
        return Err(Error::Invariant(format!(
            "gdim {g} + depth {dm} differs from depth R = {t}"
        )));
    }
    Ok((tr, HomDim::Finite(g)))
}

pub fn gorenstein_dimension(m: &FpModule) -> Result<HomDim> {
    Ok(gdim_suite(m)?.1)
}

/// Result of [`trace_and_stability`].
#[derive(Clone, Debug)]
pub struct Stability {
    /// Ideal generated by `φ(M)` for `φ ∈ M*`.
    pub trace: Ideal,
    pub stable: bool,
    /// `M ≅ R^free_rank ⊕ stable_part` with `stable_part` stable.
    pub free_rank: usize,
    pub stable_part: FpModule,
}

fn dual_generators(m: &FpModule) -> Matrix {
    kernel(&m.presentation().transpose())
}

/// Trace ideal, stability, and the splitting `M ≅ R^a ⊕ N`.
pub fn trace_and_stability(m: &FpModule) -> Result<Stability> {
    let ring = m.ring();
    let mut cur = m.minimal_presentation();
    let phi = dual_generators(&cur);
    let gens = phi.columns().iter().flatten().cloned().collect();
    let trace = Ideal::from_homogeneous(ring, gens);
    let stable = !trace.is_unit();
    let mut free_rank = 0;
    loop {
        let phi = dual_generators(&cur);
        let unit_row = phi
            .columns()
            .iter()
            .find_map(|c| c.iter().position(|f| f.is_unit()));
        match unit_row {
            Some(i) => {
                cur = cur.drop_generators(&[i]).minimal_presentation();
                free_rank += 1;
            }
            None => break,
        }
    }
    Ok(Stability {
        trace,
        stable,
        free_rank,
        stable_part: cur,
    })
}

/// `ω_R = Ext^c_P(R, P)` with `c = codim`, for Cohen-Macaulay `R = P/I`.
pub fn canonical_module(ring: &GradedRing) -> Result<FpModule> {
    let d = ring.dim();
    if d < 0 {
        return Err(Error::precondition("canonical_module", "zero ring"));
    }
    let dep = ring_depth(ring)?;
    if dep as i32 != d {
        return Err(Error::precondition(
            "canonical_module",
            format!("canonical module requires CM (depth {dep}, dim {d})"),
        ));
    }
    let p = ring.ambient();
    let c = ring.nvars() - d as usize;
    let rel = Ideal::from_homogeneous(&p, ring.relation_gb().to_vec());
    let e = ext(c, &FpModule::quotient(&rel), &FpModule::free(&p, &[0]))?;
    e.change_ring(ring).map(|m| m.minimal_presentation())
}
