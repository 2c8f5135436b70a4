//! Transpose, syzygies, the linkage operator `λ = Ω Tr`, cosyzygies, and
//! numeric certificates standing in for module isomorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GradedRing, Ideal};
use crate::homology::{
    canonical_module, depth, dual, syzygy_module, trace_and_stability, BettiTable, FpModule,
    HomDim,
};

/// Homological degree through which Betti tables are compared.
pub const BETTI_BOUND: usize = 3;
/// Number of degrees of the Hilbert function compared, from the lowest
/// generator degree on.
pub const HILBERT_WINDOW: i32 = 12;

/// `Tr M = coker(A^T)` for the minimal presentation matrix `A` of `M`.
pub fn transpose(m: &FpModule) -> FpModule {
    let mm = m.minimal_presentation();
    FpModule::coker(mm.presentation().transpose()).minimal_presentation()
}

/// `Ω^n M`, with `Ω^0 M = M`.
pub fn syzygy_power(m: &FpModule, n: usize) -> Result<FpModule> {
    syzygy_module(m, n)
}

/// `λM = Ω Tr M`.
pub fn lambda(m: &FpModule) -> Result<FpModule> {
    syzygy_module(&transpose(m), 1)
}

/// `R` is Gorenstein: Cohen-Macaulay with a cyclic free canonical module.
pub fn is_gorenstein_ring(ring: &GradedRing) -> Result<bool> {
    match canonical_module(ring) {
        Ok(w) => Ok(w.is_free() && w.is_cyclic()),
        Err(Error::Precondition { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `Ω^{-1} M = (Ω(M*))*` for a maximal Cohen-Macaulay module over a
/// Gorenstein ring. Free modules give the zero module.
pub fn cosyzygy(m: &FpModule) -> Result<FpModule> {
    let ring = m.ring();
    if !is_gorenstein_ring(ring)? {
        return Err(Error::precondition("cosyzygy", "the ring is not Gorenstein"));
    }
    if m.is_zero() {
        return Ok(m.clone());
    }
    let d = depth(m)?;
    if d != HomDim::Finite(ring.dim().max(0) as usize) {
        return Err(Error::precondition(
            "cosyzygy",
            format!("module is not maximal Cohen-Macaulay (depth {d}, dim R {})", ring.dim()),
        ));
    }
    let om = syzygy_module(&dual(m)?, 1)?;
    dual(&om)
}

/// Numeric invariants compared in place of an isomorphism test.
#[derive(Clone, Debug, Serialize)]
pub struct NumericProfile {
    /// Betti numbers through [`BETTI_BOUND`], internal degrees normalized.
    pub betti: Vec<(usize, i32, usize)>,
    /// Hilbert function from the lowest generator degree on.
    pub hilbert: Vec<i64>,
    pub annihilator: String,
    pub generators: usize,
    #[serde(skip)]
    ann: Option<Ideal>,
}

pub fn numeric_profile(m: &FpModule) -> Result<NumericProfile> {
    let mm = m.minimal_presentation();
    let betti: BettiTable = mm.resolution(BETTI_BOUND)?.betti().normalized();
    let hilbert = match mm.series().min_degree() {
        _ if mm.is_zero() => Vec::new(),
        Some(lo) => (lo..lo + HILBERT_WINDOW).map(|d| mm.hilbert_function(d)).collect(),
        None => Vec::new(),
    };
    let ann = mm.annihilator();
    Ok(NumericProfile {
        betti: betti.entries().into_iter().map(|e| (e.i, e.j, e.beta)).collect(),
        hilbert,
        annihilator: ann.format(),
        generators: mm.num_generators(),
        ann: Some(ann),
    })
}

impl NumericProfile {
    /// Same Betti table, Hilbert function up to shift, annihilator and
    /// number of generators.
    pub fn agrees_with(&self, other: &NumericProfile) -> bool {
        let ann_eq = match (&self.ann, &other.ann) {
            (Some(a), Some(b)) => a == b,
            _ => self.annihilator == other.annihilator,
        };
        self.betti == other.betti
            && self.hilbert == other.hilbert
            && self.generators == other.generators
            && ann_eq
    }
}

/// `M` and `N` share every invariant of [`NumericProfile`].
pub fn numerically_consistent(m: &FpModule, n: &FpModule) -> Result<bool> {
    Ok(numeric_profile(m)?.agrees_with(&numeric_profile(n)?))
}

/// Numeric consistency after splitting off free summands on both sides.
pub fn stably_consistent(m: &FpModule, n: &FpModule) -> Result<bool> {
    let a = trace_and_stability(m)?.stable_part;
    let b = trace_and_stability(n)?.stable_part;
    numerically_consistent(&a, &b)
}
