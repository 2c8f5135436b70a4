//! Finitely presented graded modules and their homological invariants.

pub mod functors;
pub mod invariants;
pub mod matrix;
pub mod module;
pub mod resolution;
pub(crate) mod submodule;

pub use functors::{dual, ext, ext_is_zero, hom, tensor, tor, tor_is_zero};
pub use invariants::{
    canonical_module, depth, gdim_suite, gorenstein_dimension, grade, is_reflexive,
    is_totally_reflexive, module_grade, projective_dimension, ring_depth, syzygy_module,
    trace_and_stability, HomDim, Stability,
};
pub use matrix::{Matrix, MatrixJson};
pub use module::{FpModule, LengthStatus, ModuleNumerics};
pub use resolution::{invariant_counters, BettiEntry, BettiTable, InvariantCounters, Resolution};

/// Generators of the kernel of a matrix (minimal, as columns).
pub fn syzygy_matrix(a: &Matrix) -> Matrix {
    submodule::kernel(a)
}
