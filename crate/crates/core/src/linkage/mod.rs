//! Linkage operators and verifiers.

mod checks;
mod operators;
pub mod random;
mod report;

pub use checks::{
    betti_swap_check, betti_swap_holds, depth_via_linked_syzygies, dual_relation_check, dual_relation_holds, ext_tor_duality_check,
    geometric_link_report, ideals_linked_by, is_gorenstein_ideal, is_horizontally_linked,
    tor_nonvanishing_check, tor_shift_check, verify_sum_theorem, DepthScan, DepthStep,
    GorensteinVerdict, HdimSelector, GEOMETRIC_CONDITIONS,
};
pub use operators::{
    cosyzygy, is_gorenstein_ring, lambda, numeric_profile, numerically_consistent,
    stably_consistent, syzygy_power, transpose, NumericProfile, BETTI_BOUND, HILBERT_WINDOW,
};
pub use report::{Hypothesis, HypothesisStatus, LinkageReport, Status, Verdict};
