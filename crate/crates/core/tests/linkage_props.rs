mod common;

use common::{quotient, ring};
use linkage::arith::{Monomial, Poly};
use linkage::groebner::GradedRing;
use linkage::homology::{
    depth, ring_depth, syzygy_module, trace_and_stability, FpModule, HomDim, Matrix,
};
use linkage::linkage::{
    betti_swap_check, betti_swap_holds, cosyzygy, dual_relation_check, is_horizontally_linked, lambda,
    numerically_consistent, syzygy_power, tor_nonvanishing_check, transpose, Status,
};
use proptest::prelude::*;

fn rings() -> Vec<GradedRing> {
    vec![
        ring(&["x"], &["x^3"]),
        ring(&["x", "y"], &["x*y"]),
        ring(&["x", "y"], &["x^2"]),
        ring(&["x", "y"], &["x^2", "x*y"]),
    ]
}

/// `coker` of a matrix of linear forms; coefficients cycle over the variables.
fn linear_module(r: &GradedRing, nrows: usize, ncols: usize, coeffs: &[u32]) -> FpModule {
    let base = r.base();
    let n = base.nvars();
    let mut it = coeffs.iter().cycle();
    let rows: Vec<Vec<Poly>> = (0..nrows)
        .map(|_| {
            (0..ncols)
                .map(|_| {
                    let terms = (0..n)
                        .filter_map(|v| {
                            let c = *it.next().unwrap();
                            (c != 0).then(|| {
                                (Monomial::var(v, base.weights()), base.field().elem(i64::from(c)))
                            })
                        })
                        .collect();
                    base.from_terms(terms)
                })
                .collect()
        })
        .collect();
    if ncols == 0 {
        return FpModule::free(r, &vec![0; nrows]);
    }
    FpModule::coker(Matrix::from_rows(r, rows, Some(vec![0; nrows])).unwrap())
}

fn module_strategy() -> impl Strategy<Value = (usize, usize, usize, Vec<u32>)> {
    (0usize..4, 1usize..=2, 0usize..=2, prop::collection::vec(0u32..3, 8))
}

fn is_stable(m: &FpModule) -> bool {
    trace_and_stability(m).unwrap().stable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_ignores_free_summands((k, nr, nc, c) in module_strategy()) {
        let r = &rings()[k];
        let m = linear_module(r, nr, nc, &c);
        let with_free = m.direct_sum(&FpModule::free(r, &[0])).unwrap();
        prop_assert!(numerically_consistent(&lambda(&with_free).unwrap(), &lambda(&m).unwrap()).unwrap());
    }

    #[test]
    fn lambda_vanishes_exactly_on_free((k, nr, nc, c) in module_strategy()) {
        let m = linear_module(&rings()[k], nr, nc, &c);
        let free = m.minimal_presentation().is_free();
        prop_assert_eq!(lambda(&m).unwrap().is_zero(), free);
    }

    #[test]
    fn betti_swap_and_dual_relation((k, nr, nc, c) in module_strategy()) {
        let m = linear_module(&rings()[k], nr, nc, &c);
        let rep = betti_swap_check(&m).unwrap();
        prop_assert!(!rep.hypotheses_hold() || rep.passed(), "{}", rep);
        if m.is_zero() || is_stable(&m) {
            prop_assert!(betti_swap_holds(&m).unwrap());
        }
        let rep = dual_relation_check(&m).unwrap();
        prop_assert!(!rep.hypotheses_hold() || rep.passed(), "{}", rep);
    }

    #[test]
    fn transpose_is_an_involution_on_stable((k, nr, nc, c) in module_strategy()) {
        let m = linear_module(&rings()[k], nr, nc, &c);
        prop_assume!(!m.is_zero() && is_stable(&m));
        prop_assert!(numerically_consistent(&transpose(&transpose(&m)), &m).unwrap());
    }

    #[test]
    fn linked_modules_are_stable_and_return((k, nr, nc, c) in module_strategy()) {
        let m = linear_module(&rings()[k], nr, nc, &c);
        prop_assume!(!m.is_zero());
        let rep = is_horizontally_linked(&m).unwrap();
        prop_assert!(rep.consistency, "{}", rep);
        if rep.is_true("horizontally_linked") {
            let lm = lambda(&m).unwrap();
            prop_assert!(is_stable(&m) && is_stable(&lm));
            prop_assert!(numerically_consistent(&lambda(&lm).unwrap(), &m).unwrap());
        }
        // linked iff stable with Ext^1(Tr M, R) = 0
        prop_assert_eq!(
            rep.is_true("horizontally_linked"),
            rep.is_true("stable") && rep.is_true("ext1_tr_vanishes")
        );
    }

    #[test]
    fn lambda_of_a_syzygy_is_stable((k, nr, nc, c) in module_strategy()) {
        let r = &rings()[k];
        let m = syzygy_module(&linear_module(r, nr, nc, &c), 1).unwrap();
        prop_assume!(!m.is_zero() && !m.minimal_presentation().is_free());
        prop_assert!(is_stable(&lambda(&m).unwrap()));
    }

    #[test]
    fn high_syzygies_are_stable((k, nr, nc, c) in module_strategy()) {
        let r = &rings()[k];
        let m = linear_module(r, nr, nc, &c);
        let gap = match depth(&m).unwrap() {
            HomDim::Finite(d) => ring_depth(r).unwrap().saturating_sub(d),
            _ => 0,
        };
        let om = syzygy_module(&m, gap + 1).unwrap();
        prop_assert!(om.is_zero() || is_stable(&om));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn linked_syzygies_are_zero_or_stable((k, nr, nc, c) in module_strategy(), n in 1usize..=3) {
        let m = linear_module(&rings()[k], nr, nc, &c);
        let l = lambda(&syzygy_power(&m, n).unwrap()).unwrap();
        prop_assert!(l.is_zero() || is_stable(&l));
    }
}

#[test]
fn tor_nonvanishing_examples() {
    let a = ring(&["x"], &["x^3"]);
    let rep = tor_nonvanishing_check(&FpModule::residue_field(&a), 2).unwrap();
    assert_eq!(rep.get("tor_nonzero"), Some(Status::True), "{rep}");
    let b = ring(&["x", "y"], &["x^2"]);
    let rep = tor_nonvanishing_check(&FpModule::residue_field(&b), 1).unwrap();
    assert_eq!(rep.get("tor_nonzero"), Some(Status::True), "{rep}");
    // λΩ^0 of a free module is zero
    let rep = tor_nonvanishing_check(&FpModule::free(&b, &[0]), 0).unwrap();
    assert_eq!(rep.get("tor_nonzero"), Some(Status::NotComputed), "{rep}");
}

#[test]
fn cosyzygy_inverts_syzygy_over_artinian_gorenstein() {
    let r = ring(&["x"], &["x^3"]);
    for t in ["x", "x^2"] {
        let m = quotient(&r, t);
        let back = syzygy_module(&cosyzygy(&m).unwrap(), 1).unwrap();
        assert!(numerically_consistent(&back, &m).unwrap());
    }
}

#[test]
fn cosyzygy_needs_gorenstein_ring() {
    let r = ring(&["x", "y"], &["x^2", "x*y"]);
    let e = cosyzygy(&quotient(&r, "x")).unwrap_err();
    assert!(matches!(e, linkage::Error::Precondition { op: "cosyzygy", .. }), "{e}");
}
