mod common;

use common::{coker, cyclic_ext_tor_oracle, dense_hilbert, ideal, monomials, quotient, ring};
use linkage::arith::{Monomial, Poly};
use linkage::groebner::Ideal;
use linkage::homology::{
    depth, ext, hom, projective_dimension, tensor, tor, FpModule, HomDim,
};
use proptest::prelude::*;

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclic_ext_tor_match_dense_oracle(m in 1usize..=6, a in 1usize..=6, b in 1usize..=6, i in 0usize..=5) {
        prop_assume!(a <= m && b <= m);
        let r = ring(&["x"], &[&format!("x^{m}")]);
        let ma = coker(&r, &[&[&format!("x^{a}")]]);
        let nb = coker(&r, &[&[&format!("x^{b}")]]);
        let (e, t) = cyclic_ext_tor_oracle(m, a, b, i);
        prop_assert_eq!(ext(i, &ma, &nb).unwrap().length(), Some(e as u64));
        prop_assert_eq!(tor(i, &ma, &nb).unwrap().length(), Some(t as u64));
    }

    /// Over `k[x,y,z]` the Betti table determines the Hilbert function, which
    /// is compared with the dense count.
    #[test]
    fn betti_numbers_give_dense_hilbert_function(
        spec in prop::collection::vec((1usize..=3, prop::collection::vec(0u32..3, 10)), 1..=3)
    ) {
        let p = ring(&["x", "y", "z"], &[]);
        let base = p.base();
        let gens: Vec<Poly> = spec
            .iter()
            .map(|(d, cs)| {
                let terms = monomials(3, *d)
                    .into_iter()
                    .zip(cs.iter().cycle())
                    .filter(|(_, &c)| c != 0)
                    .map(|(e, &c)| (Monomial::new(&e, base.weights()), base.field().elem(i64::from(c))))
                    .collect();
                base.from_terms(terms)
            })
            .filter(|f: &Poly| !f.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let m = FpModule::quotient(&Ideal::new(&p, gens.clone()).unwrap());
        let res = m.resolution(4).unwrap();
        prop_assert!(res.is_complete() && res.is_minimal());
        for w in res.maps().windows(2) {
            prop_assert!(w[0].mul(&w[1]).unwrap().is_zero());
        }
        let betti = res.betti();
        for d in 0..=6i64 {
            let euler: i64 = betti
                .entries()
                .iter()
                .map(|e| {
                    let sign = if e.i % 2 == 0 { 1 } else { -1 };
                    sign * e.beta as i64 * binom(d - i64::from(e.j) + 2, 2)
                })
                .sum();
            prop_assert_eq!(euler, dense_hilbert(3, &gens, d as usize) as i64, "degree {}", d);
        }
        // Auslander–Buchsbaum over a regular ring
        let pd = projective_dimension(&m).unwrap().finite().unwrap();
        let dm = depth(&m).unwrap().finite().unwrap();
        prop_assert_eq!(pd + dm, 3);
    }

    #[test]
    fn tor_is_symmetric_in_length(a in 1usize..=3, b in 1usize..=3, i in 0usize..=3) {
        let r = ring(&["x", "y"], &["x^2", "y^3"]);
        let m = quotient(&r, &format!("x, y^{a}"));
        let n = quotient(&r, &format!("y, x^{}", b.min(2)));
        prop_assert_eq!(tor(i, &m, &n).unwrap().length(), tor(i, &n, &m).unwrap().length());
    }
}

#[test]
fn low_degree_ext_and_tor_are_hom_and_tensor() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = quotient(&r, "x");
    let n = quotient(&r, "x^2, y");
    let h = hom(&m, &n).unwrap();
    let e0 = ext(0, &m, &n).unwrap();
    assert_eq!(h.numerics(-2, 6), e0.numerics(-2, 6));
    let t = tensor(&m, &n).unwrap();
    let t0 = tor(0, &m, &n).unwrap();
    assert_eq!(t.numerics(0, 6), t0.numerics(0, 6));
}

#[test]
fn residue_field_betti_numbers() {
    let p = ring(&["x", "y", "z"], &[]);
    let res = FpModule::residue_field(&p).resolution(5).unwrap();
    assert_eq!(res.betti().totals(), [1, 3, 3, 1]);
    // Koszul: β_{i,i} = C(3, i)
    for i in 0..=3 {
        assert_eq!(res.betti().get(i, i as i32), binom(3, i as i64) as usize);
    }
}

#[test]
fn depth_and_grade_edge_cases() {
    let r = ring(&["x", "y"], &["x^2"]);
    assert_eq!(depth(&FpModule::zero(&r)).unwrap(), HomDim::Infinite);
    assert_eq!(projective_dimension(&FpModule::zero(&r)).unwrap(), HomDim::NegInfinite);
    assert_eq!(linkage::homology::grade(&Ideal::unit(&r)).unwrap(), HomDim::Infinite);
    assert_eq!(linkage::homology::grade(&ideal(&r, "x")).unwrap(), HomDim::Finite(0));
    assert_eq!(linkage::homology::grade(&ideal(&r, "x, y")).unwrap(), HomDim::Finite(1));
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = ring(&["x", "y"], &["x*y"]);
    let b = ring(&["x", "y"], &["x^2"]);
    let e = tensor(&quotient(&a, "x"), &quotient(&b, "x")).unwrap_err();
    assert!(matches!(e, linkage::Error::RingMismatch), "{e}");
    assert!(ideal(&a, "x").sum(&ideal(&b, "x")).is_err());
}
