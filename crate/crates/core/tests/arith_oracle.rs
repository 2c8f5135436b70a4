//! Polynomial arithmetic over `F_5` against dense coefficient arrays.

mod common;

use std::collections::BTreeMap;

use common::monomials;
use linkage::arith::{Monomial, Poly, PolyRing};
use proptest::prelude::*;

const Q: u64 = 5;

type Dense = BTreeMap<Vec<u16>, u64>;

fn all_monomials(n: usize, maxdeg: usize) -> Vec<Vec<u16>> {
    (0..=maxdeg).flat_map(|d| monomials(n, d)).collect()
}

fn to_poly(r: &PolyRing, d: &Dense) -> Poly {
    let terms = d
        .iter()
        .filter(|(_, &c)| c % Q != 0)
        .map(|(e, &c)| (Monomial::new(e, r.weights()), r.field().elem(c as i64)))
        .collect();
    r.from_terms(terms)
}

fn to_dense(f: &Poly) -> Dense {
    f.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), u64::from(c.value())))
        .collect()
}

fn clean(mut d: Dense) -> Dense {
    d.retain(|_, c| {
        *c %= Q;
        *c != 0
    });
    d
}

fn dense_add(a: &Dense, b: &Dense, sign: u64) -> Dense {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert(0) += sign * c;
    }
    clean(out)
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    clean(out)
}

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(&["x", "y", "z"][..n], Q as u32).unwrap()
}

/// Every pair of terms `c m`, `d n` with `deg m, deg n ≤ 3` in up to three
/// variables.
#[test]
fn all_term_pairs() {
    for n in 1..=3 {
        let r = ring(n);
        let monos = all_monomials(n, 3);
        for a in &monos {
            for b in &monos {
                for ca in 1..Q {
                    for cb in 1..Q {
                        let da: Dense = [(a.clone(), ca)].into();
                        let db: Dense = [(b.clone(), cb)].into();
                        let (f, g) = (to_poly(&r, &da), to_poly(&r, &db));
                        assert_eq!(to_dense(&r.mul(&f, &g)), dense_mul(&da, &db));
                        assert_eq!(to_dense(&r.add(&f, &g)), dense_add(&da, &db, 1));
                        assert_eq!(to_dense(&r.sub(&f, &g)), dense_add(&da, &db, Q - 1));
                    }
                }
            }
        }
    }
}

fn dense_strategy(n: usize) -> impl Strategy<Value = Dense> {
    let monos = all_monomials(n, 3);
    prop::collection::vec(0u64..Q, monos.len())
        .prop_map(move |cs| clean(monos.iter().cloned().zip(cs).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn full_polynomials_in_three_variables(a in dense_strategy(3), b in dense_strategy(3), c in dense_strategy(3)) {
        let r = ring(3);
        let (f, g, h) = (to_poly(&r, &a), to_poly(&r, &b), to_poly(&r, &c));
        prop_assert_eq!(to_dense(&r.mul(&f, &g)), dense_mul(&a, &b));
        prop_assert_eq!(to_dense(&r.add(&f, &g)), dense_add(&a, &b, 1));
        prop_assert_eq!(to_dense(&r.sub(&f, &g)), dense_add(&a, &b, Q - 1));
        // distributivity and sorted terms
        let lhs = r.mul(&f, &r.add(&g, &h));
        let rhs = r.add(&r.mul(&f, &g), &r.mul(&f, &h));
        prop_assert_eq!(&lhs, &rhs);
        let t = lhs.terms();
        for w in t.windows(2) {
            prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn full_polynomials_in_two_variables(a in dense_strategy(2), b in dense_strategy(2)) {
        let r = ring(2);
        let (f, g) = (to_poly(&r, &a), to_poly(&r, &b));
        prop_assert_eq!(to_dense(&r.mul(&f, &g)), dense_mul(&a, &b));
        prop_assert_eq!(to_dense(&r.pow(&f, 2)), dense_mul(&a, &a));
    }
}
