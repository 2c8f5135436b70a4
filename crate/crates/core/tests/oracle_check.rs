mod common;

use common::{cyclic_ext_tor_oracle, monomials, rank};

#[test]
fn dense_rank_basics() {
    assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(rank(vec![vec![0, 1], vec![1, 0]]), 2);
    assert_eq!(rank(vec![]), 0);
}

#[test]
fn monomial_counts() {
    assert_eq!(monomials(3, 2).len(), 6);
    assert_eq!(monomials(4, 3).len(), 20);
}

#[test]
fn oracle_hand_values() {
    // k[x]/(x^2), M = N = k: Ext and Tor are k in every degree
    for i in 0..4 {
        assert_eq!(cyclic_ext_tor_oracle(2, 1, 1, i), (1, 1));
    }
    // k[x]/(x^3), M = k, N = A/x^2
    assert_eq!(cyclic_ext_tor_oracle(3, 1, 2, 0), (1, 1));
    assert_eq!(cyclic_ext_tor_oracle(3, 1, 2, 1), (1, 1));
    // free module
    assert_eq!(cyclic_ext_tor_oracle(3, 3, 2, 0), (2, 2));
    assert_eq!(cyclic_ext_tor_oracle(3, 3, 2, 1), (0, 0));
}
