use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Admissible orders on the monomials of a single polynomial ring.
///
/// Grevlex compares weighted degree first and breaks ties by reverse
/// lexicographic order. `Elimination(k)` compares the first `k` variables by
/// (unweighted) grevlex and only then the remaining variables by weighted
/// grevlex, so any monomial involving the first block beats every monomial
/// that does not.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Elimination(usize),
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elimination({k})"),
        }
    }

    /// Unchecked comparison; both monomials must have the same variable count.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a.exponents(), b.exponents())),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination(k) => {
                let (ah, at) = a.exponents().split_at(k);
                let (bh, bt) = b.exponents().split_at(k);
                let sa: u32 = ah.iter().map(|&e| e as u32).sum();
                let sb: u32 = bh.iter().map(|&e| e as u32).sum();
                sa.cmp(&sb)
                    .then_with(|| revlex(ah, bh))
                    // head blocks agree here, so full degree compares the tails
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| revlex(at, bt))
            }
        }
    }
}

/// Reverse lexicographic tiebreak: the last differing exponent decides and
/// the smaller exponent wins.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Checked comparison of two monomials.
pub fn mono_compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Structural(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    if let MonomialOrder::Elimination(k) = ord {
        if k > a.nvars() {
            return Err(Error::Structural(format!(
                "elimination block of size {k} in {} variables",
                a.nvars()
            )));
        }
    }
    Ok(ord.cmp(a, b))
}
