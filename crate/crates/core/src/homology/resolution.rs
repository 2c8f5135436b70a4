//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use super::matrix::Matrix;
use super::submodule::kernel;
use crate::error::{Error, Result};
use crate::groebner::GradedRing;

static DIFFERENTIALS_CHECKED: AtomicUsize = AtomicUsize::new(0);
static AB_CHECKS: AtomicUsize = AtomicUsize::new(0);
static BRIDGER_CHECKS: AtomicUsize = AtomicUsize::new(0);
static VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// Process-wide counts of internal identity checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantCounters {
    /// Differentials checked for `d∘d = 0` and minimality.
    pub differentials_checked: usize,
    /// `pd + depth M = depth R` checks.
    pub auslander_buchsbaum: usize,
    /// `gdim + depth M = depth R` checks.
    pub auslander_bridger: usize,
    pub violations: usize,
}

pub fn invariant_counters() -> InvariantCounters {
    InvariantCounters {
        differentials_checked: DIFFERENTIALS_CHECKED.load(Ordering::Relaxed),
        auslander_buchsbaum: AB_CHECKS.load(Ordering::Relaxed),
        auslander_bridger: BRIDGER_CHECKS.load(Ordering::Relaxed),
        violations: VIOLATIONS.load(Ordering::Relaxed),
    }
}

pub(crate) fn record_ab(ok: bool) {
    AB_CHECKS.fetch_add(1, Ordering::Relaxed);
    if !ok {
        VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
}

pub(crate) fn record_bridger(ok: bool) {
    BRIDGER_CHECKS.fetch_add(1, Ordering::Relaxed);
    if !ok {
        VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
}

fn violation(msg: String) -> Error {
    VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    Error::Invariant(msg)
}

/// `F_0 <- F_1 <- ... <- F_b`, with `maps[i-1] = d_i : F_i → F_{i-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: GradedRing,
    degs: Vec<Vec<i32>>,
    maps: Vec<Matrix>,
    /// `true` when `F_{b+1} = 0` is known.
    complete: bool,
}

impl Resolution {
    /// Starts from a minimal presentation `d_1`.
    pub(crate) fn start(pres: &Matrix) -> Result<Resolution> {
        let mut r = Resolution {
            ring: pres.ring().clone(),
            degs: vec![pres.row_degs().to_vec()],
            maps: Vec::new(),
            complete: pres.ncols() == 0,
        };
        if !r.complete {
            r.push(pres.clone())?;
        }
        Ok(r)
    }

    fn push(&mut self, d: Matrix) -> Result<()> {
        DIFFERENTIALS_CHECKED.fetch_add(1, Ordering::Relaxed);
        let i = self.maps.len() + 1;
        if !d.is_minimal() {
            return Err(violation(format!("differential d_{i} has a unit entry")));
        }
        if let Some(prev) = self.maps.last() {
            if !prev.mul(&d)?.is_zero() {
                return Err(violation(format!("d_{} d_{i} is not zero", i - 1)));
            }
        }
        self.degs.push(d.col_degs().to_vec());
        self.maps.push(d);
        Ok(())
    }

    /// Computes differentials until `d_bound` is known or the resolution ends.
    pub(crate) fn extend_to(&mut self, bound: usize) -> Result<()> {
        while !self.complete && self.maps.len() < bound {
            let k = kernel(self.maps.last().unwrap());
            if k.ncols() == 0 {
                self.complete = true;
            } else {
                self.push(k)?;
            }
        }
        Ok(())
    }

    pub(crate) fn truncated(&self, bound: usize) -> Resolution {
        if self.maps.len() <= bound {
            return self.clone();
        }
        Resolution {
            ring: self.ring.clone(),
            degs: self.degs[..=bound].to_vec(),
            maps: self.maps[..bound].to_vec(),
            complete: false,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    /// Number of differentials computed.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `true` when the resolution is known to stop after the last computed module.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Projective dimension when the resolution is complete; `None` when
    /// it was truncated or the module is zero.
    pub fn length(&self) -> Option<usize> {
        if !self.complete || self.degs[0].is_empty() {
            return None;
        }
        Some(self.maps.len())
    }

    /// Twists of `F_i`; empty past the end of a complete resolution.
    pub fn free_degs(&self, i: usize) -> &[i32] {
        self.degs.get(i).map_or(&[], |d| d.as_slice())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.free_degs(i).len()
    }

    /// `d_i : F_i → F_{i-1}` for `i ≥ 1` (a zero matrix past the end).
    pub fn differential(&self, i: usize) -> Matrix {
        assert!(i >= 1);
        match self.maps.get(i - 1) {
            Some(m) => m.clone(),
            None => Matrix::zero(&self.ring, self.free_degs(i - 1), self.free_degs(i)),
        }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.is_minimal())
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BTreeMap::new();
        for (i, d) in self.degs.iter().enumerate() {
            for &j in d {
                *t.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries: t }
    }
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub beta: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, β_1, ...` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|k| k.0).max();
        let Some(top) = top else { return Vec::new() };
        (0..=top)
            .map(|i| {
                self.entries
                    .iter()
                    .filter(|(k, _)| k.0 == i)
                    .map(|(_, v)| v)
                    .sum()
            })
            .collect()
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
            .collect()
    }

    /// The same table with all internal degrees shifted so the smallest is 0.
    pub fn normalized(&self) -> BettiTable {
        let lo = self.entries.keys().map(|k| k.1).min().unwrap_or(0);
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &b)| ((i, j - lo), b)).collect(),
        }
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `j - i`, columns homological degree `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "total: 0");
        }
        let top = self.entries.keys().map(|k| k.0).max().unwrap();
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let tot = self.totals();
        write!(f, "{:>7}", "total:")?;
        for t in &tot {
            write!(f, " {t:>3}")?;
        }
        writeln!(f)?;
        for s in rows {
            write!(f, "{:>6}:", s)?;
            for i in 0..=top {
                match self.get(i, s + i as i32) {
                    0 => write!(f, " {:>3}", ".")?,
                    b => write!(f, " {b:>3}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
