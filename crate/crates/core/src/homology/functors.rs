//! Hom, Ext, tensor products and Tor.
//!
//! `Hom(F, G0)` for free `F` with twists `d` and `G0` with twists `e` is the
//! free module with basis index `(k, a) ↦ k * rank F + a` and twist
//! `e_k - d_a`. `F ⊗ G0` uses index `(a, k) ↦ a * rank G0 + k` and twist
//! `d_a + e_k`.

use super::matrix::Matrix;
use super::module::FpModule;
use super::submodule::{preimage, span_contains};
use crate::error::Result;

fn identity(m: &FpModule, degs: &[i32]) -> Matrix {
    Matrix::identity(m.ring(), degs)
}

fn neg(d: &[i32]) -> Vec<i32> {
    d.iter().map(|x| -x).collect()
}

/// `Hom(M, N)`.
pub fn hom(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    m.check_ring(n)?;
    let mm = m.minimal_presentation();
    let nm = n.minimal_presentation();
    let (a, b) = (mm.presentation(), nm.presentation());
    let e = identity(n, b.row_degs());
    // X ↦ X A on Hom(F0, G0), landing in Hom(F1, N)
    let f = e.kron(&a.transpose());
    let target_rels = b.kron(&identity(m, &neg(a.col_degs())));
    let z = preimage(&f, Some(&target_rels));
    let gens = super::submodule::columns_matrix(m.ring(), f.col_degs(), z);
    let rels = b.kron(&identity(m, &neg(a.row_degs())));
    Ok(FpModule::subquotient(&gens, Some(&rels)).minimal_presentation())
}

/// `Hom(M, R)`.
pub fn dual(m: &FpModule) -> Result<FpModule> {
    hom(m, &FpModule::free(m.ring(), &[0]))
}

/// `M ⊗ N`.
pub fn tensor(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    m.check_ring(n)?;
    let mm = m.minimal_presentation();
    let nm = n.minimal_presentation();
    let (a, b) = (mm.presentation(), nm.presentation());
    let left = a.kron(&identity(n, b.row_degs()));
    let right = identity(m, a.row_degs()).kron(b);
    Ok(FpModule::coker(left.hcat(&right)?).minimal_presentation())
}

/// Cycles and boundaries of `Hom(F_•, N)` at position `i`, as column sets in
/// `Hom(F_i, G0)`, with the ambient twists.
struct Cochains {
    twists: Vec<i32>,
    cycles: Matrix,
    boundaries: Matrix,
}

fn ext_cochains(i: usize, m: &FpModule, n: &FpModule) -> Result<Cochains> {
    m.check_ring(n)?;
    let res = m.resolution(i + 1)?;
    let nm = n.minimal_presentation();
    let b = nm.presentation();
    let e = identity(n, b.row_degs());
    let fi = neg(res.free_degs(i));
    let next = res.differential(i + 1);
    let f = e.kron(&next.transpose());
    let target_rels = b.kron(&identity(m, &neg(res.free_degs(i + 1))));
    let z = if f.nrows() == 0 {
        // everything is a cocycle
        let twists: Vec<i32> = e.kron(&identity(m, &fi)).col_degs().to_vec();
        Matrix::identity(m.ring(), &twists)
    } else {
        let cols = preimage(&f, Some(&target_rels));
        super::submodule::columns_matrix(m.ring(), f.col_degs(), cols)
    };
    let mut boundaries = b.kron(&identity(m, &fi));
    if i >= 1 {
        let prev = res.differential(i);
        boundaries = boundaries.hcat(&e.kron(&prev.transpose()))?;
    }
    Ok(Cochains {
        twists: z.row_degs().to_vec(),
        cycles: z,
        boundaries,
    })
}

/// `Ext^i(M, N)` as the cohomology of `Hom(F_•, N)` for a minimal free
/// resolution `F_•` of `M`.
pub fn ext(i: usize, m: &FpModule, n: &FpModule) -> Result<FpModule> {
    let c = ext_cochains(i, m, n)?;
    Ok(FpModule::subquotient(&c.cycles, Some(&c.boundaries)).minimal_presentation())
}

/// `Ext^i(M, N) = 0`, decided by a containment test without building a
/// presentation.
pub fn ext_is_zero(i: usize, m: &FpModule, n: &FpModule) -> Result<bool> {
    let c = ext_cochains(i, m, n)?;
    Ok(span_contains(
        m.ring(),
        &c.twists,
        c.boundaries.columns(),
        c.cycles.columns(),
    ))
}

struct Chains {
    twists: Vec<i32>,
    cycles: Matrix,
    boundaries: Matrix,
}

fn tor_chains(i: usize, m: &FpModule, n: &FpModule) -> Result<Chains> {
    m.check_ring(n)?;
    let res = m.resolution(i + 1)?;
    let nm = n.minimal_presentation();
    let b = nm.presentation();
    let e = identity(n, b.row_degs());
    let fi = res.free_degs(i).to_vec();
    let ambient = identity(m, &fi).kron(&e);
    let z = if i == 0 {
        ambient.clone()
    } else {
        let d = res.differential(i).kron(&e);
        let rels = identity(m, res.free_degs(i - 1)).kron(b);
        let cols = preimage(&d, Some(&rels));
        super::submodule::columns_matrix(m.ring(), d.col_degs(), cols)
    };
    let mut boundaries = identity(m, &fi).kron(b);
    let next = res.differential(i + 1).kron(&e);
    boundaries = boundaries.hcat(&next)?;
    Ok(Chains {
        twists: ambient.row_degs().to_vec(),
        cycles: z,
        boundaries,
    })
}

/// `Tor_i(M, N)` as the homology of `F_• ⊗ N`, resolving the first argument.
pub fn tor(i: usize, m: &FpModule, n: &FpModule) -> Result<FpModule> {
    let c = tor_chains(i, m, n)?;
    Ok(FpModule::subquotient(&c.cycles, Some(&c.boundaries)).minimal_presentation())
}

pub fn tor_is_zero(i: usize, m: &FpModule, n: &FpModule) -> Result<bool> {
    let c = tor_chains(i, m, n)?;
    Ok(span_contains(
        m.ring(),
        &c.twists,
        c.boundaries.columns(),
        c.cycles.columns(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{GradedRing, Ideal};

    fn quot(r: &GradedRing, s: &str) -> FpModule {
        FpModule::quotient(&Ideal::parse(r, s).unwrap())
    }

    #[test]
    fn hom_into_free_and_from_free() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let k = FpModule::residue_field(&r);
        assert!(dual(&k).unwrap().is_zero());
        let m = quot(&r, "x");
        let h = hom(&FpModule::free(&r, &[0]), &m).unwrap();
        assert_eq!(h.hilbert_function(3), m.hilbert_function(3));
    }

    #[test]
    fn periodic_ext_and_tor_over_node() {
        let r = GradedRing::from_text(&["x", "y"], &["x*y"], 32003).unwrap();
        let m = quot(&r, "x");
        let n = quot(&r, "y");
        assert_eq!(ext(1, &m, &m).unwrap().length(), Some(0));
        assert_eq!(ext(2, &m, &m).unwrap().length(), Some(1));
        assert_eq!(tor(1, &m, &n).unwrap().length(), Some(0));
        assert_eq!(tor(2, &m, &n).unwrap().length(), Some(1));
        assert!(tor_is_zero(1, &m, &n).unwrap());
        assert!(!ext_is_zero(2, &m, &m).unwrap());
    }

    #[test]
    fn koszul_dual_is_cyclic() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let k = FpModule::residue_field(&r);
        let e2 = ext(2, &k, &FpModule::free(&r, &[0])).unwrap();
        assert!(e2.is_cyclic());
        assert_eq!(e2.length(), Some(1));
        assert!(ext_is_zero(1, &k, &FpModule::free(&r, &[0])).unwrap());
    }
}
