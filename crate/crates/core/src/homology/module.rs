//! Finitely presented graded modules `coker(A)`.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::matrix::{Matrix, MatrixJson};
use super::resolution::Resolution;
use super::submodule::{self, columns_matrix, minimal_generators, preimage, SpanGb};
use crate::arith::Poly;
use crate::error::Result;
use crate::groebner::{GradedRing, Ideal, ModuleSeries};

#[derive(Default)]
struct Cache {
    minimal: OnceLock<FpModule>,
    series: OnceLock<ModuleSeries>,
    resolution: Mutex<Option<Resolution>>,
}

/// The cokernel of a homogeneous matrix: rows are generators (with degrees
/// `row_degs`), columns are relations.
#[derive(Clone)]
pub struct FpModule {
    pres: Matrix,
    minimal: bool,
    cache: Arc<Cache>,
}

/// Whether the length of a module is certified on a degree window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum LengthStatus {
    Finite(u64),
    Infinite,
    /// Finite length, but the window does not cover every nonzero degree.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleNumerics {
    /// `(degree, dimension of the graded piece)`.
    pub values: Vec<(i32, i64)>,
    pub length: LengthStatus,
}

impl FpModule {
    pub fn coker(pres: Matrix) -> FpModule {
        FpModule {
            pres,
            minimal: false,
            cache: Arc::default(),
        }
    }

    fn minimal_from(pres: Matrix) -> FpModule {
        FpModule {
            pres,
            minimal: true,
            cache: Arc::default(),
        }
    }

    /// `⊕ R(-d)` over the given degrees.
    pub fn free(ring: &GradedRing, degs: &[i32]) -> FpModule {
        FpModule::minimal_from(Matrix::zero(ring, degs, &[]))
    }

    pub fn zero(ring: &GradedRing) -> FpModule {
        FpModule::free(ring, &[])
    }

    /// `R/I`.
    pub fn quotient(ideal: &Ideal) -> FpModule {
        let ring = ideal.ring();
        let cols: Vec<Vec<Poly>> = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
        let degs = ideal.gens().iter().map(|g| g.degree().unwrap()).collect();
        FpModule::coker(Matrix::from_parts(ring, vec![0], degs, cols))
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &GradedRing) -> FpModule {
        FpModule::quotient(&Ideal::maximal(ring))
    }

    /// The ideal `I` as an `R`-module, presented by the syzygies of its generators.
    pub fn ideal_module(ideal: &Ideal) -> FpModule {
        let ring = ideal.ring();
        let gens = ideal.minimal_gens();
        let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap()).collect();
        let row = Matrix::from_parts(ring, vec![0], degs, gens.into_iter().map(|g| vec![g]).collect());
        FpModule::coker(submodule::kernel(&row))
    }

    /// The submodule of `R^m` (twists `row_degs`) generated by `gens`,
    /// modulo `rels` (columns in the same ambient module).
    pub fn subquotient(gens: &Matrix, rels: Option<&Matrix>) -> FpModule {
        let sy = preimage(gens, rels);
        let sy = minimal_generators(gens.ring(), gens.col_degs(), sy, &[]);
        FpModule::coker(columns_matrix(gens.ring(), gens.col_degs(), sy))
    }

    pub fn ring(&self) -> &GradedRing {
        self.pres.ring()
    }

    pub fn presentation(&self) -> &Matrix {
        &self.pres
    }

    /// Generator degrees of this presentation.
    pub fn gen_degrees(&self) -> &[i32] {
        self.pres.row_degs()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// A minimal presentation: no unit entries, minimal relations. Cached.
    pub fn minimal_presentation(&self) -> FpModule {
        if self.minimal {
            return self.clone();
        }
        self.cache
            .minimal
            .get_or_init(|| FpModule::minimal_from(minimize(&self.pres)))
            .clone()
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.minimal_presentation().pres.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.num_generators() == 0
    }

    pub fn is_free(&self) -> bool {
        self.minimal_presentation().pres.ncols() == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.num_generators() == 1
    }

    /// Hilbert series from the leading terms of `im A + I R^r`.
    pub fn series(&self) -> &ModuleSeries {
        self.cache.series.get_or_init(|| {
            let m = self.minimal_presentation();
            let gb = SpanGb::new(self.ring(), m.gen_degrees(), m.pres.columns());
            let comps: Vec<(i32, Vec<_>)> = m
                .gen_degrees()
                .iter()
                .copied()
                .zip(gb.leading_by_component())
                .collect();
            ModuleSeries::new(self.ring().base().weights(), &comps)
        })
    }

    pub fn hilbert_function(&self, d: i32) -> i64 {
        self.series().value(d)
    }

    pub fn dim(&self) -> i32 {
        self.series().dim()
    }

    /// Exact length, `None` when infinite.
    pub fn length(&self) -> Option<u64> {
        self.series().length()
    }

    pub fn has_finite_length(&self) -> bool {
        self.dim() <= 0
    }

    /// Hilbert function on `lo..=hi` and a length certificate for that window.
    pub fn numerics(&self, lo: i32, hi: i32) -> ModuleNumerics {
        let s = self.series();
        let values = (lo..=hi).map(|d| (d, s.value(d))).collect();
        let length = match s.finite_support() {
            _ if s.is_zero() => LengthStatus::Finite(0),
            None => LengthStatus::Infinite,
            Some((a, b)) if lo <= a && b <= hi => LengthStatus::Finite(s.length().unwrap_or(0)),
            Some(_) => LengthStatus::Undetermined,
        };
        ModuleNumerics { values, length }
    }

    /// `Ann(M) = { r : r M = 0 }`, via one preimage computation in `⊕ R^r`.
    pub fn annihilator(&self) -> Ideal {
        let m = self.minimal_presentation();
        let ring = self.ring();
        let r = m.pres.nrows();
        if r == 0 {
            return Ideal::unit(ring);
        }
        let d = m.gen_degrees();
        // block i is R^r twisted so that e_i sits in degree 0
        let mut twists = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                twists.push(d[j] - d[i]);
            }
        }
        let mut f = vec![Poly::zero(); r * r];
        for i in 0..r {
            f[i * r + i] = ring.base().one();
        }
        let fm = Matrix::from_parts(ring, twists.clone(), vec![0], vec![f]);
        let mut qcols = Vec::new();
        let mut qdegs = Vec::new();
        for i in 0..r {
            for (j, c) in m.pres.columns().iter().enumerate() {
                let mut col = vec![Poly::zero(); r * r];
                col[i * r..(i + 1) * r].clone_from_slice(c);
                qcols.push(col);
                qdegs.push(m.pres.col_degs()[j] - d[i]);
            }
        }
        let qm = Matrix::from_parts(ring, twists, qdegs, qcols);
        let gens = preimage(&fm, Some(&qm)).into_iter().map(|(c, _)| c[0].clone()).collect();
        Ideal::from_homogeneous(ring, gens)
    }

    /// Minimal free resolution through homological degree `bound` (cached and
    /// extended on demand).
    pub fn resolution(&self, bound: usize) -> Result<Resolution> {
        let mut guard = self.cache.resolution.lock().expect("resolution cache");
        match guard.as_mut() {
            Some(res) => res.extend_to(bound)?,
            None => {
                let mut res = Resolution::start(&self.minimal_presentation().pres)?;
                res.extend_to(bound)?;
                *guard = Some(res);
            }
        }
        Ok(guard.as_ref().unwrap().truncated(bound))
    }

    pub fn direct_sum(&self, other: &FpModule) -> Result<FpModule> {
        self.ring().check_same(other.ring())?;
        let (a, b) = (&self.pres, &other.pres);
        let mut row_degs = a.row_degs().to_vec();
        row_degs.extend_from_slice(b.row_degs());
        let mut col_degs = a.col_degs().to_vec();
        col_degs.extend_from_slice(b.col_degs());
        let (ra, rb) = (a.nrows(), b.nrows());
        let mut cols: Vec<Vec<Poly>> = a
            .columns()
            .iter()
            .map(|c| {
                let mut v = c.clone();
                v.resize(ra + rb, Poly::zero());
                v
            })
            .collect();
        for c in b.columns() {
            let mut v = vec![Poly::zero(); ra];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        Ok(FpModule::coker(Matrix::from_parts(self.ring(), row_degs, col_degs, cols)))
    }

    /// The same presentation over another quotient of `P` (e.g. `R/c`).
    pub fn change_ring(&self, ring: &GradedRing) -> Result<FpModule> {
        Ok(FpModule::coker(self.pres.change_ring(ring)?))
    }

    /// Shifts all degrees by `s` (the module `M(-s)`).
    pub fn shift(&self, s: i32) -> FpModule {
        let p = &self.pres;
        FpModule::coker(Matrix::from_parts(
            self.ring(),
            p.row_degs().iter().map(|d| d + s).collect(),
            p.col_degs().iter().map(|d| d + s).collect(),
            p.columns().to_vec(),
        ))
    }

    /// Deletes generators (rows) from the presentation.
    pub(crate) fn drop_generators(&self, rows: &[usize]) -> FpModule {
        let keep: Vec<usize> = (0..self.pres.nrows()).filter(|i| !rows.contains(i)).collect();
        FpModule::coker(self.pres.select_rows(&keep))
    }

    pub fn to_json(&self) -> MatrixJson {
        self.pres.to_json()
    }

    /// Checks `self` and `other` live over the same ring.
    pub fn check_ring(&self, other: &FpModule) -> Result<()> {
        self.ring().check_same(other.ring())
    }
}

/// Unit-entry elimination followed by pruning of redundant relations.
fn minimize(pres: &Matrix) -> Matrix {
    let ring = pres.ring();
    let base = ring.base();
    let field = ring.field();
    let mut row_degs = pres.row_degs().to_vec();
    let mut cols: Vec<(Vec<Poly>, i32)> = pres
        .columns()
        .iter()
        .cloned()
        .zip(pres.col_degs().iter().copied())
        .filter(|(c, _)| c.iter().any(|f| !f.is_zero()))
        .collect();
    loop {
        let pivot = cols.iter().enumerate().find_map(|(j, (c, _))| {
            c.iter().position(|f| f.is_unit()).map(|i| (i, j))
        });
        let Some((i, j)) = pivot else { break };
        let (pc, _) = cols.remove(j);
        let u_inv = field.inv(pc[i].as_constant().unwrap()).unwrap();
        for (c, _) in cols.iter_mut() {
            if c[i].is_zero() {
                continue;
            }
            let a = base.scale(&c[i], field.neg(u_inv));
            for (k, e) in c.iter_mut().enumerate() {
                if !pc[k].is_zero() {
                    *e = ring.reduce(&base.add(e, &base.mul(&a, &pc[k])));
                }
            }
        }
        for (c, _) in cols.iter_mut() {
            c.remove(i);
        }
        row_degs.remove(i);
        cols.retain(|(c, _)| c.iter().any(|f| !f.is_zero()));
    }
    let kept = minimal_generators(ring, &row_degs, cols, &[]);
    columns_matrix(ring, &row_degs, kept)
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coker {} twists {:?} over {:?}",
            self.pres,
            self.pres.row_degs(),
            self.ring()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: &GradedRing, s: &str) -> Poly {
        r.parse(s).unwrap()
    }

    #[test]
    fn unit_entry_elimination() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let a = Matrix::from_rows(
            &r,
            vec![vec![p(&r, "1"), p(&r, "x")], vec![p(&r, "0"), p(&r, "y")]],
            None,
        )
        .unwrap();
        let m = FpModule::coker(a).minimal_presentation();
        assert_eq!(m.presentation().nrows(), 1);
        assert_eq!(m.presentation().ncols(), 1);
        assert_eq!(m.presentation().entry(0, 0), &p(&r, "y"));
        // idempotent
        let again = m.minimal_presentation();
        assert_eq!(again.presentation(), m.presentation());
    }

    #[test]
    fn free_module_from_identity() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let id = Matrix::identity(&r, &[0]);
        let m = FpModule::coker(id.hcat(&Matrix::zero(&r, &[0], &[])).unwrap());
        assert!(m.is_zero());
        let r2 = FpModule::free(&r, &[0, 0]);
        assert!(r2.is_free() && !r2.is_cyclic());
    }

    #[test]
    fn lengths_and_annihilators() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let k = FpModule::residue_field(&r);
        assert_eq!(k.length(), Some(1));
        let a = Matrix::from_rows(&r, vec![vec![p(&r, "x")]], None).unwrap();
        let m = FpModule::coker(a);
        assert_eq!(m.annihilator(), Ideal::parse(&r, "x").unwrap());
        assert_eq!(FpModule::free(&r, &[0]).annihilator(), Ideal::zero(&r));
        let s = GradedRing::from_text(&["x"], &["x^3"], 32003).unwrap();
        assert_eq!(FpModule::free(&s, &[0]).length(), Some(3));
    }
}
