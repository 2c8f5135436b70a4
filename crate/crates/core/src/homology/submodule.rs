//! Submodules of graded free modules over `R = P/I`, computed in `P` with the
//! relations of `R` adjoined to every component.

use crate::arith::{Monomial, Poly};
use crate::groebner::{GbEngine, GradedRing, ModVec, ModuleOrder};

use super::matrix::Matrix;

/// A homogeneous column together with its degree.
pub(crate) type Column = (Vec<Poly>, i32);

fn graded_order(ring: &GradedRing, twists: Vec<i32>) -> ModuleOrder {
    ModuleOrder::graded(ring.base().order(), twists)
}

fn relation_multiples(ring: &GradedRing, order: &ModuleOrder, comps: std::ops::Range<usize>) -> Vec<ModVec> {
    let rank = order.rank();
    let mut out = Vec::new();
    for i in comps {
        for g in ring.relation_gb() {
            let mut col = vec![Poly::zero(); rank];
            col[i] = g.clone();
            out.push(ModVec::from_column(&col, order));
        }
    }
    out
}

/// Groebner basis of `span(cols) + I R^m`.
pub(crate) struct SpanGb {
    engine: GbEngine,
    rank: usize,
}

impl SpanGb {
    pub fn new(ring: &GradedRing, row_degs: &[i32], cols: &[Vec<Poly>]) -> SpanGb {
        let order = graded_order(ring, row_degs.to_vec());
        let mut e = GbEngine::new(order.clone(), *ring.field(), ring.base().weights().to_vec());
        for c in cols {
            e.add_generator(ModVec::from_column(c, &order));
        }
        for v in relation_multiples(ring, &order, 0..row_degs.len()) {
            e.add_generator(v);
        }
        e.compute(None);
        SpanGb {
            engine: e,
            rank: row_degs.len(),
        }
    }

    pub fn contains(&self, col: &[Poly]) -> bool {
        debug_assert_eq!(col.len(), self.rank);
        self.engine
            .reduces_to_zero(&ModVec::from_column(col, self.engine.order()))
    }

    /// Leading monomials grouped by component.
    pub fn leading_by_component(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank];
        for (m, c) in self.engine.leading_terms() {
            out[c].push(m);
        }
        out
    }
}

/// `{ x ∈ R^c : F x ∈ im Q + I R^r }` for `F: R^c → R^r`, by Groebner basis
/// elimination over the tagged columns `(F_j ; e_j)` with the top block
/// dominating. Returns generators reduced modulo `I`; zero ones are dropped.
pub(crate) fn preimage(f: &Matrix, q: Option<&Matrix>) -> Vec<Column> {
    let ring = f.ring();
    let (r, c) = (f.nrows(), f.ncols());
    if c == 0 {
        return Vec::new();
    }
    let mut twists = f.row_degs().to_vec();
    twists.extend_from_slice(f.col_degs());
    let mut order = graded_order(ring, twists);
    order.split = Some(r);
    let mut e = GbEngine::new(order.clone(), *ring.field(), ring.base().weights().to_vec());
    for j in 0..c {
        let mut col = f.column(j).to_vec();
        col.resize(r + c, Poly::zero());
        col[r + j] = ring.base().one();
        e.add_generator(ModVec::from_column(&col, &order));
    }
    if let Some(q) = q {
        debug_assert_eq!(q.row_degs(), f.row_degs());
        for qc in q.columns() {
            let mut col = qc.clone();
            col.resize(r + c, Poly::zero());
            e.add_generator(ModVec::from_column(&col, &order));
        }
    }
    for v in relation_multiples(ring, &order, 0..r + c) {
        e.add_generator(v);
    }
    e.compute(None);
    let mut out = Vec::new();
    for v in e.basis() {
        if v.min_component().is_some_and(|m| m >= r) {
            let lead = v.lead().unwrap();
            let deg = order.degree_of(&lead.mono, lead.comp);
            let col: Vec<Poly> = v
                .to_column(ring.base(), c, r)
                .iter()
                .map(|p| ring.reduce(p))
                .collect();
            if col.iter().any(|p| !p.is_zero()) {
                out.push((col, deg));
            }
        }
    }
    out
}

/// Greedy minimal homogeneous generators of `(span(cands) + span(modulo)) / span(modulo)`
/// inside `R^m` with the given twists. Candidates are scanned by degree
/// (stable), each kept iff it is not in the span of `modulo`, the relations
/// and the candidates already kept.
pub(crate) fn minimal_generators(
    ring: &GradedRing,
    row_degs: &[i32],
    cands: Vec<Column>,
    modulo: &[Vec<Poly>],
) -> Vec<Column> {
    let order = graded_order(ring, row_degs.to_vec());
    let mut e = GbEngine::new(order.clone(), *ring.field(), ring.base().weights().to_vec());
    for c in modulo {
        e.add_generator(ModVec::from_column(c, &order));
    }
    for v in relation_multiples(ring, &order, 0..row_degs.len()) {
        e.add_generator(v);
    }
    let mut cands = cands;
    cands.sort_by_key(|c| c.1);
    let mut kept = Vec::new();
    for (col, deg) in cands {
        let v = ModVec::from_column(&col, &order);
        if v.is_zero() {
            continue;
        }
        e.compute(Some(deg));
        if !e.reduces_to_zero(&v) {
            e.add_generator(v);
            kept.push((col, deg));
        }
    }
    kept
}

/// `span(a) ⊆ span(b) + I R^m`.
pub(crate) fn span_contains(ring: &GradedRing, row_degs: &[i32], b: &[Vec<Poly>], a: &[Vec<Poly>]) -> bool {
    if a.is_empty() {
        return true;
    }
    let gb = SpanGb::new(ring, row_degs, b);
    a.iter().all(|c| gb.contains(c))
}

/// Columns of `cols` as a matrix with twists.
pub(crate) fn columns_matrix(ring: &GradedRing, row_degs: &[i32], cols: Vec<Column>) -> Matrix {
    let (cs, ds): (Vec<Vec<Poly>>, Vec<i32>) = cols.into_iter().unzip();
    Matrix::from_parts(ring, row_degs.to_vec(), ds, cs)
}

/// Minimal generators of `ker F` as a matrix whose target is the source of `F`.
pub(crate) fn kernel(f: &Matrix) -> Matrix {
    let gens = preimage(f, None);
    let min = minimal_generators(f.ring(), f.col_degs(), gens, &[]);
    columns_matrix(f.ring(), f.col_degs(), min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: &GradedRing, s: &str) -> Poly {
        r.parse(s).unwrap()
    }

    #[test]
    fn koszul_syzygy() {
        let r = GradedRing::from_text(&["x", "y"], &[], 32003).unwrap();
        let a = Matrix::from_rows(&r, vec![vec![p(&r, "x"), p(&r, "y")]], None).unwrap();
        let k = kernel(&a);
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.col_degs(), &[2]);
        assert!(a.mul(&k).unwrap().is_zero());
        let (c0, c1) = (k.entry(0, 0).clone(), k.entry(1, 0).clone());
        let base = r.base();
        // proportional to (-y, x)
        assert!(base.add(&base.mul(&c0, &p(&r, "x")), &base.mul(&c1, &p(&r, "y"))).is_zero());
        assert_eq!(c0.degree(), Some(1));
    }

    #[test]
    fn kernel_over_truncated_polynomial_ring() {
        let r = GradedRing::from_text(&["x"], &["x^3"], 32003).unwrap();
        let a = Matrix::from_rows(&r, vec![vec![p(&r, "x")]], None).unwrap();
        let k = kernel(&a);
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.entry(0, 0), &p(&r, "x^2"));
        let id = Matrix::identity(&r, &[0, 0]);
        assert_eq!(kernel(&id).ncols(), 0);
    }
}
