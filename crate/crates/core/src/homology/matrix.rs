//! Homogeneous matrices over a graded ring.
//!
//! A matrix stands for a degree-zero map `⊕ R(-col_deg_j) → ⊕ R(-row_deg_i)`,
//! so a nonzero entry `(i, j)` has degree `col_deg_j - row_deg_i`.

use std::fmt;

use serde::Serialize;

use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::groebner::GradedRing;

#[derive(Clone, PartialEq)]
pub struct Matrix {
    ring: GradedRing,
    row_degs: Vec<i32>,
    col_degs: Vec<i32>,
    cols: Vec<Vec<Poly>>,
}

/// JSON form: row-major canonical polynomial strings plus twist vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<String>>,
    pub row_twists: Vec<i32>,
    pub col_twists: Vec<i32>,
}

impl Matrix {
    /// Checks shapes and homogeneity; entries are reduced modulo the ring relations.
    pub fn new(
        ring: &GradedRing,
        row_degs: Vec<i32>,
        col_degs: Vec<i32>,
        cols: Vec<Vec<Poly>>,
    ) -> Result<Matrix> {
        if cols.len() != col_degs.len() {
            return Err(Error::Structural(format!(
                "{} columns but {} column degrees",
                cols.len(),
                col_degs.len()
            )));
        }
        let mut out = Vec::with_capacity(cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != row_degs.len() {
                return Err(Error::Structural(format!(
                    "column {j} has {} entries, expected {}",
                    col.len(),
                    row_degs.len()
                )));
            }
            let mut reduced = Vec::with_capacity(col.len());
            for (i, f) in col.into_iter().enumerate() {
                let f = ring.reduce(&f);
                if !f.is_zero() {
                    match ring.base().degree_check(&f) {
                        crate::arith::DegreeCheck::Homogeneous(d)
                            if d == col_degs[j] - row_degs[i] => {}
                        _ => {
                            return Err(Error::InvalidInput(format!(
                                "entry ({i},{j}) = {} is not homogeneous of degree {}",
                                ring.format(&f),
                                col_degs[j] - row_degs[i]
                            )))
                        }
                    }
                }
                reduced.push(f);
            }
            out.push(reduced);
        }
        Ok(Matrix {
            ring: ring.clone(),
            row_degs,
            col_degs,
            cols: out,
        })
    }

    /// Internal constructor for entries already reduced and homogeneous.
    pub(crate) fn from_parts(
        ring: &GradedRing,
        row_degs: Vec<i32>,
        col_degs: Vec<i32>,
        cols: Vec<Vec<Poly>>,
    ) -> Matrix {
        debug_assert_eq!(cols.len(), col_degs.len());
        debug_assert!(cols.iter().all(|c| c.len() == row_degs.len()));
        Matrix {
            ring: ring.clone(),
            row_degs,
            col_degs,
            cols,
        }
    }

    /// Builds a matrix from rows. When `row_degs` is `None` the row twists
    /// are inferred (first row of each connected block gets degree 0);
    /// zero columns are dropped.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(
        ring: &GradedRing,
        rows: Vec<Vec<Poly>>,
        row_degs: Option<Vec<i32>>,
    ) -> Result<Matrix> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::Structural("ragged matrix rows".into()));
        }
        let rows: Vec<Vec<Poly>> = rows
            .into_iter()
            .map(|r| r.iter().map(|f| ring.reduce(f)).collect())
            .collect();
        for (i, r) in rows.iter().enumerate() {
            for (j, f) in r.iter().enumerate() {
                if !f.is_zero() && !ring.base().is_homogeneous(f) {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i},{j}) = {} is not homogeneous",
                        ring.format(f)
                    )));
                }
            }
        }
        let deg = |i: usize, j: usize| rows[i][j].degree();
        let row_degs = match row_degs {
            Some(d) => {
                if d.len() != nr {
                    return Err(Error::Structural(format!(
                        "{} twists for {nr} rows",
                        d.len()
                    )));
                }
                d
            }
            None => {
                // propagate r_i + deg(i,j) = c_j over the bipartite graph of entries
                let mut rdeg: Vec<Option<i32>> = vec![None; nr];
                let mut cdeg: Vec<Option<i32>> = vec![None; nc];
                for start in 0..nr {
                    if rdeg[start].is_some() {
                        continue;
                    }
                    rdeg[start] = Some(0);
                    let mut stack = vec![(true, start)];
                    while let Some((is_row, k)) = stack.pop() {
                        if is_row {
                            let r = rdeg[k].unwrap();
                            for j in 0..nc {
                                if let Some(d) = deg(k, j) {
                                    if cdeg[j].is_none() {
                                        cdeg[j] = Some(r + d);
                                        stack.push((false, j));
                                    }
                                }
                            }
                        } else {
                            let c = cdeg[k].unwrap();
                            for i in 0..nr {
                                if let Some(d) = deg(i, k) {
                                    if rdeg[i].is_none() {
                                        rdeg[i] = Some(c - d);
                                        stack.push((true, i));
                                    }
                                }
                            }
                        }
                    }
                }
                rdeg.into_iter().map(|d| d.unwrap_or(0)).collect()
            }
        };
        let mut cols = Vec::new();
        let mut col_degs = Vec::new();
        for j in 0..nc {
            let Some(i) = (0..nr).find(|&i| !rows[i][j].is_zero()) else {
                continue;
            };
            col_degs.push(row_degs[i] + deg(i, j).unwrap());
            cols.push((0..nr).map(|i| rows[i][j].clone()).collect());
        }
        Matrix::new(ring, row_degs, col_degs, cols)
    }

    pub fn identity(ring: &GradedRing, degs: &[i32]) -> Matrix {
        let n = degs.len();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { ring.base().one() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        Matrix::from_parts(ring, degs.to_vec(), degs.to_vec(), cols)
    }

    pub fn zero(ring: &GradedRing, row_degs: &[i32], col_degs: &[i32]) -> Matrix {
        let cols = col_degs
            .iter()
            .map(|_| vec![Poly::zero(); row_degs.len()])
            .collect();
        Matrix::from_parts(ring, row_degs.to_vec(), col_degs.to_vec(), cols)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degs.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degs(&self) -> &[i32] {
        &self.row_degs
    }

    pub fn col_degs(&self) -> &[i32] {
        &self.col_degs
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Poly] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Poly>] {
        &self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.cols.iter().map(|c| c[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|f| f.is_zero()))
    }

    /// Position of the first unit entry in column-major order.
    pub fn first_unit(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, f) in c.iter().enumerate() {
                if f.is_unit() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `true` iff no entry is a unit (the minimality condition).
    pub fn is_minimal(&self) -> bool {
        self.first_unit().is_none()
    }

    pub fn transpose(&self) -> Matrix {
        let cols = (0..self.nrows()).map(|i| self.row(i)).collect();
        Matrix::from_parts(
            &self.ring,
            self.col_degs.iter().map(|d| -d).collect(),
            self.row_degs.iter().map(|d| -d).collect(),
            cols,
        )
    }

    /// `self * other`; the source twists of `self` must be the target twists
    /// of `other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ring.check_same(&other.ring)?;
        if self.col_degs != other.row_degs {
            return Err(Error::Structural(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let b = self.ring.base();
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                (0..self.nrows())
                    .map(|i| {
                        let mut acc = Poly::zero();
                        for (k, f) in oc.iter().enumerate() {
                            if !f.is_zero() && !self.cols[k][i].is_zero() {
                                acc = b.add(&acc, &b.mul(&self.cols[k][i], f));
                            }
                        }
                        self.ring.reduce(&acc)
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix::from_parts(
            &self.ring,
            self.row_degs.clone(),
            other.col_degs.clone(),
            cols,
        ))
    }

    /// Kronecker product; row `(i,k)` has index `i * other.nrows() + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let b = self.ring.base();
        let (r2, c2) = (other.nrows(), other.ncols());
        let mut row_degs = Vec::with_capacity(self.nrows() * r2);
        for &a in &self.row_degs {
            for &c in &other.row_degs {
                row_degs.push(a + c);
            }
        }
        let mut col_degs = Vec::new();
        let mut cols = Vec::new();
        for (j, ac) in self.cols.iter().enumerate() {
            for l in 0..c2 {
                col_degs.push(self.col_degs[j] + other.col_degs[l]);
                let mut col = Vec::with_capacity(self.nrows() * r2);
                for a in ac {
                    for k in 0..r2 {
                        let e = &other.cols[l][k];
                        col.push(if a.is_zero() || e.is_zero() {
                            Poly::zero()
                        } else {
                            self.ring.reduce(&b.mul(a, e))
                        });
                    }
                }
                cols.push(col);
            }
        }
        Matrix::from_parts(&self.ring, row_degs, col_degs, cols)
    }

    /// Horizontal concatenation; row twists must agree.
    pub fn hcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.row_degs != other.row_degs {
            return Err(Error::Structural("row twists differ in concatenation".into()));
        }
        let mut m = self.clone();
        m.col_degs.extend_from_slice(&other.col_degs);
        m.cols.extend(other.cols.iter().cloned());
        Ok(m)
    }

    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        Matrix::from_parts(
            &self.ring,
            self.row_degs.clone(),
            keep.iter().map(|&j| self.col_degs[j]).collect(),
            keep.iter().map(|&j| self.cols[j].clone()).collect(),
        )
    }

    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        Matrix::from_parts(
            &self.ring,
            keep.iter().map(|&i| self.row_degs[i]).collect(),
            self.col_degs.clone(),
            self.cols
                .iter()
                .map(|c| keep.iter().map(|&i| c[i].clone()).collect())
                .collect(),
        )
    }

    /// Same entries over another ring with the same variables (entries are
    /// reduced modulo its relations).
    pub fn change_ring(&self, ring: &GradedRing) -> Result<Matrix> {
        if ring.base() != self.ring.base() {
            return Err(Error::RingMismatch);
        }
        Ok(Matrix::from_parts(
            ring,
            self.row_degs.clone(),
            self.col_degs.clone(),
            self.cols
                .iter()
                .map(|c| c.iter().map(|f| ring.reduce(f)).collect())
                .collect(),
        ))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: (0..self.nrows())
                .map(|i| self.cols.iter().map(|c| self.ring.format(&c[i])).collect())
                .collect(),
            row_twists: self.row_degs.clone(),
            col_twists: self.col_degs.clone(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.nrows())
            .map(|i| {
                let e: Vec<String> = self.cols.iter().map(|c| self.ring.format(&c[i])).collect();
                format!("[{}]", e.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix{} rows{:?} cols{:?}",
            self, self.row_degs, self.col_degs
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> GradedRing {
        GradedRing::from_text(&["x", "y"], &[], 32003).unwrap()
    }

    fn p(r: &GradedRing, s: &str) -> Poly {
        r.parse(s).unwrap()
    }

    #[test]
    fn infers_twists_and_drops_zero_columns() {
        let r = ring();
        let m = Matrix::from_rows(
            &r,
            vec![vec![p(&r, "1"), p(&r, "x"), p(&r, "0")], vec![p(&r, "0"), p(&r, "y"), p(&r, "0")]],
            None,
        )
        .unwrap();
        assert_eq!(m.ncols(), 2);
        assert_eq!(m.row_degs(), &[0, 0]);
        assert_eq!(m.col_degs(), &[0, 1]);
        assert_eq!(m.first_unit(), Some((0, 0)));
    }

    #[test]
    fn rejects_inhomogeneous_columns() {
        let r = ring();
        let rows = vec![vec![p(&r, "x")], vec![p(&r, "y^2")]];
        assert!(Matrix::from_rows(&r, rows.clone(), Some(vec![0, 0])).is_err());
        assert!(Matrix::from_rows(&r, rows, None).is_ok());
    }

    #[test]
    fn transpose_and_product_degrees() {
        let r = ring();
        let a = Matrix::from_rows(&r, vec![vec![p(&r, "x"), p(&r, "y")]], None).unwrap();
        let t = a.transpose();
        assert_eq!(t.row_degs(), &[-1, -1]);
        assert!(a.mul(&t).is_err());
        let koszul = Matrix::from_rows(&r, vec![vec![p(&r, "-y")], vec![p(&r, "x")]], Some(vec![1, 1])).unwrap();
        assert!(a.mul(&koszul).unwrap().is_zero());
        let j = a.to_json();
        assert_eq!(j.rows, vec![vec!["x".to_string(), "y".to_string()]]);
    }
}
