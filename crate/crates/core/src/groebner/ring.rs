use std::fmt;
use std::sync::Arc;

use super::hilbert::{hilbert_data, HilbertData};
use super::ideal::PolyGb;
use crate::arith::{Poly, PolyRing, PrimeField};
use crate::error::{Error, Result};

struct RingData {
    base: PolyRing,
    relations: Vec<Poly>,
    gb: PolyGb,
}

/// A graded ring `P/I`: the polynomial ring `P` together with homogeneous
/// relations and their reduced Groebner basis. Cheap to clone.
#[derive(Clone)]
pub struct GradedRing {
    inner: Arc<RingData>,
}

impl GradedRing {
    pub fn polynomial(base: PolyRing) -> GradedRing {
        let gb = PolyGb::compute(&base, &[]);
        GradedRing {
            inner: Arc::new(RingData {
                base,
                relations: Vec::new(),
                gb,
            }),
        }
    }

    /// `P/(relations)`; relations must be homogeneous.
    pub fn quotient(base: PolyRing, relations: Vec<Poly>) -> Result<GradedRing> {
        for f in &relations {
            if !f.is_zero() && !base.is_homogeneous(f) {
                return Err(Error::InvalidInput(format!(
                    "relation {} is not homogeneous",
                    base.format(f)
                )));
            }
        }
        let relations: Vec<Poly> = relations.into_iter().filter(|f| !f.is_zero()).collect();
        let gb = PolyGb::compute(&base, &relations);
        Ok(GradedRing {
            inner: Arc::new(RingData {
                base,
                relations,
                gb,
            }),
        })
    }

    /// Convenience constructor: standard grading, grevlex, relations parsed
    /// from text.
    pub fn from_text(vars: &[&str], relations: &[&str], p: u32) -> Result<GradedRing> {
        let base = PolyRing::standard(vars, p)?;
        let rels = relations
            .iter()
            .map(|s| base.parse(s))
            .collect::<Result<Vec<_>>>()?;
        GradedRing::quotient(base, rels)
    }

    /// This ring modulo further homogeneous relations.
    pub fn quotient_by(&self, extra: &[Poly]) -> Result<GradedRing> {
        let mut rels = self.inner.relations.clone();
        rels.extend(extra.iter().cloned());
        GradedRing::quotient(self.inner.base.clone(), rels)
    }

    /// The polynomial ring `P` covering this ring.
    pub fn ambient(&self) -> GradedRing {
        GradedRing::polynomial(self.inner.base.clone())
    }

    pub fn base(&self) -> &PolyRing {
        &self.inner.base
    }

    pub fn field(&self) -> &PrimeField {
        self.inner.base.field()
    }

    pub fn nvars(&self) -> usize {
        self.inner.base.nvars()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.inner.relations
    }

    /// Reduced Groebner basis of the relations.
    pub fn relation_gb(&self) -> &[Poly] {
        self.inner.gb.polys()
    }

    pub fn is_polynomial(&self) -> bool {
        self.relation_gb().is_empty()
    }

    /// Normal form modulo the relations.
    pub fn reduce(&self, f: &Poly) -> Poly {
        self.inner.gb.reduce(&self.inner.base, f)
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        self.inner.base.parse(text)
    }

    pub fn format(&self, f: &Poly) -> String {
        self.inner.base.format(f)
    }

    pub fn check_same(&self, other: &GradedRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Hilbert data of the ring itself.
    pub fn hilbert(&self) -> HilbertData {
        let leads = self.inner.gb.leading_monomials();
        hilbert_data(&leads, self.base().weights())
    }

    /// Krull dimension (−1 for the zero ring).
    pub fn dim(&self) -> i32 {
        self.hilbert().dim
    }

    pub fn describe(&self) -> String {
        let vars = self.base().names().join(",");
        if self.inner.relations.is_empty() {
            format!("k[{vars}]")
        } else {
            let rels: Vec<String> = self.inner.relations.iter().map(|f| self.format(f)).collect();
            format!("k[{vars}]/({})", rels.join(", "))
        }
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.relation_gb() == other.relation_gb())
    }
}

impl Eq for GradedRing {}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
