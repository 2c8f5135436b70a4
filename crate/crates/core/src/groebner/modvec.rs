//! Elements of graded free modules `P^r` as flat term lists, and module
//! monomial orders.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::{FieldElem, Monomial, MonomialOrder, Poly, PolyRing, PrimeField};

/// One term `c * m * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MTerm {
    pub mono: Monomial,
    pub comp: usize,
    pub coeff: FieldElem,
}

/// How the position of a term enters the comparison.
#[derive(Clone, Debug)]
pub enum ModuleExt {
    PositionOverTerm,
    TermOverPosition,
    /// Induced order: `m e_i > n e_j` iff `m lead_i > n lead_j` in the target
    /// order, ties broken by position. Applies to components at or after
    /// `offset`; earlier components use term-over-position.
    Schreyer(Arc<SchreyerFrame>),
}

#[derive(Clone, Debug)]
pub struct SchreyerFrame {
    pub offset: usize,
    pub leads: Vec<(Monomial, usize)>,
    pub target: ModuleOrder,
}

/// A monomial order on a graded free module.
///
/// Comparison goes: elimination block (components `< split` dominate), then
/// twisted degree if `degree_first`, then `ext`. Lower component indices
/// are larger.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub twists: Vec<i32>,
    pub degree_first: bool,
    pub split: Option<usize>,
    pub ext: ModuleExt,
}

impl ModuleOrder {
    /// Order used for ideals: the ring order on component 0.
    pub fn ideal(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            twists: vec![0],
            degree_first: false,
            split: None,
            ext: ModuleExt::TermOverPosition,
        }
    }

    /// Degree-compatible term-over-position order with the given twists.
    pub fn graded(base: MonomialOrder, twists: Vec<i32>) -> Self {
        ModuleOrder {
            base,
            twists,
            degree_first: true,
            split: None,
            ext: ModuleExt::TermOverPosition,
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn degree_of(&self, m: &Monomial, comp: usize) -> i32 {
        m.degree() + self.twists[comp]
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let (ma, i) = a;
        let (mb, j) = b;
        if let Some(s) = self.split {
            let (ta, tb) = (i < s, j < s);
            if ta != tb {
                return if ta { Ordering::Greater } else { Ordering::Less };
            }
        }
        if self.degree_first {
            let o = self.degree_of(ma, i).cmp(&self.degree_of(mb, j));
            if o != Ordering::Equal {
                return o;
            }
        }
        match &self.ext {
            ModuleExt::PositionOverTerm => j.cmp(&i).then_with(|| self.base.cmp(ma, mb)),
            ModuleExt::TermOverPosition => self.base.cmp(ma, mb).then_with(|| j.cmp(&i)),
            ModuleExt::Schreyer(frame) => {
                if i < frame.offset || j < frame.offset {
                    return self.base.cmp(ma, mb).then_with(|| j.cmp(&i));
                }
                let (la, ca) = &frame.leads[i - frame.offset];
                let (lb, cb) = &frame.leads[j - frame.offset];
                frame
                    .target
                    .cmp((&ma.mul(la), *ca), (&mb.mul(lb), *cb))
                    .then_with(|| j.cmp(&i))
            }
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &MTerm, b: &MTerm) -> Ordering {
        self.cmp((&a.mono, a.comp), (&b.mono, b.comp))
    }
}

/// A module element, terms strictly descending under some [`ModuleOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModVec {
    pub terms: Vec<MTerm>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    /// Builds a sorted element from a dense column of polynomials.
    pub fn from_column(col: &[Poly], order: &ModuleOrder) -> Self {
        let mut terms: Vec<MTerm> = col
            .iter()
            .enumerate()
            .flat_map(|(comp, f)| {
                f.terms().iter().map(move |(m, c)| MTerm {
                    mono: m.clone(),
                    comp,
                    coeff: *c,
                })
            })
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        ModVec { terms }
    }

    /// Scatters back to a dense column of length `rank` (component offset
    /// `shift` is subtracted).
    pub fn to_column(&self, ring: &PolyRing, rank: usize, shift: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, FieldElem)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp - shift].push((t.mono.clone(), t.coeff));
        }
        buckets.into_iter().map(|b| ring.from_terms(b)).collect()
    }

    pub fn single_component(&self) -> bool {
        match self.terms.first() {
            Some(t) => self.terms.iter().all(|u| u.comp == t.comp),
            None => true,
        }
    }

    pub fn min_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp).min()
    }

    pub fn scale(&self, c: FieldElem, field: &PrimeField) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    mono: t.mono.clone(),
                    comp: t.comp,
                    coeff: field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn monic(&self, field: &PrimeField) -> ModVec {
        match self.lead() {
            Some(t) if t.coeff != FieldElem::ONE => {
                self.scale(field.inv(t.coeff).expect("nonzero lead"), field)
            }
            _ => self.clone(),
        }
    }
}

/// `f[from..] + c * m * g`, merged under `order`; terms of `f` before
/// `from` are copied unchanged in front.
pub fn axpy_from(
    f: &[MTerm],
    from: usize,
    c: FieldElem,
    m: &Monomial,
    g: &[MTerm],
    order: &ModuleOrder,
    field: &PrimeField,
) -> Vec<MTerm> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    out.extend_from_slice(&f[..from]);
    let mut i = from;
    for gt in g {
        let gm = gt.mono.mul(m);
        let gc = field.mul(gt.coeff, c);
        while i < f.len() && order.cmp((&f[i].mono, f[i].comp), (&gm, gt.comp)) == Ordering::Greater
        {
            out.push(f[i].clone());
            i += 1;
        }
        if i < f.len() && f[i].comp == gt.comp && f[i].mono == gm {
            let s = field.add(f[i].coeff, gc);
            if !s.is_zero() {
                out.push(MTerm {
                    mono: gm,
                    comp: gt.comp,
                    coeff: s,
                });
            }
            i += 1;
        } else {
            out.push(MTerm {
                mono: gm,
                comp: gt.comp,
                coeff: gc,
            });
        }
    }
    out.extend_from_slice(&f[i..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_block_dominates_degree() {
        let w = [1, 1];
        let mut ord = ModuleOrder::graded(MonomialOrder::Grevlex, vec![0, 0, 5]);
        ord.split = Some(2);
        let one = Monomial::one(2);
        let x3 = Monomial::new(&[3, 0], &w);
        // e_0 (deg 0) beats x^3 e_2 (deg 8) because component 2 is in the lower block
        assert_eq!(ord.cmp((&one, 0), (&x3, 2)), Ordering::Greater);
        // within a block, degree first
        assert_eq!(ord.cmp((&x3, 1), (&one, 0)), Ordering::Greater);
    }

    #[test]
    fn column_round_trip() {
        let r = PolyRing::standard(&["x", "y"], 32003).unwrap();
        let col = vec![r.parse("x^2-y^2").unwrap(), Poly::zero(), r.parse("3*x").unwrap()];
        let ord = ModuleOrder::graded(MonomialOrder::Grevlex, vec![0, 0, 1]);
        let v = ModVec::from_column(&col, &ord);
        assert_eq!(v.terms.len(), 3);
        assert_eq!(v.to_column(&r, 3, 0), col);
    }
}
