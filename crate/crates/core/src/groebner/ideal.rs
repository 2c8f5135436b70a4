//! Ideals of `P` and of quotient rings `P/I`, with their Groebner bases.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::engine::GbEngine;
use super::modvec::{ModVec, ModuleOrder};
use super::ring::GradedRing;
use crate::arith::{Monomial, Poly, PolyRing};
use crate::error::{Error, Result};

/// A reduced Groebner basis of polynomials together with a reducer for it.
#[derive(Clone, Debug)]
pub(crate) struct PolyGb {
    polys: Vec<Poly>,
    reducer: GbEngine,
}

impl PolyGb {
    pub fn compute(ring: &PolyRing, gens: &[Poly]) -> PolyGb {
        let ord = ModuleOrder::ideal(ring.order());
        let mut e = GbEngine::new(ord.clone(), *ring.field(), ring.weights().to_vec());
        for g in gens {
            e.add_generator(ModVec::from_column(std::slice::from_ref(g), &ord));
        }
        e.compute(None);
        let mut polys: Vec<Poly> = e
            .reduced_basis()
            .iter()
            .map(|v| v.to_column(ring, 1, 0).pop().unwrap())
            .collect();
        sort_canonically(ring, &mut polys);
        let reducer = GbEngine::from_basis(
            ord.clone(),
            *ring.field(),
            ring.weights().to_vec(),
            polys.iter().map(|p| ModVec::from_column(std::slice::from_ref(p), &ord)),
        );
        PolyGb { polys, reducer }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn reduce(&self, ring: &PolyRing, f: &Poly) -> Poly {
        if f.is_zero() || self.polys.is_empty() {
            return f.clone();
        }
        let v = ModVec::from_column(std::slice::from_ref(f), self.reducer.order());
        self.reducer
            .normal_form(&v)
            .to_column(ring, 1, 0)
            .pop()
            .unwrap()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }
}

/// Ascending by leading monomial.
fn sort_canonically(ring: &PolyRing, polys: &mut [Poly]) {
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => ring.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    });
}

/// Reduced Groebner basis of `gens` under the ring's order, sorted ascending
/// by leading monomial. Zero generators are dropped.
pub fn buchberger(ring: &PolyRing, gens: &[Poly]) -> Vec<Poly> {
    PolyGb::compute(ring, gens).polys
}

/// Exact quotient `f / g` in `P`, or `None` when `g` does not divide `f`.
pub fn divide_exact(ring: &PolyRing, f: &Poly, g: &Poly) -> Option<Poly> {
    let (lm, lc) = g.leading()?.clone();
    let lc_inv = ring.field().inv(lc)?;
    let mut rem = f.clone();
    let mut q = Vec::new();
    while let Some((m, c)) = rem.leading().cloned() {
        let u = m.div(&lm)?;
        let a = ring.field().mul(c, lc_inv);
        rem = ring.combine(&rem, ring.field().neg(a), Some(&u), g);
        q.push((u, a));
    }
    Some(ring.from_terms(q))
}

/// An ideal of a [`GradedRing`], given by homogeneous generators.
///
/// Generators are stored reduced modulo the ring relations; the cached
/// basis is the reduced Groebner basis of generators plus relations in `P`,
/// so two ideals are equal exactly when these bases coincide.
#[derive(Clone)]
pub struct Ideal {
    ring: GradedRing,
    gens: Vec<Poly>,
    gb: Arc<PolyGb>,
    display: Arc<OnceLock<String>>,
}

impl Ideal {
    pub fn new(ring: &GradedRing, gens: Vec<Poly>) -> Result<Ideal> {
        for g in &gens {
            if !ring.base().degree_check(g).is_homogeneous() && !g.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "ideal generator {} is not homogeneous",
                    ring.format(g)
                )));
            }
        }
        Ok(Ideal::from_homogeneous(ring, gens))
    }

    /// Skips the homogeneity check (internal results are homogeneous by construction).
    pub(crate) fn from_homogeneous(ring: &GradedRing, gens: Vec<Poly>) -> Ideal {
        let base = ring.base();
        let mut reduced: Vec<Poly> = Vec::new();
        for g in gens {
            let r = ring.reduce(&g);
            if !r.is_zero() && !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        let mut all = reduced.clone();
        all.extend(ring.relation_gb().iter().cloned());
        let gb = PolyGb::compute(base, &all);
        Ideal {
            ring: ring.clone(),
            gens: reduced,
            gb: Arc::new(gb),
            display: Arc::default(),
        }
    }

    /// Parses comma separated generators.
    pub fn parse(ring: &GradedRing, text: &str) -> Result<Ideal> {
        let gens = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|s| ring.parse(s))
                .collect::<Result<Vec<_>>>()?
        };
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &GradedRing) -> Ideal {
        Ideal::from_homogeneous(ring, Vec::new())
    }

    pub fn unit(ring: &GradedRing) -> Ideal {
        Ideal::from_homogeneous(ring, vec![ring.base().one()])
    }

    /// The irrelevant ideal generated by all variables.
    pub fn maximal(ring: &GradedRing) -> Ideal {
        let b = ring.base();
        Ideal::from_homogeneous(ring, (0..b.nvars()).map(|i| b.var(i)).collect())
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Groebner basis (in `P`) of generators plus ring relations.
    pub fn gb(&self) -> &[Poly] {
        self.gb.polys()
    }

    /// Generators of the preimage of this ideal in `P`.
    pub(crate) fn preimage_gens(&self) -> Vec<Poly> {
        self.gb.polys().to_vec()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.gb.reduce(self.ring.base(), f)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().iter().any(|g| g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb() == other.gb())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains(g)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::from_homogeneous(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let b = self.ring.base();
        let mut g = Vec::new();
        for f in &self.gens {
            for h in &other.gens {
                g.push(b.mul(f, h));
            }
        }
        Ok(Ideal::from_homogeneous(&self.ring, g))
    }

    /// Intersection, by eliminating `t` from `t*I + (1-t)*J` where `t` is an
    /// internal variable of weight zero.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = intersect_in_p(self.ring.base(), &self.preimage_gens(), &other.preimage_gens());
        Ok(Ideal::from_homogeneous(&self.ring, gens))
    }

    /// `(I : f) = { g : g f ∈ I }`.
    pub fn colon_poly(&self, f: &Poly) -> Ideal {
        if self.contains(f) {
            return Ideal::unit(&self.ring);
        }
        let b = self.ring.base();
        let meet = intersect_in_p(b, &self.preimage_gens(), std::slice::from_ref(f));
        let quotients = meet
            .iter()
            .map(|g| divide_exact(b, g, f).expect("element of (f) is divisible by f"))
            .collect();
        Ideal::from_homogeneous(&self.ring, quotients)
    }

    /// `(I : J)`, the intersection of `(I : f)` over the generators of `J`.
    /// `(I : 0)` is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for f in &other.gens {
            let c = self.colon_poly(f);
            acc = if acc.is_unit() { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// Generators of `I ∩ k[remaining variables]` (the preimage of `I` in
    /// `P` is used for quotient rings), computed under a block elimination
    /// order. The result lives in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let b = self.ring.base();
        let n = b.nvars();
        if let Some(v) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::Structural(format!("variable index {v} out of range")));
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        // permutation placing the eliminated variables first
        let mut perm: Vec<usize> = vars.to_vec();
        perm.sort_unstable();
        perm.dedup();
        let k = perm.len();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let names = perm.iter().map(|&i| b.names()[i].clone()).collect();
        let weights: Vec<i32> = perm.iter().map(|&i| b.weights()[i]).collect();
        let pr = b
            .with_vars(names, weights.clone())
            .with_order(crate::arith::MonomialOrder::Elimination(k));
        let permute = |f: &Poly, to: &PolyRing, fwd: bool| -> Poly {
            to.from_terms(
                f.terms()
                    .iter()
                    .map(|(m, c)| {
                        let e = m.exponents();
                        let ex: Vec<u16> = (0..n)
                            .map(|j| if fwd { e[perm[j]] } else { e[perm.iter().position(|&p| p == j).unwrap()] })
                            .collect();
                        (to.monomial(&ex), *c)
                    })
                    .collect(),
            )
        };
        let gens: Vec<Poly> = self.preimage_gens().iter().map(|f| permute(f, &pr, true)).collect();
        let gb = buchberger(&pr, &gens);
        let kept = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
            .map(|g| permute(g, b, false))
            .collect();
        Ok(Ideal::from_homogeneous(&self.ring, kept))
    }

    /// Monic minimal generators, each reduced modulo the others, in
    /// degree order and then by leading monomial.
    pub fn format(&self) -> String {
        self.display
            .get_or_init(|| {
                let g: Vec<String> = self
                    .display_gens()
                    .iter()
                    .map(|f| self.ring.format(f))
                    .collect();
                if g.is_empty() {
                    "(0)".to_string()
                } else {
                    format!("({})", g.join(", "))
                }
            })
            .clone()
    }

    fn display_gens(&self) -> Vec<Poly> {
        let b = self.ring.base();
        let mut gens = self.minimal_gens();
        for i in 0..gens.len() {
            let mut others: Vec<Poly> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, f)| f.clone())
                .collect();
            others.extend(self.ring.relation_gb().iter().cloned());
            let r = PolyGb::compute(b, &others).reduce(b, &gens[i]);
            gens[i] = b.monic(&r);
        }
        gens.sort_by(|f, g| {
            f.degree()
                .cmp(&g.degree())
                .then_with(|| b.cmp(g.leading_monomial().unwrap(), f.leading_monomial().unwrap()))
        });
        gens
    }

    /// Minimal homogeneous generators, in degree order.
    pub fn minimal_gens(&self) -> Vec<Poly> {
        let b = self.ring.base();
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.degree().unwrap_or(0));
        let mut kept: Vec<Poly> = Vec::new();
        for g in gens {
            let mut test = kept.clone();
            test.extend(self.ring.relation_gb().iter().cloned());
            let gb = PolyGb::compute(b, &test);
            if !gb.reduce(b, &g).is_zero() {
                kept.push(g);
            }
        }
        kept
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb() == other.gb()
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.format())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Generators of `(a) ∩ (b)` in `P`.
pub(crate) fn intersect_in_p(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let tr = ring.with_eliminated_prefix(&["_t"]);
    let lift = |f: &Poly, te: u16| -> Poly {
        tr.from_terms(
            f.terms()
                .iter()
                .map(|(m, c)| (m.prepend_vars(&[te], &[0]), *c))
                .collect(),
        )
    };
    let mut gens: Vec<Poly> = a.iter().map(|f| lift(f, 1)).collect();
    for f in b {
        gens.push(tr.sub(&lift(f, 0), &lift(f, 1)));
    }
    let gb = buchberger(&tr, &gens);
    let w = ring.weights();
    let mut out: Vec<Poly> = gb
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| {
            ring.from_terms(
                g.terms()
                    .iter()
                    .map(|(m, c)| (m.drop_front(1, w), *c))
                    .collect(),
            )
        })
        .collect();
    out.retain(|f| !f.is_zero());
    out
}
