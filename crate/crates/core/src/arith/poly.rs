use std::cmp::Ordering;

use super::field::{FieldElem, PrimeField};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// A sparse polynomial: terms sorted strictly descending under the ring's
/// order, no zero coefficients. The empty term list is the zero polynomial.
///
/// A `Poly` carries no ring; arithmetic goes through [`PolyRing`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(Monomial, FieldElem)>,
}

/// Result of [`PolyRing::degree_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeCheck {
    Homogeneous(i32),
    /// The zero polynomial is homogeneous of every degree.
    Indeterminate,
    Inhomogeneous,
}

impl DegreeCheck {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, DegreeCheck::Inhomogeneous)
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElem)> {
        self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, FieldElem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Degree of the leading term, i.e. the degree of a homogeneous polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0.degree())
    }

    /// Nonzero constant?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// The constant coefficient if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.as_slice() {
            [] => Some(FieldElem::ZERO),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    /// Wraps terms already known to be normalized.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, FieldElem)>) -> Self {
        Poly { terms }
    }
}

/// The polynomial ring `k[x_1..x_n]` with positive integer variable weights and
/// a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<i32>,
    field: PrimeField,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(
        names: Vec<String>,
        weights: Vec<i32>,
        field: PrimeField,
        order: MonomialOrder,
    ) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::Structural(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w <= 0) {
            return Err(Error::InvalidInput(format!(
                "variable weights must be positive, got {w}"
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable {n}")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > names.len() {
                return Err(Error::Structural("elimination block too large".into()));
            }
        }
        Ok(PolyRing {
            names,
            weights,
            field,
            order,
        })
    }

    /// Standard graded ring with unit weights and grevlex.
    pub fn standard(names: &[&str], p: u32) -> Result<Self> {
        PolyRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
            PrimeField::new(p)?,
            MonomialOrder::Grevlex,
        )
    }

    /// Ring with `extra` leading variables of weight 0 under an elimination
    /// order for those variables. Used internally for elimination tricks.
    pub(crate) fn with_eliminated_prefix(&self, extra: &[&str]) -> PolyRing {
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(self.names.iter().cloned());
        let mut weights = vec![0; extra.len()];
        weights.extend_from_slice(&self.weights);
        PolyRing {
            names,
            weights,
            field: self.field,
            order: MonomialOrder::Elimination(extra.len()),
        }
    }

    pub(crate) fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing {
            order,
            ..self.clone()
        }
    }

    pub(crate) fn with_vars(&self, names: Vec<String>, weights: Vec<i32>) -> PolyRing {
        PolyRing {
            names,
            weights,
            field: self.field,
            order: self.order,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::from_sorted_unchecked(vec![(Monomial::var(i, &self.weights), FieldElem::ONE)])
    }

    pub fn constant(&self, c: i64) -> Poly {
        let c = self.field.elem(c);
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly::from_sorted_unchecked(vec![(self.one_monomial(), c)])
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn term(&self, c: FieldElem, m: Monomial) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly::from_sorted_unchecked(vec![(m, c)])
        }
    }

    /// Builds a normalized polynomial from arbitrary terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, FieldElem)>) -> Poly {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly::from_sorted_unchecked(out)
    }

    /// Re-sorts a polynomial whose terms came from a ring with another order.
    pub fn resort(&self, f: Poly) -> Poly {
        self.from_terms(f.into_terms())
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        self.combine(f, FieldElem::ONE, None, g)
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        self.combine(f, self.field.neg(FieldElem::ONE), None, g)
    }

    pub fn neg(&self, f: &Poly) -> Poly {
        self.scale(f, self.field.neg(FieldElem::ONE))
    }

    pub fn scale(&self, f: &Poly, c: FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_sorted_unchecked(
            f.terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(*a, c)))
                .collect(),
        )
    }

    /// `c * m * f`; order compatibility keeps the result sorted.
    pub fn mul_term(&self, f: &Poly, c: FieldElem, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_sorted_unchecked(
            f.terms
                .iter()
                .map(|(fm, a)| (fm.mul(m), self.field.mul(*a, c)))
                .collect(),
        )
    }

    /// `f + c * m * g` (with `m = 1` when `None`) by a single merge.
    pub fn combine(&self, f: &Poly, c: FieldElem, m: Option<&Monomial>, g: &Poly) -> Poly {
        if c.is_zero() || g.is_zero() {
            return f.clone();
        }
        let field = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(gm, gc)| {
            (
                match m {
                    Some(m) => gm.mul(m),
                    None => gm.clone(),
                },
                field.mul(*gc, c),
            )
        });
        let mut next_g = gi.next();
        while let Some((gm, gc)) = next_g.take() {
            while i < f.terms.len() && self.cmp(&f.terms[i].0, &gm) == Ordering::Greater {
                out.push(f.terms[i].clone());
                i += 1;
            }
            if i < f.terms.len() && f.terms[i].0 == gm {
                let s = field.add(f.terms[i].1, gc);
                if !s.is_zero() {
                    out.push((gm, s));
                }
                i += 1;
            } else {
                out.push((gm, gc));
            }
            next_g = gi.next();
        }
        out.extend_from_slice(&f.terms[i..]);
        Poly::from_sorted_unchecked(out)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.combine(&acc, *c, Some(m), big);
        }
        acc
    }

    pub fn pow(&self, f: &Poly, mut e: u32) -> Poly {
        let mut base = f.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self, f: &Poly) -> Poly {
        match f.leading() {
            Some((_, c)) if *c != FieldElem::ONE => {
                self.scale(f, self.field.inv(*c).expect("nonzero"))
            }
            _ => f.clone(),
        }
    }

    pub fn degree_check(&self, f: &Poly) -> DegreeCheck {
        let Some(d) = f.degree() else {
            return DegreeCheck::Indeterminate;
        };
        if f.terms.iter().all(|(m, _)| m.degree() == d) {
            DegreeCheck::Homogeneous(d)
        } else {
            DegreeCheck::Inhomogeneous
        }
    }

    pub fn is_homogeneous(&self, f: &Poly) -> bool {
        self.degree_check(f).is_homogeneous()
    }

    /// Substitutes a polynomial for every variable; `images.len() == nvars`.
    /// The images live in `target`.
    pub fn substitute(&self, f: &Poly, images: &[Poly], target: &PolyRing) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in f.terms() {
            let mut t = target.constant(c.value() as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = target.mul(&t, &target.pow(&images[i], e as u32));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::standard(&["x", "y"], 32003).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let prod = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        let expected = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(prod, expected);
        assert_eq!(r.degree_check(&prod), DegreeCheck::Homogeneous(2));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = PolyRing::standard(&["x", "y", "z"], 32003).unwrap();
        let f = r.add(&r.mul(&r.var(0), &r.var(2)), &r.constant(5));
        assert!(r.add(&f, &r.neg(&f)).is_zero());
    }

    #[test]
    fn degree_check_cases() {
        let r = PolyRing::standard(&["x"], 32003).unwrap();
        let x = r.var(0);
        assert_eq!(r.degree_check(&Poly::zero()), DegreeCheck::Indeterminate);
        assert_eq!(
            r.degree_check(&r.add(&x, &r.mul(&x, &x))),
            DegreeCheck::Inhomogeneous
        );
    }

    #[test]
    fn rejects_bad_weights() {
        let f = PrimeField::default();
        assert!(PolyRing::new(vec!["x".into()], vec![0], f, MonomialOrder::Grevlex).is_err());
        assert!(PolyRing::new(
            vec!["x".into(), "x".into()],
            vec![1, 1],
            f,
            MonomialOrder::Grevlex
        )
        .is_err());
    }
}
