//! Exact arithmetic: prime fields, monomials, orders, sparse polynomials.

mod field;
mod monomial;
mod order;
mod poly;
mod text;

pub use field::{FieldElem, PrimeField, DEFAULT_PRIME};
pub use monomial::{Exponents, Monomial};
pub use order::{mono_compare, MonomialOrder};
pub use poly::{DegreeCheck, Poly, PolyRing};
