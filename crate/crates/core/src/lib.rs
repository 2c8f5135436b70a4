//! Graded commutative algebra for linkage of modules over quotients of
//! polynomial rings in positive characteristic.
//!
//! The examples directory is the main entry point, one program per
//! capability:
//!
//! ```text
//! examples/
//! ├── groebner_basis.rs            # bases under grevlex and lex, elimination, colon
//! ├── hilbert_series.rs            # Hilbert functions, dimension, multiplicity
//! ├── free_resolution.rs           # minimal resolutions and Betti tables
//! ├── ext_tor.rs                   # Ext, Tor, Hom and tensor products
//! ├── homological_dimensions.rs    # depth, grade, pd, G-dimension, trace
//! ├── linkage_operators.rs         # Tr, syzygy, λ, cosyzygy, numeric profiles
//! ├── sum_theorem.rs               # ideals linked by a Gorenstein ideal
//! ├── depth_detection.rs           # depth from linked syzygies of k
//! ├── gorenstein_curve_linkage.rs  # a linked pair on a Gorenstein curve
//! ├── random_suites.rs             # seeded randomized suites
//! └── run_script.rs                # the `.lk` script language from Rust
//! ```
//!
//! ```bash
//! cargo run --example linkage_operators
//! cargo run --example random_suites -- 42
//! ```
//!
//! Modules:
//!
//! - [`arith`]: prime fields, monomials, sparse polynomials, monomial orders
//! - [`groebner`]: graded rings, ideals, module Groebner bases, Hilbert series
//! - [`homology`]: finitely presented modules, resolutions, Ext, Tor, invariants
//! - [`linkage`]: linkage operators and verifiers producing [`linkage::LinkageReport`]
//! - [`script`]: parser and runner for `.lk` scripts, used by the `lk` binary

pub mod arith;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod linkage;
pub mod script;

pub use error::{Error, Result};
