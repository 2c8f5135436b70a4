//! Signatures of script functions and checks.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Ring,
    Ideal,
    Module,
    Int,
    /// Integer or `inf` / `-inf`.
    Dim,
    Selector,
    Matrix,
    Text,
    Check,
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ty::Ring => "ring",
            Ty::Ideal => "ideal",
            Ty::Module => "module",
            Ty::Int => "integer",
            Ty::Dim => "dimension",
            Ty::Selector => "selector",
            Ty::Matrix => "matrix",
            Ty::Text => "text",
            Ty::Check => "check",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg {
    Is(Ty),
    ModuleOrIdeal,
    Any,
}

impl Arg {
    pub fn accepts(self, t: Ty) -> bool {
        match self {
            Arg::Is(Ty::Dim) => matches!(t, Ty::Dim | Ty::Int),
            Arg::Is(x) => x == t,
            Arg::ModuleOrIdeal => matches!(t, Ty::Module | Ty::Ideal),
            Arg::Any => !matches!(t, Ty::Check | Ty::Text),
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Is(t) => write!(f, "{t}"),
            Arg::ModuleOrIdeal => f.write_str("module or ideal"),
            Arg::Any => f.write_str("value"),
        }
    }
}

pub struct Sig {
    pub name: &'static str,
    pub args: &'static [Arg],
    /// Number of trailing arguments that may be omitted.
    pub optional: usize,
    /// Extra arguments of the last type are allowed.
    pub variadic: bool,
    pub ret: Ty,
}

use Arg::{Any, Is, ModuleOrIdeal};
use Ty::*;

const fn sig(name: &'static str, args: &'static [Arg], ret: Ty) -> Sig {
    Sig {
        name,
        args,
        optional: 0,
        variadic: false,
        ret,
    }
}

const fn opt(name: &'static str, args: &'static [Arg], optional: usize, ret: Ty) -> Sig {
    Sig {
        name,
        args,
        optional,
        variadic: false,
        ret,
    }
}

pub static SIGNATURES: &[Sig] = &[
    // modules
    sig("quotient", &[Is(Ideal)], Module),
    sig("ideal_as_module", &[Is(Ideal)], Module),
    sig("coker", &[Is(Matrix)], Module),
    Sig {
        name: "free",
        args: &[Is(Int)],
        optional: 1,
        variadic: true,
        ret: Module,
    },
    sig("residue_field", &[], Module),
    sig("lambda", &[Is(Module)], Module),
    sig("tr", &[Is(Module)], Module),
    sig("cosyz", &[Is(Module)], Module),
    sig("dual", &[Is(Module)], Module),
    sig("stable_part", &[Is(Module)], Module),
    sig("syz", &[Is(Int), Is(Module)], Module),
    sig("hom", &[Is(Module), Is(Module)], Module),
    sig("tensor", &[Is(Module), Is(Module)], Module),
    sig("direct_sum", &[Is(Module), Is(Module)], Module),
    sig("ext", &[Is(Int), Is(Module), Is(Module)], Module),
    sig("tor", &[Is(Int), Is(Module), Is(Module)], Module),
    sig("shift", &[Is(Module), Is(Int)], Module),
    // ideals
    sig("ann", &[Is(Module)], Ideal),
    sig("trace", &[Is(Module)], Ideal),
    sig("colon", &[Is(Ideal), Is(Ideal)], Ideal),
    sig("sum", &[Is(Ideal), Is(Ideal)], Ideal),
    sig("intersect", &[Is(Ideal), Is(Ideal)], Ideal),
    sig("product", &[Is(Ideal), Is(Ideal)], Ideal),
    sig("maximal", &[], Ideal),
    // numbers
    sig("pd", &[Is(Module)], Dim),
    sig("gdim", &[Is(Module)], Dim),
    sig("depth", &[Is(Module)], Dim),
    sig("grade", &[Is(Ideal)], Dim),
    sig("module_grade", &[Is(Module)], Dim),
    sig("length", &[Is(Module)], Dim),
    sig("dim", &[Is(Module)], Int),
    sig("num_gens", &[Is(Module)], Int),
    sig("ring_depth", &[], Int),
    // displays
    sig("gb", &[Is(Ideal)], Text),
    opt("betti", &[Is(Module), Is(Int)], 1, Text),
    opt("hilbert", &[Is(Module), Is(Int), Is(Int)], 2, Text),
    sig("presentation", &[Is(Module)], Text),
    // checks
    sig("horizontally_linked", &[Is(Module)], Check),
    sig("linked_by", &[Is(Ideal), Is(Ideal), Is(Ideal)], Check),
    sig("geo_link", &[Is(Ideal), Is(Ideal)], Check),
    sig("gorenstein", &[Is(Ideal)], Check),
    sig("gorenstein_ring", &[], Check),
    sig("sum_theorem", &[Is(Module), Is(Module), Is(Ideal)], Check),
    sig("ext_tor_duality", &[Is(Module), Is(Int)], Check),
    sig("tor_shift", &[Is(Module), Is(Int)], Check),
    opt("depth_scan", &[Is(Module), Is(Selector), Is(Int)], 1, Check),
    sig("tor_nonvanishing", &[Is(Module), Is(Int)], Check),
    opt("random_geolink", &[Is(Int)], 1, Check),
    opt("random_tor_nonvanishing", &[Is(Int), Is(Int)], 2, Check),
    sig("eq", &[Any, Any], Check),
    sig("is_zero", &[ModuleOrIdeal], Check),
    sig("is_free", &[Is(Module)], Check),
    sig("is_free_over", &[Is(Module), Is(Ideal)], Check),
    sig("is_cyclic", &[Is(Module)], Check),
    sig("is_stable", &[Is(Module)], Check),
    sig("is_reflexive", &[Is(Module)], Check),
    sig("totally_reflexive", &[Is(Module)], Check),
    sig("subset", &[Is(Ideal), Is(Ideal)], Check),
    sig("ext_vanishes", &[Is(Int), Is(Module), Is(Module)], Check),
    sig("tor_vanishes", &[Is(Int), Is(Module), Is(Module)], Check),
    sig("betti_swap", &[Is(Module)], Check),
    sig("dual_relation", &[Is(Module)], Check),
    sig("numeric_iso", &[Is(Module), Is(Module)], Check),
    sig("stable_iso", &[Is(Module), Is(Module)], Check),
];

pub fn lookup(name: &str) -> Option<&'static Sig> {
    SIGNATURES.iter().find(|s| s.name == name)
}

/// Bare words with a fixed meaning.
pub fn word_type(name: &str) -> Option<Ty> {
    match name {
        "pd" | "gdim" => Some(Selector),
        "inf" => Some(Dim),
        _ => None,
    }
}

/// Words that cannot be declared as names.
pub fn is_reserved(name: &str) -> bool {
    word_type(name).is_some()
        || lookup(name).is_some()
        || matches!(
            name,
            "ring" | "ideal" | "module" | "use" | "set" | "show" | "par" | "not" | "poly" | "true" | "false"
        )
}

/// Options accepted by `set`.
pub const OPTIONS: [&str; 3] = ["bound", "seed", "fail_fast"];
