//! Verifiers for linkage statements. Each returns a [`LinkageReport`];
//! conclusions are only evaluated when every hypothesis holds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::operators::{
    is_gorenstein_ring, lambda, numeric_profile, numerically_consistent, syzygy_power, transpose,
};
use super::report::{HypothesisStatus, LinkageReport, Status};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::homology::{
    depth, ext, ext_is_zero, gorenstein_dimension, grade, module_grade, projective_dimension,
    ring_depth, tensor, tor, tor_is_zero, trace_and_stability, FpModule, HomDim,
};

fn ring_module(m: &FpModule) -> FpModule {
    FpModule::free(m.ring(), &[0])
}

/// Homological dimension used by the depth scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HdimSelector {
    Pd,
    Gdim,
}

impl HdimSelector {
    pub fn eval(self, m: &FpModule) -> Result<HomDim> {
        match self {
            HdimSelector::Pd => projective_dimension(m),
            HdimSelector::Gdim => gorenstein_dimension(m),
        }
    }
}

impl fmt::Display for HdimSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HdimSelector::Pd => "pd",
            HdimSelector::Gdim => "gdim",
        })
    }
}

impl FromStr for HdimSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pd" => Ok(HdimSelector::Pd),
            "gdim" | "g-dim" => Ok(HdimSelector::Gdim),
            _ => Err(Error::InvalidInput(format!("unknown dimension selector {s:?}"))),
        }
    }
}

/// `M` is horizontally linked iff it is stable and `Ext^1(Tr M, R) = 0`.
/// The numeric agreement of `λλM` with `M` is recorded as a witness.
pub fn is_horizontally_linked(m: &FpModule) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("horizontally_linked");
    let st = trace_and_stability(m)?;
    rep.verdict("stable", st.stable, Some(format!("trace {}", st.trace.format())));
    let e1 = ext_is_zero(1, &transpose(m), &ring_module(m))?;
    rep.verdict("ext1_tr_vanishes", e1, None);
    let linked = st.stable && e1;
    rep.verdict("horizontally_linked", linked, None);
    let ll = lambda(&lambda(m)?)?;
    let agree = numerically_consistent(m, &ll)?;
    rep.verdict(
        "lambda_squared_numeric_consistent",
        agree,
        Some(format!("ann {}", ll.annihilator().format())),
    );
    rep.consistency = !linked || agree;
    Ok(rep)
}

/// `I = (c : J)` and `J = (c : I)`, requiring `c ⊆ I ∩ J`.
pub fn ideals_linked_by(i: &Ideal, j: &Ideal, c: &Ideal) -> Result<LinkageReport> {
    i.ring().check_same(j.ring())?;
    i.ring().check_same(c.ring())?;
    if !c.is_subset_of(i)? {
        return Err(Error::precondition("ideals_linked_by", "c is not contained in I"));
    }
    if !c.is_subset_of(j)? {
        return Err(Error::precondition("ideals_linked_by", "c is not contained in J"));
    }
    let mut rep = LinkageReport::new("ideals_linked_by");
    let cj = c.colon(j)?;
    let ci = c.colon(i)?;
    let first = cj == *i;
    let second = ci == *j;
    rep.verdict("i_equals_c_colon_j", first, Some(cj.format()));
    rep.verdict("j_equals_c_colon_i", second, Some(ci.format()));
    rep.verdict("linked", first && second, None);
    let back = c.colon(&cj)?;
    let duality = back == ci;
    rep.verdict("colon_duality", duality, Some(back.format()));
    rep.consistency = !(first && second) || duality;
    Ok(rep)
}

/// Verdict names of the five conditions compared in a geometric-linkage report.
pub const GEOMETRIC_CONDITIONS: [&str; 5] = [
    "grade_sum_positive",
    "intersection_zero",
    "tor1_vanishes",
    "ext1_i_vanishes",
    "ext1_j_vanishes",
];

/// The five computable conditions equivalent to geometric linkage over an
/// unmixed ring, for ideals linked by `(0)`.
pub fn geometric_link_report(i: &Ideal, j: &Ideal, unmixed_asserted: bool) -> Result<LinkageReport> {
    let ring = i.ring();
    let link = ideals_linked_by(i, j, &Ideal::zero(ring))?;
    if !link.is_true("linked") {
        return Err(Error::precondition(
            "geometric_link_report",
            "the ideals are not linked by (0)",
        ));
    }
    let mut rep = LinkageReport::new("geometric_link");
    rep.require("linked_by_zero", true);
    rep.hypothesis(
        "unmixed",
        if unmixed_asserted {
            HypothesisStatus::Asserted
        } else {
            HypothesisStatus::NotCertified
        },
    );
    let (qi, qj) = (FpModule::quotient(i), FpModule::quotient(j));
    let g = grade(&i.sum(j)?)?;
    let meet = i.intersect(j)?;
    let values = [
        (g != HomDim::Finite(0), Some(format!("grade {g}"))),
        (meet.is_zero(), Some(meet.format())),
        (tor_is_zero(1, &qi, &qj)?, None),
        (ext_is_zero(1, &qi, &qi)?, None),
        (ext_is_zero(1, &qj, &qj)?, None),
    ];
    for (name, (v, w)) in GEOMETRIC_CONDITIONS.iter().zip(values.iter()) {
        rep.verdict(name, *v, w.clone());
    }
    rep.verdict(
        "disjoint_associated_primes",
        Status::NotComputed,
        Some("equivalent to the computed conditions".into()),
    );
    rep.consistency = values.iter().all(|v| v.0 == values[0].0);
    Ok(rep)
}

/// Result of [`is_gorenstein_ideal`].
#[derive(Clone, Debug)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub grade: usize,
    pub report: LinkageReport,
}

/// `R/a` perfect of grade `g` with `Ext^g(R/a, R)` cyclic with annihilator
/// `a`, and `Ext^i(R/a, R) = 0` for `g < i ≤ dim R + 1`.
pub fn is_gorenstein_ideal(a: &Ideal) -> Result<GorensteinVerdict> {
    if a.is_unit() {
        return Err(Error::precondition("is_gorenstein_ideal", "unit ideal"));
    }
    let ring = a.ring();
    let q = FpModule::quotient(a);
    let r = FpModule::free(ring, &[0]);
    let g = grade(a)?
        .finite()
        .ok_or_else(|| Error::Invariant("proper ideal of infinite grade".into()))?;
    let mut rep = LinkageReport::new("gorenstein_ideal");
    rep.verdict("grade", true, Some(g.to_string()));
    let top = ring.dim().max(0) as usize + 1;
    let mut vanish = true;
    for i in g + 1..=top {
        if !ext_is_zero(i, &q, &r)? {
            vanish = false;
            rep.verdict("ext_vanishes_off_grade", false, Some(format!("Ext^{i} nonzero")));
            break;
        }
    }
    if vanish {
        rep.verdict("ext_vanishes_off_grade", true, None);
    }
    let eg = ext(g, &q, &r)?;
    let cyclic = eg.is_cyclic();
    rep.verdict("ext_grade_cyclic", cyclic, Some(format!("{} generators", eg.num_generators())));
    let ann = eg.annihilator();
    let ann_ok = ann == *a;
    rep.verdict("ext_grade_annihilator", ann_ok, Some(ann.format()));
    let dq = depth(&q)?;
    let perfect = dq == HomDim::Finite(q.dim().max(0) as usize);
    rep.verdict("perfect", perfect, Some(format!("depth {dq}, dim {}", q.dim())));
    let gorenstein = vanish && cyclic && ann_ok && perfect;
    rep.verdict("gorenstein", gorenstein, None);
    Ok(GorensteinVerdict {
        gorenstein,
        grade: g,
        report: rep,
    })
}

fn skip_conclusions(rep: &mut LinkageReport, names: &[&str]) {
    for n in names {
        rep.verdict(n, Status::NotComputed, Some("hypothesis failed".into()));
    }
}

const SUM_CONCLUSIONS: [&str; 3] = ["sum_gorenstein", "grade_is_grade_plus_one", "tensor_free_over_quotient"];

/// For `M` linked to `N` by a Gorenstein ideal `c` of a Gorenstein ring,
/// with the annihilators geometrically linked over `R/c`: the ideal
/// `A = Ann M + Ann N` is Gorenstein of grade `grade M + 1`, and `M ⊗ N` is
/// free over `R/A`.
pub fn verify_sum_theorem(m: &FpModule, n: &FpModule, c: &Ideal) -> Result<LinkageReport> {
    m.check_ring(n)?;
    let ring = m.ring();
    ring.check_same(c.ring())?;
    let mut rep = LinkageReport::new("sum_theorem");
    let ok_ring = rep.require("ring_gorenstein", is_gorenstein_ring(ring)?);
    let ok_c = !c.is_unit() && is_gorenstein_ideal(c)?.gorenstein;
    rep.require("c_gorenstein", ok_c);
    let rbar = ring.quotient_by(c.gens())?;
    let mb = m.change_ring(&rbar)?;
    let nb = n.change_ring(&rbar)?;
    let linked = is_horizontally_linked(&mb)?.is_true("horizontally_linked")
        && numerically_consistent(&lambda(&mb)?, &nb)?;
    rep.require("linked_over_quotient", linked);
    let (am, an) = (mb.annihilator(), nb.annihilator());
    let geometric = match geometric_link_report(&am, &an, true) {
        Ok(g) => g.passed() && GEOMETRIC_CONDITIONS.iter().all(|k| g.is_true(k)),
        Err(Error::Precondition { .. }) => false,
        Err(e) => return Err(e),
    };
    rep.require("annihilators_geometrically_linked", geometric);
    if !(ok_ring && ok_c && linked && geometric) {
        skip_conclusions(&mut rep, &SUM_CONCLUSIONS);
        return Ok(rep);
    }
    let a = m.annihilator().sum(&n.annihilator())?;
    let gv = is_gorenstein_ideal(&a)?;
    rep.verdict(SUM_CONCLUSIONS[0], gv.gorenstein, Some(a.format()));
    let gm = module_grade(m)?;
    let want = gm.finite().map(|g| g + 1);
    rep.verdict(
        SUM_CONCLUSIONS[1],
        want == Some(gv.grade),
        Some(format!("grade A {}, grade M {gm}", gv.grade)),
    );
    let ra = ring.quotient_by(a.gens())?;
    let t = tensor(m, n)?.change_ring(&ra)?.minimal_presentation();
    rep.verdict(
        SUM_CONCLUSIONS[2],
        t.is_free(),
        Some(format!("rank {}", t.num_generators())),
    );
    Ok(rep)
}

fn require_gorenstein_curve(rep: &mut LinkageReport, m: &FpModule) -> Result<bool> {
    let ring = m.ring();
    let ok = ring.dim() == 1 && is_gorenstein_ring(ring)?;
    Ok(rep.require("ring_gorenstein_dim_1", ok))
}

/// `length Ext^i(M, M) = length Tor_i(M, λM)` for `1 ≤ i ≤ range`.
pub fn ext_tor_duality_check(m: &FpModule, range: usize) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("ext_tor_duality");
    let mut ok = require_gorenstein_curve(&mut rep, m)?;
    let mcm = m.is_zero() || depth(m)? == HomDim::Finite(1);
    ok &= rep.require("maximal_cohen_macaulay", mcm);
    let names: Vec<String> = (1..=range).map(|i| format!("length_ext{i}_equals_tor{i}")).collect();
    if !ok {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        skip_conclusions(&mut rep, &refs);
        return Ok(rep);
    }
    let lm = lambda(m)?;
    let tors = (1..=range).map(|i| tor(i, m, &lm)).collect::<Result<Vec<_>>>()?;
    let finite = tors.iter().all(|t| t.has_finite_length());
    rep.hypothesis(
        "tor_finite_length",
        if finite {
            HypothesisStatus::Holds
        } else {
            HypothesisStatus::NotCertified
        },
    );
    if !finite {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        skip_conclusions(&mut rep, &refs);
        return Ok(rep);
    }
    for (k, t) in tors.iter().enumerate() {
        let e = ext(k + 1, m, m)?.length();
        let tl = t.length();
        let show = |v: Option<u64>| v.map_or("inf".to_string(), |x| x.to_string());
        rep.verdict(&names[k], e == tl, Some(format!("ext {} tor {}", show(e), show(tl))));
    }
    Ok(rep)
}

/// `Tor_1(M, λM) = 0` passes to `Tor_1(Ω^n M, λΩ^n M) = 0`.
pub fn tor_shift_check(m: &FpModule, n: usize) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("tor_shift");
    let lm = lambda(m)?;
    if lm.is_zero() {
        rep.verdict("tor1_shift_vanishes", true, Some("vacuous: lambda M = 0".into()));
        return Ok(rep);
    }
    let mut ok = require_gorenstein_curve(&mut rep, m)?;
    ok &= rep.require(
        "horizontally_linked",
        is_horizontally_linked(m)?.is_true("horizontally_linked"),
    );
    ok &= rep.require("tor1_vanishes", tor_is_zero(1, m, &lm)?);
    if !ok {
        skip_conclusions(&mut rep, &["tor1_shift_vanishes"]);
        return Ok(rep);
    }
    let om = syzygy_power(m, n)?;
    let lo = lambda(&om)?;
    rep.verdict("tor1_shift_vanishes", tor_is_zero(1, &om, &lo)?, Some(format!("n = {n}")));
    Ok(rep)
}

/// One row of a depth scan; `hdim` is `None` when `λΩ^n M = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthStep {
    pub n: usize,
    pub hdim: Option<HomDim>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthScan {
    pub selector: HdimSelector,
    pub steps: Vec<DepthStep>,
    pub inf_n: Option<usize>,
    pub depth_ring: usize,
    pub report: LinkageReport,
}

/// `depth R = inf { n : H-dim(λΩ^n M) = ∞ }` for finite-length `M` of
/// infinite H-dimension, scanning `n = 0..=nmax`.
pub fn depth_via_linked_syzygies(m: &FpModule, h: HdimSelector, nmax: usize) -> Result<DepthScan> {
    let mut rep = LinkageReport::new(format!("depth_scan_{h}"));
    let depth_ring = ring_depth(m.ring())?;
    let fl = rep.require("finite_length", !m.is_zero() && m.has_finite_length());
    let hm = h.eval(m)?;
    let inf = rep.require("hdim_infinite", hm.is_infinite());
    if !(fl && inf) {
        skip_conclusions(&mut rep, &["inf_equals_depth"]);
        return Ok(DepthScan {
            selector: h,
            steps: Vec::new(),
            inf_n: None,
            depth_ring,
            report: rep,
        });
    }
    let steps = (0..=nmax)
        .into_par_iter()
        .map(|n| {
            let x = lambda(&syzygy_power(m, n)?)?;
            let hdim = if x.is_zero() { None } else { Some(h.eval(&x)?) };
            Ok(DepthStep { n, hdim })
        })
        .collect::<Result<Vec<_>>>()?;
    let inf_n = steps
        .iter()
        .find(|s| s.hdim == Some(HomDim::Infinite))
        .map(|s| s.n);
    for s in &steps {
        let label = format!("{h}_step_{}", s.n);
        match s.hdim {
            None => {
                rep.verdict(&label, Status::NotComputed, Some("vacuous".into()));
            }
            Some(HomDim::Finite(v)) if h == HdimSelector::Pd => {
                rep.verdict(&label, v == s.n, Some(format!("pd {v}")));
            }
            Some(d) => {
                rep.verdict(&label, Status::True, Some(format!("{h} {d}")));
            }
        }
    }
    rep.verdict(
        "inf_equals_depth",
        inf_n == Some(depth_ring),
        Some(match inf_n {
            Some(v) => format!("inf {v}, depth R {depth_ring}"),
            None => format!("not found up to {nmax}, depth R {depth_ring}"),
        }),
    );
    Ok(DepthScan {
        selector: h,
        steps,
        inf_n,
        depth_ring,
        report: rep,
    })
}

/// `Tor_n(M, λΩ^n M) ≠ 0` whenever `λΩ^n M ≠ 0`.
pub fn tor_nonvanishing_check(m: &FpModule, n: usize) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("tor_nonvanishing");
    let x = lambda(&syzygy_power(m, n)?)?;
    if x.is_zero() {
        rep.verdict("tor_nonzero", Status::NotComputed, Some("vacuous: lambda syzygy is 0".into()));
        return Ok(rep);
    }
    let nz = !tor_is_zero(n, m, &x)?;
    rep.verdict("tor_nonzero", nz, Some(format!("n = {n}")));
    Ok(rep)
}

/// Betti swap for stable modules: `β_0(Tr M) = β_1(M)`, `β_1(Tr M) = β_0(M)`.
pub fn betti_swap_holds(m: &FpModule) -> Result<bool> {
    let t = transpose(m);
    let mm = m.minimal_presentation();
    Ok(t.num_generators() == mm.presentation().ncols()
        && t.presentation().ncols() == mm.num_generators())
}

/// [`betti_swap_holds`] under the hypothesis that `M` is stable.
pub fn betti_swap_check(m: &FpModule) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("betti_swap");
    if !rep.require("stable", trace_and_stability(m)?.stable) {
        skip_conclusions(&mut rep, &["betti_swap"]);
        return Ok(rep);
    }
    rep.verdict("betti_swap", betti_swap_holds(m)?, None);
    Ok(rep)
}

/// `ΩM` and `(λM)*` agree in Hilbert function (up to shift) and annihilator.
/// Guaranteed only for horizontally linked `M`.
pub fn dual_relation_holds(m: &FpModule) -> Result<bool> {
    let om = syzygy_power(m, 1)?;
    let ld = crate::homology::dual(&lambda(m)?)?;
    let (a, b) = (numeric_profile(&om)?, numeric_profile(&ld)?);
    Ok(a.hilbert == b.hilbert && a.annihilator == b.annihilator)
}

/// [`dual_relation_holds`] under the hypothesis that `M` is horizontally linked.
pub fn dual_relation_check(m: &FpModule) -> Result<LinkageReport> {
    let mut rep = LinkageReport::new("dual_relation");
    let linked = is_horizontally_linked(m)?.is_true("horizontally_linked");
    if !rep.require("horizontally_linked", linked) {
        skip_conclusions(&mut rep, &["dual_relation"]);
        return Ok(rep);
    }
    rep.verdict("dual_relation", dual_relation_holds(m)?, None);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GradedRing;

    fn ring(vars: &[&str], rels: &[&str]) -> GradedRing {
        GradedRing::from_text(vars, rels, 32003).unwrap()
    }

    fn quot(r: &GradedRing, s: &str) -> FpModule {
        FpModule::quotient(&Ideal::parse(r, s).unwrap())
    }

    #[test]
    fn horizontal_linkage_over_node() {
        let r = ring(&["x", "y"], &["x*y"]);
        let rep = is_horizontally_linked(&quot(&r, "x")).unwrap();
        assert!(rep.passed(), "{rep}");
        let free = is_horizontally_linked(&FpModule::free(&r, &[0])).unwrap();
        assert!(!free.is_true("horizontally_linked"));
        assert!(free.consistency);
    }

    #[test]
    fn residue_field_is_not_a_syzygy() {
        let r = ring(&["x", "y"], &["x^2"]);
        let rep = is_horizontally_linked(&FpModule::residue_field(&r)).unwrap();
        assert!(!rep.is_true("ext1_tr_vanishes"));
        assert!(!rep.is_true("horizontally_linked"));
    }

    #[test]
    fn ideal_linkage_and_preconditions() {
        let r = ring(&["x", "y"], &[]);
        let i = Ideal::parse(&r, "x").unwrap();
        let j = Ideal::parse(&r, "y").unwrap();
        let c = Ideal::parse(&r, "x*y").unwrap();
        let rep = ideals_linked_by(&i, &j, &c).unwrap();
        assert!(rep.is_true("linked") && rep.consistency);
        let bad = Ideal::parse(&r, "x^2").unwrap();
        assert!(ideals_linked_by(&i, &j, &bad).is_err());
    }

    #[test]
    fn geometric_battery() {
        let r = ring(&["x", "y"], &["x*y"]);
        let i = Ideal::parse(&r, "x").unwrap();
        let j = Ideal::parse(&r, "y").unwrap();
        let rep = geometric_link_report(&i, &j, true).unwrap();
        assert!(rep.passed(), "{rep}");
        let s = ring(&["x", "y"], &["x^2"]);
        let x = Ideal::parse(&s, "x").unwrap();
        let rep = geometric_link_report(&x, &x, true).unwrap();
        assert!(rep.consistency);
        assert!(GEOMETRIC_CONDITIONS.iter().all(|c| rep.get(c) == Some(Status::False)));
    }

    #[test]
    fn gorenstein_ideals() {
        let r = ring(&["x", "y"], &[]);
        let v = is_gorenstein_ideal(&Ideal::parse(&r, "x, y").unwrap()).unwrap();
        assert!(v.gorenstein);
        assert_eq!(v.grade, 2);
        let v = is_gorenstein_ideal(&Ideal::parse(&r, "x^2, x*y, y^2").unwrap()).unwrap();
        assert!(!v.gorenstein);
        assert!(is_gorenstein_ideal(&Ideal::unit(&r)).is_err());
    }

    #[test]
    fn sum_theorem_in_the_plane() {
        let r = ring(&["x", "y"], &[]);
        let c = Ideal::parse(&r, "x*y").unwrap();
        let rep = verify_sum_theorem(&quot(&r, "x"), &quot(&r, "y"), &c).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.witness("sum_gorenstein"), Some("(x, y)"));
    }

    #[test]
    fn duality_lengths_over_node() {
        let r = ring(&["x", "y"], &["x*y"]);
        let rep = ext_tor_duality_check(&quot(&r, "x"), 3).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.witness("length_ext2_equals_tor2"), Some("ext 1 tor 1"));
    }

    #[test]
    fn depth_scans() {
        let r = ring(&["x", "y"], &["x^2"]);
        let s = depth_via_linked_syzygies(&FpModule::residue_field(&r), HdimSelector::Pd, 2).unwrap();
        assert_eq!(s.inf_n, Some(1));
        assert_eq!(s.steps[0].hdim, Some(HomDim::Finite(0)));
        assert!(s.report.passed(), "{}", s.report);
        let p = ring(&["x", "y"], &[]);
        let s = depth_via_linked_syzygies(&FpModule::residue_field(&p), HdimSelector::Pd, 2).unwrap();
        assert!(!s.report.hypotheses_hold());
    }

    #[test]
    fn tor_nonvanishing() {
        let r = ring(&["x"], &["x^3"]);
        let rep = tor_nonvanishing_check(&FpModule::residue_field(&r), 2).unwrap();
        assert!(rep.is_true("tor_nonzero"), "{rep}");
    }
}
