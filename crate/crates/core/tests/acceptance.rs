//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{coker, cyclic_ext_tor_oracle, ideal, quotient, ring};
use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{
    ext, gorenstein_dimension, invariant_counters, projective_dimension, tor, tor_is_zero, FpModule,
};
use linkage::linkage::random::{geolink_battery_suite, tor_nonvanishing_suite, DEFAULT_SEED};
use linkage::linkage::{
    depth_via_linked_syzygies, ext_tor_duality_check, geometric_link_report, is_gorenstein_ideal,
    is_horizontally_linked, lambda, syzygy_power, verify_sum_theorem, HdimSelector, Status,
    GEOMETRIC_CONDITIONS,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CURVE_RELATIONS: [&str; 5] = ["x*y", "y*z", "z*t", "x*t+y*t+t^2", "x^2+x*z+x*t"];

fn curve_ring() -> GradedRing {
    ring(&["x", "y", "z", "t"], &CURVE_RELATIONS)
}

fn gorenstein_curve() -> Outcome {
    let r = curve_ring();
    ensure!(r.dim() == 1, "dim R = {}", r.dim());
    let defining = ideal(&r.ambient(), &CURVE_RELATIONS.join(", "));
    let g = is_gorenstein_ideal(&defining).map_err(|e| e.to_string())?;
    ensure!(g.gorenstein && g.grade == 3, "defining ideal: {}", g.report);

    let i = ideal(&r, "x, z");
    let j = ideal(&r, "y");
    let zero = Ideal::zero(&r);
    ensure!(zero.colon(&j).unwrap() == i, "(0 : J) != I");
    ensure!(zero.colon(&i).unwrap() == j, "(0 : I) != J");

    let geo = geometric_link_report(&i, &j, true).map_err(|e| e.to_string())?;
    for c in GEOMETRIC_CONDITIONS {
        ensure!(geo.get(c) == Some(Status::True), "{c} not true:\n{geo}");
    }
    ensure!(
        tor_is_zero(1, &FpModule::quotient(&i), &FpModule::quotient(&j)).unwrap(),
        "Tor_1(R/I, R/J) != 0"
    );

    let m = lambda(&syzygy_power(&FpModule::quotient(&i), 1).unwrap()).unwrap();
    let hl = is_horizontally_linked(&m).map_err(|e| e.to_string())?;
    ensure!(hl.is_true("horizontally_linked"), "M not linked:\n{hl}");
    let lm = lambda(&m).unwrap();
    let ann = lm.annihilator();
    ensure!(ann == j, "Ann(λM) = {}", ann.format());
    let over = lm
        .change_ring(&r.quotient_by(ann.gens()).unwrap())
        .unwrap()
        .minimal_presentation();
    ensure!(
        !over.is_free() && over.presentation().ncols() > 0,
        "λM free over R/(y)"
    );
    ensure!(tor_is_zero(1, &m, &lm).unwrap(), "Tor_1(M, λM) != 0");
    Ok(())
}

fn sum_instance() -> Outcome {
    let p = ring(&["x", "y"], &[]);
    let (i, j, c) = (ideal(&p, "x"), ideal(&p, "y"), ideal(&p, "x*y"));
    let rep = verify_sum_theorem(&FpModule::quotient(&i), &FpModule::quotient(&j), &c)
        .map_err(|e| e.to_string())?;
    ensure!(rep.passed(), "{rep}");
    for v in ["sum_gorenstein", "grade_is_grade_plus_one", "tensor_free_over_quotient"] {
        ensure!(rep.is_true(v), "{v} not true:\n{rep}");
    }
    let a = i.sum(&j).unwrap();
    ensure!(a == ideal(&p, "x, y"), "A = {}", a.format());
    let g = is_gorenstein_ideal(&a).unwrap();
    ensure!(g.gorenstein && g.grade == 2, "A grade {}", g.grade);
    Ok(())
}

fn equivalence_battery() -> Outcome {
    let rings = [
        ring(&["x", "y"], &["x*y"]),
        ring(&["x", "y", "z"], &["x*y", "y*z"]),
        curve_ring(),
    ];
    let (s, rep) = geolink_battery_suite(&rings, 8, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure!(s.cases >= 20, "only {} cases", s.cases);
    ensure!(s.failures.is_empty(), "disagreements: {:?}", s.failures);
    ensure!(rep.passed(), "{rep}");
    Ok(())
}

fn depth_detection() -> Outcome {
    let a = ring(&["x", "y"], &["x^2"]);
    let scan = depth_via_linked_syzygies(&FpModule::residue_field(&a), HdimSelector::Pd, 3)
        .map_err(|e| e.to_string())?;
    let pds: Vec<_> = scan.steps.iter().map(|s| s.hdim).collect();
    ensure!(
        pds.first() == Some(&Some(linkage::homology::HomDim::Finite(0)))
            && pds.get(1).copied().flatten().is_some_and(|d| d.is_infinite()),
        "pd steps {pds:?}"
    );
    ensure!(scan.inf_n == Some(1) && scan.depth_ring == 1, "inf {:?}", scan.inf_n);
    ensure!(scan.report.passed(), "{}", scan.report);

    let reg = ring(&["x", "y"], &[]);
    let scan = depth_via_linked_syzygies(&FpModule::residue_field(&reg), HdimSelector::Pd, 3)
        .map_err(|e| e.to_string())?;
    ensure!(
        scan.report.failed_hypotheses() == ["hdim_infinite"],
        "regular ring: {}",
        scan.report
    );

    let b = ring(&["x", "y"], &["x^2", "x*y"]);
    let scan = depth_via_linked_syzygies(&FpModule::residue_field(&b), HdimSelector::Gdim, 3)
        .map_err(|e| e.to_string())?;
    ensure!(scan.inf_n == Some(0) && scan.depth_ring == 0, "gdim inf {:?}", scan.inf_n);
    ensure!(scan.report.passed(), "{}", scan.report);
    Ok(())
}

fn ext_tor_lengths() -> Outcome {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = quotient(&r, "x");
    let rep = ext_tor_duality_check(&m, 3).map_err(|e| e.to_string())?;
    ensure!(rep.passed(), "{rep}");
    let lm = lambda(&m).unwrap();
    // periodic resolution x, y, x, ... of R/(x)
    for (i, expected) in [(1, 0), (2, 1), (3, 0)] {
        let e = ext(i, &m, &m).unwrap().length();
        let t = tor(i, &m, &lm).unwrap().length();
        ensure!(
            e == Some(expected) && t == Some(expected),
            "i = {i}: ext {e:?} tor {t:?}, expected {expected}"
        );
    }
    Ok(())
}

fn kernel_invariants() -> Outcome {
    let p = ring(&["x", "y", "z"], &[]);
    let res = FpModule::residue_field(&p).resolution(5).unwrap();
    ensure!(res.betti().totals() == [1, 3, 3, 1], "Betti totals {:?}", res.betti().totals());
    ensure!(res.is_complete() && res.is_minimal(), "resolution of k");
    for w in res.maps().windows(2) {
        ensure!(w[0].mul(&w[1]).unwrap().is_zero(), "d∘d != 0");
    }
    let extra = [
        (ring(&["x", "y"], &["x^2"]), vec!["x", "y", "x^2, y"]),
        (ring(&["x", "y"], &["x^2", "x*y"]), vec!["x", "y"]),
        (ring(&["x", "y", "z"], &["x*y"]), vec!["x", "x, z", "x, y, z"]),
    ];
    for (r, ideals) in &extra {
        for t in ideals {
            let m = quotient(r, t);
            projective_dimension(&m).map_err(|e| e.to_string())?;
            gorenstein_dimension(&m).map_err(|e| e.to_string())?;
        }
    }
    let c = invariant_counters();
    ensure!(c.violations == 0, "{c:?}");
    ensure!(
        c.differentials_checked > 0 && c.auslander_buchsbaum > 0 && c.auslander_bridger > 0,
        "identities never checked: {c:?}"
    );
    Ok(())
}

fn tor_nonvanishing() -> Outcome {
    let rings = [
        ring(&["x", "y"], &["x^2", "y^2"]),
        ring(&["x", "y"], &["x^2", "x*y", "y^3"]),
        ring(&["x", "y"], &["x*y"]),
    ];
    let (s, rep) = tor_nonvanishing_suite(&rings, 6, 3, DEFAULT_SEED).map_err(|e| e.to_string())?;
    let defined = s.cases - s.vacuous;
    ensure!(defined >= 50, "only {defined} non-vacuous cases");
    ensure!(s.failures.is_empty(), "failures: {:?}", s.failures);
    ensure!(rep.passed(), "{rep}");
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for m in 1..=4 {
        let r = ring(&["x"], &[&format!("x^{m}")]);
        for a in 1..=m {
            let ma = coker(&r, &[&[&format!("x^{a}")]]);
            for b in 1..=m {
                let nb = coker(&r, &[&[&format!("x^{b}")]]);
                for i in 0..=4 {
                    let (e, t) = cyclic_ext_tor_oracle(m, a, b, i);
                    let ge = ext(i, &ma, &nb).unwrap().length();
                    let gt = tor(i, &ma, &nb).unwrap().length();
                    ensure!(
                        ge == Some(e as u64) && gt == Some(t as u64),
                        "m {m} a {a} b {b} i {i}: engine ext {ge:?} tor {gt:?}, oracle {e} {t}"
                    );
                    compared += 1;
                }
            }
        }
    }
    ensure!(compared == 150, "{compared} comparisons");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 gorenstein curve linkage", gorenstein_curve, 60),
        ("2 sum of linked ideals", sum_instance, 5),
        ("3 geometric linkage battery", equivalence_battery, 120),
        ("4 depth detection", depth_detection, 30),
        ("5 ext/tor duality lengths", ext_tor_lengths, 10),
        ("7 tor nonvanishing suite", tor_nonvanishing, 300),
        ("8 dense oracle equivalence", oracle_equivalence, 300),
        // last, so the counters cover every resolution above
        ("6 homology invariants", kernel_invariants, 300),
    ];
    let mut failed = 0;
    for (name, f, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()))
            .and_then(|()| {
                let t = start.elapsed();
                if t > Duration::from_secs(budget) {
                    Err(format!("took {t:.1?}, budget {budget}s"))
                } else {
                    Ok(())
                }
            });
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("acceptance {name}: PASS ({t:.2?})"),
            Err(e) => {
                failed += 1;
                println!("acceptance {name}: FAIL ({t:.2?})\n{e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
