//! Minimal free resolutions and graded Betti tables, with the `d∘d = 0` and
//! Auslander–Buchsbaum counters.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{depth, invariant_counters, projective_dimension, FpModule};

fn main() -> linkage::Result<()> {
    let p = GradedRing::from_text(&["x", "y", "z", "w"], &[], 32003)?;
    let cases = [
        ("residue field", FpModule::residue_field(&p)),
        ("twisted cubic", FpModule::quotient(&Ideal::parse(&p, "x*z-y^2, x*w-y*z, y*w-z^2")?)),
        ("complete intersection", FpModule::quotient(&Ideal::parse(&p, "x^2, y^3")?)),
    ];
    for (name, m) in cases {
        let res = m.resolution(6)?;
        println!("{name}: pd {} depth {}", projective_dimension(&m)?, depth(&m)?);
        print!("{}", res.betti());
        println!("  complete {}, minimal {}\n", res.is_complete(), res.is_minimal());
    }

    // over a non-regular ring resolutions are infinite
    let r = GradedRing::from_text(&["x", "y"], &["x*y"], 32003)?;
    let k = FpModule::residue_field(&r);
    let res = k.resolution(5)?;
    println!("k over k[x,y]/(xy), truncated:");
    print!("{}", res.betti());
    println!("  totals {:?}", res.betti().totals());
    println!("\n{:?}", invariant_counters());
    Ok(())
}
