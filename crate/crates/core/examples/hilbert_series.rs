//! Hilbert functions, dimension and multiplicity of graded rings and modules.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::FpModule;

fn main() -> linkage::Result<()> {
    let rings = [
        ("plane cubic", vec!["x", "y", "z"], vec!["x^3+y^3+z^3"]),
        ("twisted cubic", vec!["x", "y", "z", "w"], vec!["x*z-y^2", "x*w-y*z", "y*w-z^2"]),
        ("fat point", vec!["x", "y"], vec!["x^2", "x*y", "y^3"]),
    ];
    for (name, vars, rels) in rings {
        let r = GradedRing::from_text(&vars, &rels, 32003)?;
        let h = r.hilbert();
        println!("{name}: {}", r.describe());
        println!("  dim {}, multiplicity {}, numerator {:?}", h.dim, h.multiplicity, h.numerator);
        let k = FpModule::free(&r, &[0]);
        let values: Vec<i64> = (0..8).map(|d| k.hilbert_function(d)).collect();
        println!("  H(0..8) = {values:?}");
    }

    let p = GradedRing::from_text(&["x", "y", "z"], &[], 32003)?;
    let m = FpModule::quotient(&Ideal::parse(&p, "x^2, y^2, z^2")?);
    println!("\nk[x,y,z]/(x^2, y^2, z^2)");
    let n = m.numerics(0, 4);
    for (d, v) in &n.values {
        println!("  degree {d}: {v}");
    }
    println!("  length {:?}", m.length());
    Ok(())
}
