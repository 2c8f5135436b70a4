//! Depth, grade, projective and Gorenstein dimension, reflexivity, and the
//! trace ideal of a module.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{
    canonical_module, depth, gorenstein_dimension, grade, is_reflexive, is_totally_reflexive,
    module_grade, projective_dimension, ring_depth, trace_and_stability, FpModule,
};

fn main() -> linkage::Result<()> {
    let rings = [
        ("k[x,y]/(x^2)", GradedRing::from_text(&["x", "y"], &["x^2"], 32003)?),
        ("k[x,y]/(x^2, xy)", GradedRing::from_text(&["x", "y"], &["x^2", "x*y"], 32003)?),
    ];
    for (name, r) in rings {
        println!("R = {name}, depth R = {}", ring_depth(&r)?);
        let omega = canonical_module(&r);
        println!("  canonical module: {}", match &omega {
            Ok(w) => format!("{} generators", w.minimal_presentation().num_generators()),
            Err(e) => e.to_string(),
        });
        let mods = [
            ("R/(x)", FpModule::quotient(&Ideal::parse(&r, "x")?)),
            ("k", FpModule::residue_field(&r)),
            ("(x)", FpModule::ideal_module(&Ideal::parse(&r, "x")?)),
        ];
        for (mname, m) in mods {
            let st = trace_and_stability(&m)?;
            println!(
                "  {mname}: depth {}, pd {}, gdim {}, grade {}, reflexive {}, totally reflexive {}, trace {}, stable {}",
                depth(&m)?,
                projective_dimension(&m)?,
                gorenstein_dimension(&m)?,
                module_grade(&m)?,
                is_reflexive(&m)?,
                is_totally_reflexive(&m)?,
                st.trace.format(),
                st.stable,
            );
        }
        println!("  grade (x, y) = {}", grade(&Ideal::maximal(&r))?);
    }
    Ok(())
}
