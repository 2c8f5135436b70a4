//! Ext and Tor modules with their Hilbert functions and vanishing tests.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{ext, ext_is_zero, hom, tensor, tor, tor_is_zero, FpModule};

fn main() -> linkage::Result<()> {
    let r = GradedRing::from_text(&["x", "y"], &["x*y"], 32003)?;
    let a = FpModule::quotient(&Ideal::parse(&r, "x")?);
    let b = FpModule::quotient(&Ideal::parse(&r, "y")?);
    let k = FpModule::residue_field(&r);
    println!("R = {}", r.describe());
    println!("Hom(R/x, R/y) has {} generators", hom(&a, &b)?.minimal_presentation().num_generators());
    println!("R/x ⊗ R/y has length {:?}", tensor(&a, &b)?.length());
    for i in 0..4 {
        let t = tor(i, &a, &a)?;
        let e = ext(i, &a, &a)?;
        println!(
            "i = {i}: Tor_i(R/x, R/x) zero {} ({} gens), Ext^i(R/x, R/x) zero {}",
            tor_is_zero(i, &a, &a)?,
            t.minimal_presentation().num_generators(),
            e.is_zero()
        );
    }
    for i in 0..4 {
        let t = tor(i, &k, &k)?;
        println!("dim Tor_{i}(k, k) = {:?}", t.length());
    }
    println!("Ext^1(k, R) = 0: {}", ext_is_zero(1, &k, &FpModule::free(&r, &[0]))?);
    Ok(())
}
