//! Transpose, syzygy, the linkage operator λ = ΩTr, the cosyzygy over a
//! Gorenstein ring, and numeric comparison of the results.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::FpModule;
use linkage::linkage::{
    betti_swap_holds, cosyzygy, dual_relation_holds, is_horizontally_linked, lambda,
    numeric_profile, numerically_consistent, syzygy_power, transpose,
};

fn show(name: &str, m: &FpModule) -> linkage::Result<()> {
    let p = numeric_profile(m)?;
    println!(
        "{name}: {} generators, ann {}, H = {:?}",
        p.generators, p.annihilator, p.hilbert
    );
    Ok(())
}

fn main() -> linkage::Result<()> {
    let r = GradedRing::from_text(&["x"], &["x^3"], 32003)?;
    println!("R = {}", r.describe());
    let m = FpModule::quotient(&Ideal::parse(&r, "x")?);
    show("M = R/(x)", &m)?;
    show("Tr M", &transpose(&m))?;
    show("ΩM", &syzygy_power(&m, 1)?)?;
    let lm = lambda(&m)?;
    show("λM", &lm)?;
    show("λλM", &lambda(&lm)?)?;
    show("cosyz M", &cosyzygy(&m)?)?;
    println!("λλM ≈ M: {}", numerically_consistent(&lambda(&lm)?, &m)?);
    println!("Betti swap: {}", betti_swap_holds(&m)?);
    println!("dual relation: {}", dual_relation_holds(&m)?);
    println!("\n{}", is_horizontally_linked(&m)?);

    // k[x,y]/(x^2) has depth 1, so its residue field is not linked
    let s = GradedRing::from_text(&["x", "y"], &["x^2"], 32003)?;
    let k = FpModule::residue_field(&s);
    println!("\nover {}: λk free {}", s.describe(), lambda(&k)?.is_free());
    println!("{}", is_horizontally_linked(&k)?);
    Ok(())
}
