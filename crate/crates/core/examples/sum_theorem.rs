//! Ideals linked by a Gorenstein ideal `c` have a Gorenstein sum of grade one
//! more, and the tensor product of the quotients is free over `R/(I + J)`.

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::FpModule;
use linkage::linkage::{ideals_linked_by, is_gorenstein_ideal, verify_sum_theorem};

fn main() -> linkage::Result<()> {
    let p = GradedRing::from_text(&["x", "y"], &[], 32003)?;
    let i = Ideal::parse(&p, "x")?;
    let j = Ideal::parse(&p, "y")?;
    let c = Ideal::parse(&p, "x*y")?;
    println!("{}", ideals_linked_by(&i, &j, &c)?);
    let s = i.sum(&j)?;
    let g = is_gorenstein_ideal(&s)?;
    println!("\nI + J = {} Gorenstein {} grade {}", s.format(), g.gorenstein, g.grade);
    let rep = verify_sum_theorem(&FpModule::quotient(&i), &FpModule::quotient(&j), &c)?;
    println!("\n{rep}");
    println!("passed: {}", rep.passed());

    let p3 = GradedRing::from_text(&["x", "y", "z"], &[], 32003)?;
    let c3 = Ideal::parse(&p3, "x^2, y^2")?;
    let i3 = Ideal::parse(&p3, "x, y")?;
    let j3 = c3.colon(&i3)?;
    println!("\nJ = (x^2, y^2) : (x, y) = {}", j3.format());
    let rep = verify_sum_theorem(&FpModule::quotient(&i3), &FpModule::quotient(&j3), &c3)?;
    println!("{rep}");
    Ok(())
}
