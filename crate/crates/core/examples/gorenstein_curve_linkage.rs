//! A one-dimensional Gorenstein ring with a pair of geometrically linked
//! ideals, and the linked syzygy module `λΩ(R/I)`.

use std::time::Instant;

use linkage::groebner::{GradedRing, Ideal};
use linkage::homology::{tor_is_zero, FpModule};
use linkage::linkage::{
    geometric_link_report, ideals_linked_by, is_gorenstein_ideal, is_horizontally_linked, lambda,
    syzygy_power,
};

const RELATIONS: [&str; 5] = ["x*y", "y*z", "z*t", "x*t+y*t+t^2", "x^2+x*z+x*t"];

fn main() -> linkage::Result<()> {
    let start = Instant::now();
    let r = GradedRing::from_text(&["x", "y", "z", "t"], &RELATIONS, 32003)?;
    println!("R = {}", r.describe());
    println!("dim R = {}", r.dim());

    let p = r.ambient();
    let defining = Ideal::parse(&p, &RELATIONS.join(", "))?;
    let g = is_gorenstein_ideal(&defining)?;
    println!("defining ideal Gorenstein: {} (grade {})", g.gorenstein, g.grade);

    let i = Ideal::parse(&r, "x, z")?;
    let j = Ideal::parse(&r, "y")?;
    let link = ideals_linked_by(&i, &j, &Ideal::zero(&r))?;
    println!("\n{link}");
    let geo = geometric_link_report(&i, &j, true)?;
    println!("\n{geo}");

    let qi = FpModule::quotient(&i);
    let qj = FpModule::quotient(&j);
    println!("\nTor_1(R/I, R/J) = 0: {}", tor_is_zero(1, &qi, &qj)?);

    let m = lambda(&syzygy_power(&qi, 1)?)?;
    println!("M = λΩ(R/I) has {} generators", m.num_generators());
    let hl = is_horizontally_linked(&m)?;
    println!("\n{hl}");
    let lm = lambda(&m)?;
    let ann = lm.annihilator();
    println!("\nAnn(λM) = {}", ann.format());
    let over_s = lm.change_ring(&r.quotient_by(ann.gens())?)?.minimal_presentation();
    println!("λM free over R/Ann(λM): {}", over_s.is_free());
    println!("Tor_1(M, λM) = 0: {}", tor_is_zero(1, &m, &lm)?);
    println!("\nelapsed {:.2?}", start.elapsed());
    Ok(())
}
