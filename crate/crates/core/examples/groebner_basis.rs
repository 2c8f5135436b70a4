//! Groebner bases of ideals under grevlex and lex, elimination, and ideal
//! arithmetic in a quotient ring.

use linkage::arith::{MonomialOrder, PolyRing, PrimeField};
use linkage::groebner::{GradedRing, Ideal};

fn main() -> linkage::Result<()> {
    let twisted_cubic = "x*z-y^2, x*w-y*z, y*w-z^2";
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let base = PolyRing::new(
            ["x", "y", "z", "w"].map(String::from).to_vec(),
            vec![1; 4],
            PrimeField::new(32003)?,
            order,
        )?;
        let p = GradedRing::polynomial(base);
        let i = Ideal::parse(&p, twisted_cubic)?;
        println!("{} basis:", order.name());
        for g in i.gb() {
            println!("  {}", p.format(g));
        }
    }

    let p = GradedRing::from_text(&["x", "y", "z", "w"], &[], 32003)?;
    let i = Ideal::parse(&p, twisted_cubic)?;
    let e = i.eliminate(&[1])?;
    println!("\nI ∩ k[x, z, w] = {}", e.format());

    let r = GradedRing::from_text(&["x", "y", "z"], &["x*y", "y*z"], 32003)?;
    let a = Ideal::parse(&r, "x, z")?;
    let b = Ideal::parse(&r, "y")?;
    println!("\nR = {}", r.describe());
    println!("(x, z) + (y) = {}", a.sum(&b)?.format());
    println!("(x, z) ∩ (y) = {}", a.intersect(&b)?.format());
    println!("(x, z) (y)   = {}", a.product(&b)?.format());
    println!("0 : (x, z)   = {}", Ideal::zero(&r).colon(&a)?.format());
    println!("0 : (y)      = {}", Ideal::zero(&r).colon(&b)?.format());
    Ok(())
}
