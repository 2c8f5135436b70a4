//! The depth of a ring read off from when linked syzygies of a finite-length
//! module acquire infinite projective or Gorenstein dimension, and the
//! nonvanishing of `Tor_n(M, λΩ^n M)`.

use linkage::groebner::GradedRing;
use linkage::homology::FpModule;
use linkage::linkage::{depth_via_linked_syzygies, tor_nonvanishing_check, HdimSelector};

fn main() -> linkage::Result<()> {
    let rings = [
        ("k[x,y]/(x^2)", GradedRing::from_text(&["x", "y"], &["x^2"], 32003)?),
        ("k[x,y]/(x^2, xy)", GradedRing::from_text(&["x", "y"], &["x^2", "x*y"], 32003)?),
        ("k[x,y,z]/(xy, xz)", GradedRing::from_text(&["x", "y", "z"], &["x*y", "x*z"], 32003)?),
    ];
    for (name, r) in rings {
        let k = FpModule::residue_field(&r);
        for h in [HdimSelector::Pd, HdimSelector::Gdim] {
            let scan = depth_via_linked_syzygies(&k, h, 4)?;
            if !scan.report.hypotheses_hold() {
                println!("{name} {h}: skipped, {:?} fails", scan.report.failed_hypotheses());
                continue;
            }
            let steps: Vec<String> = scan
                .steps
                .iter()
                .map(|s| s.hdim.map_or("zero".to_string(), |d| d.to_string()))
                .collect();
            println!(
                "{name} {h}: [{}] first infinite at {:?}, depth {}",
                steps.join(", "),
                scan.inf_n,
                scan.depth_ring
            );
        }
        for n in 0..3 {
            let rep = tor_nonvanishing_check(&k, n)?;
            println!("  Tor_{n}(k, λΩ^{n} k): {:?}", rep.get("tor_nonzero"));
        }
    }
    Ok(())
}
