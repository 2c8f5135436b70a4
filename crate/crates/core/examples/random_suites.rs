//! Seeded randomized suites: geometric-linkage conditions on random pairs
//! linked by zero, and Tor nonvanishing on random finite-length modules.

use linkage::groebner::GradedRing;
use linkage::linkage::random::{geolink_battery_suite, tor_nonvanishing_suite, DEFAULT_SEED};

fn main() -> linkage::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let gorenstein = [
        GradedRing::from_text(&["x", "y"], &["x*y"], 32003)?,
        GradedRing::from_text(&["x", "y", "z"], &["x*y", "z^2"], 32003)?,
    ];
    let (s, rep) = geolink_battery_suite(&gorenstein, 8, seed)?;
    println!("{rep}");
    println!("cases {}, failures {:?}\n", s.cases, s.failures);

    let artinian = [
        GradedRing::from_text(&["x", "y"], &["x^2", "y^2"], 32003)?,
        GradedRing::from_text(&["x", "y"], &["x^2", "x*y"], 32003)?,
    ];
    let (s, rep) = tor_nonvanishing_suite(&artinian, 3, 2, seed)?;
    println!("{rep}");
    println!("cases {}, vacuous {}, failures {:?}", s.cases, s.vacuous, s.failures);
    Ok(())
}
