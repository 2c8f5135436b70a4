//! Parses and runs a `.lk` script through the library, printing the text
//! report and the JSON form. Pass a path to run a different script.

use linkage::script::{parse_script, run_script, RunOptions};

const DEFAULT: &str = "
ring R = poly(vars x, y) / ideal(x*y);
ideal I = (x);
module M = R/I;
horizontally_linked(M);
geo_link(I, (y));
eq(ann(lambda(M)), (y));
show betti(M, 3);
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let script = parse_script(&text)?;
    print!("{script}");
    let report = run_script(&script, &RunOptions::default());
    println!("\n{report}");
    println!("{}", report.to_json(false));
    std::process::exit(report.exit_code());
}
