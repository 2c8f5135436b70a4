//! `lk`: runs `.lk` scripts and one-shot computations.
//!
//! Exit codes: 0 all checks passed, 1 some check failed, 2 usage or parse
//! error, 3 engine error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linkage::arith::{MonomialOrder, DEFAULT_PRIME};
use linkage::linkage::random::DEFAULT_SEED;
use linkage::script::{parse_script, run_script, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Parser, Debug)]
#[command(name = "lk", version, about = "Graded linkage workbench")]
struct Cli {
    /// Characteristic for rings declared without `p=`.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, global = true, value_enum, default_value = "grevlex")]
    order: OrderArg,
    /// Default homological bound for resolutions and scans.
    #[arg(long, global = true, default_value_t = 4)]
    bound: usize,
    /// Stop at the first failing check.
    #[arg(long, global = true)]
    fail_fast: bool,
    /// Seed of randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Include per-command timings in the JSON report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run a script.
    Run { script: PathBuf },
    /// Reduced Groebner basis of an ideal.
    Gb {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Betti table of a module.
    Res {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: String,
    },
    /// Ext^i(M, N).
    Ext {
        #[arg(long)]
        ring: String,
        #[arg(short, long)]
        index: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Tor_i(M, N).
    Tor {
        #[arg(long)]
        ring: String,
        #[arg(short, long)]
        index: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Horizontal linkage of a module, or linkage of ideals by `c`.
    Link {
        #[arg(long)]
        ring: String,
        #[arg(long, conflicts_with_all = ["i", "j", "c"])]
        module: Option<String>,
        #[arg(long, requires_all = ["j", "c"])]
        i: Option<String>,
        #[arg(long)]
        j: Option<String>,
        #[arg(long)]
        c: Option<String>,
    },
    /// Geometric linkage conditions for ideals linked by (0).
    Geolink {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Gorenstein test for an ideal.
    Gorenstein {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Depth of the ring from dimensions of linked syzygies.
    DepthScan {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "residue_field()")]
        module: String,
        #[arg(long, default_value = "pd")]
        selector: String,
        #[arg(long)]
        nmax: Option<usize>,
    },
}

fn ideal_text(s: &str) -> String {
    let t = s.trim();
    if t.starts_with('(') {
        t.to_string()
    } else {
        format!("({t})")
    }
}

/// The script text equivalent to a one-shot command.
fn one_shot(cmd: &Cmd, bound: usize) -> Option<String> {
    let (ring, body) = match cmd {
        Cmd::Run { .. } => return None,
        Cmd::Gb { ring, ideal } => (ring, format!("ideal I = {};\nshow gb(I);", ideal_text(ideal))),
        Cmd::Res { ring, module } => (ring, format!("show betti({module}, {bound});")),
        Cmd::Ext { ring, index, left, right } | Cmd::Tor { ring, index, left, right } => {
            let f = if matches!(cmd, Cmd::Ext { .. }) { "ext" } else { "tor" };
            let e = format!("{f}({index}, {left}, {right})");
            (ring, format!("show {e};\nshow hilbert({e});"))
        }
        Cmd::Link { ring, module, i, j, c } => match (module, i, j, c) {
            (Some(m), ..) => (ring, format!("horizontally_linked({m});")),
            (None, Some(i), Some(j), Some(c)) => (
                ring,
                format!(
                    "linked_by({}, {}, {});",
                    ideal_text(i),
                    ideal_text(j),
                    ideal_text(c)
                ),
            ),
            _ => (ring, String::from("link;")),
        },
        Cmd::Geolink { ring, i, j } => (ring, format!("geo_link({}, {});", ideal_text(i), ideal_text(j))),
        Cmd::Gorenstein { ring, ideal } => (ring, format!("gorenstein({});", ideal_text(ideal))),
        Cmd::DepthScan { ring, module, selector, nmax } => (
            ring,
            format!("depth_scan({module}, {selector}, {});", nmax.unwrap_or(bound)),
        ),
    };
    Some(format!("ring R = {ring};\n{body}\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.cmd {
        Cmd::Run { script } => match std::fs::read_to_string(script) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("lk: cannot read {}: {e}", script.display());
                return ExitCode::from(2);
            }
        },
        other => one_shot(other, cli.bound).expect("one-shot command"),
    };
    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("lk: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        prime: cli.prime,
        order: match cli.order {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        },
        bound: cli.bound,
        seed: cli.seed,
        fail_fast: cli.fail_fast,
        threads: None,
    };
    let report = run_script(&script, &opts);
    print!("{report}");
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json(cli.timing) + "\n") {
            eprintln!("lk: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
