use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tccert::certificate::{
    certify_g2, genus_reduction_check, kunneth_scan, reproduce_example3, self_test, CertificateReport,
    CertifyConfig, Example3Options, Verdict,
};
use tccert::coinvariants::DEFAULT_DIMENSION_CAP;
use tccert::planner::{synthesize, tc_bracket, CellComplexDescription};

#[derive(Parser)]
#[command(name = "tccert", version, about = "Exact F2 certificates for TC of connected sums of real projective spaces")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Print per-stage timings in text output.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the degree-4 shuffle example stage by stage.
    Example3 {
        /// Corrupt one shuffle term (negative control).
        #[arg(long)]
        corrupt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Genus reduction (for g > 2) followed by the chain-level certificate.
    Certify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        g: u32,
        /// Largest dihedral quotient D_m tried for the coinvariant residue.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        mmax: u32,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        dimension_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the Künneth components surviving the (Y, Z) projection.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Synthesize a motion planner from a TOML cell-complex description, or
    /// from the built-in preset for the connected sum of g copies of RP^n.
    Planner {
        #[arg(long, conflicts_with_all = ["n", "g"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "g")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        g: Option<usize>,
        /// Skip the lower-bound certificate for the preset.
        #[arg(long)]
        no_bracket: bool,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        mmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the negative controls.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command, cli.verbose) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_report(report: &CertificateReport, format: Format, verbose: bool) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text if verbose => print!("{report}"),
        Format::Text => print!("{}", report.without_timings()),
    }
}

fn verdict_code(v: Verdict) -> u8 {
    v.exit_code() as u8
}

fn run(command: Command, verbose: bool) -> Result<u8, String> {
    match command {
        Command::Example3 { corrupt, format } => {
            let report = reproduce_example3(Example3Options { corrupt_shuffle: corrupt });
            print_report(&report, format, verbose);
            Ok(verdict_code(report.verdict))
        }
        Command::Certify { n, g, mmax, dimension_cap, format } => {
            let (n, g) = (n as usize, g as usize);
            if n < 3 {
                return Err(format!(
                    "n = {n} is outside the certified range n >= 3; for n = 2 the spaces are surfaces, where TC = 4 is already known"
                ));
            }
            if g < 2 {
                return Err(format!("g = {g} is outside the range g >= 2"));
            }
            let mut reports = Vec::new();
            if g > 2 {
                reports.push(genus_reduction_check(n, g).map_err(|e| e.to_string())?);
            }
            let config = CertifyConfig { mmax, dimension_cap };
            reports.push(certify_g2(n, &config).map_err(|e| e.to_string())?);
            let verdict = reports.iter().map(|r| r.verdict).max().unwrap_or(Verdict::Inconclusive);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?)
                }
                Format::Text => {
                    for r in &reports {
                        print_report(r, format, verbose);
                    }
                    println!("overall: {verdict}");
                }
            }
            Ok(verdict_code(verdict))
        }
        Command::Scan { n, format } => {
            let entries = kunneth_scan(n).map_err(|e| e.to_string())?;
            let rows: Vec<(String, String)> = entries
                .iter()
                .map(|e| (e.component.to_string(), tccert::certificate::format_yz(&e.value)))
                .collect();
            match format {
                Format::Json => {
                    let json: Vec<_> =
                        rows.iter().map(|(c, v)| serde_json::json!({ "component": c, "value": v })).collect();
                    println!("{}", serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?);
                }
                Format::Text => {
                    println!("n={n}: {} surviving components", rows.len());
                    for (c, v) in &rows {
                        println!("{c}: {v}");
                    }
                }
            }
            Ok(0)
        }
        Command::Planner { input, n, g, no_bracket, mmax, format } => {
            let description = match (&input, n, g) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    CellComplexDescription::from_toml(&text).map_err(|e| e.to_string())?
                }
                (None, Some(n), Some(g)) => CellComplexDescription::connected_sum_preset(n, g),
                _ => return Err("give --input FILE or --n N --g G".into()),
            };
            let table = synthesize(&description).map_err(|e| e.to_string())?;
            let bracket = match (n, g) {
                (Some(n), Some(g)) if !no_bracket && n >= 3 && g >= 2 => {
                    Some(tc_bracket(n, g, &CertifyConfig { mmax, ..Default::default() }).map_err(|e| e.to_string())?)
                }
                _ => None,
            };
            match format {
                Format::Json => {
                    let json = serde_json::json!({ "planner": table, "bracket": bracket });
                    println!("{}", serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?);
                }
                Format::Text => {
                    print!("{table}");
                    println!("TC upper bound: {}", table.tc_upper_bound());
                    if let Some(b) = &bracket {
                        println!("{b}");
                    }
                }
            }
            Ok(match bracket {
                Some(b) if !b.optimal => 1,
                _ => 0,
            })
        }
        Command::Selftest { format } => {
            let checks = self_test();
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&checks).map_err(|e| e.to_string())?),
                Format::Text => {
                    for c in &checks {
                        println!("[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
                    }
                }
            }
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { 1 })
        }
    }
}
