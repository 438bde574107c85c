use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyjoin_core::complex::{forest_complex_with_budget, SimplicialComplex};
use polyjoin_core::graph::{DegreeBound, Graph};
use polyjoin_core::homology::reduced_betti;
use polyjoin_core::verify::{self, SweepConfig, VerificationCase, Verdict};
use polyjoin_core::{Error, Result};

#[derive(Parser)]
#[command(name = "polyjoin", version, about = "Forest complexes, polyhedral joins and exact integral homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build F_d(G) for a graph expression and print it in the text format.
    Build {
        graph: String,
        #[arg(long, default_value = "0")]
        d: DegreeBound,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Reduced integral homology of a complex file or of F_d(G).
    Betti {
        /// A complex file, or a graph expression when no such file exists.
        input: String,
        #[arg(long, default_value = "0")]
        d: DegreeBound,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check one theorem instance against brute force.
    Verify {
        theorem: String,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        h1: Option<String>,
        #[arg(long)]
        h2: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: Option<DegreeBound>,
        /// Part sizes for multipartite, comma separated.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u32>>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run every case of a JSON or TOML configuration.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Directory for report.json and report.csv.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Re-emit a saved JSON report.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn need<T>(v: Option<T>, name: &str, theorem: &str) -> Result<T> {
    v.ok_or_else(|| Error::Config(format!("{theorem} needs --{name}")))
}

#[allow(clippy::too_many_arguments)]
fn case_from_flags(
    theorem: &str,
    g: Option<String>,
    h: Option<String>,
    h1: Option<String>,
    h2: Option<String>,
    n: Option<u32>,
    m: Option<u32>,
    r: Option<u32>,
    d: Option<DegreeBound>,
    parts: Option<Vec<u32>>,
) -> Result<VerificationCase> {
    use VerificationCase as C;
    let t = theorem;
    let finite = |d: Option<DegreeBound>| -> Result<u32> {
        need(d, "d", t)?.finite().ok_or_else(|| Error::Config(format!("{t} needs a finite --d")))
    };
    Ok(match theorem {
        "f-skeleton" => C::FSkeleton { d: finite(d)?, r: need(r, "r", t)?, n: need(n, "n", t)? },
        "pn-lex" => C::PnLex { n: need(n, "n", t)?, h: need(h, "h", t)? },
        "susp-f0" => C::SuspF0 { g: need(g, "g", t)?, h: need(h, "h", t)? },
        "k2-join" => C::K2Join { g: need(g, "g", t)?, d: need(d, "d", t)? },
        "star" => C::Star { n: need(n, "n", t)?, r: need(r, "r", t)?, d: need(d, "d", t)? },
        "bipartite" => C::Bipartite { n: need(n, "n", t)?, m: need(m, "m", t)?, r: need(r, "r", t)?, d: need(d, "d", t)? },
        "multipartite" => C::Multipartite { parts: need(parts, "parts", t)?, r: need(r, "r", t)?, d: need(d, "d", t)? },
        "h-invariance" => C::HInvariance { g: need(g, "g", t)?, h1: need(h1, "h1", t)?, h2: need(h2, "h2", t)? },
        "polyjoin-identity" => C::PolyjoinIdentity { g: need(g, "g", t)?, h: need(h, "h", t)? },
        other => return Err(Error::Config(format!("unknown theorem id `{other}`"))),
    })
}

fn load_complex(input: &str, d: DegreeBound, budget: Option<usize>) -> Result<SimplicialComplex> {
    let path = Path::new(input);
    if path.is_file() {
        SimplicialComplex::from_text(&std::fs::read_to_string(path)?)
    } else {
        forest_complex_with_budget(&input.parse::<Graph>()?, d, budget)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { graph, d, out, budget } => {
            let k = forest_complex_with_budget(&graph.parse::<Graph>()?, d, budget)?;
            match out {
                Some(path) => std::fs::write(path, k.to_text())?,
                None => print!("{}", k.to_text()),
            }
        }
        Command::Betti { input, d, budget } => {
            let k = load_complex(&input, d, budget)?;
            let b = reduced_betti(&k)?;
            println!("f-vector: {:?}", k.f_vector());
            println!("reduced homology: {b}");
        }
        Command::Verify { theorem, g, h, h1, h2, n, m, r, d, parts, budget } => {
            let case = case_from_flags(&theorem, g, h, h1, h2, n, m, r, d, parts)?;
            let report = verify::run_case(&case, budget).map_err(|e| Error::Config(e.to_string()))?;
            println!("{}", serde_json::to_string_pretty(&report).map_err(|e| Error::Config(e.to_string()))?);
            return Ok(ExitCode::from(u8::from(report.verdict == Verdict::Fail)));
        }
        Command::Sweep { config, out_dir } => {
            let config = SweepConfig::load(&config).map_err(|e| match e {
                Error::Io(io) => Error::Config(format!("{}: {io}", config.display())),
                other => other,
            })?;
            let outcome = verify::run_sweep(&config)?;
            for r in &outcome.reports {
                let verdict = match r.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                    Verdict::Skipped => "SKIPPED",
                };
                println!("{verdict} {} {}", r.case.theorem_id(), serde_json::to_string(&r.case).unwrap_or_default());
            }
            println!("passed {} failed {} skipped {}", outcome.passed, outcome.failed, outcome.skipped);
            if let Some(i) = outcome.first_fail {
                println!("first failure: case {i}");
            }
            if let Some(dir) = out_dir {
                verify::write_artifacts(&outcome.reports, &dir)?;
            }
            return Ok(ExitCode::from(outcome.exit_code() as u8));
        }
        Command::Report { input, format } => {
            let reports = verify::reports_from_json(&std::fs::read_to_string(input)?)?;
            match format {
                Format::Json => println!("{}", verify::reports_to_json(&reports)?),
                Format::Csv => print!("{}", verify::reports_to_csv(&reports)?),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
