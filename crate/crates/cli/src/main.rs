use clap::{Args, Parser, Subcommand};
use linkconc::linalg::SparseMatrix;
use linkconc::spaces::{
    self, QuotientReport, SpaceId, SuiteReport, DEFAULT_SEED,
};
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "linkconc", version, about = "Diagram-space calculator for link concordance invariants")]
struct Cli {
    /// Worker threads for suite dispatch (default: available parallelism,
    /// or the LINKCONC_THREADS environment variable)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the mod-p cross-check prime stream
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceArgs {
    /// One of bcsl, bcl, acsl, acl, aknot
    #[arg(long)]
    space: String,
    #[arg(short)]
    k: u32,
    #[arg(short)]
    d: u32,
}

#[derive(Subcommand)]
enum Command {
    /// List the diagram basis before taking the quotient
    Enumerate {
        #[command(flatten)]
        space: SpaceArgs,
        /// Write JSON to the given path, or `-` for stdout
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Compute the quotient dimension report
    Dims {
        #[command(flatten)]
        space: SpaceArgs,
        /// Number of mod-p cross-check primes (0 disables the check)
        #[arg(long, default_value_t = 2)]
        primes: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// List the surviving quotient basis codes
    Basis {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        /// One of lemmas, main-theorem, iso, hopf, chi, colors, all
        #[arg(long)]
        suite: String,
        #[arg(short, default_value_t = 3)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Export the relation matrix in coordinate format plus a column legend
    Export {
        #[command(flatten)]
        space: SpaceArgs,
        /// Output path for the matrix; the legend goes to <path>.legend
        #[arg(long)]
        output: PathBuf,
        /// Re-import the written file and confirm the rank matches
        #[arg(long)]
        check_roundtrip: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("LINKCONC_THREADS").ok().and_then(|s| s.parse().ok()));
    if let Some(n) = threads {
        // dispatch-level parallelism only; results are collected in order
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_space(args: &SpaceArgs) -> linkconc::Result<SpaceId> {
    args.space.parse()
}

fn emit(json: &Option<String>, value: &impl serde::Serialize, human: String) -> linkconc::Result<()> {
    match json.as_deref() {
        None => {
            println!("{human}");
        }
        Some("-") => {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
        }
        Some(path) => {
            let mut f = File::create(path)?;
            writeln!(f, "{}", serde_json::to_string_pretty(value).expect("serializable"))?;
        }
    }
    Ok(())
}

fn report_human(r: &QuotientReport) -> String {
    format!(
        "{}(k={}, d={}): basis {}, rows {}, rank {}, dim {}  [{}; {} ms]",
        r.space, r.k, r.degree, r.n_basis, r.n_rows, r.rank, r.dim, r.backend, r.elapsed_ms
    )
}

fn suite_human(r: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        out.push_str(&format!("[{}] {}: {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    let n_fail = r.checks.iter().filter(|c| !c.pass).count();
    out.push_str(&format!("{}: {} checks, {} failed", r.suite, r.checks.len(), n_fail));
    out
}

fn run(cli: Cli) -> linkconc::Result<ExitCode> {
    match cli.command {
        Command::Enumerate { space, json } => {
            let id = parse_space(&space)?;
            let sys = spaces::build_space(id, space.k, space.d)?;
            emit(&json, &sys.basis, sys.basis.join("\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { space, primes, json } => {
            let id = parse_space(&space)?;
            let report = spaces::compute_report(id, space.k, space.d, primes, cli.seed)?;
            emit(&json, &report, report_human(&report))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { space, json } => {
            let id = parse_space(&space)?;
            let codes = spaces::quotient_basis_codes(id, space.k, space.d)?;
            emit(&json, &codes, codes.join("\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, k, max_degree, json } => {
            let reports = run_suites(&suite, k, max_degree)?;
            let mut ok = true;
            for r in &reports {
                ok &= r.all_pass();
            }
            emit(&json, &reports, reports.iter().map(suite_human).collect::<Vec<_>>().join("\n"))?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Export { space, output, check_roundtrip } => {
            let id = parse_space(&space)?;
            let sys = spaces::build_space(id, space.k, space.d)?;
            let m = sys.to_matrix()?;
            let mut f = File::create(&output)?;
            m.export_integer_scaled(&mut f)?;
            let legend = output.with_extension(
                output
                    .extension()
                    .map(|e| format!("{}.legend", e.to_string_lossy()))
                    .unwrap_or_else(|| "legend".to_string()),
            );
            let mut lf = File::create(&legend)?;
            for (i, code) in sys.basis.iter().enumerate() {
                writeln!(lf, "{i} {code}")?;
            }
            if check_roundtrip {
                let mut r = BufReader::new(File::open(&output)?);
                let m2 = SparseMatrix::import(&mut r)?;
                let (r1, r2) = (
                    m.rank(linkconc::linalg::Backend::Rational),
                    m2.rank(linkconc::linalg::Backend::Rational),
                );
                if r1 != r2 {
                    return Err(linkconc::Error::Structural(format!(
                        "round-trip rank mismatch: {r1} vs {r2}"
                    )));
                }
                println!("round-trip rank {r1} confirmed");
            }
            println!(
                "wrote {} ({} rows, {} cols, {} nonzeros) and {}",
                output.display(),
                m.n_rows(),
                sys.basis.len(),
                m.nnz(),
                legend.display()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_suites(suite: &str, k: u32, max_degree: u32) -> linkconc::Result<Vec<SuiteReport>> {
    use rayon::prelude::*;
    let jobs: Vec<Box<dyn Fn() -> linkconc::Result<SuiteReport> + Send + Sync>> = match suite {
        "lemmas" => vec![Box::new(spaces::replay_lemmas)],
        "main-theorem" => (1..=max_degree)
            .map(|d| {
                Box::new(move || spaces::verify_main_theorem(k, d))
                    as Box<dyn Fn() -> linkconc::Result<SuiteReport> + Send + Sync>
            })
            .collect(),
        "iso" => (0..=max_degree)
            .map(|d| {
                Box::new(move || spaces::verify_iso(k, d))
                    as Box<dyn Fn() -> linkconc::Result<SuiteReport> + Send + Sync>
            })
            .collect(),
        "hopf" => vec![Box::new(move || spaces::verify_hopf(max_degree))],
        "chi" => (0..=max_degree)
            .map(|d| {
                Box::new(move || spaces::verify_chi(k, d))
                    as Box<dyn Fn() -> linkconc::Result<SuiteReport> + Send + Sync>
            })
            .collect(),
        "colors" => {
            let perm: Vec<u32> = (1..=k).map(|c| c % k + 1).collect();
            vec![
                Box::new(move || spaces::verify_color_invariance(SpaceId::Bcl, k, max_degree, &perm)),
            ]
        }
        "all" => {
            let mut out = run_suites("lemmas", k, max_degree)?;
            out.extend(run_suites("main-theorem", k, max_degree)?);
            out.extend(run_suites("iso", k, max_degree.min(2))?);
            out.extend(run_suites("hopf", k, max_degree.min(3))?);
            out.extend(run_suites("chi", k.min(2), max_degree.min(2))?);
            out.extend(run_suites("colors", k, max_degree)?);
            return Ok(out);
        }
        other => {
            return Err(linkconc::Error::Argument(format!(
                "unknown suite `{other}` (expected lemmas, main-theorem, iso, hopf, chi, colors or all)"
            )))
        }
    };
    // independent jobs run in parallel; collection order is fixed by the list
    jobs.par_iter().map(|job| job()).collect()
}
