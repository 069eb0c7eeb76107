//! `mixed-walk`: periodicity experiments for Grover walks on mixed graphs.
//!
//! Exit status: 0 when every instance agrees with the expected verdict,
//! 1 when a counterexample was found, 2 on input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mixed_walk::charpoly::{coefficient_identities, CoefficientReport};
use mixed_walk::cyclo::{Angle, RationalAngle};
use mixed_walk::experiments::{
    enumerate_complete, prime_scan, verify_known, ExperimentReport, KnownFamily, PrimeScanOptions,
};
use mixed_walk::graph::MixedGraph;
use mixed_walk::matrices::{Exact, Numeric, PhaseMode, Walk};
use mixed_walk::periodicity::{decide_periodicity, DecideOptions, PeriodicityReport};

#[derive(Parser)]
#[command(name = "mixed-walk", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct EtaArg {
    /// η = 2π·A/B
    #[arg(long, value_name = "A/B")]
    eta: Option<RationalAngle>,
    /// η in radians, decided numerically
    #[arg(long, value_name = "X", allow_negative_numbers = true)]
    eta_float: Option<f64>,
}

impl EtaArg {
    fn angle(&self) -> Angle {
        match (self.eta, self.eta_float) {
            (Some(r), _) => Angle::Rational(r),
            (None, Some(x)) => Angle::Float(x),
            (None, None) => unreachable!("clap requires one of --eta, --eta-float"),
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value_t = 1_000_000)]
    tau_max: u64,
    /// Write the full JSON report here
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Write (index, verdict, tau, alpha_2n-2) rows here
    #[arg(long, value_name = "OUT")]
    csv: Option<PathBuf>,
    /// Print the full JSON report instead of a summary
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Hermitian,
    Degree,
    Normalized,
    RandomWalk,
    Coin,
    Shift,
    Evolution,
}

#[derive(Subcommand)]
enum Command {
    /// Decide periodicity of one graph and check the coefficient identities
    Analyze {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        eta: EtaArg,
        #[arg(long, default_value_t = 1_000_000)]
        tau_max: u64,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Decide every mixed orientation of K_n
    EnumerateComplete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        eta: EtaArg,
        #[command(flatten)]
        out: Output,
    },
    /// Confirm periodicity of a known periodic family
    VerifyKnown {
        /// cycle, complete-bipartite, multipartite or hamming
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. 3,3
        #[arg(long)]
        params: String,
        #[command(flatten)]
        out: Output,
    },
    /// Mixed cycles and regular graphs on a prime number of vertices
    PrimeScan {
        #[arg(long)]
        p: u64,
        #[arg(long, value_name = "A/B")]
        eta: RationalAngle,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Degrees of the regular samples (default: all admissible k >= 3)
        #[arg(long = "k", value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Print one of the walk matrices as CSV
    Dump {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        eta: EtaArg,
        #[arg(long, value_enum, default_value = "evolution")]
        matrix: MatrixKind,
        /// Use floating point even for a rational angle
        #[arg(long)]
        numeric: bool,
    },
}

fn load_graph(path: &Path) -> Result<MixedGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    MixedGraph::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn identities(g: &MixedGraph, eta: &Angle) -> Result<CoefficientReport> {
    Ok(match eta {
        Angle::Rational(r) => coefficient_identities(g, &Exact::from_rational(*r))?,
        Angle::Float(x) => coefficient_identities(g, &Numeric::from_radians(*x))?,
    })
}

fn print_report(r: &PeriodicityReport) {
    let tau = r.tau.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
    println!("verdict: {:?}  tau: {tau}  method: {:?}", r.verdict, r.method);
    println!(
        "2n/k: {:?}  16t/k^3: {:?}",
        r.conditions.two_n_over_k, r.conditions.sixteen_t_over_k3
    );
    if let Some(w) = &r.witness {
        println!("witness: {}", serde_json::to_string(w).unwrap_or_default());
    }
    for e in &r.eigen_orders {
        match e.order {
            Some(d) => println!("  order {d}: multiplicity {}", e.multiplicity),
            None => println!("  non-unity: multiplicity {}", e.multiplicity),
        }
    }
}

fn analyze(graph: &Path, eta: Angle, tau_max: u64, json: Option<&Path>) -> Result<ExitCode> {
    let g = load_graph(graph)?;
    let report = decide_periodicity(&g, &eta, &DecideOptions::with_tau_max(tau_max))?;
    let ids = identities(&g, &eta)?;
    println!("graph: n = {}, |E| = {}, eta = {eta}", g.n(), g.edge_count());
    print_report(&report);
    for c in &ids.checks {
        let mark = if c.holds { "ok  " } else { "FAIL" };
        println!("{mark} {}: {} vs {}", c.name, c.lhs, c.rhs);
    }
    if let Some(path) = json {
        let doc = serde_json::json!({ "schema": 1, "periodicity": report, "identities": ids });
        write_file(path, &serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(if ids.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn finish(report: ExperimentReport, out: &Output) -> Result<ExitCode> {
    if out.verbose {
        println!("{}", report.to_json());
    } else {
        println!(
            "{}: {} ({:.1} ms)",
            report.experiment, report.aggregate.summary, report.wall_time_ms
        );
    }
    if let Some(path) = &out.json {
        write_file(path, &report.to_json())?;
    }
    if let Some(path) = &out.csv {
        write_file(path, &report.to_csv()?)?;
    }
    if report.consistent {
        println!("consistent: yes");
        return Ok(ExitCode::SUCCESS);
    }
    println!("consistent: no");
    for row in report.counterexamples() {
        println!(
            "counterexample #{} {}: expected {:?}, got {:?} (tau {:?})",
            row.index, row.label, row.expected, row.report.verdict, row.report.tau
        );
    }
    Ok(ExitCode::from(1))
}

fn dump_matrix<M: PhaseMode>(g: &MixedGraph, mode: &M, kind: MatrixKind) -> Result<mixed_walk::matrices::FieldMatrix<M::S>> {
    let w = Walk::new(g, mode);
    Ok(match kind {
        MatrixKind::Hermitian => w.hermitian_adjacency(),
        MatrixKind::Degree => w.degree_matrix(),
        MatrixKind::Normalized => w.normalized_hermitian()?,
        MatrixKind::RandomWalk => w.random_walk_hermitian(),
        MatrixKind::Coin => w.coin(),
        MatrixKind::Shift => w.shift(),
        MatrixKind::Evolution => w.time_evolution(),
    })
}

fn dump(graph: &Path, eta: Angle, kind: MatrixKind, numeric: bool) -> Result<ExitCode> {
    let g = load_graph(graph)?;
    let csv = match (eta, numeric) {
        (Angle::Rational(r), false) => dump_matrix(&g, &Exact::from_rational(r), kind)?.to_csv(),
        _ => dump_matrix(&g, &Numeric::new(&eta), kind)?.to_csv(),
    };
    print!("{csv}");
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            graph,
            eta,
            tau_max,
            json,
        } => analyze(&graph, eta.angle(), tau_max, json.as_deref()),
        Command::EnumerateComplete { n, eta, out } => {
            let report = enumerate_complete(n, eta.angle(), &DecideOptions::with_tau_max(out.tau_max))?;
            finish(report, &out)
        }
        Command::VerifyKnown { family, params, out } => {
            let family = KnownFamily::parse(&family, &params)?;
            let report = verify_known(&[family], &DecideOptions::with_tau_max(out.tau_max))?;
            finish(report, &out)
        }
        Command::PrimeScan {
            p,
            eta,
            samples,
            degrees,
            seed,
            out,
        } => {
            let scan = PrimeScanOptions {
                samples,
                degrees,
                seed,
            };
            let report = prime_scan(p, eta, &scan, &DecideOptions::with_tau_max(out.tau_max))?;
            finish(report, &out)
        }
        Command::Dump {
            graph,
            eta,
            matrix,
            numeric,
        } => dump(&graph, eta.angle(), matrix, numeric),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
