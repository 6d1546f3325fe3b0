//! `corona`: build central-graph coronas, compare their closed-form and
//! numeric spectra, count spanning trees and certify cospectral pairs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

mod output;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use corona_core::corona::{central_graph, composite, Operation};
use corona_core::cospectral::{
    certify_pair, enumerate_cospectral_regular, is_cospectral, transfer_pair, CospectralCertificate, Side,
};
use corona_core::invariants::{closed_report, compare, oracle_report};
use corona_core::io::{parse_graph6, write_dot, write_graph6};
use corona_core::oracle::multiset_equal;
use corona_core::poly::default_tolerance;
use corona_core::spectra::{spectrum, G2Data, RegularProfile, Spectrum};
use corona_core::verify::{self, coronal_identity_check, reconcile, reconciliation_family, Family};
use corona_core::{Error, Graph, MatrixKind};
use serde::Serialize;
use serde_json::json;

use output::{emit, Format};
use source::load_graph;

/// Kirchhoff comparisons use a relative tolerance.
const KIRCHHOFF_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "corona", version, about = "Spectra of central-graph coronas")]
struct Cli {
    /// Tolerance for comparing eigenvalue multisets.
    #[arg(long, global = true, env = "CORONA_COMPARE_TOL", default_value_t = verify::SWEEP_TOL)]
    tol: f64,
    /// Tolerance for polynomial root residuals.
    #[arg(long, global = true, env = "CORONA_TOL", default_value_t = 1e-10)]
    root_tol: f64,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildOp {
    Central,
    Cvc,
    Cec,
    Cenc,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Closed,
    Numeric,
    Both,
}

#[derive(Args)]
struct Pair {
    #[arg(long, value_parser = parse_op)]
    op: Operation,
    /// Regular central factor: a built-in name, graph6 string, or file.
    #[arg(long)]
    g1: String,
    #[arg(long)]
    g2: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build a composite graph.
    Build {
        #[arg(long, value_enum)]
        op: BuildOp,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum of a composite by closed form, oracle, or both.
    Spectrum {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed form versus oracle over a family, plus the printed-formula ledger.
    Verify {
        /// default, cycles, complete, complete-bipartite or cubes.
        #[arg(long, default_value = "default")]
        family: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Directory for `sweep.json` and `ledger.json`.
        #[arg(long, default_value = "corona-verify")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Spanning trees and Kirchhoff index by closed form and by oracle.
    Invariants {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cospectral pair certificates.
    Cospectral {
        #[command(subcommand)]
        command: CospectralCommand,
    },
}

#[derive(Subcommand)]
enum CospectralCommand {
    /// Check two graphs and certify them if cospectral and non-isomorphic.
    Check {
        a: String,
        b: String,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
    },
    /// Lift a cospectral regular pair through a corona with `H`.
    Transfer {
        #[arg(long)]
        h: String,
        /// Two graph6 lines, or a certificate JSON file.
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_parser = parse_op)]
        op: Operation,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        /// `left`: H is the central factor. `right`: the pair is.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Exhaustively search connected regular graphs for cospectral mates.
    Enumerate {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Only regular graphs are searched; accepted for clarity.
        #[arg(long)]
        regular: bool,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn parse_op(s: &str) -> Result<Operation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed run: input errors exit 2, everything else 1.
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGraph(_)
            | Error::Parse { .. }
            | Error::NoEdges { .. }
            | Error::NotRegular(_)
            | Error::Disconnected
            | Error::Precondition(_)
            | Error::SizeCap { .. }
            | Error::Io(_) => Failure::Input(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.tol > 0.0 && cli.tol.is_finite() && cli.root_tol > 0.0 && cli.root_tol.is_finite()) {
        eprintln!("error: tolerances must be positive and finite");
        return ExitCode::from(2);
    }
    // The library reads the root tolerance from the environment.
    std::env::set_var("CORONA_TOL", cli.root_tol.to_string());
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Build {
            op,
            g1,
            g2,
            format,
            out,
        } => cmd_build(*op, g1, g2.as_deref(), *format, out.as_deref()),
        Command::Spectrum {
            pair,
            kind,
            method,
            format,
        } => cmd_spectrum(cli, pair, *kind, *method, *format),
        Command::Verify {
            family,
            max_n,
            out_dir,
            format,
        } => cmd_verify(cli, family, *max_n, out_dir, *format),
        Command::Invariants { pair, format } => cmd_invariants(pair, *format),
        Command::Cospectral { command } => cmd_cospectral(command),
    }
}

fn cmd_build(op: BuildOp, g1: &str, g2: Option<&str>, format: Format, out: Option<&std::path::Path>) -> Run {
    let g1 = load_graph(g1)?;
    let (n1, m1) = (g1.order(), g1.size());
    let (graph, name, predicted) = match op {
        BuildOp::Central => {
            if g2.is_some() {
                return Err(Failure::Input("--g2 is not used by the central graph".into()));
            }
            let (g, _) = central_graph(&g1);
            (g, "central".to_string(), (n1 + m1, m1 + n1 * n1.saturating_sub(1) / 2))
        }
        BuildOp::Cvc | BuildOp::Cec | BuildOp::Cenc => {
            let op = match op {
                BuildOp::Cvc => Operation::Cvc,
                BuildOp::Cec => Operation::Cec,
                _ => Operation::Cenc,
            };
            let g2 = load_graph(g2.ok_or_else(|| Failure::Input(format!("{op} needs --g2")))?)?;
            let (g, _) = composite(op, &g1, &g2)?;
            let predicted = (op.order(n1, m1, g2.order()), op.size(n1, m1, g2.order(), g2.size()));
            (g, op.to_string(), predicted)
        }
    };
    let counts = format!(
        "order {} (predicted {}), size {} (predicted {})",
        graph.order(),
        predicted.0,
        graph.size(),
        predicted.1
    );
    let body = match format {
        Format::Graph6 => write_graph6(&graph) + "\n",
        Format::Dot => write_dot(&graph, &name),
        Format::Json => output::to_json(&json!({
            "operation": name,
            "graph6": write_graph6(&graph),
            "order": graph.order(),
            "size": graph.size(),
            "predicted_order": predicted.0,
            "predicted_size": predicted.1,
            "edges": graph.edges(),
        })),
        Format::Table => corona_core::io::write_edge_list(&graph),
    };
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => print!("{body}"),
    }
    println!("{counts}");
    if (graph.order(), graph.size()) != predicted {
        return Err(Failure::Verification("counts disagree with the closed forms".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct FactorReport {
    polynomial: String,
    coefficients: Vec<String>,
    multiplicity: usize,
    roots: Vec<f64>,
}

#[derive(Serialize)]
struct SpectrumReport {
    operation: Operation,
    kind: MatrixKind,
    g1: String,
    g2: String,
    order: usize,
    method: Method,
    /// Ascending `[value, multiplicity]`.
    eigenvalues: Vec<(f64, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    explicit_eigenvalues: Option<Vec<(i64, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<FactorReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
}

fn cmd_spectrum(cli: &Cli, pair: &Pair, kind: MatrixKind, method: Method, format: Format) -> Run {
    let (g1, g2) = (load_graph(&pair.g1)?, load_graph(&pair.g2)?);
    let mut report = SpectrumReport {
        operation: pair.op,
        kind,
        g1: pair.g1.clone(),
        g2: pair.g2.clone(),
        order: pair.op.order(g1.order(), g1.size(), g2.order()),
        method,
        eigenvalues: Vec::new(),
        explicit_eigenvalues: None,
        factors: None,
        provenance: None,
        max_deviation: None,
        tolerance: None,
    };
    let closed_roots = if matches!(method, Method::Closed | Method::Both) {
        let f = spectrum(pair.op, &RegularProfile::from_graph(&g1)?, &G2Data::from_graph(&g2, kind)?)?;
        if f.total_degree() != report.order {
            return Err(Failure::Verification(
                Error::DegreeAccounting {
                    expected: report.order,
                    actual: f.total_degree(),
                }
                .to_string(),
            ));
        }
        let tol = default_tolerance();
        let mut factors = Vec::new();
        for (p, m) in &f.factors {
            factors.push(FactorReport {
                polynomial: p.to_string(),
                coefficients: p.to_exact_strings(),
                multiplicity: *m,
                roots: corona_core::poly::real_roots(p, tol)?.roots.iter().map(|r| r.0).collect(),
            });
        }
        report.explicit_eigenvalues = Some(f.explicit_eigenvalues.clone());
        report.factors = Some(factors);
        report.provenance = Some(f.provenance.clone());
        Some(f.roots(tol)?)
    } else {
        None
    };
    let oracle = if matches!(method, Method::Numeric | Method::Both) {
        let (c, _) = composite(pair.op, &g1, &g2)?;
        Some(Spectrum::of_graph(&c, kind)?)
    } else {
        None
    };
    let mut failed = false;
    match (&closed_roots, &oracle) {
        (Some(c), Some(o)) => {
            let cmp = multiset_equal(c, &o.flatten(), cli.tol)?;
            report.max_deviation = Some(cmp.max_deviation);
            report.tolerance = Some(cli.tol);
            report.eigenvalues = o.values.clone();
            failed = !cmp.equal;
        }
        (Some(c), None) => report.eigenvalues = Spectrum::from_values(kind, c.clone()).values,
        (None, Some(o)) => report.eigenvalues = o.values.clone(),
        (None, None) => unreachable!("method selects at least one side"),
    }
    match format {
        Format::Table => {
            let mut s = format!("{} {} {} [{}], order {}\n", report.g1, report.operation, report.g2, kind, report.order);
            for (v, m) in &report.eigenvalues {
                s += &format!("{:>22} x{m}\n", output::sig15(*v));
            }
            if let Some(d) = report.max_deviation {
                s += &format!("max deviation {:e}\n", d);
            }
            print!("{s}");
        }
        other => emit(other, &report)?,
    }
    if failed {
        return Err(Failure::Verification(format!(
            "closed form and oracle differ by {:e} > {:e}",
            report.max_deviation.unwrap_or(f64::NAN),
            cli.tol
        )));
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, family: &str, max_n: usize, out_dir: &std::path::Path, format: Format) -> Run {
    let fam = Family::builtin(family, max_n)?;
    let report = verify::sweep(&fam, cli.tol);
    let ledger = reconcile(&reconciliation_family(), cli.tol)?;
    let mut coronal = Vec::new();
    for g in fam.g1.iter().chain(&fam.g2) {
        coronal.extend(coronal_identity_check(g, 20, cli.seed)?);
    }
    let coronal_failed = coronal.iter().filter(|c| !c.passed).count();
    std::fs::create_dir_all(out_dir).map_err(|e| Failure::Input(format!("{}: {e}", out_dir.display())))?;
    let write = |name: &str, v: &serde_json::Value| -> Run {
        let path = out_dir.join(name);
        std::fs::write(&path, output::to_json(v)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    };
    write(
        "sweep.json",
        &json!({ "family": family, "max_n": max_n, "seed": cli.seed, "sweep": report, "coronal": coronal }),
    )?;
    write("ledger.json", &serde_json::to_value(&ledger).expect("ledger serializes"))?;
    let summary = json!({
        "family": family,
        "cases": report.cases.len(),
        "passed": report.passed,
        "failed": report.failed,
        "coronal_checks": coronal.len(),
        "coronal_failed": coronal_failed,
        "ledger_entries": ledger.entries.len(),
        "ledger_theorems": ledger.entries.iter().map(|e| e.theorem.as_str()).collect::<std::collections::BTreeSet<_>>(),
        "confirmed": ledger.confirmed.iter().map(|c| c.theorem.as_str()).collect::<Vec<_>>(),
        "out_dir": out_dir.display().to_string(),
    });
    match format {
        Format::Table => {
            println!("{} cases: {} passed, {} failed", report.cases.len(), report.passed, report.failed);
            println!("coronal identities: {} checked, {} failed", coronal.len(), coronal_failed);
            for e in &ledger.entries {
                eprintln!("warning: {} ({}): printed {} / derived {}: {}", e.theorem, e.component, e.printed, e.derived, e.verdict);
            }
            println!("ledger: {}", out_dir.join("ledger.json").display());
        }
        other => emit(other, &summary)?,
    }
    if report.failed > 0 || coronal_failed > 0 {
        let first = report.cases.iter().find(|c| !c.passed);
        return Err(Failure::Verification(match first {
            Some(c) => format!(
                "{} {} {} [{}]: deviation {:?}, error {:?}",
                c.g1, c.operation, c.g2, c.kind, c.max_deviation, c.error
            ),
            None => "coronal identity check failed".into(),
        }));
    }
    Ok(())
}

fn cmd_invariants(pair: &Pair, format: Format) -> Run {
    let (g1, g2) = (load_graph(&pair.g1)?, load_graph(&pair.g2)?);
    let closed = closed_report(
        pair.op,
        &RegularProfile::from_graph(&g1)?,
        &G2Data::from_graph(&g2, MatrixKind::L)?,
    )?;
    let (c, _) = composite(pair.op, &g1, &g2)?;
    let oracle = oracle_report(&c, pair.op.into())?;
    let cmp = compare(closed, oracle);
    match format {
        Format::Table => {
            println!(
                "spanning trees: closed {} oracle {} ({})",
                cmp.closed_form.spanning_trees,
                cmp.oracle.spanning_trees,
                if cmp.spanning_trees_equal { "equal" } else { "DIFFERENT" }
            );
            println!(
                "Kirchhoff index: closed {} oracle {} (relative deviation {:e})",
                cmp.closed_form.kirchhoff.map(output::sig15).unwrap_or_default(),
                cmp.oracle.kirchhoff.map(output::sig15).unwrap_or_default(),
                cmp.kirchhoff_relative_deviation
            );
        }
        other => emit(other, &cmp)?,
    }
    // A NaN deviation counts as a failure.
    let kirchhoff_ok = cmp.kirchhoff_relative_deviation <= KIRCHHOFF_TOL;
    if !cmp.spanning_trees_equal || !kirchhoff_ok {
        return Err(Failure::Verification("closed form and oracle invariants differ".into()));
    }
    Ok(())
}

fn load_pair(path: &std::path::Path) -> Result<(Graph, Graph), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let cert: CospectralCertificate =
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        return Ok((parse_graph6(&cert.pair[0])?, parse_graph6(&cert.pair[1])?));
    }
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    match lines.as_slice() {
        [a, b] => Ok((load_graph(a)?, load_graph(b)?)),
        _ => Err(Failure::Input(format!("{}: expected exactly two graphs, one per line", path.display()))),
    }
}

fn cmd_cospectral(command: &CospectralCommand) -> Run {
    match command {
        CospectralCommand::Check { a, b, kind } => {
            let (ga, gb) = (load_graph(a)?, load_graph(b)?);
            let cospectral = is_cospectral(&ga, &gb, *kind);
            let cert = if cospectral {
                match certify_pair(&ga, &gb, *kind) {
                    Ok(c) => Ok(c),
                    Err(Error::Precondition(m)) => Err(m),
                    Err(e) => return Err(e.into()),
                }
            } else {
                Err(format!("graphs are not {kind}-cospectral"))
            };
            let rejection = cert.as_ref().err().cloned();
            output::print_json(&json!({
                "kind": kind,
                "cospectral": cospectral,
                "certificate": cert.ok(),
                "rejected": rejection,
            }));
            match rejection {
                Some(m) => Err(Failure::Verification(format!("no certificate: {m}"))),
                None => Ok(()),
            }
        }
        CospectralCommand::Transfer {
            h,
            pair,
            op,
            kind,
            side,
        } => {
            let h = load_graph(h)?;
            let (a, b) = load_pair(pair)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let cert = transfer_pair(&h, &a, &b, *op, *kind, side)?;
            output::print_json(&cert);
            Ok(())
        }
        CospectralCommand::Enumerate { max_n, regular: _, kind } => {
            let certs = enumerate_cospectral_regular(*max_n, *kind)?;
            output::print_json(&json!({ "kind": kind, "max_n": max_n, "certificates": certs }));
            if certs.is_empty() {
                return Err(Failure::Verification(format!("no cospectral regular pair up to {max_n} vertices")));
            }
            Ok(())
        }
    }
}
