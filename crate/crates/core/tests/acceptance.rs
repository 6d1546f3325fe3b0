//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero only when an outcome differs from its expectation.
//!
//! Criteria 1 and 3 compare against worked examples whose printed factor
//! lists are wrong; they are expected to FAIL, and the run also checks that
//! the oracle spectrum matches the derived factorization in both cases.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use corona_core::corona::{composite, Operation};
use corona_core::cospectral::{enumerate_cospectral_regular, is_cospectral};
use corona_core::invariants::{
    kirchhoff_closed, kirchhoff_oracle, spanning_trees_closed, spanning_trees_oracle,
};
use corona_core::named;
use corona_core::oracle::{cluster, multiset_equal, symmetric_eigenvalues};
use corona_core::par;
use corona_core::poly::{char_poly_exact, real_roots, Polynomial};
use corona_core::spectra::{spectrum, G2Data, RegularProfile};
use corona_core::verify::{
    coronal_identity_check, reconcile, reconciliation_family, sweep, Family, NamedGraph, CORONAL_TOL,
};
use corona_core::{Graph, MatrixKind};

// Pinned tolerances.
const CLUSTER_TOL: f64 = 1e-7;
const EXAMPLE_TOL: f64 = 1e-8;
const ROOT_TOL: f64 = 1e-10;
const SWEEP_TOL: f64 = 1e-8;
const KIRCHHOFF_REL_TOL: f64 = 1e-6;
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const CORONAL_POINTS: usize = 20;
const SEED: u64 = 20;

type ExampleCriterion = fn() -> (Outcome, Option<Result<f64, String>>);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn p(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs.iter().copied())
}

/// Oracle-side protocol for a worked example: the spectrum must contain each
/// explicit eigenvalue at least the stated number of times (clustered at
/// 1e-7), and what remains must equal the roots of the listed factors.
fn example_protocol(values: &[f64], explicit: &[(f64, usize)], factors: &[(Polynomial, usize)]) -> Result<f64, String> {
    let degree: usize = explicit.iter().map(|e| e.1).sum::<usize>()
        + factors.iter().map(|(f, m)| f.degree() * m).sum::<usize>();
    if degree != values.len() {
        return Err(format!("listed degree {degree}, graph order {}", values.len()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let clusters = cluster(&sorted, CLUSTER_TOL);
    let mut rest = sorted.clone();
    for &(v, m) in explicit {
        let found = clusters
            .iter()
            .find(|c| (c.0 - v).abs() <= CLUSTER_TOL)
            .map_or(0, |c| c.1);
        if found < m {
            return Err(format!("eigenvalue {v} has multiplicity {found}, listed {m}"));
        }
        // Factors may share the value, so only the listed copies are removed.
        for _ in 0..m {
            let i = rest.iter().position(|x| (x - v).abs() <= CLUSTER_TOL).expect("cluster member");
            rest.remove(i);
        }
    }
    let mut roots = Vec::new();
    for (f, m) in factors {
        let r = real_roots(f, ROOT_TOL).map_err(|e| format!("{f}: {e}"))?.flatten();
        for _ in 0..*m {
            roots.extend_from_slice(&r);
        }
    }
    let cmp = multiset_equal(&rest, &roots, EXAMPLE_TOL).map_err(|e| e.to_string())?;
    if cmp.equal {
        Ok(cmp.max_deviation)
    } else {
        Err(format!("factor roots deviate by {:.3e}", cmp.max_deviation))
    }
}

/// Runs the protocol for the printed list and for the derived factorization.
fn example_criterion(
    op: Operation,
    explicit: &[(f64, usize)],
    factors: &[(Polynomial, usize)],
) -> (Outcome, Result<f64, String>) {
    let (g1, g2) = (named::complete_bipartite(3, 3), named::complete(2));
    let start = Instant::now();
    let (c, _) = composite(op, &g1, &g2).unwrap();
    let values = symmetric_eigenvalues(&c.matrix(MatrixKind::A)).unwrap().values;
    let elapsed = start.elapsed();
    let printed = example_protocol(&values, explicit, factors);

    let f = spectrum(
        op,
        &RegularProfile::from_graph(&g1).unwrap(),
        &G2Data::from_graph(&g2, MatrixKind::A).unwrap(),
    )
    .unwrap();
    let derived_explicit: Vec<(f64, usize)> = f.explicit_eigenvalues.iter().map(|&(v, m)| (v as f64, m)).collect();
    let derived = example_protocol(&values, &derived_explicit, &f.factors);

    let timing = format!("oracle {:.0} ms", elapsed.as_secs_f64() * 1e3);
    let outcome = match &printed {
        Ok(dev) => Outcome::new(elapsed < EXAMPLE_BUDGET, format!("max deviation {dev:.3e}, {timing}")),
        Err(e) => Outcome::new(false, format!("printed list: {e}; {timing}")),
    };
    (outcome, derived)
}

fn criterion_1() -> (Outcome, Option<Result<f64, String>>) {
    let (o, d) = example_criterion(
        Operation::Cvc,
        &[(0.0, 6), (-1.0, 3)],
        &[
            (p(&[3, -6, 0, 1]), 4),
            (p(&[0, 0, -3, 1]), 1),
            (p(&[6, -6, -3, 1]), 1),
        ],
    );
    (o, Some(d))
}

fn criterion_2() -> (Outcome, Option<Result<f64, String>>) {
    let (o, d) = example_criterion(
        Operation::Cec,
        &[(-1.0, 9)],
        &[
            (p(&[-2, -1, 1]), 3),
            (p(&[10, -6, -3, 1]), 1),
            (p(&[4, 0, -3, 1]), 1),
            (p(&[1, -6, 0, 1]), 4),
        ],
    );
    (o, Some(d))
}

fn criterion_3() -> (Outcome, Option<Result<f64, String>>) {
    let (o, d) = example_criterion(
        Operation::Cenc,
        &[(0.0, 3), (1.0, 3), (-1.0, 9)],
        &[
            (p(&[-2, -1, 1]), 3),
            (p(&[6, -16, -3, 1]), 1),
            (p(&[0, 2, -3, 1]), 1),
            (p(&[3, -10, 0, 1]), 4),
        ],
    );
    (o, Some(d))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = sweep(&Family::default_sweep(), SWEEP_TOL);
    let elapsed = start.elapsed();
    let worst = r.cases.iter().filter_map(|c| c.max_deviation).fold(0.0, f64::max);
    let first_bad = r
        .cases
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("; first failure {} {} {} [{}]: {:?}", c.g1, c.operation, c.g2, c.kind, c.error))
        .unwrap_or_default();
    Outcome::new(
        r.failed == 0 && r.cases.len() == 3 * 3 * 10 * 7 && elapsed < SWEEP_BUDGET,
        format!(
            "{} of {} cases, max deviation {worst:.3e}, {:.1} s{first_bad}",
            r.passed,
            r.cases.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_5() -> Outcome {
    let fam = Family::default_sweep();
    let r = sweep(&fam, SWEEP_TOL);
    let mut bad = 0;
    for c in &r.cases {
        let g1 = &fam.g1.iter().find(|g| g.name == c.g1).unwrap().graph;
        let g2 = &fam.g2.iter().find(|g| g.name == c.g2).unwrap().graph;
        let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
        let copies = match c.operation {
            Operation::Cvc => n1,
            Operation::Cec | Operation::Cenc => m1,
        };
        let built = composite(c.operation, g1, g2).unwrap().0.order();
        if c.factorization_degree != n1 + m1 + copies * n2 || built != c.factorization_degree {
            bad += 1;
        }
    }
    Outcome::new(bad == 0, format!("{} cases, {bad} mismatches", r.cases.len()))
}

fn laplacian_cases() -> Vec<(Operation, NamedGraph, NamedGraph)> {
    let fam = Family::default_sweep();
    let mut out = Vec::new();
    for op in Operation::ALL {
        for g1 in &fam.g1 {
            for g2 in &fam.g2 {
                out.push((op, g1.clone(), g2.clone()));
            }
        }
    }
    out
}

fn closed_inputs(g1: &Graph, g2: &Graph) -> (RegularProfile, G2Data) {
    (
        RegularProfile::from_graph(g1).unwrap(),
        G2Data::from_graph(g2, MatrixKind::L).unwrap(),
    )
}

fn criterion_6() -> Outcome {
    let cases = laplacian_cases();
    let results = par::map(&cases, |(op, g1, g2)| {
        let (c, _) = composite(*op, &g1.graph, &g2.graph).unwrap();
        let (t, connected) = spanning_trees_oracle(&c).unwrap();
        let (prof, l2) = closed_inputs(&g1.graph, &g2.graph);
        connected && spanning_trees_closed(*op, &prof, &l2).unwrap() == t
    });
    let bad = results.iter().filter(|ok| !**ok).count();
    let k4 = spanning_trees_oracle(&named::complete(4)).unwrap().0;
    let c5 = spanning_trees_oracle(&named::cycle(5)).unwrap().0;
    let anchors = k4 == 16.into() && c5 == 5.into();
    Outcome::new(
        bad == 0 && anchors,
        format!("{} composites, {bad} mismatches; t(K4) = {k4}, t(C5) = {c5}", cases.len()),
    )
}

fn criterion_7() -> Outcome {
    let cases = laplacian_cases();
    let devs = par::map(&cases, |(op, g1, g2)| {
        let (c, _) = composite(*op, &g1.graph, &g2.graph).unwrap();
        let oracle = kirchhoff_oracle(&c).unwrap();
        let (prof, l2) = closed_inputs(&g1.graph, &g2.graph);
        let closed = kirchhoff_closed(*op, &prof, &l2).unwrap();
        (closed - oracle).abs() / oracle.abs()
    });
    let worst = devs.iter().copied().fold(0.0, f64::max);
    let k4 = kirchhoff_oracle(&named::complete(4)).unwrap();
    let c4 = kirchhoff_oracle(&named::cycle(4)).unwrap();
    let anchors = (k4 - 3.0).abs() <= KIRCHHOFF_REL_TOL * 3.0 && (c4 - 5.0).abs() <= KIRCHHOFF_REL_TOL * 5.0;
    Outcome::new(
        worst <= KIRCHHOFF_REL_TOL && anchors,
        format!("{} composites, max relative deviation {worst:.3e}; Kf(K4) = {k4:.12}, Kf(C4) = {c4:.12}", cases.len()),
    )
}

fn criterion_8() -> Outcome {
    let certs = enumerate_cospectral_regular(10, MatrixKind::A).unwrap();
    let Some(cert) = certs.first() else {
        return Outcome::new(false, "no A-cospectral regular pair up to 10 vertices");
    };
    let a = corona_core::io::parse_graph6(&cert.pair[0]).unwrap();
    let b = corona_core::io::parse_graph6(&cert.pair[1]).unwrap();
    let h = named::complete(3);
    let mut checks = 0;
    let mut failures = Vec::new();
    for kind in MatrixKind::ALL {
        if !is_cospectral(&a, &b, kind) {
            failures.push(format!("pair not {kind}-cospectral"));
            continue;
        }
        for op in Operation::ALL {
            let f = |g: &Graph| char_poly_exact(&composite(op, &h, g).unwrap().0.matrix(kind)).unwrap();
            checks += 1;
            if f(&a) != f(&b) {
                failures.push(format!("{op} [{kind}]"));
            }
        }
    }
    Outcome::new(
        failures.is_empty() && checks == 9,
        format!(
            "pair {} / {} ({} certificates found); {checks} exact polynomial identities{}",
            cert.pair[0],
            cert.pair[1],
            certs.len(),
            if failures.is_empty() { String::new() } else { format!("; failed: {failures:?}") }
        ),
    )
}

fn criterion_9() -> Outcome {
    // The verify command exits 0 iff the derived sweep has no failures.
    let r = sweep(&Family::default_sweep(), SWEEP_TOL);
    let ledger = reconcile(&reconciliation_family(), SWEEP_TOL).unwrap();
    let mut notes = Vec::new();
    let mut ok = r.failed == 0;
    for id in ["Theorem 3.6", "Theorem 5.6"] {
        let entries: Vec<_> = ledger.entries_for(id).collect();
        let complete = !entries.is_empty()
            && entries.iter().all(|e| {
                !e.printed.is_empty()
                    && !e.derived.is_empty()
                    && e.printed != e.derived
                    && e.verdict.contains("oracle")
                    && e.derived_vs_oracle.starts_with("max deviation")
            });
        ok &= complete;
        notes.push(format!("{id}: {} entries", entries.len()));
    }
    Outcome::new(
        ok,
        format!("sweep failures {}; {}; {} ledger entries", r.failed, notes.join(", "), ledger.entries.len()),
    )
}

fn criterion_10() -> Outcome {
    let names = [
        "C3", "C4", "C5", "C6", "C7", "C8", "K1", "K2", "K3", "K4", "K5", "K33", "Petersen", "K12", "K23",
    ];
    let mut checks = 0;
    let mut worst = 0.0f64;
    let mut failed = 0;
    for (i, name) in names.iter().enumerate() {
        let g = NamedGraph::new(*name, named::parse(name).unwrap().unwrap());
        for c in coronal_identity_check(&g, CORONAL_POINTS, SEED + i as u64).unwrap() {
            checks += 1;
            worst = worst.max(c.max_relative_deviation);
            failed += usize::from(!c.passed);
        }
    }
    Outcome::new(
        failed == 0 && worst <= CORONAL_TOL,
        format!("{checks} forms at {CORONAL_POINTS} points each, max relative deviation {worst:.3e}"),
    )
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    let line = |n: usize, o: &Outcome, expected_pass: bool| -> usize {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = if expected_pass { "" } else { " [known printed erratum]" };
        println!("criterion {n:>2}: {status}{note}  {}", o.detail);
        if o.passed != expected_pass {
            println!("criterion {n:>2}: UNEXPECTED outcome");
        }
        usize::from(o.passed != expected_pass)
    };
    let examples: [(usize, ExampleCriterion, bool); 3] =
        [(1, criterion_1, false), (2, criterion_2, true), (3, criterion_3, false)];
    for (n, f, expected) in examples {
        let (o, derived) = f();
        unexpected += line(n, &o, expected);
        match derived {
            Some(Ok(dev)) => println!("             derived factorization matches the oracle (max deviation {dev:.3e})"),
            Some(Err(e)) => {
                println!("             derived factorization does NOT match the oracle: {e}");
                unexpected += 1;
            }
            None => {}
        }
    }
    let rest: [(usize, fn() -> Outcome); 7] = [
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    for (n, f) in rest {
        unexpected += line(n, &f(), true);
    }
    if unexpected == 0 {
        println!("acceptance: all outcomes as expected (criteria 1 and 3 fail on printed example data)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcomes");
        ExitCode::FAILURE
    }
}
