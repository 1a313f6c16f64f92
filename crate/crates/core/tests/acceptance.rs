//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use algconn::enumeration::{all_connected_graphs, all_trees};
use algconn::families::{complete, extremal_tree, path, star};
use algconn::matching::subset_dp_maximum_matching;
use algconn::spectral::algebraic_connectivity;
use algconn::verification::{
    cover_bound_denominator, kirkland_bound, matching_bound_denominator, path_alpha, verify, Target,
    VerificationReport, VerifyParams,
};
use algconn::{encode_graph6, parse_graph6};
use common::{brute_canonical, brute_isomorphic, brute_matching_number, graph_from_mask, permutations};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn run(target: Target, params: VerifyParams) -> Result<VerificationReport, String> {
    let report = verify(target, &params).map_err(|e| format!("{target}: {e}"))?;
    let failed: Vec<_> = report.checks.iter().filter(|c| c.asserted && !c.passed).map(|c| c.detail.clone()).collect();
    ensure(report.passed, || format!("{target} {:?} failed: {}", params.n, failed.join("; ")))?;
    Ok(report)
}

fn with_n(n: usize) -> VerifyParams {
    VerifyParams::with_n(n)
}

fn closed_forms() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=50 {
        let err = (algebraic_connectivity(&path(n)).map_err(|e| e.to_string())? - path_alpha(n).unwrap()).abs();
        ensure(err <= 1e-9, || format!("P_{n}: error {err:.3e}"))?;
        worst = worst.max(err);
    }
    for m in 2..=50 {
        let err = (algebraic_connectivity(&star(m)).map_err(|e| e.to_string())? - 1.0).abs();
        ensure(err <= 1e-9, || format!("S_1,{m}: error {err:.3e}"))?;
        worst = worst.max(err);
    }
    for n in 2..=20 {
        let err = (algebraic_connectivity(&complete(n)).map_err(|e| e.to_string())? - n as f64).abs();
        ensure(err <= 1e-9, || format!("K_{n}: error {err:.3e}"))?;
        worst = worst.max(err);
    }
    Ok(format!("largest error {worst:.2e}"))
}

fn trees_by_matching_number() -> Outcome {
    let mut classes = 0;
    let mut min_gap = f64::INFINITY;
    for n in 4..=9 {
        let report = run(Target::Thm31, with_n(n))?;
        for (check, w) in report.checks.iter().zip(&report.witnesses) {
            let minimizer = parse_graph6(&w.graph6).map_err(|e| e.to_string())?;
            let expected = extremal_tree(n, w.beta).map_err(|e| e.to_string())?;
            ensure(brute_isomorphic(&minimizer, &expected), || format!("n={n} beta={}: wrong minimizer", w.beta))?;
            if let Some(gap) = check.min_gap {
                ensure(gap > 1e-9, || format!("n={n} beta={}: gap {gap:.3e}", w.beta))?;
                min_gap = min_gap.min(gap);
            }
            classes += 1;
        }
    }
    Ok(format!("{classes} classes, smallest runner-up gap {min_gap:.3e}"))
}

fn connected_graphs_by_matching_and_cover() -> Outcome {
    let mut checked = 0;
    for n in 3..=7 {
        let thm = run(Target::Thm32, with_n(n))?;
        let cor = run(Target::Cor33, with_n(n))?;
        for w in &thm.witnesses {
            let minimizer = parse_graph6(&w.graph6).map_err(|e| e.to_string())?;
            let expected = extremal_tree(n, w.beta).map_err(|e| e.to_string())?;
            ensure(brute_isomorphic(&minimizer, &expected), || format!("n={n} beta={}: wrong minimizer", w.beta))?;
        }
        ensure(thm.min_gap == cor.min_gap, || format!("n={n}: matching and cover reports differ"))?;
        if n == 3 {
            let gap = thm.min_gap.unwrap_or(f64::NAN);
            ensure((gap - 2.0).abs() <= 1e-9, || format!("n=3 gap {gap}, expected 2"))?;
        }
        checked += thm.checked;
    }
    Ok(format!("{checked} graphs, n=3 gap 2"))
}

fn lower_bounds() -> Outcome {
    let mut checked = 0;
    let mut min_gap = f64::INFINITY;
    for n in 3..=7 {
        let b35 = run(Target::Bound35, with_n(n))?;
        let b36 = run(Target::Bound36, with_n(n))?;
        checked += b35.checked + b36.checked;
        min_gap = min_gap.min(b35.min_gap.unwrap_or(f64::INFINITY));
    }
    for n in 2..=50 {
        for beta in 1..=n / 2 {
            ensure(matching_bound_denominator(n, beta) == cover_bound_denominator(n, n - beta), || {
                format!("denominators differ at n={n} beta={beta}")
            })?;
        }
    }
    Ok(format!("{checked} graph checks, tightest margin {min_gap:.3e}; identity holds for n <= 50"))
}

fn kirkland_grid() -> Outcome {
    let report = run(Target::Lem34, VerifyParams::default())?;
    ensure(report.checked == 150, || format!("grid has {} points", report.checked))?;
    ensure(kirkland_bound(1, 1, 3) == Ok(8.0 / 35.0), || "spot value (1,1,3)".into())?;
    ensure(kirkland_bound(2, 2, 2) == Ok(0.25), || "spot value (2,2,2)".into())?;
    Ok(format!("150 grid points, tightest margin {:.3e}", report.min_gap.unwrap_or(f64::NAN)))
}

fn broom_inequalities() -> Outcome {
    let lem24 = run(Target::Lem24, VerifyParams::default())?;
    let lem25 = run(Target::Lem25, VerifyParams::default())?;
    for r in [&lem24, &lem25] {
        let gap = r.min_gap.unwrap_or(f64::NAN);
        ensure(gap > 1e-9, || format!("{}: margin {gap:.3e}", r.target))?;
    }
    let informational: Vec<_> = lem24.checks.iter().filter(|c| !c.asserted).collect();
    ensure(!informational.is_empty(), || "literal reading of the second inequality not reported".into())?;
    Ok(format!(
        "{} + {} comparisons; literal reading reported ({})",
        lem24.checked,
        lem25.checked,
        if informational.iter().all(|c| c.passed) { "holds on the grid" } else { "fails on the grid" }
    ))
}

fn relocation() -> Outcome {
    let params = VerifyParams { seed: 0, count: 1000, ..Default::default() };
    let a = run(Target::Lem22, params.clone())?;
    let b = run(Target::Lem22, params)?;
    ensure(a.checked >= 1000, || format!("only {} instances", a.checked))?;
    ensure(a == b, || "two runs with seed 0 differ".into())?;
    Ok(format!("{} instances ({} samples skipped), reproducible", a.checked, a.skipped))
}

fn fiedler_classification() -> Outcome {
    let mut trees = 0;
    for n in 2..=9 {
        trees += run(Target::Fiedler21, with_n(n))?.checked;
    }
    Ok(format!("{trees} trees"))
}

fn spanning_subgraphs() -> Outcome {
    let (mut trees, mut unicyclic) = (0, 0);
    for n in 2..=7 {
        let lem26 = run(Target::Lem26, with_n(n))?;
        let cor27 = run(Target::Cor27, with_n(n))?;
        trees += lem26.checked;
        unicyclic += cor27.checked;
    }
    Ok(format!("{trees} spanning trees, {unicyclic} spanning unicyclic graphs"))
}

fn oracles() -> Outcome {
    for n in 2..=7 {
        for g in all_connected_graphs(n).map_err(|e| e.to_string())? {
            let dp = subset_dp_maximum_matching(&g).map_err(|e| e.to_string())?.len();
            ensure(dp == brute_matching_number(&g), || format!("matching DP wrong on {g:?}"))?;
        }
    }
    let tree_counts = [1, 1, 2, 3, 6, 11, 23, 47];
    let graph_counts = [1, 2, 6, 21, 112, 853];
    for (n, &c) in (2..=9).zip(&tree_counts) {
        let got = all_trees(n).map_err(|e| e.to_string())?.count();
        ensure(got == c, || format!("{got} trees of order {n}, expected {c}"))?;
    }
    for (n, &c) in (2..=7).zip(&graph_counts) {
        let got = all_connected_graphs(n).map_err(|e| e.to_string())?.count();
        ensure(got == c, || format!("{got} connected graphs of order {n}, expected {c}"))?;
    }
    // Brute-force dedup over all labeled graphs where the permutation search is cheap.
    for n in 2..=6 {
        let perms = permutations(n);
        let brute: HashSet<u64> = (0u64..1 << (n * (n - 1) / 2))
            .map(|m| graph_from_mask(n, m))
            .filter(|g| g.is_connected())
            .map(|g| brute_canonical(&g, &perms))
            .collect();
        ensure(brute.len() == graph_counts[n - 2], || format!("brute dedup gives {} at n={n}", brute.len()))?;
    }
    let mut round_trips = 0;
    for n in 2..=9 {
        let mut graphs: Vec<_> = all_trees(n).map_err(|e| e.to_string())?.collect();
        if n <= 7 {
            graphs.extend(all_connected_graphs(n).map_err(|e| e.to_string())?);
        }
        for g in graphs {
            let s = encode_graph6(&g).map_err(|e| e.to_string())?;
            ensure(parse_graph6(&s).as_ref() == Ok(&g), || format!("graph6 round trip fails on {s}"))?;
            round_trips += 1;
        }
    }
    Ok(format!("matching DP exact for n <= 7, counts match, {round_trips} graph6 round trips"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("closed forms for paths, stars and complete graphs", closed_forms),
        ("trees: unique minimizer per matching number, n = 4..9", trees_by_matching_number),
        ("connected graphs: unique minimizer per matching / cover number, n = 3..7", connected_graphs_by_matching_and_cover),
        ("lower bounds in matching and cover number", lower_bounds),
        ("double broom bound grid and spot values", kirkland_grid),
        ("double broom strict inequalities", broom_inequalities),
        ("branch relocation, 1000 sampled instances", relocation),
        ("Type I / Type II classification of all trees n = 2..9", fiedler_classification),
        ("spanning trees and unicyclic graphs keep the matching number", spanning_subgraphs),
        ("oracles, enumeration counts and graph6 round trip", oracles),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
