use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::{
    bound_cover, bound_matching, kirkland_bound, min_option, minimum_edge_cover_size, SubCheck,
    Target, VerificationReport, Witness, BOUND_TOL, GAP_TOL,
};
use crate::canon::is_isomorphic;
use crate::enumeration::{all_connected_graphs, all_trees};
use crate::error::{Error, Result};
use crate::families::{balanced_broom, double_broom, extremal_tree, BroomParams};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::matching::{
    edge_cover_number, matching_number, spanning_tree_preserving_matching,
    spanning_unicyclic_preserving_matching, subset_dp_maximum_matching,
};
use crate::spectral::{algebraic_connectivity, classify_fiedler, fiedler_eigenspace, FiedlerClass, FiedlerData};

fn params_n(n: usize) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(n));
    m
}

fn witness(g: &Graph, alpha: f64) -> Result<Witness> {
    Ok(Witness { graph6: encode_graph6(g)?, alpha, beta: matching_number(g)? })
}

fn score(graphs: Vec<Graph>) -> Result<Vec<(Graph, f64)>> {
    graphs
        .into_par_iter()
        .map(|g| algebraic_connectivity(&g).map(|a| (g, a)))
        .collect()
}

/// Checks that `expected` is, up to isomorphism, the unique graph of least
/// algebraic connectivity in `class`, with the runner-up more than `GAP_TOL` above.
fn unique_minimizer(
    report: &mut VerificationReport,
    name: String,
    class: Vec<Graph>,
    expected: &Graph,
) -> Result<()> {
    let scored = score(class)?;
    report.checked += scored.len();
    let Some((best, &(ref minimizer, alpha))) = scored
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
    else {
        report.push_check(SubCheck {
            name,
            asserted: true,
            passed: false,
            checked: 0,
            min_gap: None,
            detail: "empty class".into(),
        });
        return Ok(());
    };
    let gap = scored
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, (_, a))| a - alpha)
        .reduce(f64::min);
    let matches = is_isomorphic(minimizer, expected)?;
    let passed = matches && gap.map_or(true, |g| g > GAP_TOL);
    let detail = format!(
        "minimizer {} alpha={alpha:.12}, {} to the expected tree; runner-up gap {}",
        encode_graph6(minimizer)?,
        if matches { "isomorphic" } else { "not isomorphic" },
        gap.map_or("none".into(), |g| format!("{g:.3e}")),
    );
    report.witnesses.push(witness(minimizer, alpha)?);
    report.push_check(SubCheck { name, asserted: true, passed, checked: scored.len(), min_gap: gap, detail });
    Ok(())
}

pub(super) fn thm31(n: usize) -> Result<VerificationReport> {
    let trees: Vec<Graph> = all_trees(n)?.unfiltered().to_vec();
    let mut report = VerificationReport::new(Target::Thm31, params_n(n));
    for beta in 1..=n / 2 {
        let class: Vec<Graph> = trees.iter().filter(|t| matching_number(t) == Ok(beta)).cloned().collect();
        unique_minimizer(&mut report, format!("beta={beta}"), class, &extremal_tree(n, beta)?)?;
    }
    Ok(report)
}

pub(super) fn thm32(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Target::Thm32, params_n(n));
    for beta in 1..=n / 2 {
        let class: Vec<Graph> = all_connected_graphs(n)?.with_matching(beta).collect();
        unique_minimizer(&mut report, format!("beta={beta}"), class, &extremal_tree(n, beta)?)?;
    }
    Ok(report)
}

pub(super) fn cor33(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Target::Cor33, params_n(n));
    for gamma in (n.div_ceil(2)..n).rev() {
        let class: Vec<Graph> = all_connected_graphs(n)?.with_cover(gamma).collect();
        unique_minimizer(&mut report, format!("gamma={gamma}"), class, &extremal_tree(n, n - gamma)?)?;
    }
    Ok(report)
}

pub(super) fn lem23(n: usize, d: Option<usize>) -> Result<VerificationReport> {
    let ds: Vec<usize> = match d {
        Some(d) if d == 0 || d + 2 > n => {
            return Err(Error::Infeasible(format!("diameter d+1 needs 1 <= d <= n-2, got n={n}, d={d}")))
        }
        Some(d) => vec![d],
        None => (1..n.saturating_sub(1)).collect(),
    };
    let trees = all_trees(n)?.unfiltered().to_vec();
    let mut params = params_n(n);
    if let Some(d) = d {
        params.insert("d".into(), json!(d));
    }
    let mut report = VerificationReport::new(Target::Lem23, params);
    for d in ds {
        let class: Vec<Graph> = trees.iter().filter(|t| t.diameter() == Ok(d + 1)).cloned().collect();
        unique_minimizer(&mut report, format!("d={d}"), class, &balanced_broom(n, d)?)?;
    }
    Ok(report)
}

fn broom_alpha(k: usize, l: usize, d: usize) -> Result<f64> {
    algebraic_connectivity(&double_broom(BroomParams::new(k, l, d))?)
}

type Triple = (usize, usize, usize);

/// `α(T(lhs)) > α(T(rhs(lhs)))` over a grid of `(k, l, d)` triples.
fn strict_broom_check(
    name: &str,
    asserted: bool,
    grid: impl Iterator<Item = Triple>,
    rhs: impl Fn(Triple) -> Triple,
) -> Result<SubCheck> {
    let mut checked = 0;
    let mut min_gap: Option<f64> = None;
    let mut failures = Vec::new();
    for lhs in grid {
        let r = rhs(lhs);
        let gap = broom_alpha(lhs.0, lhs.1, lhs.2)? - broom_alpha(r.0, r.1, r.2)?;
        checked += 1;
        min_gap = min_option(min_gap, gap);
        if gap <= GAP_TOL {
            failures.push(format!("T{lhs:?} vs T{r:?}: {gap:.3e}"));
        }
    }
    let detail = if failures.is_empty() {
        "all strict".to_string()
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    };
    Ok(SubCheck { name: name.into(), asserted, passed: failures.is_empty(), checked, min_gap, detail })
}

fn grid(k: std::ops::RangeInclusive<usize>, l: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Triple> {
    k.flat_map(move |k| l.clone().flat_map(move |l| (2..=7).map(move |d| (k, l, d))))
}

pub(super) fn lem24() -> Result<VerificationReport> {
    let mut params = Map::new();
    params.insert("grid".into(), json!({"k": [2, 5], "l": [0, 5], "d": [2, 7]}));
    let mut report = VerificationReport::new(Target::Lem24, params);
    report.push_check(strict_broom_check("part1: T(k,l,d) > T(k-1,l,d+1)", true, grid(2..=5, 0..=5), |(k, l, d)| {
        (k - 1, l, d + 1)
    })?);
    report.push_check(strict_broom_check(
        "part2 mirrored: T(k,l,d) > T(k,l-1,d+1)",
        true,
        grid(0..=5, 2..=5),
        |(k, l, d)| (k, l - 1, d + 1),
    )?);
    report.push_check(strict_broom_check(
        "part2 as printed: T(k,l,d) > T(k,l+1,d+1)",
        false,
        grid(0..=5, 2..=5),
        |(k, l, d)| (k, l + 1, d + 1),
    )?);
    report.checked = report.checks.iter().filter(|c| c.asserted).map(|c| c.checked).sum();
    Ok(report)
}

pub(super) fn lem25(n: Option<usize>) -> Result<VerificationReport> {
    let orders: Vec<usize> = match n {
        Some(n) if n < 5 => return Err(Error::Infeasible(format!("needs n >= 5 so that beta >= 2 fits, got {n}"))),
        Some(n) => vec![n],
        None => (6..=12).collect(),
    };
    let mut params = Map::new();
    match n {
        Some(n) => params.insert("n".into(), json!(n)),
        None => params.insert("n_range".into(), json!([6, 12])),
    };
    let mut report = VerificationReport::new(Target::Lem25, params);

    let mut formula = (0, Vec::new());
    let mut d_range = (0, Vec::new());
    let mut endpoint = (0, None::<f64>, Vec::new());
    let mut chain = (0, None::<f64>, Vec::new());
    for &n in &orders {
        let alpha_t = |d: usize| balanced_broom(n, d).and_then(|t| algebraic_connectivity(&t));
        for d in 1..=n - 2 {
            let beta = matching_number(&balanced_broom(n, d)?)?;
            formula.0 += 1;
            if beta != (d + 2) / 2 {
                formula.1.push(format!("n={n} d={d}: beta={beta}"));
            }
            if beta >= 2 && 2 * beta < n {
                d_range.0 += 1;
                if d + 2 < 2 * beta || d > 2 * beta - 1 {
                    d_range.1.push(format!("n={n} d={d} beta={beta}"));
                }
            }
        }
        for beta in 2..=(n - 1) / 2 {
            let gap = alpha_t(2 * beta - 2)? - alpha_t(2 * beta - 1)?;
            endpoint.0 += 1;
            endpoint.1 = min_option(endpoint.1, gap);
            if gap <= GAP_TOL {
                endpoint.2.push(format!("n={n} beta={beta}: {gap:.3e}"));
            }
            for beta1 in 1..beta {
                let gap = alpha_t(2 * beta1 - 1)? - alpha_t(2 * beta - 1)?;
                chain.0 += 1;
                chain.1 = min_option(chain.1, gap);
                if gap <= GAP_TOL {
                    chain.2.push(format!("n={n} beta1={beta1} beta2={beta}: {gap:.3e}"));
                }
            }
        }
    }
    let summary = |fails: &[String]| {
        if fails.is_empty() {
            "ok".to_string()
        } else {
            format!("{} failures, first: {}", fails.len(), fails[0])
        }
    };
    report.push_check(SubCheck {
        name: "beta(T_d) = floor((d+2)/2)".into(),
        asserted: true,
        passed: formula.1.is_empty(),
        checked: formula.0,
        min_gap: None,
        detail: summary(&formula.1),
    });
    report.push_check(SubCheck {
        name: "2(beta-1) <= d <= 2beta-1".into(),
        asserted: true,
        passed: d_range.1.is_empty(),
        checked: d_range.0,
        min_gap: None,
        detail: summary(&d_range.1),
    });
    report.push_check(SubCheck {
        name: "alpha(T_{2beta-2}) > alpha(T_{2beta-1})".into(),
        asserted: true,
        passed: endpoint.2.is_empty(),
        checked: endpoint.0,
        min_gap: endpoint.1,
        detail: summary(&endpoint.2),
    });
    report.push_check(SubCheck {
        name: "alpha(T_{2beta1-1}) > alpha(T_{2beta2-1}) for beta1 < beta2".into(),
        asserted: true,
        passed: chain.2.is_empty(),
        checked: chain.0,
        min_gap: chain.1,
        detail: summary(&chain.2),
    });
    report.checked = report.checks.iter().map(|c| c.checked).sum();
    Ok(report)
}

fn is_spanning_subgraph(sub: &Graph, g: &Graph) -> bool {
    sub.order() == g.order() && sub.edges().iter().all(|&(u, v)| g.has_edge(u, v))
}

fn dp_beta(g: &Graph) -> Result<usize> {
    Ok(subset_dp_maximum_matching(g)?.len())
}

/// Runs `check` on every connected graph of order `n`; `Ok(None)` marks a
/// skipped graph and `Ok(Some(msg))` a failure.
fn per_graph_check(
    target: Target,
    n: usize,
    name: &str,
    check: impl Fn(&Graph) -> Result<Option<Option<String>>> + Sync,
) -> Result<VerificationReport> {
    let graphs = all_connected_graphs(n)?.unfiltered().to_vec();
    let outcomes: Vec<Option<Option<String>>> = graphs.par_iter().map(&check).collect::<Result<_>>()?;
    let mut report = VerificationReport::new(target, params_n(n));
    let failures: Vec<String> = outcomes.iter().flatten().flatten().cloned().collect();
    report.skipped = outcomes.iter().filter(|o| o.is_none()).count();
    report.checked = outcomes.len() - report.skipped;
    report.push_check(SubCheck {
        name: name.into(),
        asserted: true,
        passed: failures.is_empty(),
        checked: report.checked,
        min_gap: None,
        detail: if failures.is_empty() {
            "ok".into()
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    });
    Ok(report)
}

pub(super) fn lem26(n: usize) -> Result<VerificationReport> {
    per_graph_check(Target::Lem26, n, "spanning tree keeps matching number", |g| {
        let t = spanning_tree_preserving_matching(g)?;
        let ok = t.is_tree() && is_spanning_subgraph(&t, g) && dp_beta(&t)? == dp_beta(g)?;
        Ok(Some((!ok).then(|| encode_graph6(g).unwrap_or_default())))
    })
}

pub(super) fn cor27(n: usize) -> Result<VerificationReport> {
    per_graph_check(Target::Cor27, n, "spanning unicyclic graph keeps matching number", |g| {
        if g.is_tree() {
            return Ok(None);
        }
        let u = spanning_unicyclic_preserving_matching(g)?;
        let ok = u.is_connected()
            && u.size() == u.order()
            && is_spanning_subgraph(&u, g)
            && dp_beta(&u)? == dp_beta(g)?;
        Ok(Some((!ok).then(|| encode_graph6(g).unwrap_or_default())))
    })
}

pub(super) fn gallai(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Infeasible("the identity needs graphs without isolated vertices (n >= 2)".into()));
    }
    per_graph_check(Target::Gallai, n, "beta + gamma = n", |g| {
        let gamma = minimum_edge_cover_size(g);
        let ok = gamma.is_some_and(|gamma| dp_beta(g).is_ok_and(|b| b + gamma == n));
        Ok(Some((!ok).then(|| encode_graph6(g).unwrap_or_default())))
    })
}

/// `α(G) >= bound(G) − BOUND_TOL` over all connected graphs of order `n`.
fn bound_check(target: Target, n: usize, bound: impl Fn(&Graph) -> Result<f64> + Sync) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Infeasible("bounds need n >= 2".into()));
    }
    let graphs = all_connected_graphs(n)?.unfiltered().to_vec();
    let margins: Vec<(f64, f64)> = graphs
        .par_iter()
        .map(|g| Ok((algebraic_connectivity(g)?, bound(g)?)))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(target, params_n(n));
    report.checked = graphs.len();
    let (tightest, &(alpha, b)) = margins
        .iter()
        .enumerate()
        .min_by(|x, y| (x.1 .0 - x.1 .1).total_cmp(&(y.1 .0 - y.1 .1)))
        .expect("at least one connected graph");
    let failures = margins.iter().filter(|(a, b)| *a < b - BOUND_TOL).count();
    report.witnesses.push(witness(&graphs[tightest], alpha)?);
    report.push_check(SubCheck {
        name: "alpha(G) >= bound".into(),
        asserted: true,
        passed: failures == 0,
        checked: graphs.len(),
        min_gap: Some(alpha - b),
        detail: format!("{failures} violations; tightest bound {b:.12}"),
    });
    Ok(report)
}

pub(super) fn bound35(n: usize) -> Result<VerificationReport> {
    bound_check(Target::Bound35, n, |g| bound_matching(n, matching_number(g)?))
}

pub(super) fn bound36(n: usize) -> Result<VerificationReport> {
    bound_check(Target::Bound36, n, |g| bound_cover(n, edge_cover_number(g)?))
}

pub(super) fn lem34() -> Result<VerificationReport> {
    let mut params = Map::new();
    params.insert("grid".into(), json!({"k": [1, 5], "l": [1, 5], "dm1": [2, 7]}));
    let mut report = VerificationReport::new(Target::Lem34, params);
    let mut checked = 0;
    let mut min_gap: Option<f64> = None;
    let mut failures = Vec::new();
    let mut tightest: Option<(f64, Triple, f64)> = None;
    for k in 1..=5 {
        for l in 1..=5 {
            for dm1 in 2..=7 {
                let alpha = broom_alpha(k, l, dm1)?;
                let gap = alpha - kirkland_bound(k, l, dm1)?;
                checked += 1;
                min_gap = min_option(min_gap, gap);
                if tightest.map_or(true, |t| gap < t.0) {
                    tightest = Some((gap, (k, l, dm1), alpha));
                }
                if gap < -BOUND_TOL {
                    failures.push(format!("T({k},{l},{dm1}): {gap:.3e}"));
                }
            }
        }
    }
    if let Some((_, (k, l, d), alpha)) = tightest {
        report.witnesses.push(witness(&double_broom(BroomParams::new(k, l, d))?, alpha)?);
    }
    report.checked = checked;
    report.push_check(SubCheck {
        name: "alpha(T(k,l,d-1)) >= kirkland bound".into(),
        asserted: true,
        passed: failures.is_empty(),
        checked,
        min_gap,
        detail: format!("{} violations", failures.len()),
    });
    let spots = kirkland_bound(1, 1, 3)? == 8.0 / 35.0 && kirkland_bound(2, 2, 2)? == 0.25;
    report.push_check(SubCheck {
        name: "spot values 8/35 at (1,1,3) and 1/4 at (2,2,2)".into(),
        asserted: true,
        passed: spots,
        checked: 2,
        min_gap: None,
        detail: if spots { "exact".into() } else { "mismatch".into() },
    });
    Ok(report)
}

fn same_element(a: &FiedlerClass, b: &FiedlerClass) -> bool {
    match (a, b) {
        (FiedlerClass::TypeI { z, .. }, FiedlerClass::TypeI { z: z2, .. }) => z == z2,
        (FiedlerClass::TypeII { p, q }, FiedlerClass::TypeII { p: p2, q: q2 }) => {
            (p, q) == (p2, q2) || (p, q) == (q2, p2)
        }
        _ => false,
    }
}

enum TreeClassOutcome {
    Ok { type_one: bool, degenerate: bool },
    Failed(String),
}

fn classify_all_fiedler_vectors(t: &Graph) -> Result<TreeClassOutcome> {
    let (alpha, basis) = fiedler_eigenspace(t)?;
    let mut vectors = basis.clone();
    if basis.len() == 1 {
        vectors.push(basis[0].iter().map(|e| -e).collect());
    }
    let mut classes = Vec::new();
    for vector in vectors {
        let data = FiedlerData { alpha, multiplicity: basis.len(), vector };
        match classify_fiedler(t, &data) {
            Ok(c) => classes.push(c),
            Err(e) => return Ok(TreeClassOutcome::Failed(format!("{}: {e}", encode_graph6(t)?))),
        }
    }
    if !classes.windows(2).all(|w| same_element(&w[0], &w[1])) {
        return Ok(TreeClassOutcome::Failed(format!(
            "{}: characteristic element depends on the Fiedler vector",
            encode_graph6(t)?
        )));
    }
    Ok(TreeClassOutcome::Ok {
        type_one: matches!(classes[0], FiedlerClass::TypeI { .. }),
        degenerate: basis.len() > 1,
    })
}

pub(super) fn fiedler21(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Infeasible("Fiedler vectors need n >= 2".into()));
    }
    let trees = all_trees(n)?.unfiltered().to_vec();
    let outcomes: Vec<TreeClassOutcome> =
        trees.par_iter().map(classify_all_fiedler_vectors).collect::<Result<_>>()?;
    let mut report = VerificationReport::new(Target::Fiedler21, params_n(n));
    report.checked = trees.len();
    let (mut type_one, mut type_two, mut degenerate) = (0, 0, 0);
    let mut failures = Vec::new();
    for o in outcomes {
        match o {
            TreeClassOutcome::Ok { type_one: one, degenerate: deg } => {
                if one {
                    type_one += 1;
                } else {
                    type_two += 1;
                }
                degenerate += usize::from(deg);
            }
            TreeClassOutcome::Failed(msg) => failures.push(msg),
        }
    }
    report.push_check(SubCheck {
        name: "every tree is Type I or Type II with consistent structure".into(),
        asserted: true,
        passed: failures.is_empty(),
        checked: trees.len(),
        min_gap: None,
        detail: if failures.is_empty() {
            format!("{type_one} Type I, {type_two} Type II, {degenerate} with multiple alpha")
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm32_small_case_reproduces_triangle_comparison() {
        let r = thm32(3).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 2);
        assert!((r.min_gap.unwrap() - 2.0).abs() < 1e-9);
        let w = crate::graph6::parse_graph6(&r.witnesses[0].graph6).unwrap();
        assert!(is_isomorphic(&w, &extremal_tree(3, 1).unwrap()).unwrap());
    }

    #[test]
    fn thm31_five_vertices() {
        let r = thm31(5).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.checked, 3);
        let p5 = crate::families::path(5);
        let beta2 = crate::graph6::parse_graph6(&r.witnesses[1].graph6).unwrap();
        assert!(is_isomorphic(&beta2, &p5).unwrap());
    }

    #[test]
    fn bound35_six_vertices() {
        let r = bound35(6).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 112);
    }

    #[test]
    fn lem23_rejects_bad_diameter() {
        assert!(lem23(6, Some(5)).is_err());
        assert!(lem23(6, Some(4)).unwrap().passed);
    }
}
