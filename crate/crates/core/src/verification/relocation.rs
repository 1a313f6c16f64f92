//! Sampled check of the branch-relocation inequality `α(G*) <= α(G)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map};

use super::{SubCheck, Target, VerificationReport, Witness, BOUND_TOL};
use crate::enumeration::{all_connected_graphs, all_trees};
use crate::error::{Error, Result};
use crate::families::{relocate_branch, Relocation};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::matching::matching_number;
use crate::spectral::{algebraic_connectivity, eigen_residual, fiedler_eigenspace};

/// Tolerance for the sign hypotheses on Fiedler entries.
const SIGN_TOL: f64 = 1e-9;
/// Tolerance for the equality conditions.
const EQUALITY_TOL: f64 = 1e-7;
const MAX_ATTEMPTS_PER_INSTANCE: usize = 200;

/// Base graphs: trees of order 2..=6 and unicyclic graphs of order 3..=6.
fn base_pool() -> Result<Vec<Graph>> {
    let mut pool = Vec::new();
    for n in 2..=6 {
        pool.extend(all_trees(n)?);
    }
    for n in 3..=6 {
        pool.extend(all_connected_graphs(n)?.filter(|g| g.size() == g.order()));
    }
    Ok(pool)
}

/// Branches: trees of order 2..=4.
fn branch_pool() -> Result<Vec<Graph>> {
    let mut pool = Vec::new();
    for n in 2..=4 {
        pool.extend(all_trees(n)?);
    }
    Ok(pool)
}

/// A Fiedler vector of `G` with `x(v1) >= x(v2) >= 0` and `x >= 0` on the
/// branch, searched among the eigenspace basis and its negation.
fn qualifying_vector(r: &Relocation, basis: &[Vec<f64>]) -> Option<Vec<f64>> {
    basis
        .iter()
        .flat_map(|b| [b.clone(), b.iter().map(|e| -e).collect()])
        .find(|x| {
            x[r.v1] >= x[r.v2] - SIGN_TOL
                && x[r.v2] >= -SIGN_TOL
                && r.branch.iter().all(|&w| x[w] >= -SIGN_TOL)
        })
}

struct Outcome {
    gap: f64,
    equality: bool,
    violation: Option<String>,
}

fn check_instance(r: &Relocation, x: &[f64], alpha: f64) -> Result<Outcome> {
    let alpha_star = algebraic_connectivity(&r.after)?;
    let gap = alpha - alpha_star;
    let equality = gap.abs() <= BOUND_TOL;
    let conditions = x[r.v1].abs() <= EQUALITY_TOL
        && x[r.v2].abs() <= EQUALITY_TOL
        && r.branch_root_neighbors.iter().map(|&w| x[w]).sum::<f64>().abs() <= EQUALITY_TOL
        && eigen_residual(&r.after, alpha_star, x) <= EQUALITY_TOL;
    let describe = || -> Result<String> {
        Ok(format!(
            "G={} G*={} v1={} v2={}",
            encode_graph6(&r.before)?,
            encode_graph6(&r.after)?,
            r.v1,
            r.v2
        ))
    };
    let violation = if gap < -BOUND_TOL {
        Some(format!("alpha(G*) > alpha(G) by {:.3e}: {}", -gap, describe()?))
    } else if equality != conditions {
        Some(format!("equality={equality} but conditions={conditions}: {}", describe()?))
    } else {
        None
    };
    Ok(Outcome { gap, equality, violation })
}

/// Samples relocations until `count` instances satisfy the hypothesis (or the
/// attempt budget runs out) and checks the inequality and its equality case
/// on each.
pub(super) fn lem22(seed: u64, count: usize) -> Result<VerificationReport> {
    if count == 0 {
        return Err(Error::Infeasible("count must be positive".into()));
    }
    let bases = base_pool()?;
    let branches = branch_pool()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut params = Map::new();
    params.insert("seed".into(), json!(seed));
    params.insert("count".into(), json!(count));
    let mut report = VerificationReport::new(Target::Lem22, params);

    let mut satisfied = 0;
    let mut attempts = 0;
    let mut equalities = 0;
    let mut violations = Vec::new();
    let mut tightest: Option<(f64, Graph, f64)> = None;
    while satisfied < count && attempts < count * MAX_ATTEMPTS_PER_INSTANCE {
        attempts += 1;
        let g1 = bases.choose(&mut rng).expect("non-empty pool");
        let g2 = branches.choose(&mut rng).expect("non-empty pool");
        let v1 = rng.gen_range(0..g1.order());
        let v2 = (v1 + rng.gen_range(1..g1.order())) % g1.order();
        let u = rng.gen_range(0..g2.order());
        let r = relocate_branch(g1, v1, v2, g2, u)?;
        let (alpha, basis) = fiedler_eigenspace(&r.before)?;
        let Some(x) = qualifying_vector(&r, &basis) else {
            report.skipped += 1;
            continue;
        };
        satisfied += 1;
        let outcome = check_instance(&r, &x, alpha)?;
        equalities += usize::from(outcome.equality);
        if tightest.as_ref().map_or(true, |t| outcome.gap < t.0) {
            tightest = Some((outcome.gap, r.before.clone(), alpha));
        }
        violations.extend(outcome.violation);
    }
    report.checked = satisfied;
    if let Some((_, g, alpha)) = &tightest {
        report.witnesses.push(Witness { graph6: encode_graph6(g)?, alpha: *alpha, beta: matching_number(g)? });
    }
    report.push_check(SubCheck {
        name: "alpha(G*) <= alpha(G) under the sign hypothesis".into(),
        asserted: true,
        passed: violations.is_empty() && satisfied >= count,
        checked: satisfied,
        min_gap: tightest.as_ref().map(|t| t.0),
        detail: if violations.is_empty() {
            format!("{satisfied} instances from {attempts} samples, {equalities} equality cases")
        } else {
            format!("{} violations, first: {}", violations.len(), violations[0])
        },
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_runs_are_reproducible() {
        let a = lem22(7, 50).unwrap();
        let b = lem22(7, 50).unwrap();
        assert_eq!(a, b);
        assert!(a.passed, "{a:?}");
        assert_eq!(a.checked, 50);
    }

    #[test]
    fn zero_count_rejected() {
        assert!(lem22(0, 0).is_err());
    }
}
