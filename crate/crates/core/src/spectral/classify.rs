//! Type I / Type II classification of trees by the sign pattern of a Fiedler vector.

use serde::Serialize;

use super::{fiedler_vector, FiedlerData};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Entries with `|x(v)| <= ZERO_TOL * max|x|` count as zero.
pub const ZERO_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FiedlerClass {
    /// Some entries vanish; `z` is the only zero vertex with a nonzero neighbour.
    TypeI { z: usize, zero_set: Vec<usize> },
    /// No entries vanish; `pq` is the only edge with `x(p) > 0 > x(q)`.
    TypeII { p: usize, q: usize },
}

impl FiedlerClass {
    pub fn characteristic_vertex(&self) -> Option<usize> {
        match self {
            FiedlerClass::TypeI { z, .. } => Some(*z),
            FiedlerClass::TypeII { .. } => None,
        }
    }

    pub fn characteristic_edge(&self) -> Option<(usize, usize)> {
        match self {
            FiedlerClass::TypeI { .. } => None,
            FiedlerClass::TypeII { p, q } => Some((*p, *q)),
        }
    }
}

pub fn classify_tree(t: &Graph) -> Result<FiedlerClass> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    classify_fiedler(t, &fiedler_vector(t)?)
}

fn inconsistent(msg: String) -> Error {
    Error::ClassificationInconsistent(msg)
}

/// Classifies a tree from one of its Fiedler vectors and checks every
/// structural condition: connectivity of the zero set, uniqueness of the
/// boundary vertex or sign-change edge, and strict monotonicity along paths
/// leaving the characteristic element.
pub fn classify_fiedler(t: &Graph, f: &FiedlerData) -> Result<FiedlerClass> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let x = &f.vector;
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    let peak = x.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    if peak == 0.0 {
        return Err(Error::ZeroVector);
    }
    let tol = ZERO_TOL * peak;
    let sign = |v: usize| -> i8 {
        if x[v] > tol {
            1
        } else if x[v] < -tol {
            -1
        } else {
            0
        }
    };
    let zeros: Vec<usize> = (0..n).filter(|&v| sign(v) == 0).collect();

    if !zeros.is_empty() {
        let boundary: Vec<usize> = zeros
            .iter()
            .copied()
            .filter(|&v| t.neighbors(v).iter().any(|&w| sign(w) != 0))
            .collect();
        let [z] = boundary[..] else {
            return Err(inconsistent(format!("zero set has boundary vertices {boundary:?}")));
        };
        // Walk away from z: the zero set must be reached first and stay
        // connected; nonzero entries must keep their sign and strictly grow.
        let mut stack = vec![(z, usize::MAX)];
        let mut reached_zeros = 0;
        while let Some((v, parent)) = stack.pop() {
            if sign(v) == 0 {
                reached_zeros += 1;
            }
            for &w in t.neighbors(v) {
                if w == parent {
                    continue;
                }
                match (sign(v), sign(w)) {
                    (0, 0) => {}
                    (0, _) if v == z => {}
                    (0, _) => unreachable!("boundary vertex is unique"),
                    (_, 0) => return Err(inconsistent(format!("zero vertex {w} beyond nonzero {v}"))),
                    (a, b) if a != b => {
                        return Err(inconsistent(format!("sign change on edge {v}{w} in Type I tree")))
                    }
                    _ if x[w].abs() <= x[v].abs() => {
                        return Err(inconsistent(format!("not strictly monotone on edge {v}{w}")))
                    }
                    _ => {}
                }
                stack.push((w, v));
            }
        }
        if reached_zeros != zeros.len() {
            return Err(inconsistent("zero set is not connected".into()));
        }
        return Ok(FiedlerClass::TypeI { z, zero_set: zeros });
    }

    let crossing: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .filter(|&&(u, v)| sign(u) != sign(v))
        .map(|&(u, v)| if sign(u) > 0 { (u, v) } else { (v, u) })
        .collect();
    let [(p, q)] = crossing[..] else {
        return Err(inconsistent(format!("sign-change edges {crossing:?}")));
    };
    // From p (resp. q) away from the characteristic edge, values strictly
    // increase (resp. decrease).
    for (root, other, direction) in [(p, q, 1.0), (q, p, -1.0)] {
        let mut stack = vec![(root, other)];
        while let Some((v, parent)) = stack.pop() {
            for &w in t.neighbors(v) {
                if w == parent {
                    continue;
                }
                if direction * (x[w] - x[v]) <= 0.0 {
                    return Err(inconsistent(format!("not strictly monotone on edge {v}{w}")));
                }
                stack.push((w, v));
            }
        }
    }
    Ok(FiedlerClass::TypeII { p, q })
}
