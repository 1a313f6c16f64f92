//! Named graph families: paths, stars, double brooms `T(k,l,d)` and branch surgery.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of the double broom `T(k,l,d)`: a path on `d` vertices with `k`
/// pendant leaves at its first end and `l` at its last end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BroomParams {
    pub k: usize,
    pub l: usize,
    pub d: usize,
}

impl BroomParams {
    pub fn new(k: usize, l: usize, d: usize) -> Self {
        BroomParams { k, l, d }
    }

    pub fn order(&self) -> usize {
        self.k + self.l + self.d
    }

    /// Parameters of the balanced broom `T_d` of order `n`; the first end gets
    /// the larger star.
    pub fn balanced(n: usize, d: usize) -> Result<Self> {
        if d == 0 || n < d + 1 {
            return Err(Error::Infeasible(format!("balanced broom needs 1 <= d < n, got n={n}, d={d}")));
        }
        let rest = n - d;
        Ok(BroomParams { k: rest.div_ceil(2), l: rest / 2, d })
    }
}

/// Vertex layout: path `0..d`, first-end leaves `d..d+k`, last-end leaves
/// `d+k..d+k+l`. With `d = 1` both stars hang from vertex 0.
pub fn double_broom(p: BroomParams) -> Result<Graph> {
    if p.d == 0 {
        return Err(Error::Infeasible("double broom needs d >= 1".into()));
    }
    if p.order() < 2 {
        return Err(Error::TooSmall(format!("T({},{},{}) has fewer than two vertices", p.k, p.l, p.d)));
    }
    let spine = (1..p.d).map(|v| (v - 1, v));
    let first = (p.d..p.d + p.k).map(|v| (0, v));
    let last = (p.d + p.k..p.order()).map(|v| (p.d - 1, v));
    Graph::new(p.order(), spine.chain(first).chain(last))
}

pub fn path(n: usize) -> Graph {
    Graph::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
}

/// `S_{1,m}`: center 0, leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    Graph::from_sorted(m + 1, (1..=m).map(|v| (0, v)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_sorted(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// `T_d = T(⌈(n−d)/2⌉, ⌊(n−d)/2⌋, d)`.
pub fn balanced_broom(n: usize, d: usize) -> Result<Graph> {
    double_broom(BroomParams::balanced(n, d)?)
}

/// `T_{2β−1}` of order `n`, the tree of least algebraic connectivity among
/// connected graphs of order `n` with matching number `β`.
pub fn extremal_tree(n: usize, beta: usize) -> Result<Graph> {
    if beta == 0 || n < 2 * beta {
        return Err(Error::Infeasible(format!("need 1 <= beta <= n/2, got n={n}, beta={beta}")));
    }
    balanced_broom(n, 2 * beta - 1)
}

/// Glues `g1` and `g2` by identifying `v ∈ g1` with `u ∈ g2`. Vertices of
/// `g1` keep their labels; the other vertices of `g2` follow in order.
pub fn coalescence(g1: &Graph, v: usize, g2: &Graph, u: usize) -> Result<Graph> {
    g1.check_vertex(v)?;
    g2.check_vertex(u)?;
    let n1 = g1.order();
    let map = |w: usize| match w.cmp(&u) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (map(a), map(b))));
    Graph::new(n1 + g2.order() - 1, edges)
}

/// A branch attached at `v2` (`before`) and the same branch moved to `v1`
/// (`after`), on a shared labeling.
#[derive(Clone, Debug, PartialEq)]
pub struct Relocation {
    pub before: Graph,
    pub after: Graph,
    pub v1: usize,
    pub v2: usize,
    /// Labels of the branch vertices other than the attachment vertex; the
    /// same in both graphs.
    pub branch: Vec<usize>,
    /// Labels of the attachment vertex's neighbours inside the branch.
    pub branch_root_neighbors: Vec<usize>,
}

pub fn relocate_branch(g1: &Graph, v1: usize, v2: usize, g2: &Graph, u: usize) -> Result<Relocation> {
    g1.check_vertex(v1)?;
    g1.check_vertex(v2)?;
    g2.check_vertex(u)?;
    if v1 == v2 {
        return Err(Error::Infeasible("relocation needs two distinct vertices".into()));
    }
    if !g1.is_connected() {
        return Err(Error::NotConnected);
    }
    if g2.order() < 2 {
        return Err(Error::TrivialBranch);
    }
    if !g2.is_connected() {
        return Err(Error::NotConnected);
    }
    let n1 = g1.order();
    let relabel = |w: usize| if w < u { n1 + w } else { n1 + w - 1 };
    Ok(Relocation {
        before: coalescence(g1, v2, g2, u)?,
        after: coalescence(g1, v1, g2, u)?,
        v1,
        v2,
        branch: (0..g2.order()).filter(|&w| w != u).map(relabel).collect(),
        branch_root_neighbors: g2.neighbors(u).iter().map(|&w| relabel(w)).collect(),
    })
}
