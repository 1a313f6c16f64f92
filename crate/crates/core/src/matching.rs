//! Maximum matchings, edge covers, and spanning subgraphs that keep the
//! matching number.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the subset dynamic program.
pub const MAX_DP_ORDER: usize = 24;

/// A set of pairwise vertex-disjoint edges, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// True iff the matching covers every vertex of `g`.
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        2 * self.len() == g.order()
    }

    /// Checks that every edge is in `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        self.edges.iter().all(|&(u, v)| {
            g.has_edge(u, v)
                && !std::mem::replace(&mut used[u], true)
                && !std::mem::replace(&mut used[v], true)
        })
    }
}

/// Maximum matching: the linear tree algorithm for trees, the subset DP otherwise.
pub fn maximum_matching(g: &Graph) -> Result<Matching> {
    if g.is_tree() {
        tree_maximum_matching(g)
    } else {
        subset_dp_maximum_matching(g)
    }
}

pub fn matching_number(g: &Graph) -> Result<usize> {
    maximum_matching(g).map(|m| m.len())
}

/// Greedy leaf matching on a tree: visiting vertices deepest first, match a
/// vertex to its parent whenever both are still free.
pub fn tree_maximum_matching(t: &Graph) -> Result<Matching> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            edges.push((v.min(p), v.max(p)));
        }
    }
    edges.sort_unstable();
    Ok(Matching { edges })
}

/// Dynamic program over vertex subsets: `best[S]` is the matching number of
/// the subgraph induced by `S`, obtained by either leaving the lowest vertex
/// of `S` unmatched or matching it to a neighbour inside `S`.
pub fn subset_dp_maximum_matching(g: &Graph) -> Result<Matching> {
    let n = g.order();
    if n > MAX_DP_ORDER {
        return Err(Error::TooLarge { n, max: MAX_DP_ORDER });
    }
    let rows = g.masks();
    let full = (1u32 << n) - 1;
    let mut best = vec![0u8; 1 << n];
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut value = best[rest as usize];
        let mut nb = rows[v] as u32 & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            value = value.max(1 + best[(rest & !(1 << u)) as usize]);
            nb &= nb - 1;
        }
        best[mask as usize] = value;
    }
    // Walk back from the full set, preferring to match the lowest vertex to
    // its smallest feasible neighbour.
    let mut edges = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let target = best[mask as usize];
        let mut nb = rows[v] as u32 & rest;
        let mut next = rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            if 1 + best[(rest & !(1 << u)) as usize] == target {
                edges.push((v, u as usize));
                next = rest & !(1 << u);
                break;
            }
            nb &= nb - 1;
        }
        mask = next;
    }
    Ok(Matching { edges })
}

/// `γ(G) = n − β(G)` for graphs without isolated vertices.
pub fn edge_cover_number(g: &Graph) -> Result<usize> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.order() - matching_number(g)?)
}

/// Edges of some cycle of the graph, found by depth-first search from vertex 0
/// exploring neighbours in increasing order. `None` for forests.
fn find_cycle(n: usize, adj: &[BTreeSet<usize>]) -> Option<Vec<(usize, usize)>> {
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, adj[root].iter().copied().collect::<Vec<_>>(), 0)];
        while let Some((v, nbrs, idx)) = stack.last_mut() {
            let v = *v;
            let Some(&w) = nbrs.get(*idx) else {
                stack.pop();
                continue;
            };
            *idx += 1;
            if w == parent[v] {
                continue;
            }
            if visited[w] {
                // Back edge to an ancestor: close the cycle through the tree path.
                let mut cycle = vec![(v.min(w), v.max(w))];
                let mut x = v;
                while x != w {
                    let p = parent[x];
                    cycle.push((x.min(p), x.max(p)));
                    x = p;
                }
                return Some(cycle);
            }
            visited[w] = true;
            parent[w] = v;
            stack.push((w, adj[w].iter().copied().collect(), 0));
        }
    }
    None
}

/// Spanning tree with the same matching number: fix a maximum matching and
/// repeatedly delete the smallest non-matching edge of a cycle until no cycle
/// remains. Every cycle has such an edge, since a matching cannot contain two
/// consecutive cycle edges.
pub fn spanning_tree_preserving_matching(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    let matching = maximum_matching(g)?;
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut size = g.size();
    while size + 1 > n {
        let cycle = find_cycle(n, &adj).expect("connected graph with m >= n has a cycle");
        let &(u, v) = cycle
            .iter()
            .filter(|&&(u, v)| !matching.contains(u, v))
            .min()
            .expect("cycle has a non-matching edge");
        adj[u].remove(&v);
        adj[v].remove(&u);
        size -= 1;
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)));
    Graph::new(n, edges)
}

/// Spanning unicyclic subgraph with the same matching number: the spanning
/// tree above plus the smallest edge of `G` outside it.
pub fn spanning_unicyclic_preserving_matching(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.size() < g.order() {
        return Err(Error::NoCycle);
    }
    let tree = spanning_tree_preserving_matching(g)?;
    let extra = g
        .edges()
        .iter()
        .copied()
        .find(|&(u, v)| !tree.has_edge(u, v))
        .expect("graph with a cycle has a non-tree edge");
    Graph::new(g.order(), tree.edges().iter().copied().chain([extra]))
}
