//! Isomorph-free enumeration of trees and connected graphs of small order.
//!
//! Trees come from all `n^(n−2)` Prüfer sequences, connected graphs from all
//! `2^(n(n−1)/2)` labeled edge sets; both are deduplicated by canonical code.
//! Work is sharded with rayon and the merged classes are sorted by canonical
//! code, so the output order does not depend on the number of workers. Each
//! class is computed once per process and cached.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{adjacency_code, tree_code_from_adj, CanonicalCode, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{edge_cover_number, matching_number};

pub const MAX_TREE_ORDER: usize = 9;
pub const MAX_GRAPH_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphKind {
    Trees,
    ConnectedGraphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassFilter {
    Matching(usize),
    Cover(usize),
}

impl ClassFilter {
    fn accepts(self, g: &Graph) -> bool {
        match self {
            ClassFilter::Matching(beta) => matching_number(g) == Ok(beta),
            ClassFilter::Cover(gamma) => edge_cover_number(g) == Ok(gamma),
        }
    }

    /// False when no connected graph of order `n` can pass the filter.
    fn feasible(self, n: usize) -> bool {
        match self {
            ClassFilter::Matching(beta) => beta >= 1 && 2 * beta <= n,
            ClassFilter::Cover(gamma) => n >= 2 && 2 * gamma >= n && gamma < n,
        }
    }
}

/// Pull-based stream over one isomorphism class listing, optionally filtered
/// by matching number or edge covering number.
#[derive(Clone, Debug)]
pub struct GraphStream {
    n: usize,
    kind: GraphKind,
    filters: Vec<ClassFilter>,
    graphs: Arc<Vec<Graph>>,
    pos: usize,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn filters(&self) -> &[ClassFilter] {
        &self.filters
    }

    /// Restricts to matching number `beta`. Infeasible values give an empty
    /// stream rather than an error; see [`GraphStream::is_feasible`].
    pub fn with_matching(mut self, beta: usize) -> Self {
        self.filters.push(ClassFilter::Matching(beta));
        self
    }

    pub fn with_cover(mut self, gamma: usize) -> Self {
        self.filters.push(ClassFilter::Cover(gamma));
        self
    }

    pub fn is_feasible(&self) -> bool {
        self.filters.iter().all(|f| f.feasible(self.n))
    }

    /// Every graph of the unfiltered class, in canonical order.
    pub fn unfiltered(&self) -> &[Graph] {
        &self.graphs
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.is_feasible() {
            return None;
        }
        while let Some(g) = self.graphs.get(self.pos) {
            self.pos += 1;
            if self.filters.iter().all(|f| f.accepts(g)) {
                return Some(g.clone());
            }
        }
        None
    }
}

type Cache = Mutex<HashMap<(GraphKind, usize), Arc<Vec<Graph>>>>;

fn cached(kind: GraphKind, n: usize, build: impl FnOnce() -> Vec<Graph>) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(kind, n)) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build());
    Arc::clone(cache.lock().unwrap().entry((kind, n)).or_insert(built))
}

/// All unlabeled trees of order `n`, `1 <= n <= 9`.
pub fn all_trees(n: usize) -> Result<GraphStream> {
    if n == 0 {
        return Err(Error::TooSmall("trees need at least one vertex".into()));
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::TooLarge { n, max: MAX_TREE_ORDER });
    }
    let graphs = cached(GraphKind::Trees, n, || enumerate_trees(n));
    Ok(GraphStream { n, kind: GraphKind::Trees, filters: Vec::new(), graphs, pos: 0 })
}

/// All unlabeled connected graphs of order `n`, `1 <= n <= 7`.
pub fn all_connected_graphs(n: usize) -> Result<GraphStream> {
    if n == 0 {
        return Err(Error::TooSmall("graphs need at least one vertex".into()));
    }
    if n > MAX_GRAPH_ORDER {
        return Err(Error::TooLarge { n, max: MAX_GRAPH_ORDER });
    }
    let graphs = cached(GraphKind::ConnectedGraphs, n, || enumerate_connected(n));
    Ok(GraphStream { n, kind: GraphKind::ConnectedGraphs, filters: Vec::new(), graphs, pos: 0 })
}

/// Decodes a Prüfer sequence over `0..n` into tree adjacency lists.
pub fn prufer_to_adjacency(seq: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut degree = vec![1usize; n];
    seq.iter().for_each(|&v| degree[v] += 1);
    let mut adj = vec![Vec::new(); n];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        link(leaf, v);
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    if let [a, b] = rest[..] {
        link(a, b);
    }
    adj
}

fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let len = n - 2;
    let shards: Vec<usize> = if len == 0 { vec![0] } else { (0..n).collect() };
    let codes: HashSet<Vec<u8>> = shards
        .into_par_iter()
        .map(|first| {
            let mut local = HashSet::new();
            let mut seq = vec![0usize; len];
            if len > 0 {
                seq[0] = first;
            }
            loop {
                local.insert(tree_code_from_adj(&prufer_to_adjacency(&seq, n)));
                // Odometer over positions 1..len; position 0 is the shard.
                let mut i = len;
                loop {
                    if i <= 1 {
                        return local;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                }
            }
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut codes: Vec<Vec<u8>> = codes.into_iter().collect();
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|code| CanonicalForm { n, code: CanonicalCode::Tree(code) }.to_graph())
        .collect()
}

fn connected_mask(rows: &[u64]) -> bool {
    let n = rows.len();
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        let mut r = reach;
        while r != 0 {
            next |= rows[r.trailing_zeros() as usize];
            r &= r - 1;
        }
        if next == reach {
            return reach.count_ones() as usize == n;
        }
        reach = next;
    }
}

fn enumerate_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    let shard_bits = m.min(6);
    let per_shard = 1u64 << (m - shard_bits);
    let codes: HashSet<u64> = (0..1u64 << shard_bits)
        .into_par_iter()
        .map(|shard| {
            let mut local = HashSet::new();
            let mut rows = vec![0u64; n];
            for mask in shard * per_shard..(shard + 1) * per_shard {
                if (mask.count_ones() as usize) + 1 < n {
                    continue;
                }
                rows.iter_mut().for_each(|r| *r = 0);
                for (bit, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                if connected_mask(&rows) {
                    local.insert(adjacency_code(&rows));
                }
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut codes: Vec<u64> = codes.into_iter().collect();
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|code| CanonicalForm { n, code: CanonicalCode::Adjacency(code) }.to_graph())
        .collect()
}
