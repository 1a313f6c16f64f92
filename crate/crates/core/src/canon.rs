//! Canonical forms for isomorphism testing of small graphs.
//!
//! Trees use the AHU parenthesis code rooted at the center (the smaller of the
//! two codes when the tree is bicentral). Other graphs use the smallest
//! upper-triangle adjacency bitstring over all vertex orderings that are
//! compatible with an equitable degree refinement of the vertex set.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted for non-tree canonical forms.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalCode {
    /// AHU code, `(` = 1 and `)` = 0 as bytes.
    Tree(Vec<u8>),
    /// Upper-triangle bits in graph6 column order, first bit most significant.
    Adjacency(u64),
}

/// Isomorphism-invariant code: two graphs are isomorphic iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: CanonicalCode,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if g.is_tree() {
        return Ok(CanonicalForm { n, code: CanonicalCode::Tree(tree_code(g)) });
    }
    if n > MAX_CANON_ORDER {
        return Err(Error::TooLarge { n, max: MAX_CANON_ORDER });
    }
    Ok(CanonicalForm { n, code: CanonicalCode::Adjacency(adjacency_code(&g.masks())) })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

impl CanonicalForm {
    /// Rebuilds the graph in its canonical labeling.
    pub fn to_graph(&self) -> Graph {
        match &self.code {
            CanonicalCode::Tree(code) => decode_tree(code),
            CanonicalCode::Adjacency(bits) => decode_adjacency(self.n, *bits),
        }
    }
}

fn decode_adjacency(n: usize, bits: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_sorted(n, {
        edges.sort_unstable();
        edges
    })
}

fn decode_tree(code: &[u8]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    for &c in code {
        if c == b'(' {
            if let Some(&parent) = stack.last() {
                edges.push((parent, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    edges.sort_unstable();
    Graph::from_sorted(next, edges)
}

/// Center vertices (one or two) of a tree given by adjacency lists.
pub(crate) fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    fn go(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> =
            adj[v].iter().filter(|&&w| w != parent).map(|&w| go(adj, w, v)).collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        kids.iter().for_each(|k| code.extend_from_slice(k));
        code.push(b')');
        code
    }
    go(adj, root, usize::MAX)
}

pub(crate) fn tree_code_from_adj(adj: &[Vec<usize>]) -> Vec<u8> {
    tree_centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c))
        .min()
        .unwrap_or_default()
}

fn tree_code(g: &Graph) -> Vec<u8> {
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    tree_code_from_adj(&adj)
}

/// Equitable refinement of the vertex set starting from the unit partition.
/// Returns a color per vertex; colors are ranks of isomorphism-invariant
/// signatures, so they are themselves invariant.
fn refine(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut color = vec![0u8; n];
    let mut classes = 1;
    loop {
        let mut sig: Vec<(u64, usize)> = (0..n)
            .map(|v| {
                let mut hist = [0u8; MAX_CANON_ORDER + 1];
                let mut nb = rows[v];
                while nb != 0 {
                    hist[color[nb.trailing_zeros() as usize] as usize] += 1;
                    nb &= nb - 1;
                }
                let s = hist.iter().fold(u64::from(color[v]), |acc, &h| acc << 4 | u64::from(h));
                (s, v)
            })
            .collect();
        sig.sort_unstable();
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && sig[i].0 != sig[i - 1].0 {
                rank += 1;
            }
            color[sig[i].1] = rank;
        }
        let now = usize::from(rank) + 1;
        if now == classes {
            return color;
        }
        classes = now;
    }
}

/// Smallest adjacency code over refinement-compatible orderings.
pub(crate) fn adjacency_code(rows: &[u64]) -> u64 {
    let n = rows.len();
    assert!(n <= MAX_CANON_ORDER + 1, "adjacency code needs n(n-1)/2 <= 64 bits");
    if n <= 1 {
        return 0;
    }
    let color = refine(rows);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();

    struct Search<'a> {
        rows: &'a [u64],
        color: &'a [u8],
        slot_color: &'a [u8],
        total: u32,
        perm: Vec<usize>,
        used: u64,
        best: Option<u64>,
    }

    impl Search<'_> {
        fn go(&mut self, j: usize, code: u64) {
            let n = self.rows.len();
            if j == n {
                if self.best.map_or(true, |b| code < b) {
                    self.best = Some(code);
                }
                return;
            }
            for v in 0..n {
                if self.used >> v & 1 == 1 || self.color[v] != self.slot_color[j] {
                    continue;
                }
                let mut next = code;
                for &u in &self.perm {
                    next = next << 1 | (self.rows[u] >> v & 1);
                }
                if let Some(best) = self.best {
                    let len = (j * (j + 1) / 2) as u32;
                    if next.cmp(&(best >> (self.total - len))) == Ordering::Greater {
                        continue;
                    }
                }
                self.perm.push(v);
                self.used |= 1 << v;
                self.go(j + 1, next);
                self.used &= !(1 << v);
                self.perm.pop();
            }
        }
    }

    let mut search = Search {
        rows,
        color: &color,
        slot_color: &slot_color,
        total: (n * (n - 1) / 2) as u32,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.go(0, 0);
    search.best.unwrap_or(0)
}
