//! Brute-force helpers shared by the oracle tests.
#![allow(dead_code)]

use algconn::Graph;

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 { p.swap(0, i) } else { p.swap(c[i], i) }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

pub fn edge_mask(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    g.edges().iter().fold(0, |m, &(u, v)| m | 1 << pair_index(n, perm[u], perm[v]))
}

/// Smallest edge mask over every relabeling.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| edge_mask(g, p)).min().unwrap_or(0)
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let target = edge_mask(b, &(0..b.order()).collect::<Vec<_>>());
    permutations(a.order()).iter().any(|p| edge_mask(a, p) == target)
}

/// Graph on `n` vertices from a mask over the upper-triangle pairs in
/// row-major order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> pair_index(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Size of a largest matching by trying every edge subset.
pub fn brute_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut used = 0u64;
        let ok = (0..edges.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
            let (u, v) = edges[i];
            let bits = 1 << u | 1 << v;
            let free = used & bits == 0;
            used |= bits;
            free
        });
        if ok {
            best = k;
        }
    }
    best
}

/// Test-side path builder, independent of the library's family constructors.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn is_connected_mask(n: usize, mask: u64) -> bool {
    graph_from_mask(n, mask).is_connected()
}

/// Fewest edges covering every vertex, by trying every edge subset.
pub fn brute_edge_cover(g: &Graph) -> Option<usize> {
    let full: u64 = (1u64 << g.order()) - 1;
    let edges = g.edges();
    (0u32..1 << edges.len())
        .filter(|mask| {
            let covered = (0..edges.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(0u64, |c, i| c | 1 << edges[i].0 | 1 << edges[i].1);
            covered == full
        })
        .map(u32::count_ones)
        .min()
        .map(|k| k as usize)
}
