use crate::graph::Graph;

/// Minimum edge cover size by searching edge subsets of increasing size.
/// Independent of any matching computation; `None` if a vertex is isolated.
pub fn minimum_edge_cover_size(g: &Graph) -> Option<usize> {
    let n = g.order();
    if g.has_isolated_vertex() {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let full = (1u64 << n) - 1;
    let edges: Vec<u64> = g.edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect();

    fn covers(edges: &[u64], start: usize, left: usize, covered: u64, full: u64) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 || 2 * left < (full & !covered).count_ones() as usize {
            return false;
        }
        (start..edges.len()).any(|i| {
            edges[i] & !covered != 0 && covers(edges, i + 1, left - 1, covered | edges[i], full)
        })
    }

    (n.div_ceil(2)..=n).find(|&k| covers(&edges, 0, k, 0, full))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_covers() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(minimum_edge_cover_size(&k3), Some(2));
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(minimum_edge_cover_size(&star), Some(4));
        let p5 = Graph::new(5, (1..5).map(|v| (v - 1, v))).unwrap();
        assert_eq!(minimum_edge_cover_size(&p5), Some(3));
        assert_eq!(minimum_edge_cover_size(&Graph::new(3, [(0, 1)]).unwrap()), None);
    }
}
