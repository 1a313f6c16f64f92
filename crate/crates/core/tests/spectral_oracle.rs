mod common;

use algconn::enumeration::{all_connected_graphs, all_trees};
use algconn::spectral::{
    algebraic_connectivity, eigen_residual, eigen_symmetric, fiedler_eigenspace, fiedler_vector, laplacian,
    laplacian_spectrum, rayleigh_quotient, SymmetricMatrix,
};
use algconn::Graph;
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nalgebra_eigenvalues(m: &SymmetricMatrix) -> Vec<f64> {
    let n = m.dim();
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    let mut values: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn assert_spectrum_matches(g: &Graph) {
    let l = laplacian(g);
    let ours = laplacian_spectrum(g).unwrap();
    let theirs = nalgebra_eigenvalues(&l);
    let scale = theirs.last().copied().unwrap_or(1.0).max(1.0);
    for (a, b) in ours.values.iter().zip(&theirs) {
        assert!((a - b).abs() <= 1e-10 * scale, "{g:?}: {a} vs {b}");
    }
    for (value, vector) in ours.values.iter().zip(&ours.vectors) {
        assert!(eigen_residual(g, *value, vector) <= 1e-9 * scale);
        let norm: f64 = vector.iter().map(|e| e * e).sum();
        assert!((norm - 1.0).abs() < 1e-10);
    }
}

#[test]
fn laplacian_spectra_match_nalgebra() {
    for n in 2..=7 {
        all_connected_graphs(n).unwrap().for_each(|g| assert_spectrum_matches(&g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..40 {
        let n = rng.gen_range(2..=40);
        let p = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_spectrum_matches(&g);
    }
}

#[test]
fn dense_random_symmetric_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [1, 2, 3, 8, 25] {
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-5.0..5.0);
                rows[i][j] = x;
                rows[j][i] = x;
            }
        }
        let m = SymmetricMatrix::from_rows(&rows).unwrap();
        let ours = eigen_symmetric(&m).unwrap();
        let theirs = nalgebra_eigenvalues(&m);
        for (a, b) in ours.values.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        for (value, v) in ours.values.iter().zip(&ours.vectors) {
            let mv = m.mul_vec(v);
            assert!(mv.iter().zip(v).all(|(a, b)| (a - value * b).abs() < 1e-9));
        }
    }
    let skew = SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
    assert!(eigen_symmetric(&skew).is_err());
    assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0]]).is_err());
}

#[test]
fn kernel_and_component_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=15);
        let g = random_graph(&mut rng, n, 0.2);
        let l = laplacian(&g);
        assert!(l.mul_vec(&vec![1.0; n]).iter().all(|e| e.abs() < 1e-12));
        let spec = laplacian_spectrum(&g).unwrap();
        assert!(spec.values[0].abs() < 1e-9);
        let zeros = spec.values.iter().filter(|v| v.abs() < 1e-8).count();
        let mut seen = vec![false; n];
        let mut components = 0;
        for s in 0..n {
            if !seen[s] {
                components += 1;
                for (v, d) in g.distances_from(s).iter().enumerate() {
                    if d.is_some() {
                        seen[v] = true;
                    }
                }
            }
        }
        assert_eq!(zeros, components);
        assert_eq!(algebraic_connectivity(&g).unwrap() > 1e-9, g.is_connected());
    }
}

/// Courant-Fischer: every vector orthogonal to the all-ones vector has
/// Rayleigh quotient at least α, with equality on the Fiedler vector.
#[test]
fn rayleigh_quotients_bound_alpha() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let trees: Vec<Graph> = all_trees(8).unwrap().collect();
    for _ in 0..1000 {
        let g = &trees[rng.gen_range(0..trees.len())];
        let alpha = algebraic_connectivity(g).unwrap();
        let mut x: Vec<f64> = (0..g.order()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mean = x.iter().sum::<f64>() / x.len() as f64;
        x.iter_mut().for_each(|e| *e -= mean);
        assert!(rayleigh_quotient(g, &x).unwrap() >= alpha - 1e-9);
    }
    for g in &trees {
        let f = fiedler_vector(g).unwrap();
        assert!(f.vector.iter().sum::<f64>().abs() < 1e-9);
        assert!((rayleigh_quotient(g, &f.vector).unwrap() - f.alpha).abs() < 1e-9);
        assert!(eigen_residual(g, f.alpha, &f.vector) < 1e-9);
    }
}

#[test]
fn fiedler_eigenspace_multiplicities() {
    // Star S_{1,m}: α = 1 with multiplicity m − 1. K_n: α = n with multiplicity n − 1.
    for m in 2..=8 {
        let star = Graph::new(m + 1, (1..=m).map(|v| (0, v))).unwrap();
        let (alpha, basis) = fiedler_eigenspace(&star).unwrap();
        assert!((alpha - 1.0).abs() < 1e-9);
        assert_eq!(basis.len(), m - 1);
    }
    for n in 2..=8 {
        let kn = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap();
        let (alpha, basis) = fiedler_eigenspace(&kn).unwrap();
        assert!((alpha - n as f64).abs() < 1e-9);
        assert_eq!(basis.len(), n - 1);
    }
    // Cycles: α = 2(1 − cos(2π/n)), multiplicity 2.
    for n in 4..=12 {
        let cycle = Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap();
        let (alpha, basis) = fiedler_eigenspace(&cycle).unwrap();
        let expected = 2.0 * (1.0 - (2.0 * std::f64::consts::PI / n as f64).cos());
        assert!((alpha - expected).abs() < 1e-9);
        assert_eq!(basis.len(), 2);
    }
    assert!(fiedler_eigenspace(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_err());
    assert!(fiedler_eigenspace(&Graph::empty(1)).is_err());
}

#[test]
fn fiedler_vector_sign_is_fixed() {
    for n in 2..=20 {
        let f = fiedler_vector(&common::path_graph(n)).unwrap();
        let peak = f.vector.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let lead = f.vector.iter().find(|e| e.abs() >= peak * (1.0 - 1e-9)).unwrap();
        assert!(*lead > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alpha_never_exceeds_vertex_connectivity_proxies(seed in any::<u64>(), n in 2usize..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.4);
        prop_assume!(g.is_connected());
        let alpha = algebraic_connectivity(&g).unwrap();
        let min_degree = g.degrees().into_iter().min().unwrap() as f64;
        // Fiedler's inequalities: α ≤ n/(n−1) · δ, and α ≥ 2(1 − cos(π/n)) for connected graphs.
        prop_assert!(alpha <= n as f64 / (n as f64 - 1.0) * min_degree + 1e-9);
        prop_assert!(alpha >= 2.0 * (1.0 - (std::f64::consts::PI / n as f64).cos()) - 1e-9);
    }

    #[test]
    fn adding_an_edge_does_not_decrease_alpha(seed in any::<u64>(), n in 3usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.3);
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let e = missing[rng.gen_range(0..missing.len())];
        let h = Graph::new(n, g.edges().iter().copied().chain([e])).unwrap();
        prop_assert!(algebraic_connectivity(&h).unwrap() >= algebraic_connectivity(&g).unwrap() - 1e-9);
    }
}
