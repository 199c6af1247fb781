mod common;

use gapkit::expander::{
    build_complete, build_gabber_galil, power, power_with_cap, select_power_for_alpha, AlphaBound, ExpanderSpec,
    RotationGraph,
};
use gapkit::rational::{parse_rational, rat};
use gapkit::spectral::{adjacency_matrix, second_eigenvalue, second_eigenvalue_with, verify_expander, Method};

fn mat_pow(m: &[Vec<u64>], p: u32) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut acc: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
    for _ in 0..p {
        acc = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| acc[i][k] * m[k][j]).sum()).collect()).collect();
    }
    acc
}

fn relabel(h: &RotationGraph, perm: &[usize]) -> RotationGraph {
    let n = h.n();
    let d = h.degree();
    let mut inverse = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let rot = (0..n)
        .flat_map(|new_v| {
            let old = inverse[new_v];
            (0..d).map(move |i| {
                let (u, j) = h.rotate(old, i);
                (perm[u], j)
            })
        })
        .collect();
    RotationGraph::new(n, d, rot).unwrap()
}

#[test]
fn gabber_galil_structure() {
    let h = build_gabber_galil(2).unwrap();
    assert_eq!((h.n(), h.degree()), (4, 8));
    assert!(h.is_involution());
    assert!(build_gabber_galil(1).is_err());
}

#[test]
fn gabber_galil_origin_neighbours_by_hand() {
    // (x, y) -> index 3x + y, k = 3
    let k = 3i64;
    let idx = |x: i64, y: i64| (x.rem_euclid(k) * k + y.rem_euclid(k)) as usize;
    let (x, y) = (0i64, 0i64);
    let mut expected = vec![
        idx(x + y, y),
        idx(x + y + 1, y),
        idx(x, y + x),
        idx(x, y + x + 1),
        idx(x - y, y),
        idx(x - y - 1, y),
        idx(x, y - x),
        idx(x, y - x - 1),
    ];
    let mut actual: Vec<usize> = build_gabber_galil(3).unwrap().neighbors(0).collect();
    expected.sort_unstable();
    actual.sort_unstable();
    assert_eq!(actual, expected);
}

#[test]
fn gabber_galil_spectral_bound_up_to_twelve() {
    for k in 2..=12 {
        let h = build_gabber_galil(k).unwrap();
        assert!(h.is_involution());
        let report = second_eigenvalue(&h).unwrap();
        assert!(report.lambda_hat <= 5.0 * 2f64.sqrt() + 1e-6, "k={k}: {}", report.lambda_hat);
        let claim = AlphaBound::from_squared(rat(25, 32));
        assert!(verify_expander(&h, &claim).unwrap().pass);
    }
}

#[test]
fn complete_graphs() {
    let k3 = build_complete(3).unwrap();
    assert_eq!(k3.degree(), 2);
    assert!(build_complete(2).is_err());
    for n in 3..=20 {
        let h = build_complete(n).unwrap();
        assert!(h.is_involution());
        let mut nb: Vec<usize> = h.neighbors(0).collect();
        nb.sort_unstable();
        assert_eq!(nb, (1..n).collect::<Vec<_>>());
    }
    assert!(verify_expander(&build_complete(14).unwrap(), &AlphaBound::exact(rat(1, 13))).unwrap().pass);
}

#[test]
fn power_is_matrix_power() {
    let bases = [build_complete(3).unwrap(), build_complete(4).unwrap(), build_gabber_galil(2).unwrap(), build_gabber_galil(3).unwrap()];
    for h in &bases {
        for p in 1..=3u32 {
            if (h.degree() as u64).pow(p) > 64 {
                continue;
            }
            let hp = power(h, p).unwrap();
            assert_eq!(hp.degree(), h.degree().pow(p));
            assert!(hp.is_involution());
            assert_eq!(hp.multiplicity_rows(), mat_pow(&h.multiplicity_rows(), p));
        }
    }
    let k5 = build_complete(5).unwrap();
    assert_eq!(power(&k5, 1).unwrap(), k5);
    assert!(power_with_cap(&build_gabber_galil(3).unwrap(), 7, 1000).is_err());
}

#[test]
fn powering_spectrum() {
    for h in [build_gabber_galil(3).unwrap(), build_complete(5).unwrap(), build_gabber_galil(2).unwrap()] {
        let base = second_eigenvalue(&h).unwrap().lambda_hat;
        for p in 1..=3u32 {
            let hp = power(&h, p).unwrap();
            let d = hp.degree() as f64;
            let lam = second_eigenvalue(&hp).unwrap().lambda_hat;
            assert!((lam - base.powi(p as i32)).abs() <= 1e-6 * d, "p={p}: {lam} vs {}", base.powi(p as i32));
        }
    }
    let k3sq = power(&build_complete(3).unwrap(), 2).unwrap();
    assert!((second_eigenvalue(&k3sq).unwrap().lambda_hat - 1.0).abs() < 1e-9);
}

#[test]
fn lambda_invariant_under_relabeling() {
    let mut r = common::rng(21);
    for h in [build_gabber_galil(5).unwrap(), power(&build_complete(6).unwrap(), 2).unwrap()] {
        let mut perm: Vec<usize> = (0..h.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
        let moved = relabel(&h, &perm);
        assert!(moved.is_involution());
        let a = second_eigenvalue(&h).unwrap().lambda_hat;
        let b = second_eigenvalue(&moved).unwrap().lambda_hat;
        assert!((a - b).abs() <= 1e-6 * h.degree() as f64);
    }
}

#[test]
fn dense_and_power_iteration_agree() {
    for k in [3, 5, 7, 9] {
        let h = build_gabber_galil(k).unwrap();
        let dense = second_eigenvalue_with(&h, Method::Dense).unwrap().lambda_hat;
        let iter = second_eigenvalue_with(&h, Method::PowerIteration).unwrap().lambda_hat;
        assert!((dense - iter).abs() <= 1e-5 * 8.0, "k={k}: {dense} vs {iter}");
    }
}

#[test]
fn adjacency_rows_sum_to_degree() {
    let h = power(&build_gabber_galil(3).unwrap(), 2).unwrap();
    let a = adjacency_matrix(&h);
    for i in 0..h.n() {
        assert_eq!(a.row(i).sum(), 64.0);
    }
}

#[test]
fn power_selection_examples() {
    for (text, p) in [("0.9", 1), ("0.5", 6), ("0.1", 19)] {
        assert_eq!(select_power_for_alpha(&parse_rational(text).unwrap()).unwrap(), p);
    }
    assert!(select_power_for_alpha(&rat(1, 1)).is_err());
    assert!(select_power_for_alpha(&rat(0, 1)).is_err());
}

#[test]
fn spec_round_trip_through_json() {
    let h = ExpanderSpec::gabber_galil(3, 1).build().unwrap();
    assert_eq!(RotationGraph::from_json(&h.to_json()).unwrap(), h);
}
