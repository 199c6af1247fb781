mod common;

use common::*;
use gapkit::expander::{build_complete, build_gabber_galil, power, RotationGraph};
use gapkit::instances::Graph;
use gapkit::oracles::max_clique;
use gapkit::product::{
    amplify_gap, derandomized_product, select_amplification_params, FamilyRequest, ProductError,
};
use gapkit::rational::{from_usize, rat, Rational};
use rand::Rng;

/// Walks in (start, ports) lexicographic order, built directly from the rotation map.
fn reference_walks(h: &RotationGraph, t: u32) -> Vec<Vec<usize>> {
    let d = h.degree();
    let steps = (t - 1) as usize;
    let mut out = Vec::new();
    for start in 0..h.n() {
        for code in 0..d.pow(steps as u32) {
            let mut ports = vec![0; steps];
            let mut c = code;
            for slot in ports.iter_mut().rev() {
                *slot = c % d;
                c /= d;
            }
            let mut visited = vec![start];
            for &p in &ports {
                visited.push(h.neighbor(*visited.last().unwrap(), p));
            }
            out.push(visited);
        }
    }
    out
}

fn reference_product(g: &Graph, h: &RotationGraph, t: u32) -> Graph {
    let walks = reference_walks(h, t);
    let clique = |s: &[usize]| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)));
    Graph::from_fn(walks.len(), |x, y| {
        let mut union = walks[x].clone();
        union.extend(&walks[y]);
        clique(&union)
    })
}

#[test]
fn product_examples() {
    let h = build_complete(3).unwrap();
    let p = derandomized_product(&Graph::complete(3), &h, 2).unwrap();
    assert_eq!(p.graph, Graph::complete(6));
    let e = derandomized_product(&Graph::empty(3), &h, 2).unwrap();
    assert_eq!(e.graph.edge_count(), 0);
    assert_eq!(max_clique(&e.graph).unwrap().value, 1);
    let mut r = rng(31);
    let g = random_graph(&mut r, 5, 0.5);
    assert_eq!(derandomized_product(&g, &build_complete(5).unwrap(), 1).unwrap().graph, g);
    assert!(matches!(
        derandomized_product(&g, &build_complete(4).unwrap(), 2),
        Err(ProductError::VertexMismatch { .. })
    ));
}

#[test]
fn product_matches_reference_construction() {
    let mut r = rng(32);
    let cases: Vec<(RotationGraph, u32)> = vec![
        (build_complete(4).unwrap(), 2),
        (build_complete(4).unwrap(), 3),
        (build_gabber_galil(2).unwrap(), 2),
        (power(&build_complete(3).unwrap(), 2).unwrap(), 2),
        (build_complete(6).unwrap(), 2),
    ];
    for (h, t) in cases {
        for _ in 0..5 {
            let p = r.gen_range(0.3..0.9);
            let g = random_graph(&mut r, h.n(), p);
            let wg = derandomized_product(&g, &h, t).unwrap();
            let expected_n = h.n() * h.degree().pow(t - 1);
            assert_eq!(wg.graph.n(), expected_n);
            let walks = reference_walks(&h, t);
            assert_eq!(wg.walks.iter().map(|w| w.visited.clone()).collect::<Vec<_>>(), walks);
            assert!(wg.walks.iter().enumerate().all(|(i, w)| w.id == i && w.start == w.visited[0]));
            assert_eq!(wg.graph, reference_product(&g, &h, t));
        }
    }
}

#[test]
fn non_clique_walks_are_isolated_and_clique_walks_form_cliques() {
    let mut r = rng(33);
    for _ in 0..20 {
        let n = r.gen_range(5..=8);
        let p = r.gen_range(0.4..0.9);
        let g = random_graph(&mut r, n, p);
        let wg = derandomized_product(&g, &build_complete(n).unwrap(), 2).unwrap();
        for w in &wg.walks {
            if !g.is_clique(&dedup(&w.visited)) {
                assert_eq!(wg.graph.degree(w.id), 0);
            }
        }
        let best = max_clique(&g).unwrap().witness;
        let inside: Vec<usize> =
            wg.walks.iter().filter(|w| w.visited.iter().all(|v| best.contains(v))).map(|w| w.id).collect();
        assert!(wg.graph.is_clique(&inside));
        // walks of length 2 inside B on K_n: |B| starts times |B|-1 ports
        assert_eq!(inside.len(), best.len() * (best.len() - 1));
        assert!(max_clique(&wg.graph).unwrap().value >= inside.len());
    }
}

fn dedup(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

#[test]
fn walk_product_clique_sandwich() {
    let mut r = rng(34);
    let mut checked = 0;
    while checked < 50 {
        let n = r.gen_range(8..=12);
        let p = r.gen_range(0.75..0.95);
        let g = random_graph(&mut r, n, p);
        let omega = max_clique(&g).unwrap().value;
        let b = rat(omega as i64, n as i64);
        let alpha = rat(1, n as i64 - 1);
        if b <= &alpha * rat(6, 1) {
            continue;
        }
        checked += 1;
        let wg = derandomized_product(&g, &build_complete(n).unwrap(), 2).unwrap();
        let big_n = from_usize(wg.graph.n());
        let w = from_usize(max_clique(&wg.graph).unwrap().value);
        let two = rat(2, 1);
        let lower: Rational = num_traits::pow(&b - &alpha * &two, 2) * &big_n;
        let upper: Rational = num_traits::pow(&b + &alpha * &two, 2) * &big_n;
        assert!(lower <= w && w <= upper, "n={n} omega={omega}: {lower} <= {w} <= {upper}");
    }
}

#[test]
fn selection_examples() {
    let one = rat(1, 1);
    let half = rat(1, 2);
    let p = select_amplification_params(&one, &half, &rat(4, 5), &FamilyRequest::Complete, None).unwrap();
    assert_eq!(p.epsilon, rat(1, 16));
    assert_eq!(p.alpha_target, rat(1, 32));
    assert_eq!(p.t, 1);
    assert!(p.b_r() <= p.a_r() * rat(4, 5));
    let p2 = select_amplification_params(&one, &half, &rat(2, 5), &FamilyRequest::Complete, None).unwrap();
    // (no/yes)^2 > 2/5 but the cube is below it
    let ratio = p2.no_base() / p2.yes_base();
    assert!(num_traits::pow(ratio.clone(), 2) > rat(2, 5));
    assert!(num_traits::pow(ratio, 3) <= rat(2, 5));
    assert_eq!(p2.t, 3);
    assert!(select_amplification_params(&half, &half, &rat(4, 5), &FamilyRequest::Complete, None).is_err());
    assert!(select_amplification_params(&one, &half, &rat(3, 2), &FamilyRequest::Complete, None).is_err());
}

#[test]
fn amplify_bounds_on_desk_instances() {
    let one = rat(1, 1);
    let half = rat(1, 2);
    let mut r = rng(35);
    for ratio in [rat(4, 5), rat(1, 2)] {
        let params = select_amplification_params(&one, &half, &ratio, &FamilyRequest::Complete, Some(12)).unwrap();
        assert!(params.t <= 2);
        // planted: K_12 has ω = n, the a = 1 case
        let yes = Graph::complete(12);
        let out = amplify_gap(&yes, &params).unwrap();
        assert_eq!(out.vertex_count(), out.padded_n * params.expander.degree().unwrap().pow(params.t - 1));
        let w = gapkit::oracles::max_clique_with_cap(&out.product.graph, 5000).unwrap().value;
        let check = out.check_bounds(&params, 12, w);
        assert!(check.lower_applies && check.ok());

        // triangle-free input: ω <= 2 <= n/2
        let no = Graph::from_fn(12, |u, v| (u + v) % 2 == 1 && r.gen_bool(0.5));
        let omega = max_clique(&no).unwrap().value;
        assert!(omega <= 2);
        let out = amplify_gap(&no, &params).unwrap();
        let w = gapkit::oracles::max_clique_with_cap(&out.product.graph, 5000).unwrap().value;
        let check = out.check_bounds(&params, omega, w);
        assert!(check.upper_applies && check.ok());
    }
}

#[test]
fn amplify_empty_graph() {
    let params =
        select_amplification_params(&rat(1, 1), &rat(1, 2), &rat(4, 5), &FamilyRequest::Complete, Some(12)).unwrap();
    let out = amplify_gap(&Graph::empty(12), &params).unwrap();
    let w = max_clique(&out.product.graph).unwrap().value;
    assert_eq!(w, 1);
    assert!(from_usize(w) <= &out.b_r * from_usize(out.vertex_count()));
}
