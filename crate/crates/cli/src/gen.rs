//! Seeded random instance generators for the verification suites.

use gapkit::instances::{CliquePartitionedGraph, CnfFormula, Graph, LinEquation, LinSystem, Lit, SetCoverInstance};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Random subgraph of a random balanced bipartition, hence triangle-free.
pub fn triangle_free(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Graph::from_fn(n, |u, v| side[u] != side[v] && rng.gen_bool(p))
}

pub fn cnf(rng: &mut impl Rng, vars: usize, m: usize, max_len: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.min(vars));
            let mut pool: Vec<usize> = (0..vars).collect();
            pool.shuffle(rng);
            pool[..len].iter().map(|&var| Lit { var, positive: rng.gen_bool(0.5) }).collect()
        })
        .collect();
    CnfFormula::new(vars, clauses).expect("generator respects the invariants")
}

pub fn lin3(rng: &mut impl Rng, vars: usize, m: usize) -> LinSystem {
    let equations = (0..m)
        .map(|_| {
            let mut pool: Vec<usize> = (0..vars).collect();
            pool.shuffle(rng);
            LinEquation { vars: [pool[0], pool[1], pool[2]], rhs: rng.gen_bool(0.5) }
        })
        .collect();
    LinSystem::new(vars, equations).expect("generator respects the invariants")
}

pub fn set_cover(rng: &mut impl Rng, ground: usize, sets: usize, p: f64) -> SetCoverInstance {
    let sets = (0..sets).map(|_| (0..ground).filter(|_| rng.gen_bool(p)).collect()).collect();
    SetCoverInstance::new(ground, sets).expect("elements are in range")
}

/// `k` consecutive cliques of size `1..=max_block`, cross edges at rate `p`.
pub fn partitioned(rng: &mut impl Rng, k: usize, max_block: usize, p: f64) -> CliquePartitionedGraph {
    let mut blocks = Vec::with_capacity(k);
    let mut next = 0;
    for _ in 0..k {
        let size = rng.gen_range(1..=max_block);
        blocks.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let mut block_of = vec![0; next];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let g = Graph::from_fn(next, |u, v| block_of[u] == block_of[v] || rng.gen_bool(p));
    CliquePartitionedGraph::new(g, blocks).expect("blocks are cliques by construction")
}
