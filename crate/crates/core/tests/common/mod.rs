//! Seeded generators and brute-force reference solvers shared by the
//! integration tests. Nothing here calls into the library's oracles.
#![allow(dead_code)]

use gapkit::instances::{Assignment, CliquePartitionedGraph, CnfFormula, Graph, LinEquation, LinSystem, Lit};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut bit = 0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_cnf(rng: &mut impl Rng, vars: usize, m: usize, max_len: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.min(vars));
            let mut pool: Vec<usize> = (0..vars).collect();
            pool.shuffle(rng);
            pool[..len].iter().map(|&v| Lit { var: v, positive: rng.gen_bool(0.5) }).collect()
        })
        .collect();
    CnfFormula::new(vars, clauses).unwrap()
}

pub fn random_lin(rng: &mut impl Rng, vars: usize, m: usize) -> LinSystem {
    let equations = (0..m)
        .map(|_| {
            let mut pool: Vec<usize> = (0..vars).collect();
            pool.shuffle(rng);
            LinEquation { vars: [pool[0], pool[1], pool[2]], rhs: rng.gen_bool(0.5) }
        })
        .collect();
    LinSystem::new(vars, equations).unwrap()
}

/// Random graph whose vertices are cut into `k` consecutive cliques of size
/// `1..=max_block`, with cross edges drawn at probability `p`.
pub fn random_partitioned(rng: &mut impl Rng, k: usize, max_block: usize, p: f64) -> CliquePartitionedGraph {
    let mut blocks = Vec::new();
    let mut next = 0;
    for _ in 0..k {
        let size = rng.gen_range(1..=max_block);
        blocks.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let block_of: Vec<usize> = blocks.iter().enumerate().flat_map(|(i, b)| b.iter().map(move |_| i)).collect();
    let g = Graph::from_fn(next, |u, v| block_of[u] == block_of[v] || rng.gen_bool(p));
    CliquePartitionedGraph::new(g, blocks).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn pairwise(g: &Graph, s: &[usize], want_edge: bool) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v) == want_edge))
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| pairwise(g, s, false)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn brute_omega(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| pairwise(g, s, true)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn brute_gamma(g: &Graph) -> usize {
    let n = g.n();
    subsets(n)
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v))))
        .map(|s| s.len())
        .min()
        .unwrap()
}

/// Bipartite iff no odd cycle: BFS two-colouring over the induced subgraph.
pub fn brute_bipartite(g: &Graph, s: &[usize]) -> bool {
    let mut colour = vec![None; g.n()];
    for &root in s {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &v in s {
                if u != v && g.has_edge(u, v) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

pub fn brute_mibs(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| brute_bipartite(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn all_assignments(vars: usize) -> impl Iterator<Item = Assignment> {
    (0..1u64 << vars).map(move |m| Assignment((0..vars).map(|i| m >> i & 1 == 1).collect()))
}

pub fn clause_count(f: &CnfFormula, a: &Assignment) -> usize {
    f.clauses().iter().filter(|c| c.iter().any(|l| a.0[l.var] == l.positive)).count()
}

pub fn equation_count(sys: &LinSystem, a: &Assignment) -> usize {
    sys.equations().iter().filter(|e| (a.0[e.vars[0]] ^ a.0[e.vars[1]] ^ a.0[e.vars[2]]) == e.rhs).count()
}

pub fn brute_set_cover(ground: usize, sets: &[Vec<usize>]) -> Option<usize> {
    subsets(sets.len())
        .filter(|pick| (0..ground).all(|e| pick.iter().any(|&i| sets[i].contains(&e))))
        .map(|pick| pick.len())
        .min()
}
