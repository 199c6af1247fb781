//! Exhaustive reference computations, deliberately naive.

use gapkit::instances::{Assignment, CnfFormula, Graph, LinSystem};

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn pairwise(g: &Graph, s: &[usize], edge: bool) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v) == edge))
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| pairwise(g, s, false)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn omega(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| pairwise(g, s, true)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn gamma(g: &Graph) -> usize {
    let n = g.n();
    subsets(n)
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v))))
        .map(|s| s.len())
        .min()
        .unwrap_or(0)
}

/// Two-colouring by depth-first search.
pub fn bipartite(g: &Graph, s: &[usize]) -> bool {
    let mut colour = vec![None; g.n()];
    for &root in s {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let cu = colour[u].expect("coloured before push");
            for &v in s {
                if u == v || !g.has_edge(u, v) {
                    continue;
                }
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn mibs(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| bipartite(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn assignments(vars: usize) -> impl Iterator<Item = Assignment> {
    (0..1u64 << vars).map(move |m| Assignment((0..vars).map(|i| m >> i & 1 == 1).collect()))
}

pub fn clauses_satisfied(f: &CnfFormula, a: &Assignment) -> usize {
    f.clauses().iter().filter(|c| c.iter().any(|l| a.0[l.var] == l.positive)).count()
}

pub fn equations_satisfied(sys: &LinSystem, a: &Assignment) -> usize {
    sys.equations().iter().filter(|e| (a.0[e.vars[0]] ^ a.0[e.vars[1]] ^ a.0[e.vars[2]]) == e.rhs).count()
}
