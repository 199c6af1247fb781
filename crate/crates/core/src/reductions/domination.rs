//! Independent set in a `K`-clique-partitioned graph to dominating set:
//! `G` has an independent set of size `α` iff the gadget has a dominating
//! set of size `2K - α`.
//!
//! Vertex layout of the gadget: copies of the original vertices keep their
//! indices `0..n`, then the sentinels `t_1..t_K`, then the guard sets
//! `S_1..S_K` (`3K` each), then one `W_e` of size `3K` per cross-block edge
//! in lexicographic edge order.

use super::ReductionError;
use crate::instances::{CliquePartitionedGraph, Graph, SetCoverInstance};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum GadgetRole {
    CliqueCopy { block: usize, vertex: usize },
    Sentinel { block: usize },
    Guard { block: usize },
    EdgeGuard { u: usize, v: usize },
}

#[derive(Clone, Debug)]
pub struct DsGadget {
    pub graph: Graph,
    pub roles: Vec<GadgetRole>,
    pub k: usize,
    source: CliquePartitionedGraph,
}

impl DsGadget {
    pub fn source(&self) -> &CliquePartitionedGraph {
        &self.source
    }

    pub fn sentinel(&self, block: usize) -> usize {
        self.source.graph().n() + block
    }
}

pub fn is_to_ds(g: &CliquePartitionedGraph) -> Result<DsGadget, ReductionError> {
    if let Some(b) = g.blocks().iter().position(Vec::is_empty) {
        return Err(ReductionError::EmptyBlock(b));
    }
    let base = g.graph();
    let n = base.n();
    let k = g.k();
    let guard = 3 * k;
    let cross: Vec<(usize, usize)> =
        base.edges().into_iter().filter(|&(u, v)| g.block_of(u) != g.block_of(v)).collect();

    let mut roles: Vec<GadgetRole> =
        (0..n).map(|v| GadgetRole::CliqueCopy { block: g.block_of(v), vertex: v }).collect();
    roles.extend((0..k).map(|block| GadgetRole::Sentinel { block }));
    for block in 0..k {
        roles.extend(std::iter::repeat_n(GadgetRole::Guard { block }, guard));
    }
    for &(u, v) in &cross {
        roles.extend(std::iter::repeat_n(GadgetRole::EdgeGuard { u, v }, guard));
    }

    let mut edges = Vec::new();
    for block in g.blocks() {
        for (i, &u) in block.iter().enumerate() {
            edges.extend(block[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    let sentinel = |b: usize| n + b;
    for (b, block) in g.blocks().iter().enumerate() {
        edges.extend(block.iter().map(|&u| (u, sentinel(b))));
        let first = n + k + b * guard;
        for s in first..first + guard {
            edges.extend(block.iter().map(|&u| (u, s)));
        }
    }
    let mut next = n + k + k * guard;
    for &(u, v) in &cross {
        let (bu, bv) = (g.block_of(u), g.block_of(v));
        for w in next..next + guard {
            edges.push((w, sentinel(bu)));
            edges.push((w, sentinel(bv)));
            edges.extend(g.blocks()[bu].iter().filter(|&&x| x != u).map(|&x| (w, x)));
            edges.extend(g.blocks()[bv].iter().filter(|&&x| x != v).map(|&x| (w, x)));
        }
        next += guard;
    }
    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(DsGadget { graph, roles, k, source: g.clone() })
}

/// Copies of `S`, plus `t_i` and the lowest-index vertex of every block
/// that `S` misses. Size `2K - |S|`.
pub fn is_witness_to_ds_witness(gadget: &DsGadget, s: &[usize]) -> Result<Vec<usize>, ReductionError> {
    let src = gadget.source.graph();
    if let Some(&v) = s.iter().find(|&&v| v >= src.n()) {
        return Err(ReductionError::WitnessOutOfRange(v));
    }
    if !src.is_independent(s) {
        return Err(ReductionError::NotIndependent);
    }
    let mut hit = vec![false; gadget.k];
    for &v in s {
        hit[gadget.source.block_of(v)] = true;
    }
    let mut t: Vec<usize> = s.to_vec();
    for (b, block) in gadget.source.blocks().iter().enumerate() {
        if !hit[b] {
            t.push(gadget.sentinel(b));
            t.push(*block.iter().min().expect("blocks are non-empty"));
        }
    }
    t.sort_unstable();
    if t.len() != 2 * gadget.k - s.len() || !gadget.graph.is_dominating(&t) {
        return Err(ReductionError::Verification("translated set does not dominate the gadget"));
    }
    Ok(t)
}

/// Normalises a dominating set of the gadget and reads off an independent
/// set of size at least `2K - |T|`.
///
/// Guard members are dropped (a guard set has more members than `T`, so some
/// unpicked guard forces a clique vertex into `T`, which then dominates
/// whatever the dropped guard covered). Extra clique vertices in one block
/// are traded for that block's sentinel.
pub fn ds_witness_to_is_witness(gadget: &DsGadget, t: &[usize]) -> Result<Vec<usize>, ReductionError> {
    let g = &gadget.graph;
    if let Some(&v) = t.iter().find(|&&v| v >= g.n()) {
        return Err(ReductionError::WitnessOutOfRange(v));
    }
    if !g.is_dominating(t) {
        return Err(ReductionError::NotDominating);
    }
    let k = gadget.k;
    if t.len() >= 3 * k {
        // the bound 2K - |T| is non-positive
        return Ok(Vec::new());
    }
    let mut chosen: Vec<Option<usize>> = vec![None; k];
    let mut sentinels = vec![false; k];
    for &v in t {
        match gadget.roles[v] {
            GadgetRole::CliqueCopy { block, vertex } => match chosen[block] {
                None => chosen[block] = Some(vertex),
                Some(kept) if vertex < kept => {
                    chosen[block] = Some(vertex);
                    sentinels[block] = true;
                }
                Some(_) => sentinels[block] = true,
            },
            GadgetRole::Sentinel { block } => sentinels[block] = true,
            GadgetRole::Guard { .. } | GadgetRole::EdgeGuard { .. } => {}
        }
    }
    let normalized: Vec<usize> = chosen
        .iter()
        .flatten()
        .copied()
        .chain((0..k).filter(|&b| sentinels[b]).map(|b| gadget.sentinel(b)))
        .collect();
    if chosen.iter().any(Option::is_none) || !g.is_dominating(&normalized) {
        return Err(ReductionError::Verification("normalized set does not dominate the gadget"));
    }
    let mut s: Vec<usize> =
        (0..k).filter(|&b| !sentinels[b]).map(|b| chosen[b].expect("checked above")).collect();
    s.sort_unstable();
    let src = gadget.source.graph();
    if !src.is_independent(&s) || s.len() + t.len() < 2 * k {
        return Err(ReductionError::Verification("read-off set is not a large enough independent set"));
    }
    Ok(s)
}

/// Set `i` is the closed neighbourhood of vertex `i`.
pub fn ds_to_setcover(g: &Graph) -> SetCoverInstance {
    let sets = (0..g.n()).map(|v| g.closed_neighborhood(v).to_vec()).collect();
    SetCoverInstance::new(g.n(), sets).expect("closed neighbourhoods stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{max_independent_set, min_dominating_set_bounded};

    fn worked() -> CliquePartitionedGraph {
        // blocks {a, b}, {c}; edges a-b (clique) and a-c
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        CliquePartitionedGraph::new(g, vec![vec![0, 1], vec![2]]).unwrap()
    }

    #[test]
    fn worked_example_sizes_and_gamma() {
        let gadget = is_to_ds(&worked()).unwrap();
        assert_eq!(gadget.graph.n(), 3 + 2 + 12 + 6);
        let gamma = min_dominating_set_bounded(&gadget.graph, 4).unwrap().unwrap();
        assert_eq!(gamma.value, 2);
        assert_eq!(gamma.witness, vec![1, 2]);
        let alpha = max_independent_set(worked().graph()).unwrap().value;
        assert_eq!(alpha + gamma.value, 2 * gadget.k);
    }

    #[test]
    fn single_block() {
        let p = CliquePartitionedGraph::new(Graph::empty(1), vec![vec![0]]).unwrap();
        let gadget = is_to_ds(&p).unwrap();
        assert_eq!(min_dominating_set_bounded(&gadget.graph, 2).unwrap().unwrap().value, 1);
        assert_eq!(is_witness_to_ds_witness(&gadget, &[0]).unwrap(), vec![0]);
        assert_eq!(ds_witness_to_is_witness(&gadget, &[0]).unwrap(), vec![0]);
    }

    #[test]
    fn translators_round_trip() {
        let gadget = is_to_ds(&worked()).unwrap();
        let t = is_witness_to_ds_witness(&gadget, &[1, 2]).unwrap();
        assert_eq!(t, vec![1, 2]);
        assert_eq!(ds_witness_to_is_witness(&gadget, &t).unwrap(), vec![1, 2]);
        // empty independent set: both sentinels plus one vertex per block
        let t = is_witness_to_ds_witness(&gadget, &[]).unwrap();
        assert_eq!(t, vec![0, 2, 3, 4]);
        assert!(ds_witness_to_is_witness(&gadget, &t).unwrap().is_empty());
        // a redundant dominating set with two picks in block 0 normalises
        let s = ds_witness_to_is_witness(&gadget, &[0, 1, 2]).unwrap();
        assert!(s.len() + 3 >= 4);
        assert!(matches!(is_witness_to_ds_witness(&gadget, &[0, 2]), Err(ReductionError::NotIndependent)));
        assert!(matches!(ds_witness_to_is_witness(&gadget, &[0]), Err(ReductionError::NotDominating)));
    }

    #[test]
    fn empty_block_rejected() {
        let p = CliquePartitionedGraph::new(Graph::empty(1), vec![vec![0], vec![]]).unwrap();
        assert!(matches!(is_to_ds(&p), Err(ReductionError::EmptyBlock(1))));
    }

    #[test]
    fn set_cover_shape() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let sc = ds_to_setcover(&star);
        assert_eq!(sc.sets()[0], vec![0, 1, 2, 3]);
        assert_eq!(sc.sets()[2], vec![0, 2]);
    }
}
