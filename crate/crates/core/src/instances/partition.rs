use super::{Graph, InstanceError};

/// A graph together with an ordered partition of its vertices into cliques.
///
/// Blocks may be empty (the clause-grouping reduction produces an empty
/// block for a group no local assignment can satisfy), but every non-empty
/// block must induce a complete subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartitionedGraph {
    graph: Graph,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl CliquePartitionedGraph {
    pub fn new(graph: Graph, blocks: Vec<Vec<usize>>) -> Result<Self, InstanceError> {
        if blocks.is_empty() {
            return Err(InstanceError::NoBlocks);
        }
        let n = graph.n();
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(InstanceError::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(InstanceError::BlockOverlap(v));
                }
                block_of[v] = b;
            }
            for (i, &u) in block.iter().enumerate() {
                if let Some(&v) = block[i + 1..].iter().find(|&&v| !graph.has_edge(u, v)) {
                    return Err(InstanceError::NonAdjacentInBlock { block: b, u, v });
                }
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(InstanceError::Uncovered(v));
        }
        Ok(Self { graph, blocks, block_of })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, K.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }
}
