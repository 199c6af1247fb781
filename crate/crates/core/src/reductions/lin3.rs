//! MAX-3LIN to vertex cover (one vertex per satisfying local assignment)
//! and vertex cover to MinSAT (one variable per edge, one clause per vertex).

use super::ReductionError;
use crate::instances::{CnfFormula, Graph, LinSystem, Lit};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalAssignment {
    pub equation: usize,
    pub vars: [usize; 3],
    pub values: [bool; 3],
}

impl LocalAssignment {
    fn conflicts(&self, other: &LocalAssignment) -> bool {
        self.vars.iter().zip(&self.values).any(|(v, x)| {
            other.vars.iter().zip(&other.values).any(|(w, y)| v == w && x != y)
        })
    }
}

#[derive(Clone, Debug)]
pub struct VcReduction {
    pub graph: Graph,
    pub payload: Vec<LocalAssignment>,
}

/// Exactly four vertices per equation, joined when they disagree on a
/// shared variable. Each equation's quadruple is a clique, and the
/// independence number equals the maximum number of simultaneously
/// satisfiable equations.
pub fn lin3_to_vc(sys: &LinSystem) -> VcReduction {
    let payload: Vec<LocalAssignment> = sys
        .equations()
        .iter()
        .enumerate()
        .flat_map(|(equation, eq)| {
            eq.satisfying_local().into_iter().map(move |values| LocalAssignment {
                equation,
                vars: eq.vars,
                values,
            })
        })
        .collect();
    let graph = Graph::from_fn(payload.len(), |u, v| payload[u].conflicts(&payload[v]));
    VcReduction { graph, payload }
}

#[derive(Clone, Debug)]
pub struct MinSatReduction {
    pub formula: CnfFormula,
    /// Edge `(u, v)`, `u < v`, behind each variable.
    pub edge_of_var: Vec<(usize, usize)>,
    /// Clause `i` belongs to vertex `i`.
    pub clause_of_vertex: Vec<usize>,
}

/// Variable `x_uv` (for edge `u < v`) occurs positively in `c_u` and
/// negatively in `c_v`. The minimum number of satisfiable clauses equals the
/// minimum vertex cover.
pub fn vc_to_minsat(g: &Graph) -> Result<MinSatReduction, ReductionError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(ReductionError::IsolatedVertex(v));
    }
    let edges = g.edges();
    let mut clauses: Vec<Vec<Lit>> = vec![Vec::new(); g.n()];
    for (var, &(u, v)) in edges.iter().enumerate() {
        clauses[u].push(Lit::pos(var));
        clauses[v].push(Lit::neg(var));
    }
    let formula = CnfFormula::new(edges.len(), clauses)?;
    Ok(MinSatReduction { formula, edge_of_var: edges, clause_of_vertex: (0..g.n()).collect() })
}
