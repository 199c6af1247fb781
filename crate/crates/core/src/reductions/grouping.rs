//! Clause grouping: MAX-3SAT to independent set in a clique-partitioned
//! graph, plus the satisfied-clause bound in terms of threshold groups.

use super::ReductionError;
use crate::instances::{Assignment, CliquePartitionedGraph, CnfFormula, Constraints, Graph};
use crate::rational::{self, from_usize, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use std::ops::Range;

pub const GROUP_VARIABLE_CAP: usize = 20;

/// `K` contiguous, balanced clause groups and the threshold parameter `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupingParams {
    k: usize,
    lambda: Rational,
    m: usize,
    groups: Vec<Range<usize>>,
}

impl GroupingParams {
    /// The first `m mod K` groups get `⌈m/K⌉` clauses, the rest `⌊m/K⌋`.
    pub fn new(m: usize, k: usize, lambda: Rational) -> Result<Self, ReductionError> {
        if k == 0 || k > m {
            return Err(ReductionError::BadGroupCount { k, m });
        }
        if lambda <= Rational::zero() || lambda > Rational::one() {
            return Err(ReductionError::BadLambda(rational::format_rational(&lambda)));
        }
        let (q, extra) = (m / k, m % k);
        let mut groups = Vec::with_capacity(k);
        let mut start = 0;
        for i in 0..k {
            let len = q + usize::from(i < extra);
            groups.push(start..start + len);
            start += len;
        }
        Ok(Self { k, lambda, m, groups })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn groups(&self) -> &[Range<usize>] {
        &self.groups
    }

    /// `λ m / K`, the per-group threshold.
    pub fn threshold(&self) -> Rational {
        &self.lambda * from_usize(self.m) / from_usize(self.k)
    }

    pub fn meets_threshold(&self, satisfied: usize) -> bool {
        from_usize(satisfied) >= self.threshold()
    }

    /// Clauses of group `i` satisfied by a full assignment.
    pub fn group_satisfied(&self, f: &CnfFormula, group: usize, a: &Assignment) -> usize {
        self.groups[group].clone().filter(|&c| f.clause_satisfied(c, a)).count()
    }

    /// Groups meeting the threshold under `a`.
    pub fn threshold_groups(&self, f: &CnfFormula, a: &Assignment) -> usize {
        (0..self.k).filter(|&g| self.meets_threshold(self.group_satisfied(f, g, a))).count()
    }
}

/// Values for the variables of one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialAssignment {
    pub group: usize,
    pub vars: Vec<usize>,
    pub values: Vec<bool>,
}

impl PartialAssignment {
    pub fn conflicts(&self, other: &PartialAssignment) -> bool {
        // both var lists are sorted
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].cmp(&other.vars[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if self.values[i] != other.values[j] {
                        return true;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        false
    }
}

#[derive(Clone, Debug)]
pub struct GroupedGraph {
    pub partitioned: CliquePartitionedGraph,
    /// Partial assignment behind each vertex.
    pub payload: Vec<PartialAssignment>,
}

/// One vertex per local assignment of a group's variables that satisfies at
/// least `λm/K` of its clauses; edges join contradicting local assignments.
pub fn max3sat_to_is(f: &CnfFormula, params: &GroupingParams) -> Result<GroupedGraph, ReductionError> {
    if params.m != f.clause_count() {
        return Err(ReductionError::BadGroupCount { k: params.k, m: f.clause_count() });
    }
    if let Some((clause, c)) = f.clauses().iter().enumerate().find(|(_, c)| c.len() > 3) {
        return Err(ReductionError::ClauseTooLong { clause, len: c.len() });
    }
    let mut payload: Vec<PartialAssignment> = Vec::new();
    let mut blocks = Vec::with_capacity(params.k);
    for (group, range) in params.groups.iter().enumerate() {
        let mut vars: Vec<usize> = range.clone().flat_map(|c| f.clauses()[c].iter().map(|l| l.var)).collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() > GROUP_VARIABLE_CAP {
            return Err(ReductionError::GroupTooLarge { group, vars: vars.len(), cap: GROUP_VARIABLE_CAP });
        }
        let mut position = vec![usize::MAX; f.var_count()];
        for (i, &v) in vars.iter().enumerate() {
            position[v] = i;
        }
        let mut block = Vec::new();
        for mask in 0..1u64 << vars.len() {
            let local = Assignment::from_mask(vars.len(), mask);
            let satisfied = range
                .clone()
                .filter(|&c| {
                    f.clauses()[c].iter().any(|l| local.get(position[l.var]) == l.positive)
                })
                .count();
            if params.meets_threshold(satisfied) {
                block.push(payload.len());
                payload.push(PartialAssignment { group, vars: vars.clone(), values: local.0 });
            }
        }
        blocks.push(block);
    }
    let graph = Graph::from_fn(payload.len(), |u, v| payload[u].conflicts(&payload[v]));
    let partitioned = CliquePartitionedGraph::new(graph, blocks)?;
    Ok(GroupedGraph { partitioned, payload })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupingVerdict {
    pub satisfied: usize,
    /// Groups in which the assignment meets the threshold.
    pub s: usize,
    /// `λm + s(1-λ)m/K`.
    #[serde(with = "crate::rational::serde_rational")]
    pub bound: Rational,
    pub holds: bool,
    /// Whether `K` divides `m`. The bound is only guaranteed in that case:
    /// with unequal groups a threshold-meeting group may hold more than
    /// `m/K` clauses.
    pub equal_groups: bool,
}

pub fn check_grouping_bound(
    f: &CnfFormula,
    params: &GroupingParams,
    a: &Assignment,
) -> Result<GroupingVerdict, ReductionError> {
    let satisfied = f.count_satisfied(a)?;
    let s = params.threshold_groups(f, a);
    let m = from_usize(params.m);
    let k = from_usize(params.k);
    let lambda = &params.lambda;
    let bound = lambda * &m + from_usize(s) * (Rational::one() - lambda) * &m / k;
    let holds = from_usize(satisfied) <= bound;
    let equal_groups = params.m.is_multiple_of(params.k);
    Ok(GroupingVerdict { satisfied, s, bound, holds, equal_groups })
}
