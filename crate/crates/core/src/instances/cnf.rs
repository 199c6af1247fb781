use super::InstanceError;
use serde::{Deserialize, Serialize};

/// A literal: variable index plus polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    pub fn eval(&self, a: &Assignment) -> bool {
        a.get(self.var) == self.positive
    }

    /// DIMACS signed form, 1-indexed.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// Truth values, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn all_false(len: usize) -> Self {
        Self(vec![false; len])
    }

    /// Variable `i` is bit `len - 1 - i` of `mask`, so increasing masks
    /// enumerate assignments in lexicographic order (false < true).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        Self((0..len).map(|i| mask >> (len - 1 - i) & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn true_vars(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }
}

/// Anything whose constraints can be counted under an assignment.
pub trait Constraints {
    fn var_count(&self) -> usize;
    fn constraint_count(&self) -> usize;
    fn satisfies(&self, index: usize, a: &Assignment) -> bool;

    fn count_satisfied(&self, a: &Assignment) -> Result<usize, InstanceError> {
        if a.len() != self.var_count() {
            return Err(InstanceError::AssignmentLength {
                expected: self.var_count(),
                found: a.len(),
            });
        }
        Ok((0..self.constraint_count()).filter(|&i| self.satisfies(i, a)).count())
    }
}

/// CNF formula. Clause order is significant (clause grouping is positional).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Vec<Lit>>) -> Result<Self, InstanceError> {
        for (index, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(InstanceError::EmptyClause(index));
            }
            for (j, lit) in clause.iter().enumerate() {
                if lit.var >= var_count {
                    return Err(InstanceError::VariableOutOfRange { var: lit.var, var_count });
                }
                if clause[..j].iter().any(|l| l.var == lit.var) {
                    return Err(InstanceError::RepeatedVariable { index, var: lit.var });
                }
            }
        }
        Ok(Self { var_count, clauses })
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Sum of clause lengths.
    pub fn size(&self) -> usize {
        self.clauses.iter().map(Vec::len).sum()
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn clause_satisfied(&self, index: usize, a: &Assignment) -> bool {
        self.clauses[index].iter().any(|l| l.eval(a))
    }
}

impl Constraints for CnfFormula {
    fn var_count(&self) -> usize {
        self.var_count
    }

    fn constraint_count(&self) -> usize {
        self.clauses.len()
    }

    fn satisfies(&self, index: usize, a: &Assignment) -> bool {
        self.clause_satisfied(index, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause_count() {
        let f = CnfFormula::new(2, vec![vec![Lit::pos(0), Lit::neg(1)]]).unwrap();
        assert_eq!(f.count_satisfied(&Assignment(vec![true, false])).unwrap(), 1);
        assert_eq!(f.count_satisfied(&Assignment(vec![true, true])).unwrap(), 1);
        assert_eq!(f.count_satisfied(&Assignment(vec![false, true])).unwrap(), 0);
    }

    #[test]
    fn length_mismatch() {
        let f = CnfFormula::new(2, vec![vec![Lit::pos(0)]]).unwrap();
        assert_eq!(
            f.count_satisfied(&Assignment(vec![true])),
            Err(InstanceError::AssignmentLength { expected: 2, found: 1 })
        );
    }

    #[test]
    fn validation() {
        assert_eq!(CnfFormula::new(1, vec![vec![]]), Err(InstanceError::EmptyClause(0)));
        assert_eq!(
            CnfFormula::new(2, vec![vec![Lit::pos(1), Lit::neg(1)]]),
            Err(InstanceError::RepeatedVariable { index: 0, var: 1 })
        );
        assert_eq!(
            CnfFormula::new(1, vec![vec![Lit::pos(1)]]),
            Err(InstanceError::VariableOutOfRange { var: 1, var_count: 1 })
        );
    }

    #[test]
    fn mask_order_is_lexicographic() {
        let all: Vec<_> = (0..8).map(|m| Assignment::from_mask(3, m)).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[1], Assignment(vec![false, false, true]));
    }
}
