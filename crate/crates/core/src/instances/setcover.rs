use super::{InstanceError, ParseError};
use serde::{Deserialize, Serialize};

/// Set-cover instance; JSON form `{"ground_size": n, "sets": [[...], ...]}`
/// with 0-indexed elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetCoverInstance {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self, InstanceError> {
        for set in &sets {
            if let Some(&element) = set.iter().find(|&&e| e >= ground_size) {
                return Err(InstanceError::ElementOutOfRange { element, ground_size });
            }
        }
        Ok(Self { ground_size, sets })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Whether the union of all sets is the ground set.
    pub fn is_feasible(&self) -> bool {
        let mut seen = vec![false; self.ground_size];
        for &e in self.sets.iter().flatten() {
            seen[e] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut seen = vec![false; self.ground_size];
        for &i in chosen {
            match self.sets.get(i) {
                Some(set) => set.iter().for_each(|&e| seen[e] = true),
                None => return false,
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let raw: SetCoverInstance =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        Self::new(raw.ground_size, raw.sets).map_err(|e| ParseError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
