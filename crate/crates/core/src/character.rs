//! Truncated characters: weight-space dimensions below a top weight.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// `dims[n]` is the dimension of the weight space `top_weight - n * step`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub top_weight: Q,
    pub step: u32,
    pub dims: Vec<u64>,
}

impl CharacterTable {
    pub fn new(top_weight: Q, step: u32, dims: Vec<u64>) -> Self {
        assert!(step == 1 || step == 2, "weight step must be 1 or 2");
        Self {
            top_weight,
            step,
            dims,
        }
    }

    pub fn depth(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, n: usize) -> u64 {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn truncate(mut self, depth: usize) -> Self {
        self.dims.truncate(depth + 1);
        self
    }

    /// Dimensions indexed by weight drop, with zeros off the native lattice.
    pub fn lattice_dims(&self) -> Vec<u64> {
        if self.step == 1 {
            return self.dims.clone();
        }
        let mut out = Vec::with_capacity(self.dims.len() * 2);
        for (i, &d) in self.dims.iter().enumerate() {
            if i > 0 {
                out.push(0);
            }
            out.push(d);
        }
        out
    }

    /// Same dimensions and step, ignoring the top weight.
    pub fn same_shape(&self, other: &CharacterTable) -> bool {
        self.step == other.step && self.dims == other.dims
    }

    /// Rewrites a step-2 table on the step-1 lattice.
    pub fn restep(&self, step: u32) -> Result<CharacterTable> {
        match (self.step, step) {
            (a, b) if a == b => Ok(self.clone()),
            (2, 1) => Ok(CharacterTable::new(self.top_weight.clone(), 1, self.lattice_dims())),
            (a, b) => Err(Error::Precondition(format!("cannot re-step a step-{a} character to step {b}"))),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("character serializes")
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CharacterTable", 3)?;
        st.serialize_field("top_weight", &fmt_q(&self.top_weight))?;
        st.serialize_field("step", &self.step)?;
        st.serialize_field("dims", &self.dims)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn json_shape() {
        let c = CharacterTable::new(qf(1, 3), 1, vec![1, 1, 2]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"top_weight":"1/3","step":1,"dims":[1,1,2]}"#
        );
    }

    #[test]
    fn lattice_projection() {
        let c = CharacterTable::new(qf(0, 1), 2, vec![1, 2, 3]);
        assert_eq!(c.lattice_dims(), vec![1, 0, 2, 0, 3]);
        assert_eq!(c.restep(1).unwrap().dims, vec![1, 0, 2, 0, 3]);
        assert!(CharacterTable::new(qf(0, 1), 1, vec![1]).restep(2).is_err());
    }
}
