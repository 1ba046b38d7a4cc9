//! Ordered direct-sum decompositions of the ambient space.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::report::Finding;
use crate::subspace::{direct_sum_check, subspace_sum, Subspace};

/// The six split-decomposition tags plus the weight decomposition.
///
/// In a tag, the first symbol names where the dual eigenspace window starts
/// (0* = low end of the A* ordering, D* = high end) and the second where the
/// primal window starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecName {
    #[serde(rename = "[0D]")]
    ZeroD,
    #[serde(rename = "[0*D*]")]
    ZeroStarDStar,
    #[serde(rename = "[0*D]")]
    ZeroStarD,
    #[serde(rename = "[0*0]")]
    ZeroStarZero,
    #[serde(rename = "[D*0]")]
    DStarZero,
    #[serde(rename = "[D*D]")]
    DStarD,
    #[serde(rename = "weight")]
    Weight,
}

pub const SPLIT_NAMES: [DecName; 6] = [
    DecName::ZeroD,
    DecName::ZeroStarDStar,
    DecName::ZeroStarD,
    DecName::ZeroStarZero,
    DecName::DStarZero,
    DecName::DStarD,
];

impl fmt::Display for DecName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecName::ZeroD => "[0D]",
            DecName::ZeroStarDStar => "[0*D*]",
            DecName::ZeroStarD => "[0*D]",
            DecName::ZeroStarZero => "[0*0]",
            DecName::DStarZero => "[D*0]",
            DecName::DStarD => "[D*D]",
            DecName::Weight => "weight",
        };
        write!(f, "{s}")
    }
}

/// A named ordered list U_0..U_d of subspaces, with U_{-1} = U_{d+1} = 0 by
/// convention.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<T> {
    pub name: DecName,
    pub subspaces: Vec<Subspace<T>>,
}

impl<T: Field> Decomposition<T> {
    pub fn new(name: DecName, subspaces: Vec<Subspace<T>>) -> Self {
        assert!(!subspaces.is_empty());
        Decomposition { name, subspaces }
    }

    /// d, the top index.
    pub fn top(&self) -> usize {
        self.subspaces.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspaces[0].ambient_dim()
    }

    /// U_i with the out-of-range convention U_{-1} = U_{d+1} = 0.
    pub fn get(&self, i: isize) -> Subspace<T> {
        if i < 0 || i as usize >= self.subspaces.len() {
            Subspace::zero(self.ambient_dim())
        } else {
            self.subspaces[i as usize].clone()
        }
    }

    /// Sum of U_i over an index list; empty list gives the zero subspace.
    pub fn sum_of(&self, indices: impl IntoIterator<Item = isize>) -> Subspace<T> {
        let spaces: Vec<Subspace<T>> = indices
            .into_iter()
            .filter(|&i| i >= 0 && (i as usize) < self.subspaces.len())
            .map(|i| self.subspaces[i as usize].clone())
            .collect();
        if spaces.is_empty() {
            return Subspace::zero(self.ambient_dim());
        }
        let refs: Vec<&Subspace<T>> = spaces.iter().collect();
        subspace_sum(&refs)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }

    /// Checks the decomposition axioms: every subspace nonzero and the list
    /// direct-sums to the whole ambient space.
    pub fn validate(&self) -> Vec<Finding> {
        let mut findings = Vec::new();
        for (i, u) in self.subspaces.iter().enumerate() {
            if u.is_zero() {
                findings.push(Finding::new(
                    format!("decomposition {}", self.name),
                    format!("subspace {i} is zero"),
                ));
            }
        }
        let refs: Vec<&Subspace<T>> = self.subspaces.iter().collect();
        if !direct_sum_check(&refs) {
            findings.push(Finding::new(
                format!("decomposition {}", self.name),
                "subspaces do not direct-sum to the ambient space".to_string(),
            ));
        }
        findings
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{vecr, Rat};

    fn axis(ambient: usize, i: usize) -> Subspace<Rat> {
        let mut v = vec![0i64; ambient];
        v[i] = 1;
        Subspace::from_spanning(ambient, &[vecr(&v)])
    }

    #[test]
    fn out_of_range_indices_are_zero() {
        let d = Decomposition::new(DecName::ZeroD, vec![axis(2, 0), axis(2, 1)]);
        assert!(d.get(-1).is_zero());
        assert!(d.get(2).is_zero());
        assert_eq!(d.get(0), axis(2, 0));
        assert_eq!(d.top(), 1);
    }

    #[test]
    fn validate_flags_overlap_and_zero() {
        let good = Decomposition::new(DecName::ZeroD, vec![axis(2, 0), axis(2, 1)]);
        assert!(good.validate().is_empty());
        let overlap = Decomposition::new(DecName::ZeroD, vec![axis(2, 0), axis(2, 0)]);
        assert_eq!(overlap.validate().len(), 1);
        let with_zero =
            Decomposition::new(DecName::ZeroD, vec![Subspace::zero(2), axis(2, 0)]);
        assert_eq!(with_zero.validate().len(), 2);
    }

    #[test]
    fn sum_of_ranges() {
        let d = Decomposition::new(DecName::ZeroD, vec![axis(3, 0), axis(3, 1), axis(3, 2)]);
        assert_eq!(d.sum_of(0isize..=1), d.sum_of([1isize, 0]));
        assert!(d.sum_of(std::iter::empty()).is_zero());
        assert_eq!(d.sum_of(0isize..=2), Subspace::full(3));
    }
}
