//! Combinatorial configurations.
//!
//! An [`IncidenceStructure`] is a triple (points, blocks, flags) where the
//! flags are the incident (point, block) pairs. Points and blocks live in
//! separate index namespaces, so the two sets are disjoint by construction.
//! Everything in this module is purely combinatorial; geometric
//! realizations live in [`crate::constructions`].

mod biclique;
mod catalog;
mod isomorphism;
mod levi;
mod surgery;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use biclique::{four_cycles, PropertyReport};
pub use catalog::{catalog, catalog_names, miquel_cascade_flag};
pub use levi::{Colour, Girth, LeviGraph};
pub use surgery::{cyclic_cascade, disjoint_union, incidence_switch};

/// An incident (point, block) pair.
pub type Flag = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("flag ({point}, {block}) references point {point} but only {num_points} points exist")]
    PointOutOfRange {
        point: usize,
        block: usize,
        num_points: usize,
    },
    #[error("flag ({point}, {block}) references block {block} but only {num_blocks} blocks exist")]
    BlockOutOfRange {
        point: usize,
        block: usize,
        num_blocks: usize,
    },
    #[error("duplicate flag ({0}, {1})")]
    DuplicateFlag(usize, usize),
    #[error("invalid incidence switch between {f1:?} and {f2:?}: {reason}")]
    InvalidSwitch { f1: Flag, f2: Flag, reason: &'static str },
    #[error("cascade over {parts} parts needs {expected} flags, got {got}")]
    CascadeSpec { parts: usize, expected: usize, got: usize },
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
}

/// Incidence structure C = (P, B, I) with precomputed degree tables.
#[derive(Debug, Clone)]
pub struct IncidenceStructure {
    num_points: usize,
    num_blocks: usize,
    flags: BTreeSet<Flag>,
    point_blocks: Vec<Vec<usize>>,
    block_points: Vec<Vec<usize>>,
    name: Option<String>,
}

impl PartialEq for IncidenceStructure {
    fn eq(&self, other: &Self) -> bool {
        self.num_points == other.num_points && self.num_blocks == other.num_blocks && self.flags == other.flags
    }
}

impl Eq for IncidenceStructure {}

impl IncidenceStructure {
    /// Builds a structure, silently dropping repeated flags.
    pub fn new(
        num_points: usize,
        num_blocks: usize,
        flags: impl IntoIterator<Item = Flag>,
    ) -> Result<Self, IncidenceError> {
        Self::build(num_points, num_blocks, flags, false)
    }

    /// Like [`IncidenceStructure::new`] but rejects repeated flags.
    pub fn new_strict(
        num_points: usize,
        num_blocks: usize,
        flags: impl IntoIterator<Item = Flag>,
    ) -> Result<Self, IncidenceError> {
        Self::build(num_points, num_blocks, flags, true)
    }

    fn build(
        num_points: usize,
        num_blocks: usize,
        flags: impl IntoIterator<Item = Flag>,
        strict: bool,
    ) -> Result<Self, IncidenceError> {
        let mut set = BTreeSet::new();
        for (point, block) in flags {
            if point >= num_points {
                return Err(IncidenceError::PointOutOfRange {
                    point,
                    block,
                    num_points,
                });
            }
            if block >= num_blocks {
                return Err(IncidenceError::BlockOutOfRange {
                    point,
                    block,
                    num_blocks,
                });
            }
            if !set.insert((point, block)) && strict {
                return Err(IncidenceError::DuplicateFlag(point, block));
            }
        }
        Ok(Self::from_flag_set(num_points, num_blocks, set))
    }

    pub(crate) fn from_flag_set(num_points: usize, num_blocks: usize, flags: BTreeSet<Flag>) -> Self {
        let mut point_blocks = vec![Vec::new(); num_points];
        let mut block_points = vec![Vec::new(); num_blocks];
        for &(p, b) in &flags {
            point_blocks[p].push(b);
            block_points[b].push(p);
        }
        for list in &mut block_points {
            list.sort_unstable();
        }
        Self {
            num_points,
            num_blocks,
            flags,
            point_blocks,
            block_points,
            name: None,
        }
    }

    pub fn empty() -> Self {
        Self::from_flag_set(0, 0, BTreeSet::new())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn num_flags(&self) -> usize {
        self.flags.len()
    }

    /// Flags in (point, block) lexicographic order.
    pub fn flags(&self) -> impl Iterator<Item = Flag> + '_ {
        self.flags.iter().copied()
    }

    pub fn contains(&self, point: usize, block: usize) -> bool {
        self.flags.contains(&(point, block))
    }

    /// Sorted blocks through `point`.
    pub fn blocks_of(&self, point: usize) -> &[usize] {
        &self.point_blocks[point]
    }

    /// Sorted points on `block`.
    pub fn points_of(&self, block: usize) -> &[usize] {
        &self.block_points[block]
    }

    pub fn point_degrees(&self) -> Vec<usize> {
        self.point_blocks.iter().map(Vec::len).collect()
    }

    pub fn block_degrees(&self) -> Vec<usize> {
        self.block_points.iter().map(Vec::len).collect()
    }

    /// The dual structure (B, P, I*): points and blocks trade places.
    pub fn dual(&self) -> Self {
        let flags = self.flags.iter().map(|&(p, b)| (b, p)).collect();
        let mut d = Self::from_flag_set(self.num_blocks, self.num_points, flags);
        d.name = self.name.as_ref().map(|n| format!("dual({n})"));
        d
    }

    pub fn signature(&self) -> Signature {
        Signature {
            points: self.num_points,
            point_degree: Degree::of(self.point_blocks.iter().map(Vec::len)),
            blocks: self.num_blocks,
            block_degree: Degree::of(self.block_points.iter().map(Vec::len)),
        }
    }

    pub fn levi_graph(&self) -> LeviGraph {
        LeviGraph::from_structure(self)
    }

    /// Returns the structure with points and blocks renumbered:
    /// old point `i` becomes `point_perm[i]`, old block `j` becomes `block_perm[j]`.
    pub fn relabel(&self, point_perm: &[usize], block_perm: &[usize]) -> Self {
        assert_eq!(point_perm.len(), self.num_points);
        assert_eq!(block_perm.len(), self.num_blocks);
        let flags = self
            .flags
            .iter()
            .map(|&(p, b)| (point_perm[p], block_perm[b]))
            .collect();
        Self::from_flag_set(self.num_points, self.num_blocks, flags)
    }
}

/// Common point or block degree, if there is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Degree {
    Regular(usize),
    Irregular,
}

impl Degree {
    fn of(mut degrees: impl Iterator<Item = usize>) -> Self {
        match degrees.next() {
            None => Degree::Regular(0),
            Some(first) => {
                if degrees.all(|d| d == first) {
                    Degree::Regular(first)
                } else {
                    Degree::Irregular
                }
            }
        }
    }

    pub fn regular(self) -> Option<usize> {
        match self {
            Degree::Regular(d) => Some(d),
            Degree::Irregular => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Regular(d) => write!(f, "{d}"),
            Degree::Irregular => f.write_str("*"),
        }
    }
}

/// Configuration type (p_q, n_k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub points: usize,
    pub point_degree: Degree,
    pub blocks: usize,
    pub block_degree: Degree,
}

impl Signature {
    pub fn regular(points: usize, q: usize, blocks: usize, k: usize) -> Self {
        Self {
            points,
            point_degree: Degree::Regular(q),
            blocks,
            block_degree: Degree::Regular(k),
        }
    }

    /// Balanced (p_q) signature.
    pub fn balanced(points: usize, q: usize) -> Self {
        Self::regular(points, q, points, q)
    }

    pub fn is_balanced(&self) -> bool {
        self.points == self.blocks && self.point_degree == self.block_degree
    }

    pub fn is_regular(&self) -> bool {
        self.point_degree != Degree::Irregular && self.block_degree != Degree::Irregular
    }
}

impl fmt::Display for Signature {
    /// `(16_3,12_4)`, or `(32_6)` when balanced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_balanced() {
            write!(f, "({}_{})", self.points, self.point_degree)
        } else {
            write!(
                f,
                "({}_{},{}_{})",
                self.points, self.point_degree, self.blocks, self.block_degree
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_structure() {
        let c = IncidenceStructure::new(0, 0, []).unwrap();
        assert_eq!(c, IncidenceStructure::empty());
        assert_eq!(c.num_flags(), 0);
        assert_eq!(c.dual(), c);
        assert_eq!(c.levi_graph().num_vertices(), 0);
    }

    #[test]
    fn out_of_range_flag_is_rejected() {
        let err = IncidenceStructure::new(8, 6, [(9, 0)]).unwrap_err();
        assert!(matches!(err, IncidenceError::PointOutOfRange { point: 9, .. }));
        let err = IncidenceStructure::new(8, 6, [(0, 6)]).unwrap_err();
        assert!(matches!(err, IncidenceError::BlockOutOfRange { block: 6, .. }));
    }

    #[test]
    fn duplicates_collapse_unless_strict() {
        let c = IncidenceStructure::new(2, 1, [(0, 0), (0, 0), (1, 0)]).unwrap();
        assert_eq!(c.num_flags(), 2);
        let err = IncidenceStructure::new_strict(2, 1, [(0, 0), (0, 0)]).unwrap_err();
        assert_eq!(err, IncidenceError::DuplicateFlag(0, 0));
    }

    #[test]
    fn single_flag_signature() {
        let c = IncidenceStructure::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(c.signature(), Signature::balanced(1, 1));
        assert_eq!(c.signature().to_string(), "(1_1)");
    }

    #[test]
    fn cube_vertex_face_counts() {
        let c = catalog("miquel").unwrap();
        assert_eq!(c.num_flags(), 24);
        assert_eq!(c.signature(), Signature::regular(8, 3, 6, 4));
        assert_eq!(c.signature().to_string(), "(8_3,6_4)");
        assert_eq!(c.dual().signature(), Signature::regular(6, 4, 8, 3));
    }

    #[test]
    fn irregular_degrees_are_marked() {
        let c = IncidenceStructure::new(3, 2, [(0, 0), (1, 0), (2, 0), (0, 1)]).unwrap();
        let s = c.signature();
        assert_eq!(s.point_degree, Degree::Irregular);
        assert_eq!(s.block_degree, Degree::Irregular);
        assert!(!s.is_regular());
        assert_eq!(s.to_string(), "(3_*,2_*)");
    }

    #[test]
    fn dual_is_an_involution_on_catalog() {
        for name in catalog_names() {
            let c = catalog(name).unwrap();
            assert_eq!(c.dual().dual(), c, "{name}");
        }
    }
}
