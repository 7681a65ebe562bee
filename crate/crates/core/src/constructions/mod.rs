//! Builders for explicit point-conic configurations.
//!
//! Every builder returns a [`GeometricConfiguration`]: planar points,
//! normalized conics, the incidence flags between them and the tolerance
//! at which the flags hold. Randomized builders take an explicit seed and
//! are deterministic for a fixed seed.

mod carnot;
mod hexagons;
mod isometric;
mod parallelogram;
mod polytope;
mod product;
mod realize;

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{apply_affine, GeometryError};
use crate::incidence::{Flag, IncidenceError, IncidenceStructure, Signature};
use crate::{AffineMap2, Conic, PlanarPoint};

pub use carnot::{carnot_faces, dipyramid_carnot, richter_gebert, RICHTER_GEBERT_NOTE};
pub use hexagons::{cell24, cell24_hexagons, edge_degrees, pmn, pmn_hexagons, Hexagon4};
pub use isometric::{crossed_ellipses, polygon_ring, polygon_ring_default};
pub use parallelogram::{parallelogram_ellipse_pair, qcube_48};
pub use polytope::Polytope4;
pub use product::{genericize, product, product_with};
pub use realize::{random_conical_structure, realize_by_conics, realize_lineal_by_circles};

/// Default number of resampling attempts for randomized builders.
pub const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("non-generic input: {0}")]
    NonGeneric(String),
    #[error("{builder}: no generic sample found in {tries} attempts")]
    RetryBudget { builder: &'static str, tries: usize },
    #[error("input is not lineal (two points share two blocks)")]
    NotLineal,
    #[error("input contains K_{{5,2}}: blocks {0} and {1} share five points")]
    NotConical(usize, usize),
    #[error("block {block} has {size} points, expected {expected}")]
    BlockSize {
        block: usize,
        size: usize,
        expected: &'static str,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

/// Where a configuration came from.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub builder: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn new(builder: impl Into<String>) -> Self {
        Self {
            builder: builder.into(),
            ..Self::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }
}

/// Planar points and conics with their incidence flags.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricConfiguration {
    pub points: Vec<PlanarPoint>,
    pub conics: Vec<Conic>,
    /// (point index, conic index) pairs.
    pub flags: BTreeSet<Flag>,
    pub tol: f64,
    pub provenance: Provenance,
}

impl GeometricConfiguration {
    pub fn new(
        points: Vec<PlanarPoint>,
        conics: Vec<Conic>,
        flags: BTreeSet<Flag>,
        tol: f64,
        provenance: Provenance,
    ) -> Self {
        Self {
            points,
            conics,
            flags,
            tol,
            provenance,
        }
    }

    /// Flags every pair whose residual is within `tol`.
    pub fn from_residuals(points: Vec<PlanarPoint>, conics: Vec<Conic>, tol: f64, provenance: Provenance) -> Self {
        let mut flags = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            for (j, c) in conics.iter().enumerate() {
                if c.residual(p) <= tol {
                    flags.insert((i, j));
                }
            }
        }
        Self::new(points, conics, flags, tol, provenance)
    }

    pub fn empty() -> Self {
        Self::new(
            Vec::new(),
            Vec::new(),
            BTreeSet::new(),
            crate::DEFAULT_TOL,
            Provenance::new("empty"),
        )
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_conics(&self) -> usize {
        self.conics.len()
    }

    /// The underlying combinatorial configuration.
    pub fn structure(&self) -> IncidenceStructure {
        IncidenceStructure::new(self.points.len(), self.conics.len(), self.flags.iter().copied())
            .expect("flags reference existing points and conics")
            .with_name(self.provenance.builder.clone())
    }

    pub fn signature(&self) -> Signature {
        self.structure().signature()
    }

    /// Points on conic `j`, in increasing order.
    pub fn points_on(&self, j: usize) -> Vec<usize> {
        self.flags.iter().filter(|f| f.1 == j).map(|f| f.0).collect()
    }

    /// Image under an invertible affine map, flags unchanged.
    pub fn transformed(&self, m: &AffineMap2) -> Result<Self, ConstructionError> {
        let points = self.points.iter().map(|p| m.apply(p)).collect();
        let conics = self
            .conics
            .iter()
            .map(|c| apply_affine(m, c))
            .collect::<Result<_, _>>()?;
        let mut out = Self::new(points, conics, self.flags.clone(), self.tol, self.provenance.clone());
        out.provenance.notes.push("affine image".into());
        Ok(out)
    }

    pub fn max_flag_residual(&self) -> f64 {
        self.flags
            .iter()
            .map(|&(p, c)| self.conics[c].residual(&self.points[p]))
            .fold(0.0, f64::max)
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejects a freshly built configuration whose points or conics collide or
/// which has unflagged incidences, naming the first offence.
pub(crate) fn check_generic(g: &GeometricConfiguration) -> Result<(), ConstructionError> {
    let report = crate::analysis::audit(g);
    if let Some(&(a, b)) = report.duplicate_points.first() {
        return Err(ConstructionError::NonGeneric(format!("points {a} and {b} coincide")));
    }
    if let Some(&(a, b)) = report.coincident_conics.first() {
        return Err(ConstructionError::NonGeneric(format!("conics {a} and {b} coincide")));
    }
    if let Some(&(p, c)) = report.missing_incidences.first() {
        return Err(ConstructionError::NonGeneric(format!(
            "point {p} lies on conic {c} without being assigned to it"
        )));
    }
    if let Some(&(p, c)) = report.spurious_incidences.first() {
        return Err(ConstructionError::NonGeneric(format!(
            "point {p} misses its conic {c} (residual {:e})",
            g.conics[c].residual(&g.points[p])
        )));
    }
    Ok(())
}
