//! Point-conic and point-ellipse configurations.
//!
//! * [`incidence`]: combinatorial configurations, Levi graphs, forbidden
//!   biclique predicates, incidence switches and a small catalog.
//! * [`geometry`]: planar conic kernel, generic over the scalar type.
//! * [`constructions`]: builders for the explicit configurations and the
//!   two generic realizers.
//! * [`analysis`]: audits, intersection types and isometry checks.
//! * [`interface`]: JSON files and SVG rendering.
//!
//! The kernel types are generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix them to `f64`, which is what the builders and file formats use.

pub mod analysis;
pub mod constructions;
pub mod geometry;
pub mod incidence;
pub mod interface;
pub mod scalar;

pub use incidence::{IncidenceError, IncidenceStructure, LeviGraph, PropertyReport, Signature};
pub use scalar::{Real, Tolerances};

pub type PlanarPoint = geometry::Point2<f64>;
pub type Point4 = geometry::Point4<f64>;
pub type Conic = geometry::Conic<f64>;
pub type AffineMap2 = geometry::AffineMap2<f64>;
pub type Projection4to2 = geometry::Projection4to2<f64>;
pub use geometry::{ConicKind, GeometryError};

/// Incidence tolerance stored with every built configuration.
pub const DEFAULT_TOL: f64 = 1e-8;
