//! Planar conic kernel.
//!
//! Conics are real symmetric 3×3 forms acting on homogeneous coordinates
//! `(x, y, 1)`, stored with unit Frobenius norm. All tolerances quoted in
//! this module are measured against that normalization and against the
//! unit-norm homogenization of points, so they do not depend on the scale
//! of a conic's coefficients.
//!
//! Everything here is generic over [`Real`]; see the crate root for the
//! `f64` aliases used by the rest of the library.

mod affine;
mod carnot;
mod conic;
mod intersect;
pub mod linalg;
mod point;
mod projection;

use thiserror::Error;

pub use affine::{apply_affine, apply_affine_point, dilation_to_circle, AffineMap2};
pub use carnot::{carnot_product, carnot_solve_sixth, signed_ratio, Side};
pub use conic::{
    central_conic_from_pairs, conic_from_5_points, point_on_conic, Conic, ConicFit, ConicKind, EllipseParams,
};
pub use intersect::{conic_conic_intersections, line_conic_intersections, Line};
pub(crate) use point::collinearity;
pub use point::{are_collinear, Point2, Point4};
pub use projection::{project, project_conic_plane, Projection4to2};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("fitted conic misses an input point (residual {0:e})")]
    FitResidual(f64),
    #[error("singular system: {0}")]
    Singular(&'static str),
    #[error("the conics are coincident (proportional forms)")]
    Coincident,
    #[error("degenerate conic ({0:?}) where a proper conic is required")]
    DegenerateConic(ConicKind),
    #[error("zero matrix is not a conic")]
    ZeroForm,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("points are not collinear (deviation {0:e})")]
    NotCollinear(f64),
    #[error("ratio is undefined: the two reference points coincide")]
    CoincidentReference,
    #[error("{0} coincides with a triangle vertex")]
    AtVertex(&'static str),
    #[error("{0} is not on its side line (deviation {1:e})")]
    OffSide(&'static str, f64),
    #[error("the required ratio {0:e} puts the point at a vertex or at infinity")]
    DegenerateRatio(f64),
    #[error("conic is a {0:?}, not an ellipse")]
    NotAnEllipse(ConicKind),
    #[error("affine map is singular (det {0:e})")]
    SingularMap(f64),
    #[error("projection has rank < 2")]
    RankDeficientProjection,
    #[error("the plane projects degenerately (sine of image angle {0:e})")]
    DegeneratePlane(f64),
}
