//! Scalar abstraction for the geometry kernel.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar usable by the geometry kernel: `f32` or `f64`.
///
/// The associated tolerances are quoted against unit-Frobenius conic forms
/// and unit-norm homogeneous points, so they are dimensionless.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Residual bound a freshly fitted conic must meet on its input points.
    const FIT_TOL: f64;
    /// Default point-on-conic incidence tolerance.
    const INCIDENCE_TOL: f64;
    /// Distance under which two points are considered the same point.
    const MERGE_TOL: f64;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    const FIT_TOL: f64 = 1e-4;
    const INCIDENCE_TOL: f64 = 1e-3;
    const MERGE_TOL: f64 = 1e-3;
}

impl Real for f64 {
    const FIT_TOL: f64 = 1e-9;
    const INCIDENCE_TOL: f64 = 1e-8;
    const MERGE_TOL: f64 = 1e-7;
}

/// Tolerance bundle used by fitting, incidence tests and point merging.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    pub fit: T,
    pub incidence: T,
    pub merge: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            fit: T::lit(T::FIT_TOL),
            incidence: T::lit(T::INCIDENCE_TOL),
            merge: T::lit(T::MERGE_TOL),
        }
    }
}
