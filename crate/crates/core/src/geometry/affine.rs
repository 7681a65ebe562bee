use super::linalg::{self, Mat3};
use super::{Conic, ConicKind, GeometryError, Point2};
use crate::Real;

/// `p ↦ L p + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap2<T> {
    pub linear: [[T; 2]; 2],
    pub translation: Point2<T>,
}

fn singular_tol<T: Real>() -> T {
    T::epsilon() * T::lit(1e3)
}

impl<T: Real> AffineMap2<T> {
    pub fn new(linear: [[T; 2]; 2], translation: Point2<T>) -> Result<Self, GeometryError> {
        let m = Self { linear, translation };
        let scale = linear.iter().flatten().fold(T::zero(), |acc, x| acc.max(x.abs()));
        let det = m.det();
        if !det.is_finite() || det.abs() <= singular_tol::<T>() * scale * scale {
            return Err(GeometryError::SingularMap(det.to_f64_lossy()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            linear: [[T::one(), T::zero()], [T::zero(), T::one()]],
            translation: Point2::origin(),
        }
    }

    pub fn translation(v: Point2<T>) -> Self {
        Self {
            translation: v,
            ..Self::identity()
        }
    }

    pub fn rotation(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            linear: [[c, -s], [s, c]],
            translation: Point2::origin(),
        }
    }

    pub fn det(&self) -> T {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply(&self, p: &Point2<T>) -> Point2<T> {
        let l = &self.linear;
        Point2::new(
            l[0][0] * p.x + l[0][1] * p.y + self.translation.x,
            l[1][0] * p.x + l[1][1] * p.y + self.translation.y,
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (&self.linear, &other.linear);
        let linear = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        Self {
            linear,
            translation: self.apply(&other.translation),
        }
    }

    pub fn inverse(&self) -> Result<Self, GeometryError> {
        let d = self.det();
        if d == T::zero() || !d.is_finite() {
            return Err(GeometryError::SingularMap(d.to_f64_lossy()));
        }
        let l = &self.linear;
        let inv = [[l[1][1] / d, -l[0][1] / d], [-l[1][0] / d, l[0][0] / d]];
        let t = self.translation;
        let translation = Point2::new(
            -(inv[0][0] * t.x + inv[0][1] * t.y),
            -(inv[1][0] * t.x + inv[1][1] * t.y),
        );
        Ok(Self {
            linear: inv,
            translation,
        })
    }

    /// Homogeneous 3×3 matrix.
    pub fn matrix(&self) -> Mat3<T> {
        let l = &self.linear;
        [
            [l[0][0], l[0][1], self.translation.x],
            [l[1][0], l[1][1], self.translation.y],
            [T::zero(), T::zero(), T::one()],
        ]
    }
}

pub fn apply_affine_point<T: Real>(m: &AffineMap2<T>, p: &Point2<T>) -> Point2<T> {
    m.apply(p)
}

/// Image of a conic: the form maps by `M⁻ᵀ A M⁻¹`.
pub fn apply_affine<T: Real>(m: &AffineMap2<T>, a: &Conic<T>) -> Result<Conic<T>, GeometryError> {
    let inv = m.inverse()?.matrix();
    let form = linalg::mul3(&linalg::transpose3(&inv), &linalg::mul3(a.form(), &inv));
    Conic::from_matrix(form)
}

/// Linear map contracting an ellipse along its major axis so that it
/// becomes a circle whose radius is the semi-minor axis.
pub fn dilation_to_circle<T: Real>(a: &Conic<T>) -> Result<AffineMap2<T>, GeometryError> {
    if a.kind() != ConicKind::Ellipse {
        return Err(GeometryError::NotAnEllipse(a.kind()));
    }
    let f = a.form();
    let (l1, l2, (c, s)) = linalg::sym2_eigen(f[0][0], f[0][1], f[1][1]);
    // major axis: the eigenvector of the smaller eigenvalue l2
    let (mx, my) = (-s, c);
    let k = (l2 / l1).sqrt() - T::one();
    let linear = [
        [T::one() + k * mx * mx, k * mx * my],
        [k * mx * my, T::one() + k * my * my],
    ];
    AffineMap2::new(linear, Point2::origin())
}
