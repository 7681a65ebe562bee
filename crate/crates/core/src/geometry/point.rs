use std::ops::{Add, Mul, Neg, Sub};

use crate::Real;

/// Point of the affine plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// `(x, y, 1)` scaled to unit length.
    pub fn homogeneous_unit(&self) -> [T; 3] {
        let n = (self.x * self.x + self.y * self.y + T::one()).sqrt();
        [self.x / n, self.y / n, T::one() / n]
    }

    pub fn homogeneous(&self) -> [T; 3] {
        [self.x, self.y, T::one()]
    }

    /// Dehomogenizes; `None` for points at (or numerically near) infinity.
    pub fn from_homogeneous(h: [T; 3]) -> Option<Self> {
        let scale = h[0].abs().max(h[1].abs()).max(h[2].abs());
        if scale == T::zero() || h[2].abs() <= scale * T::epsilon() * T::lit(1e3) {
            return None;
        }
        let p = Self::new(h[0] / h[2], h[1] / h[2]);
        p.is_finite().then_some(p)
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, o: &Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(&self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(&self, o: &Self) -> T {
        (*self - *o).norm()
    }

    pub fn lerp(&self, o: &Self, t: T) -> Self {
        *self + (*o - *self) * t
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        self.lerp(o, T::lit(0.5))
    }

    pub fn rotate(&self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn cast<U: Real>(&self) -> Point2<U> {
        Point2::new(U::lit(self.x.to_f64_lossy()), U::lit(self.y.to_f64_lossy()))
    }
}

impl<T: Real> Add for Point2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Real> Sub for Point2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Real> Mul<T> for Point2<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<T: Real> Neg for Point2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Collinearity of three points, scale-free: the triangle's doubled area
/// divided by the square of its longest side.
pub fn are_collinear<T: Real>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>, tol: T) -> bool {
    collinearity(a, b, c) <= tol
}

pub(crate) fn collinearity<T: Real>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> T {
    let ab = *b - *a;
    let ac = *c - *a;
    let bc = *c - *b;
    let longest = ab.dot(&ab).max(ac.dot(&ac)).max(bc.dot(&bc));
    if longest == T::zero() {
        return T::zero();
    }
    ab.cross(&ac).abs() / longest
}

/// Point of E^4.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point4<T>(pub [T; 4]);

impl<T: Real> Point4<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self([a, b, c, d])
    }

    pub fn zero() -> Self {
        Self([T::zero(); 4])
    }

    pub fn dot(&self, o: &Self) -> T {
        (0..4).fold(T::zero(), |acc, i| acc + self.0[i] * o.0[i])
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, o: &Self) -> T {
        (*self - *o).norm()
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        (*self + *o) * T::lit(0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl<T: Real> Add for Point4<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl<T: Real> Sub for Point4<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl<T: Real> Mul<T> for Point4<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self(std::array::from_fn(|i| self.0[i] * s))
    }
}
