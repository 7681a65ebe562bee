use super::{apply_affine, AffineMap2, Conic, GeometryError, Point2, Point4};
use crate::Real;

/// Linear map E⁴ → E², stored as a 2×4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projection4to2<T> {
    pub map: [[T; 4]; 2],
}

impl<T: Real> Projection4to2<T> {
    pub fn new(map: [[T; 4]; 2]) -> Result<Self, GeometryError> {
        let p = Self { map };
        let (r0, r1) = (Point4(map[0]), Point4(map[1]));
        let gram = r0.dot(&r0) * r1.dot(&r1) - r0.dot(&r1).powi(2);
        let scale = r0.dot(&r0).max(r1.dot(&r1));
        if !gram.is_finite() || gram <= T::epsilon().sqrt() * scale * scale {
            return Err(GeometryError::RankDeficientProjection);
        }
        Ok(p)
    }

    /// Columns are the unit vectors at angles `π/8 + kπ/4`, `k = 0..3`.
    pub fn octagonal() -> Self {
        let angle = |k: usize| T::PI() / T::lit(8.0) + T::lit(k as f64) * T::FRAC_PI_4();
        Self {
            map: [
                std::array::from_fn(|k| angle(k).cos()),
                std::array::from_fn(|k| angle(k).sin()),
            ],
        }
    }

    /// Columns at angles `0.3 + 0.7k` with lengths `1 - 0.1k`, `k = 0..3`.
    /// No rational symmetry, so prism hexagons of `P_m × P_n` stay
    /// nondegenerate where the octagonal view flattens some (`m = n = 8`).
    pub fn oblique() -> Self {
        let angle = |k: usize| T::lit(0.3 + 0.7 * k as f64);
        let len = |k: usize| T::lit(1.0 - 0.1 * k as f64);
        Self {
            map: [
                std::array::from_fn(|k| len(k) * angle(k).cos()),
                std::array::from_fn(|k| len(k) * angle(k).sin()),
            ],
        }
    }

    /// Keeps coordinates `i` and `j`.
    pub fn coordinates(i: usize, j: usize) -> Result<Self, GeometryError> {
        let mut map = [[T::zero(); 4]; 2];
        map[0][i] = T::one();
        map[1][j] = T::one();
        Self::new(map)
    }

    pub fn apply(&self, q: &Point4<T>) -> Point2<T> {
        Point2::new(Point4(self.map[0]).dot(q), Point4(self.map[1]).dot(q))
    }
}

pub fn project<T: Real>(p: &Projection4to2<T>, q: &Point4<T>) -> Point2<T> {
    p.apply(q)
}

/// Image of a conic lying in the 2-plane `center + s u + t v`, given in
/// `(s, t)` coordinates. The plane maps affinely onto the image plane, so
/// the conic is carried over by congruence.
pub fn project_conic_plane<T: Real>(
    p: &Projection4to2<T>,
    center: &Point4<T>,
    u: &Point4<T>,
    v: &Point4<T>,
    conic: &Conic<T>,
) -> Result<Conic<T>, GeometryError> {
    let (pu, pv) = (p.apply(u), p.apply(v));
    let (nu, nv) = (pu.norm(), pv.norm());
    let sine = if nu == T::zero() || nv == T::zero() {
        T::zero()
    } else {
        pu.cross(&pv).abs() / (nu * nv)
    };
    if sine <= T::epsilon().sqrt() {
        return Err(GeometryError::DegeneratePlane(sine.to_f64_lossy()));
    }
    let m = AffineMap2::new([[pu.x, pv.x], [pu.y, pv.y]], p.apply(center))?;
    apply_affine(&m, conic)
}
