use super::linalg::{self, Mat3};
use super::point::collinearity;
use super::{GeometryError, Point2};
use crate::{Real, Tolerances};

/// Projective classification of a real conic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Parabola,
    Hyperbola,
    PairOfLines,
    DoubleLine,
    /// Two complex lines meeting in a real point.
    Point,
    /// No real points.
    Empty,
}

impl ConicKind {
    pub fn name(self) -> &'static str {
        match self {
            ConicKind::Ellipse => "ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::PairOfLines => "pair-of-lines",
            ConicKind::DoubleLine => "double-line",
            ConicKind::Point => "point",
            ConicKind::Empty => "empty",
        }
    }
}

/// Real conic `a x² + b xy + c y² + d xz + e yz + f z² = 0`.
///
/// The symmetric form is kept at unit Frobenius norm with the first
/// significant coefficient (in `a, b, c, d, e, f` order) positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic<T> {
    form: Mat3<T>,
    kind: ConicKind,
    rank: u8,
}

/// Relative threshold below which eigenvalues and determinants count as zero.
fn degeneracy_tol<T: Real>() -> T {
    T::epsilon().powf(T::lit(0.75))
}

impl<T: Real> Conic<T> {
    /// Symmetrizes, normalizes and classifies `m`.
    pub fn from_matrix(m: Mat3<T>) -> Result<Self, GeometryError> {
        let mut s = linalg::zero3();
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] = (m[i][j] + m[j][i]) * T::lit(0.5);
            }
        }
        if s.iter().flatten().any(|x| !x.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let n = linalg::frobenius(&s);
        if n == T::zero() {
            return Err(GeometryError::ZeroForm);
        }
        // already-normalized input is kept bit for bit
        if (n - T::one()).abs() > T::epsilon() * T::lit(4.0) {
            for x in s.iter_mut().flatten() {
                *x = *x / n;
            }
        }
        let coeffs = coefficients_of(&s);
        let lead = coeffs
            .iter()
            .copied()
            .find(|c| c.abs() > T::epsilon() * T::lit(64.0))
            .unwrap_or(T::one());
        if lead < T::zero() {
            for x in s.iter_mut().flatten() {
                *x = -*x;
            }
        }
        let (kind, rank) = classify_form(&s);
        Ok(Self { form: s, kind, rank })
    }

    /// From `(a, b, c, d, e, f)` of `a x² + b xy + c y² + d x + e y + f`.
    pub fn from_coefficients(c: [T; 6]) -> Result<Self, GeometryError> {
        let h = T::lit(0.5);
        Self::from_matrix([
            [c[0], c[1] * h, c[3] * h],
            [c[1] * h, c[2], c[4] * h],
            [c[3] * h, c[4] * h, c[5]],
        ])
    }

    /// Ellipse with semi-axis `a` along direction `angle` and `b` across it.
    pub fn ellipse(center: Point2<T>, a: T, b: T, angle: T) -> Result<Self, GeometryError> {
        let (s, c) = angle.sin_cos();
        let (ia, ib) = (T::one() / (a * a), T::one() / (b * b));
        // Q = R diag(1/a², 1/b²) Rᵀ
        let q00 = c * c * ia + s * s * ib;
        let q01 = c * s * (ia - ib);
        let q11 = s * s * ia + c * c * ib;
        Self::central(center, q00, q01, q11, T::one())
    }

    pub fn circle(center: Point2<T>, r: T) -> Result<Self, GeometryError> {
        Self::ellipse(center, r, r, T::zero())
    }

    /// `(p - c)ᵀ Q (p - c) = rhs`.
    fn central(center: Point2<T>, q00: T, q01: T, q11: T, rhs: T) -> Result<Self, GeometryError> {
        let lx = -(q00 * center.x + q01 * center.y);
        let ly = -(q01 * center.x + q11 * center.y);
        let f = q00 * center.x * center.x + T::lit(2.0) * q01 * center.x * center.y + q11 * center.y * center.y - rhs;
        Self::from_matrix([[q00, q01, lx], [q01, q11, ly], [lx, ly, f]])
    }

    pub fn form(&self) -> &Mat3<T> {
        &self.form
    }

    /// `(a, b, c, d, e, f)` of the normalized form.
    pub fn coefficients(&self) -> [T; 6] {
        coefficients_of(&self.form)
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank < 3
    }

    /// `|p̂ᵀ A p̂|` for the unit homogenization `p̂` of `p`.
    pub fn residual(&self, p: &Point2<T>) -> T {
        linalg::quad_form(&self.form, &p.homogeneous_unit()).abs()
    }

    pub fn contains(&self, p: &Point2<T>, tol: T) -> bool {
        self.residual(p) <= tol
    }

    /// The form evaluated at `(x, y, 1)`.
    pub fn eval(&self, p: &Point2<T>) -> T {
        linalg::quad_form(&self.form, &p.homogeneous())
    }

    /// Gradient of [`Conic::eval`].
    pub fn gradient(&self, p: &Point2<T>) -> Point2<T> {
        let v = linalg::mat_vec(&self.form, &p.homogeneous());
        Point2::new(v[0], v[1]) * T::lit(2.0)
    }

    /// Distance between normalized forms, modulo sign.
    pub fn form_distance(&self, other: &Self) -> T {
        let mut plus = T::zero();
        let mut minus = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                plus = plus + (self.form[i][j] - other.form[i][j]).powi(2);
                minus = minus + (self.form[i][j] + other.form[i][j]).powi(2);
            }
        }
        plus.min(minus).sqrt()
    }

    pub fn is_proportional(&self, other: &Self, tol: T) -> bool {
        self.form_distance(other) <= tol
    }

    /// Upper-left 2×2 block as `(q00, q01, q11)`.
    fn quadratic_part(&self) -> (T, T, T) {
        (self.form[0][0], self.form[0][1], self.form[1][1])
    }

    /// Center of a central conic.
    pub fn center(&self) -> Option<Point2<T>> {
        let (a, b, c) = self.quadratic_part();
        let det = a * c - b * b;
        let s = a.abs().max(b.abs()).max(c.abs());
        if det.abs() <= degeneracy_tol::<T>() * s * s {
            return None;
        }
        let (d, e) = (self.form[0][2], self.form[1][2]);
        Some(Point2::new((b * e - c * d) / det, (b * d - a * e) / det))
    }

    /// Center, semi-axes and major-axis angle (in `[0, π)`) of an ellipse.
    pub fn ellipse_params(&self) -> Option<EllipseParams<T>> {
        if self.kind != ConicKind::Ellipse {
            return None;
        }
        let center = self.center()?;
        let (a, b, c) = self.quadratic_part();
        let value_at_center = self.form[2][2] + self.form[0][2] * center.x + self.form[1][2] * center.y;
        let (l1, l2, (cs, sn)) = linalg::sym2_eigen(a, b, c);
        let semi_minor = (-value_at_center / l1).sqrt();
        let semi_major = (-value_at_center / l2).sqrt();
        // the major axis is the eigenvector of the smaller eigenvalue
        let mut angle = sn.atan2(cs) + T::FRAC_PI_2();
        while angle < T::zero() {
            angle = angle + T::PI();
        }
        while angle >= T::PI() {
            angle = angle - T::PI();
        }
        Some(EllipseParams {
            center,
            semi_major,
            semi_minor,
            angle,
        })
    }

    /// True for ellipses whose quadratic part has equal eigenvalues to `rel_tol`.
    pub fn is_circle(&self, rel_tol: T) -> bool {
        if self.kind != ConicKind::Ellipse {
            return false;
        }
        let (a, b, c) = self.quadratic_part();
        let (l1, l2, _) = linalg::sym2_eigen(a, b, c);
        (l1 - l2).abs() <= rel_tol * l1.abs()
    }

    /// Image under the translation by `v`.
    pub fn translate(&self, v: Point2<T>) -> Self {
        let m = &self.form;
        // A' = Tᵀ A T with T = [[1,0,-vx],[0,1,-vy],[0,0,1]]
        let t: Mat3<T> = [
            [T::one(), T::zero(), -v.x],
            [T::zero(), T::one(), -v.y],
            [T::zero(), T::zero(), T::one()],
        ];
        let out = linalg::mul3(&linalg::transpose3(&t), &linalg::mul3(m, &t));
        Self::from_matrix(out).expect("translation of a conic is a conic")
    }

    pub fn cast<U: Real>(&self) -> Conic<U> {
        let mut m = linalg::zero3::<U>();
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = U::lit(self.form[i][j].to_f64_lossy());
            }
        }
        Conic::from_matrix(m).expect("cast of a conic is a conic")
    }
}

fn coefficients_of<T: Real>(m: &Mat3<T>) -> [T; 6] {
    let two = T::lit(2.0);
    [m[0][0], two * m[0][1], m[1][1], two * m[0][2], two * m[1][2], m[2][2]]
}

/// Kind and rank from the eigenvalues of the form and the sign of the
/// upper-left 2×2 determinant.
fn classify_form<T: Real>(m: &Mat3<T>) -> (ConicKind, u8) {
    let tol = degeneracy_tol::<T>();
    let eig = linalg::sym3_eigenvalues(m);
    let emax = eig.iter().fold(T::zero(), |acc, e| acc.max(e.abs()));
    let nonzero: Vec<T> = eig.iter().copied().filter(|e| e.abs() > tol * emax).collect();
    let rank = nonzero.len() as u8;
    let (a, b, c) = (m[0][0], m[0][1], m[1][1]);
    let det2 = a * c - b * b;
    let s = a.abs().max(b.abs()).max(c.abs());
    let det2_zero = det2.abs() <= tol * s * s;
    let kind = match rank {
        3 => {
            if det2_zero {
                ConicKind::Parabola
            } else if det2 < T::zero() {
                ConicKind::Hyperbola
            } else if linalg::det3(m) * (a + c) < T::zero() {
                ConicKind::Ellipse
            } else {
                ConicKind::Empty
            }
        }
        2 => {
            if nonzero[0] * nonzero[1] < T::zero() {
                ConicKind::PairOfLines
            } else if det2_zero {
                ConicKind::Empty
            } else {
                ConicKind::Point
            }
        }
        _ => ConicKind::DoubleLine,
    };
    (kind, rank)
}

/// Geometric description of an ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseParams<T> {
    pub center: Point2<T>,
    pub semi_major: T,
    pub semi_minor: T,
    /// Direction of the major axis, in `[0, π)`.
    pub angle: T,
}

/// Result of [`conic_from_5_points`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicFit<T> {
    pub conic: Conic<T>,
    pub max_residual: T,
    /// Largest over smallest elimination pivot of the normalized design matrix.
    pub condition: T,
}

impl<T: Real> ConicFit<T> {
    pub const CONDITION_WARNING: f64 = 1e8;

    pub fn ill_conditioned(&self) -> bool {
        self.condition > T::lit(Self::CONDITION_WARNING)
    }
}

/// Collinearity threshold used when validating fitting input.
pub(crate) fn collinear_tol<T: Real>() -> T {
    T::lit(T::FIT_TOL) * T::lit(0.1)
}

/// The unique conic through five points, no three collinear.
///
/// Points are first moved to their centroid and scaled to mean distance √2,
/// the null vector of the 5×6 design matrix over `(x², xy, y², x, y, 1)` is
/// found by fully pivoted elimination, and the result is mapped back.
pub fn conic_from_5_points<T: Real>(pts: &[Point2<T>; 5], tol: &Tolerances<T>) -> Result<ConicFit<T>, GeometryError> {
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            if pts[i].distance(&pts[j]) <= tol.merge {
                return Err(GeometryError::DuplicatePoints(i, j));
            }
        }
    }
    let col_tol = collinear_tol::<T>();
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in (j + 1)..5 {
                if collinearity(&pts[i], &pts[j], &pts[k]) <= col_tol {
                    return Err(GeometryError::Collinear(i, j, k));
                }
            }
        }
    }

    let five = T::lit(5.0);
    let centroid = pts.iter().fold(Point2::origin(), |acc, p| acc + *p) * (T::one() / five);
    let mean_dist = pts.iter().fold(T::zero(), |acc, p| acc + p.distance(&centroid)) / five;
    let scale = T::SQRT_2() / mean_dist;
    let rows: [[T; 6]; 5] = std::array::from_fn(|i| {
        let q = (pts[i] - centroid) * scale;
        [q.x * q.x, q.x * q.y, q.y * q.y, q.x, q.y, T::one()]
    });
    let (v, condition) = linalg::null_vector_5x6(&rows).ok_or(GeometryError::Singular("five-point design matrix"))?;
    let local = Conic::from_coefficients(v)?;
    // p' = H p, so the form in original coordinates is Hᵀ A' H
    let h: Mat3<T> = [
        [scale, T::zero(), -scale * centroid.x],
        [T::zero(), scale, -scale * centroid.y],
        [T::zero(), T::zero(), T::one()],
    ];
    let form = linalg::mul3(&linalg::transpose3(&h), &linalg::mul3(local.form(), &h));
    let conic = Conic::from_matrix(form)?;
    let max_residual = pts.iter().fold(T::zero(), |acc, p| acc.max(conic.residual(p)));
    if max_residual > tol.fit {
        return Err(GeometryError::FitResidual(max_residual.to_f64_lossy()));
    }
    Ok(ConicFit {
        conic,
        max_residual,
        condition,
    })
}

/// The conic centred at `center` through three representatives, and hence
/// through their reflections in `center`.
pub fn central_conic_from_pairs<T: Real>(center: Point2<T>, reps: &[Point2<T>; 3]) -> Result<Conic<T>, GeometryError> {
    let mut m = linalg::zero3();
    for (row, p) in m.iter_mut().zip(reps) {
        let u = *p - center;
        *row = [u.x * u.x, u.x * u.y, u.y * u.y];
    }
    let sol = linalg::solve3(&m, &[T::one(); 3], degeneracy_tol::<T>())
        .ok_or(GeometryError::Singular("degenerate centrally symmetric hexagon"))?;
    let half = T::lit(0.5);
    Conic::central(center, sol[0], sol[1] * half, sol[2], T::one())
}

/// `|p̂ᵀ A p̂| <= tol`.
pub fn point_on_conic<T: Real>(p: &Point2<T>, a: &Conic<T>, tol: T) -> bool {
    a.contains(p, tol)
}
