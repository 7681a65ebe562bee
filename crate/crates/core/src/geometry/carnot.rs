use super::point::collinearity;
use super::{GeometryError, Point2};
use crate::Real;

/// Side of triangle `ABC`, named after the opposite vertex: side `A` is
/// the line `BC`, which carries the points `A1, A2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    /// Endpoints `(X, Y)` of the side with the ratio taken as `XZ/ZY`.
    fn ends(self) -> (usize, usize) {
        match self {
            Side::A => (1, 2),
            Side::B => (2, 0),
            Side::C => (0, 1),
        }
    }

    fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
            Side::C => 2,
        }
    }

    fn slot_names(self) -> [&'static str; 2] {
        match self {
            Side::A => ["A1", "A2"],
            Side::B => ["B1", "B2"],
            Side::C => ["C1", "C2"],
        }
    }
}

fn collinear_tol<T: Real>() -> T {
    T::lit(T::INCIDENCE_TOL)
}

/// `XZ/ZY` for collinear `X, Z, Y`, signed along the line.
pub fn signed_ratio<T: Real>(x: &Point2<T>, z: &Point2<T>, y: &Point2<T>) -> Result<T, GeometryError> {
    let d = *y - *z;
    let scale = x.norm().max(y.norm()).max(z.norm()).max(T::one());
    if d.norm() <= T::epsilon() * T::lit(16.0) * scale {
        return Err(GeometryError::CoincidentReference);
    }
    let dev = collinearity(x, z, y);
    if dev > collinear_tol::<T>() {
        return Err(GeometryError::NotCollinear(dev.to_f64_lossy()));
    }
    Ok((*z - *x).dot(&d) / d.dot(&d))
}

fn check_slot<T: Real>(tri: &[Point2<T>; 3], side: Side, k: usize, p: &Point2<T>) -> Result<(), GeometryError> {
    let (i, j) = side.ends();
    let name = side.slot_names()[k];
    let len = tri[i].distance(&tri[j]);
    let near = T::lit(T::MERGE_TOL) * len.max(T::one());
    if p.distance(&tri[i]) <= near || p.distance(&tri[j]) <= near {
        return Err(GeometryError::AtVertex(name));
    }
    let dev = collinearity(&tri[i], &tri[j], p);
    if dev > collinear_tol::<T>() {
        return Err(GeometryError::OffSide(name, dev.to_f64_lossy()));
    }
    Ok(())
}

fn side_ratio<T: Real>(tri: &[Point2<T>; 3], side: Side, p: &Point2<T>) -> Result<T, GeometryError> {
    let (i, j) = side.ends();
    signed_ratio(&tri[i], p, &tri[j])
}

/// The six-factor Carnot product for points ordered
/// `(A1, A2, B1, B2, C1, C2)`, where `A1, A2` lie on `BC` and so on.
/// It equals 1 exactly when the six points are coconical.
pub fn carnot_product<T: Real>(tri: &[Point2<T>; 3], pts: &[Point2<T>; 6]) -> Result<T, GeometryError> {
    let mut prod = T::one();
    for side in Side::ALL {
        for k in 0..2 {
            let p = &pts[2 * side.index() + k];
            check_slot(tri, side, k, p)?;
            prod = prod * side_ratio(tri, side, p)?;
        }
    }
    Ok(prod)
}

/// Completes a coconical 6-tuple. `five` lists the known points in the
/// order `(A1, A2, B1, B2, C1, C2)` with the second point of `side` left
/// out; the returned point is that missing one.
pub fn carnot_solve_sixth<T: Real>(
    tri: &[Point2<T>; 3],
    five: &[Point2<T>; 5],
    side: Side,
) -> Result<Point2<T>, GeometryError> {
    let missing = 2 * side.index() + 1;
    let mut prod = T::one();
    let mut it = five.iter();
    for s in Side::ALL {
        for k in 0..2 {
            if 2 * s.index() + k == missing {
                continue;
            }
            let p = it.next().expect("five points");
            check_slot(tri, s, k, p)?;
            prod = prod * side_ratio(tri, s, p)?;
        }
    }
    let r = T::one() / prod;
    if !r.is_finite() || r.abs() <= T::lit(1e-12) || (r + T::one()).abs() <= T::lit(1e-12) {
        return Err(GeometryError::DegenerateRatio(r.to_f64_lossy()));
    }
    let (i, j) = side.ends();
    let z = tri[i] + (tri[j] - tri[i]) * (r / (T::one() + r));
    if !z.is_finite() {
        return Err(GeometryError::DegenerateRatio(r.to_f64_lossy()));
    }
    check_slot(tri, side, 1, &z)?;
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{conic_from_5_points, line_conic_intersections, AffineMap2, Conic, Line};
    use crate::Tolerances;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    type P = Point2<f64>;

    fn equilateral() -> [P; 3] {
        let r = 1.0;
        std::array::from_fn(|k| P::new(0.0, r).rotate(k as f64 * 2.0 * std::f64::consts::FRAC_PI_3))
    }

    /// The two points where `conic` cuts each side line, ordered `A1..C2`.
    fn cut(tri: &[P; 3], conic: &Conic<f64>) -> Option<[P; 6]> {
        let mut out = Vec::new();
        for (i, j) in [(1, 2), (2, 0), (0, 1)] {
            let pts = line_conic_intersections(&Line::through(&tri[i], &tri[j]), conic);
            if pts.len() != 2 {
                return None;
            }
            out.extend(pts);
        }
        out.try_into().ok()
    }

    #[test]
    fn ratio_examples() {
        let r = signed_ratio(&P::new(0.0, 0.0), &P::new(1.0, 0.0), &P::new(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-15);
        let r = signed_ratio(&P::new(0.0, 0.0), &P::new(3.0, 0.0), &P::new(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(r, -1.5, epsilon = 1e-15);
        assert_eq!(
            signed_ratio(&P::new(0.0, 0.0), &P::new(1.0, 0.0), &P::new(1.0, 0.0)).unwrap_err(),
            GeometryError::CoincidentReference
        );
        assert!(matches!(
            signed_ratio(&P::new(0.0, 0.0), &P::new(1.0, 1.0), &P::new(2.0, 0.0)),
            Err(GeometryError::NotCollinear(_))
        ));
    }

    #[test]
    fn concentric_circle_gives_one() {
        let tri = equilateral();
        // inradius 0.5, circumradius 1
        let c = Conic::circle(P::origin(), 0.75).unwrap();
        let pts = cut(&tri, &c).unwrap();
        assert_abs_diff_eq!(carnot_product(&tri, &pts).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn solve_recovers_removed_point() {
        let tri = equilateral();
        let c = Conic::circle(P::origin(), 0.75).unwrap();
        let pts = cut(&tri, &c).unwrap();
        for side in Side::ALL {
            let missing = 2 * side.index() + 1;
            let five: Vec<P> = (0..6).filter(|&k| k != missing).map(|k| pts[k]).collect();
            let z = carnot_solve_sixth(&tri, &five.try_into().unwrap(), side).unwrap();
            assert!(z.distance(&pts[missing]) < 1e-12);
        }
    }

    #[test]
    fn solve_matches_line_conic_on_skew_data() {
        let tri = [P::new(-1.0, -0.6), P::new(1.3, -0.4), P::new(0.2, 1.4)];
        let c = Conic::ellipse(P::new(0.1, 0.05), 0.9, 0.55, 0.4).unwrap();
        let pts = cut(&tri, &c).unwrap();
        let five = [pts[0], pts[1], pts[2], pts[4], pts[5]];
        let z = carnot_solve_sixth(&tri, &five, Side::B).unwrap();
        assert!(z.distance(&pts[3]) < 1e-10);
        let mut six = pts;
        six[3] = z;
        let fit = conic_from_5_points(&[six[0], six[1], six[2], six[4], six[5]], &Tolerances::default()).unwrap();
        assert!(fit.conic.residual(&z) < 1e-10);
    }

    #[test]
    fn perturbation_breaks_product() {
        let tri = equilateral();
        let c = Conic::circle(P::origin(), 0.75).unwrap();
        let mut pts = cut(&tri, &c).unwrap();
        let dir = (tri[2] - tri[1]) * (1.0 / tri[2].distance(&tri[1]));
        pts[0] = pts[0] + dir * 1e-3;
        assert!((carnot_product(&tri, &pts).unwrap() - 1.0).abs() > 1e-4);
    }

    #[test]
    fn slot_errors() {
        let tri = equilateral();
        let c = Conic::circle(P::origin(), 0.75).unwrap();
        let mut pts = cut(&tri, &c).unwrap();
        pts[2] = tri[2];
        assert_eq!(carnot_product(&tri, &pts).unwrap_err(), GeometryError::AtVertex("B1"));
        let mut pts = cut(&tri, &c).unwrap();
        pts[5] = P::origin();
        assert!(matches!(
            carnot_product(&tri, &pts),
            Err(GeometryError::OffSide("C2", _))
        ));
    }

    proptest! {
        #[test]
        fn affine_invariance(
            l in prop::array::uniform4(-2.0f64..2.0),
            t in (-5.0f64..5.0, -5.0f64..5.0),
            r in 0.55f64..0.95,
        ) {
            let Ok(m) = AffineMap2::new([[l[0], l[1]], [l[2], l[3]]], P::new(t.0, t.1)) else { return Ok(()); };
            prop_assume!(m.det().abs() > 0.05);
            let tri = equilateral();
            let pts = cut(&tri, &Conic::circle(P::origin(), r).unwrap()).unwrap();
            let before = carnot_product(&tri, &pts).unwrap();
            let tri2 = tri.map(|p| m.apply(&p));
            let pts2 = pts.map(|p| m.apply(&p));
            let after = carnot_product(&tri2, &pts2).unwrap();
            prop_assert!((before - after).abs() < 1e-9);
            let r1 = signed_ratio(&tri[0], &pts[4], &tri[1]).unwrap();
            let r2 = signed_ratio(&tri2[0], &pts2[4], &tri2[1]).unwrap();
            prop_assert!((r1 - r2).abs() < 1e-9);
        }
    }
}
