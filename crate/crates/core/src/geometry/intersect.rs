use super::linalg::{self, Mat3, Vec3};
use super::{Conic, GeometryError, Point2};
use crate::{Real, Tolerances};

/// Line `a x + b y + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<T> {
    pub coeffs: Vec3<T>,
}

impl<T: Real> Line<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self { coeffs: [a, b, c] }
    }

    pub fn through(p: &Point2<T>, q: &Point2<T>) -> Self {
        Self {
            coeffs: linalg::cross3(&p.homogeneous(), &q.homogeneous()),
        }
    }

    /// `None` for the line at infinity.
    pub fn normal_norm(&self) -> Option<T> {
        let n = self.coeffs[0].hypot(self.coeffs[1]);
        let s = linalg::norm3(&self.coeffs);
        (n > s * T::epsilon() * T::lit(1e3)).then_some(n)
    }

    /// Unit direction and the point closest to the origin.
    pub fn parametrize(&self) -> Option<(Point2<T>, Point2<T>)> {
        let n = self.normal_norm()?;
        let [a, b, c] = self.coeffs;
        let dir = Point2::new(-b / n, a / n);
        let foot = Point2::new(a, b) * (-c / (n * n));
        Some((foot, dir))
    }

    /// Euclidean distance from `p`.
    pub fn distance(&self, p: &Point2<T>) -> T {
        match self.normal_norm() {
            Some(n) => linalg::dot3(&self.coeffs, &p.homogeneous()).abs() / n,
            None => T::infinity(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Option<Point2<T>> {
        Point2::from_homogeneous(linalg::cross3(&self.coeffs, &other.coeffs))
    }
}

/// Real intersections of a line with a conic; a discriminant below `-1e-12`
/// (on the scaled restricted quadratic) means none.
pub fn line_conic_intersections<T: Real>(line: &Line<T>, conic: &Conic<T>) -> Vec<Point2<T>> {
    let Some((foot, dir)) = line.parametrize() else {
        return Vec::new();
    };
    let m = conic.form();
    let p = foot.homogeneous();
    let d = [dir.x, dir.y, T::zero()];
    let a = linalg::quad_form(m, &d);
    let b = T::lit(2.0) * linalg::dot3(&p, &linalg::mat_vec(m, &d));
    let c = linalg::quad_form(m, &p);
    linalg::real_quadratic_roots(a, b, c, T::lit(1e-12))
        .into_iter()
        .map(|t| foot + dir * t)
        .filter(Point2::is_finite)
        .collect()
}

/// Lines, or a lone real point, making up a degenerate conic `d`.
enum Split<T> {
    Lines(Vec<Line<T>>),
    Point(Point2<T>),
    Nothing,
}

fn split_degenerate<T: Real>(d: &Mat3<T>) -> Split<T> {
    let scale = linalg::frobenius(d);
    if scale == T::zero() {
        return Split::Nothing;
    }
    let adj = linalg::adjugate(d);
    let i = (0..3)
        .max_by(|&x, &y| {
            adj[x][x]
                .abs()
                .partial_cmp(&adj[y][y].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    if adj[i][i].abs() <= T::lit(1e-10) * scale * scale {
        // rank one: ±l lᵀ
        let j = (0..3)
            .max_by(|&x, &y| {
                d[x][x]
                    .abs()
                    .partial_cmp(&d[y][y].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(0);
        if d[j][j] == T::zero() {
            return Split::Nothing;
        }
        let r = d[j][j].abs().sqrt();
        return Split::Lines(vec![Line {
            coeffs: [d[j][0] / r, d[j][1] / r, d[j][2] / r],
        }]);
    }
    if adj[i][i] > T::zero() {
        // complex conjugate lines through one real point
        return match Point2::from_homogeneous([adj[0][i], adj[1][i], adj[2][i]]) {
            Some(p) => Split::Point(p),
            None => Split::Nothing,
        };
    }
    let beta = (-adj[i][i]).sqrt();
    let p = [adj[0][i] / beta, adj[1][i] / beta, adj[2][i] / beta];
    // d + [p]_x has rank one, equal to g hᵀ for the two lines g, h
    let c: Mat3<T> = [
        [d[0][0], d[0][1] + p[2], d[0][2] - p[1]],
        [d[1][0] - p[2], d[1][1], d[1][2] + p[0]],
        [d[2][0] + p[1], d[2][1] - p[0], d[2][2]],
    ];
    let (mut r, mut k, mut best) = (0, 0, T::zero());
    for (ri, row) in c.iter().enumerate() {
        for (ci, x) in row.iter().enumerate() {
            if x.abs() > best {
                best = x.abs();
                r = ri;
                k = ci;
            }
        }
    }
    if best == T::zero() {
        return Split::Nothing;
    }
    Split::Lines(vec![
        Line { coeffs: c[r] },
        Line {
            coeffs: [c[0][k], c[1][k], c[2][k]],
        },
    ])
}

/// Newton refinement of a common zero of two conics.
fn polish<T: Real>(p: Point2<T>, a: &Conic<T>, b: &Conic<T>) -> Point2<T> {
    let mut x = p;
    for _ in 0..8 {
        let (fa, fb) = (a.eval(&x), b.eval(&x));
        let (ga, gb) = (a.gradient(&x), b.gradient(&x));
        let det = ga.cross(&gb);
        let scale = ga.norm() * gb.norm();
        if scale == T::zero() || det.abs() <= T::lit(1e-8) * scale {
            break;
        }
        let step = Point2::new((fa * gb.y - fb * ga.y) / det, (ga.x * fb - gb.x * fa) / det);
        let next = x - step;
        if !next.is_finite() {
            break;
        }
        let before = a.residual(&x).max(b.residual(&x));
        let after = a.residual(&next).max(b.residual(&next));
        if after > before {
            break;
        }
        x = next;
        if step.norm() <= T::epsilon() * (T::one() + x.norm()) {
            break;
        }
    }
    x
}

/// Real affine intersection points of two proper conics (at most four).
///
/// Every real root `λ` of `det(A + λB) = 0` gives a degenerate member of
/// the pencil; its lines are cut with `A`, the candidates are polished by
/// Newton steps on both forms and kept when both residuals are within ten
/// times the merge tolerance. Tangential points are reported once.
pub fn conic_conic_intersections<T: Real>(
    a: &Conic<T>,
    b: &Conic<T>,
    tol: &Tolerances<T>,
) -> Result<Vec<Point2<T>>, GeometryError> {
    for c in [a, b] {
        if c.is_degenerate() {
            return Err(GeometryError::DegenerateConic(c.kind()));
        }
    }
    if a.is_proportional(b, tol.merge) {
        return Err(GeometryError::Coincident);
    }
    let (ma, mb) = (a.form(), b.form());
    let c3 = linalg::det3(mb);
    let c2 = linalg::trace_product(ma, &linalg::adjugate(mb));
    let c1 = linalg::trace_product(&linalg::adjugate(ma), mb);
    let c0 = linalg::det3(ma);
    let mut candidates = Vec::new();
    for lambda in linalg::real_cubic_roots(c3, c2, c1, c0) {
        let mut d = linalg::zero3();
        for i in 0..3 {
            for j in 0..3 {
                d[i][j] = ma[i][j] + lambda * mb[i][j];
            }
        }
        match split_degenerate(&d) {
            Split::Lines(lines) => {
                for l in &lines {
                    candidates.extend(line_conic_intersections(l, a));
                    candidates.extend(line_conic_intersections(l, b));
                }
            }
            Split::Point(p) => candidates.push(p),
            Split::Nothing => {}
        }
    }
    let accept = tol.merge * T::lit(10.0);
    let mut out: Vec<Point2<T>> = Vec::new();
    for p in candidates {
        let q = polish(p, a, b);
        if a.residual(&q) > accept || b.residual(&q) > accept {
            continue;
        }
        if out.iter().all(|o| o.distance(&q) > tol.merge * (T::one() + q.norm())) {
            out.push(q);
        }
    }
    // near-tangent clusters can leave more than four survivors
    if out.len() > 4 {
        out.sort_by(|p, q| {
            let rp = a.residual(p) + b.residual(p);
            let rq = a.residual(q) + b.residual(q);
            rp.partial_cmp(&rq).unwrap_or(std::cmp::Ordering::Equal)
        });
        out.truncate(4);
    }
    out.sort_by(|p, q| (p.x, p.y).partial_cmp(&(q.x, q.y)).unwrap_or(std::cmp::Ordering::Equal));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{conic_from_5_points, ConicKind};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    type P = Point2<f64>;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    fn assert_same_points(got: &[P], want: &[P], eps: f64) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for w in want {
            assert!(got.iter().any(|g| g.distance(w) < eps), "{w:?} missing from {got:?}");
        }
    }

    #[test]
    fn line_through_circle() {
        let c = Conic::circle(P::origin(), 1.0).unwrap();
        let l = Line::through(&P::new(-2.0, 0.5), &P::new(2.0, 0.5));
        let pts = line_conic_intersections(&l, &c);
        let h = 0.75f64.sqrt();
        assert_same_points(&pts, &[P::new(-h, 0.5), P::new(h, 0.5)], 1e-14);
        let miss = Line::through(&P::new(0.0, 2.0), &P::new(1.0, 2.0));
        assert!(line_conic_intersections(&miss, &c).is_empty());
        assert_abs_diff_eq!(miss.distance(&P::origin()), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn two_unit_circles() {
        let a = Conic::circle(P::origin(), 1.0).unwrap();
        let b = Conic::circle(P::new(1.0, 0.0), 1.0).unwrap();
        let pts = conic_conic_intersections(&a, &b, &tol()).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_same_points(&pts, &[P::new(0.5, h), P::new(0.5, -h)], 1e-12);
    }

    #[test]
    fn crossed_axis_ellipses() {
        let a = Conic::from_coefficients([0.25, 0.0, 1.0, 0.0, 0.0, -1.0]).unwrap();
        let b = Conic::from_coefficients([1.0, 0.0, 0.25, 0.0, 0.0, -1.0]).unwrap();
        let pts = conic_conic_intersections(&a, &b, &tol()).unwrap();
        let s = 2.0 / 5f64.sqrt();
        let want = [P::new(s, s), P::new(s, -s), P::new(-s, s), P::new(-s, -s)];
        assert_same_points(&pts, &want, 1e-12);
    }

    #[test]
    fn disjoint_and_nested() {
        let a = Conic::circle(P::origin(), 1.0).unwrap();
        let far = Conic::circle(P::new(5.0, 0.0), 1.0).unwrap();
        assert!(conic_conic_intersections(&a, &far, &tol()).unwrap().is_empty());
        let inner = Conic::circle(P::new(0.1, 0.0), 0.3).unwrap();
        assert!(conic_conic_intersections(&a, &inner, &tol()).unwrap().is_empty());
    }

    #[test]
    fn tangent_circles_meet_once() {
        let a = Conic::circle(P::origin(), 1.0).unwrap();
        let b = Conic::circle(P::new(2.0, 0.0), 1.0).unwrap();
        let pts = conic_conic_intersections(&a, &b, &tol()).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].distance(&P::new(1.0, 0.0)) < 1e-6);
    }

    #[test]
    fn shared_four_points() {
        let shared = [P::new(0.1, 0.2), P::new(1.3, -0.4), P::new(2.2, 1.1), P::new(0.4, 1.9)];
        let fit = |fifth: P| {
            let pts = [shared[0], shared[1], shared[2], shared[3], fifth];
            conic_from_5_points(&pts, &tol()).unwrap().conic
        };
        let a = fit(P::new(1.0, 2.6));
        let b = fit(P::new(-0.5, 0.9));
        let pts = conic_conic_intersections(&a, &b, &tol()).unwrap();
        assert_same_points(&pts, &shared, 1e-9);
    }

    #[test]
    fn five_shared_points_are_coincident() {
        let pts = [
            P::new(0.0, 0.0),
            P::new(1.0, 0.2),
            P::new(1.6, 1.1),
            P::new(0.7, 1.8),
            P::new(-0.3, 0.9),
        ];
        let a = conic_from_5_points(&pts, &tol()).unwrap().conic;
        let rev = [pts[4], pts[3], pts[2], pts[1], pts[0]];
        let b = conic_from_5_points(&rev, &tol()).unwrap().conic;
        assert_eq!(
            conic_conic_intersections(&a, &b, &tol()).unwrap_err(),
            GeometryError::Coincident
        );
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let a = Conic::circle(P::origin(), 1.0).unwrap();
        let lines = Conic::from_coefficients([1.0, 0.0, -1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(
            conic_conic_intersections(&a, &lines, &tol()).unwrap_err(),
            GeometryError::DegenerateConic(ConicKind::PairOfLines)
        );
    }

    #[test]
    fn hyperbola_and_parabola() {
        // xy = 1 and y = x²: single real point (1, 1)
        let h = Conic::from_coefficients([0.0, 1.0, 0.0, 0.0, 0.0, -1.0]).unwrap();
        let p = Conic::from_coefficients([1.0, 0.0, 0.0, 0.0, -1.0, 0.0]).unwrap();
        let pts = conic_conic_intersections(&h, &p, &tol()).unwrap();
        assert_same_points(&pts, &[P::new(1.0, 1.0)], 1e-10);
    }

    proptest! {
        #[test]
        fn results_lie_on_both(
            c1 in (-1.0f64..1.0, -1.0f64..1.0), a1 in 0.3f64..2.0, b1 in 0.3f64..2.0, t1 in 0.0f64..3.2,
            c2 in (-1.0f64..1.0, -1.0f64..1.0), a2 in 0.3f64..2.0, b2 in 0.3f64..2.0, t2 in 0.0f64..3.2,
        ) {
            let e1 = Conic::ellipse(P::new(c1.0, c1.1), a1, b1, t1).unwrap();
            let e2 = Conic::ellipse(P::new(c2.0, c2.1), a2, b2, t2).unwrap();
            if let Ok(pts) = conic_conic_intersections(&e1, &e2, &tol()) {
                prop_assert!(pts.len() <= 4);
                for p in &pts {
                    prop_assert!(e1.residual(p) <= 1e-6);
                    prop_assert!(e2.residual(p) <= 1e-6);
                }
            }
        }
    }
}
