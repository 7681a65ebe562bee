use std::collections::BTreeSet;

use super::{check_generic, ConstructionError, GeometricConfiguration, Polytope4, Provenance};
use crate::geometry::{collinearity, conic_from_5_points};
use crate::{Conic, PlanarPoint, Projection4to2, Tolerances};

/// The two ellipses of a parallelogram `ABCD` with one point on each side,
/// the side points being at parameter `t` from `A, B, C, D` respectively
/// (hence centrally symmetric). The first conic passes through the side
/// points and `A, C`, the second through the side points and `B, D`.
/// Side points are returned in the order `AB, BC, CD, DA`.
pub fn parallelogram_ellipse_pair(
    a: PlanarPoint,
    b: PlanarPoint,
    c: PlanarPoint,
    d: PlanarPoint,
    t: f64,
) -> Result<(Conic, Conic, Vec<PlanarPoint>), ConstructionError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(ConstructionError::InvalidParameter(format!(
            "t = {t} must lie in (0, 1)"
        )));
    }
    let scale = a.distance(&c).max(b.distance(&d));
    if ((d - a) - (c - b)).norm() > 1e-10 * scale.max(1.0) {
        return Err(ConstructionError::InvalidParameter(
            "ABCD is not a parallelogram".into(),
        ));
    }
    if collinearity(&a, &b, &c) <= 1e-10 {
        return Err(ConstructionError::InvalidParameter("degenerate parallelogram".into()));
    }
    let sides = vec![a.lerp(&b, t), b.lerp(&c, t), c.lerp(&d, t), d.lerp(&a, t)];
    let tol = Tolerances::default();
    let fit = |vertex: PlanarPoint, opposite: PlanarPoint| -> Result<Conic, ConstructionError> {
        let conic = conic_from_5_points(&[sides[0], sides[1], sides[2], sides[3], vertex], &tol)?.conic;
        let r = conic.residual(&opposite);
        if r > tol.incidence {
            return Err(ConstructionError::NonGeneric(format!(
                "opposite vertex misses the ellipse (residual {r:e})"
            )));
        }
        Ok(conic)
    };
    Ok((fit(a, c)?, fit(b, d)?, sides))
}

/// The `(48_6)` from a parallel projection of the 4-cube: for each of the
/// 24 projected square faces, the two ellipses of
/// [`parallelogram_ellipse_pair`] with `t = 1/2`. Points `0..16` are the
/// projected vertices and `16 + e` the midpoint of edge `e`.
pub fn qcube_48(proj: &Projection4to2) -> Result<GeometricConfiguration, ConstructionError> {
    let q = Polytope4::hypercube();
    let edge_of = q.edge_index();
    let mut points: Vec<PlanarPoint> = q.vertices.iter().map(|v| proj.apply(v)).collect();
    points.extend((0..q.edges.len()).map(|e| proj.apply(&q.edge_midpoint(e))));
    let mut conics = Vec::with_capacity(48);
    let mut flags = BTreeSet::new();
    for (f, face) in q.faces2.iter().enumerate() {
        let [a, b, c, d] = [face[0], face[1], face[2], face[3]];
        let (e1, e2, _) = parallelogram_ellipse_pair(points[a], points[b], points[c], points[d], 0.5)
            .map_err(|e| ConstructionError::NonGeneric(format!("face {f}: {e}")))?;
        let mids: Vec<usize> = [(a, b), (b, c), (c, d), (d, a)]
            .iter()
            .map(|&(x, y)| 16 + edge_of[&(x.min(y), x.max(y))])
            .collect();
        for (k, (conic, ends)) in [(e1, [a, c]), (e2, [b, d])].into_iter().enumerate() {
            let j = 2 * f + k;
            conics.push(conic);
            flags.extend(mids.iter().chain(&ends).map(|&p| (p, j)));
        }
    }
    let prov = Provenance::new("qcube-48")
        .param("t", 0.5)
        .param("projection", serde_json::json!(proj.map));
    let g = GeometricConfiguration::new(points, conics, flags, crate::DEFAULT_TOL, prov);
    check_generic(&g)?;
    Ok(g)
}
