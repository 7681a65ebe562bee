use std::collections::BTreeSet;
use std::f64::consts::PI;

use super::{check_generic, ConstructionError, GeometricConfiguration, Provenance};
use crate::geometry::conic_conic_intersections;
use crate::{Conic, PlanarPoint, Tolerances};

/// Two congruent perpendicular ellipses thickened from crossing unit
/// segments, and their four intersection points: a `(4_2, 2_4)`.
pub fn crossed_ellipses() -> Result<GeometricConfiguration, ConstructionError> {
    let (a, b) = (0.6, 0.3);
    let e1 = Conic::ellipse(PlanarPoint::origin(), a, b, 0.0)?;
    let e2 = Conic::ellipse(PlanarPoint::origin(), a, b, PI / 2.0)?;
    let points = conic_conic_intersections(&e1, &e2, &Tolerances::default())?;
    if points.len() != 4 {
        return Err(ConstructionError::NonGeneric(format!(
            "ellipses meet in {} points",
            points.len()
        )));
    }
    let flags = (0..4).flat_map(|p| [(p, 0), (p, 1)]).collect();
    let prov = Provenance::new("crossed-ellipses")
        .param("semi_major", a)
        .param("semi_minor", b);
    let g = GeometricConfiguration::new(points, vec![e1, e2], flags, crate::DEFAULT_TOL, prov);
    check_generic(&g)?;
    Ok(g)
}

/// [`polygon_ring`] with elongation 0.15 and minor semi-axis 0.075.
pub fn polygon_ring_default(n: usize) -> Result<GeometricConfiguration, ConstructionError> {
    polygon_ring(n, 0.15, 0.075)
}

/// Regular `n`-gon with unit sides; every side is elongated by
/// `elongation` at both ends and thickened into an ellipse with semi-minor
/// axis `minor`. Consecutive ellipses meet in four points, which are the
/// configuration points: a `(4n_2, n_8)`.
pub fn polygon_ring(n: usize, elongation: f64, minor: f64) -> Result<GeometricConfiguration, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter(format!(
            "n = {n}: need at least 3 sides"
        )));
    }
    if !(elongation > 0.0 && minor > 0.0 && elongation.is_finite() && minor.is_finite()) {
        return Err(ConstructionError::InvalidParameter(
            "elongation and minor axis must be positive".into(),
        ));
    }
    let radius = 0.5 / (PI / n as f64).sin();
    let vertex = |k: usize| {
        let a = 2.0 * PI * (k % n) as f64 / n as f64;
        PlanarPoint::new(radius * a.cos(), radius * a.sin())
    };
    let conics = (0..n)
        .map(|k| {
            let (p, q) = (vertex(k), vertex(k + 1));
            let d = q - p;
            Conic::ellipse(p.midpoint(&q), 0.5 + elongation, minor, d.y.atan2(d.x))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut points = Vec::with_capacity(4 * n);
    let mut flags = BTreeSet::new();
    let tol = Tolerances::default();
    for k in 0..n {
        let next = (k + 1) % n;
        let meet = conic_conic_intersections(&conics[k], &conics[next], &tol)?;
        if meet.len() != 4 {
            return Err(ConstructionError::NonGeneric(format!(
                "ellipses {k} and {next} meet in {} points, not 4 (elongation {elongation}, minor {minor})",
                meet.len()
            )));
        }
        for p in meet {
            flags.insert((points.len(), k));
            flags.insert((points.len(), next));
            points.push(p);
        }
    }
    let prov = Provenance::new("polygon-ring")
        .param("n", n)
        .param("elongation", elongation)
        .param("minor", minor);
    let g = GeometricConfiguration::new(points, conics, flags, crate::DEFAULT_TOL, prov);
    check_generic(&g)?;
    Ok(g)
}
