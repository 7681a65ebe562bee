use std::collections::BTreeSet;

use rand::Rng;

use super::{rng, ConstructionError, GeometricConfiguration, Provenance};
use crate::analysis::{close_conic_pairs, close_point_pairs};
use crate::{AffineMap2, Real};

/// Minkowski product with no pre-transform; see [`product_with`].
pub fn product(
    c1: &GeometricConfiguration,
    c2: &GeometricConfiguration,
) -> Result<GeometricConfiguration, ConstructionError> {
    product_with(c1, c2, None)
}

/// Image of `g` under a rotation about the origin by a seeded random angle.
pub fn genericize(g: &GeometricConfiguration, seed: u64) -> Result<GeometricConfiguration, ConstructionError> {
    let angle = rng(seed).gen_range(0.1..(2.0 * std::f64::consts::PI - 0.1));
    let mut out = g.transformed(&AffineMap2::rotation(angle))?;
    out.provenance.notes.pop();
    out.provenance.notes.push(format!("rotated by {angle}"));
    Ok(out)
}

/// Minkowski product `C1 × C2`.
///
/// Point `i1 p2 + i2` is `v1 + v2`. Blocks `i1 n2 + j` are the conics of
/// `C2` translated by the points of `C1`; blocks `p1 n2 + i2 n1 + j` are
/// the conics of `C1` translated by the points of `C2`. With
/// `genericize = Some(seed)` the second factor is first rotated by
/// [`genericize`]. Colliding points or conics are refused.
pub fn product_with(
    c1: &GeometricConfiguration,
    c2: &GeometricConfiguration,
    genericize_seed: Option<u64>,
) -> Result<GeometricConfiguration, ConstructionError> {
    let rotated;
    let c2 = match genericize_seed {
        Some(seed) => {
            rotated = genericize(c2, seed)?;
            &rotated
        }
        None => c2,
    };
    let (p1, p2) = (c1.points.len(), c2.points.len());
    let (n1, n2) = (c1.conics.len(), c2.conics.len());
    let mut points = Vec::with_capacity(p1 * p2);
    for v1 in &c1.points {
        for v2 in &c2.points {
            points.push(*v1 + *v2);
        }
    }
    let mut conics = Vec::with_capacity(p1 * n2 + p2 * n1);
    for v1 in &c1.points {
        conics.extend(c2.conics.iter().map(|c| c.translate(*v1)));
    }
    for v2 in &c2.points {
        conics.extend(c1.conics.iter().map(|c| c.translate(*v2)));
    }
    let mut flags = BTreeSet::new();
    for i1 in 0..p1 {
        for &(i2, j) in &c2.flags {
            flags.insert((i1 * p2 + i2, i1 * n2 + j));
        }
    }
    for i2 in 0..p2 {
        for &(i1, j) in &c1.flags {
            flags.insert((i1 * p2 + i2, p1 * n2 + i2 * n1 + j));
        }
    }
    let merge = f64::MERGE_TOL;
    let advice = "pre-transform a factor by a generic affine map (genericize)";
    if let Some(&(a, b)) = close_point_pairs(&points, merge).first() {
        return Err(ConstructionError::NonGeneric(format!(
            "product points {a} and {b} coincide; {advice}"
        )));
    }
    if let Some(&(a, b)) = close_conic_pairs(&conics, merge).first() {
        return Err(ConstructionError::NonGeneric(format!(
            "product conics {a} and {b} coincide; {advice}"
        )));
    }
    let prov = Provenance::new("product")
        .param("left", c1.provenance.builder.clone())
        .param("right", c2.provenance.builder.clone())
        .param(
            "genericize",
            genericize_seed.map_or(serde_json::Value::Null, serde_json::Value::from),
        );
    Ok(GeometricConfiguration::new(
        points,
        conics,
        flags,
        c1.tol.max(c2.tol),
        prov,
    ))
}
