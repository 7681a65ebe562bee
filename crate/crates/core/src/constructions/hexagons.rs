use std::collections::{BTreeSet, HashMap};

use super::polytope::{off_span, orthonormal_basis, Polytope4};
use super::{check_generic, ConstructionError, GeometricConfiguration, Provenance};
use crate::geometry::{central_conic_from_pairs, project_conic_plane, GeometryError, Point2};
use crate::{Point4, Projection4to2};

/// Planar centrally symmetric hexagon in E⁴ whose vertices are midpoints
/// of polytope edges, listed in cyclic order.
#[derive(Debug, Clone, PartialEq)]
pub struct Hexagon4 {
    pub center: Point4,
    pub vertices: [Point4; 6],
    /// Polytope edge whose midpoint is each vertex.
    pub edges: [usize; 6],
}

impl Hexagon4 {
    /// Orders six edge midpoints around their centroid.
    fn from_edges(poly: &Polytope4, edges: [usize; 6]) -> Self {
        let mids = edges.map(|e| poly.edge_midpoint(e));
        let center = mids.iter().fold(Point4::zero(), |acc, p| acc + *p) * (1.0 / 6.0);
        let basis = orthonormal_basis(&[mids[0] - center, mids[1] - center, mids[2] - center]);
        let angle = |p: &Point4| {
            let d = *p - center;
            d.dot(&basis[1]).atan2(d.dot(&basis[0]))
        };
        let mut order: Vec<usize> = (0..6).collect();
        order.sort_by(|&a, &b| angle(&mids[a]).total_cmp(&angle(&mids[b])));
        Self {
            center,
            vertices: std::array::from_fn(|k| mids[order[k]]),
            edges: std::array::from_fn(|k| edges[order[k]]),
        }
    }

    /// Orthonormal basis of the hexagon's plane.
    pub fn plane_basis(&self) -> (Point4, Point4) {
        let b = orthonormal_basis(&[self.vertices[0] - self.center, self.vertices[1] - self.center]);
        (b[0], b[1])
    }

    /// Largest distance of a vertex from the plane through the centre.
    pub fn nonplanarity(&self) -> f64 {
        let (u, v) = self.plane_basis();
        self.vertices
            .iter()
            .map(|p| off_span(&(*p - self.center), &[u, v]))
            .fold(0.0, f64::max)
    }

    /// Largest deviation from central symmetry, `|v_k + v_{k+3} - 2c|`.
    pub fn asymmetry(&self) -> f64 {
        (0..3)
            .map(|k| (self.vertices[k] + self.vertices[k + 3] - self.center * 2.0).norm())
            .fold(0.0, f64::max)
    }

    pub fn circumradii(&self) -> [f64; 6] {
        self.vertices.map(|p| p.distance(&self.center))
    }

    /// The circumscribed conic, mapped to the plane by `proj`.
    pub fn projected_conic(&self, proj: &Projection4to2) -> Result<crate::Conic, GeometryError> {
        let (u, v) = self.plane_basis();
        let local = |p: &Point4| {
            let d = *p - self.center;
            Point2::new(d.dot(&u), d.dot(&v))
        };
        let reps = [
            local(&self.vertices[0]),
            local(&self.vertices[1]),
            local(&self.vertices[2]),
        ];
        let conic = central_conic_from_pairs(Point2::origin(), &reps)?;
        project_conic_plane(proj, &self.center, &u, &v, &conic)
    }
}

/// The `2mn` prism hexagons of `P_m × P_n`.
///
/// In a prism with side edges `s_k`, top base edges `t_k` and bottom base
/// edges `b_k` (indices mod the polygon size `r`), hexagon `k` runs through
/// the midpoints of `s_k, t_k, t_{k+r/2-1}, s_{k+r/2}, b_{k+r/2}, b_{k-1}`.
/// Hexagons `k` and `k + r/2` are the two mirror images spanned by the
/// same pair of opposite side edges.
pub fn pmn_hexagons(m: usize, n: usize) -> Result<(Polytope4, Vec<Hexagon4>), ConstructionError> {
    for (name, k) in [("m", m), ("n", n)] {
        if k < 4 || k % 2 == 1 {
            return Err(ConstructionError::InvalidParameter(format!(
                "{name} = {k}: polygon sizes must be even and at least 4"
            )));
        }
    }
    let poly = Polytope4::duoprism(m, n);
    // edges along the m-gon: i + m j; along the n-gon: m n + i + m j
    let medge = |i: usize, j: usize| (i % m) + m * (j % n);
    let nedge = |i: usize, j: usize| m * n + (i % m) + m * (j % n);
    let mut hexagons = Vec::with_capacity(2 * m * n);
    let mut push =
        |r: usize, side: &dyn Fn(usize) -> usize, top: &dyn Fn(usize) -> usize, bottom: &dyn Fn(usize) -> usize| {
            let h = r / 2;
            for k in 0..r {
                let edges = [
                    side(k),
                    top(k),
                    top(k + h - 1),
                    side(k + h),
                    bottom(k + h),
                    bottom(k + r - 1),
                ];
                hexagons.push(Hexagon4::from_edges(&poly, edges));
            }
        };
    for j in 0..n {
        push(m, &|k| nedge(k, j), &|k| medge(k, j + 1), &|k| medge(k, j));
    }
    for i in 0..m {
        push(n, &|k| medge(i, k), &|k| nedge(i + 1, k), &|k| nedge(i, k));
    }
    Ok((poly, hexagons))
}

/// The 96 regular hexagons of the 24-cell: in each octahedral cell, one
/// per pair of opposite faces, through the midpoints of the six edges
/// joining the two faces.
pub fn cell24_hexagons() -> (Polytope4, Vec<Hexagon4>) {
    let poly = Polytope4::cell24();
    let edge_of = poly.edge_index();
    let mut hexagons = Vec::with_capacity(96);
    for k in 0..poly.facets.len() {
        let cell: Vec<usize> = poly.facet_vertices(k).into_iter().collect();
        let center = cell.iter().fold(Point4::zero(), |acc, &v| acc + poly.vertices[v]) * (1.0 / cell.len() as f64);
        let antipode = |v: usize| {
            let target = center * 2.0 - poly.vertices[v];
            *cell
                .iter()
                .find(|&&w| poly.vertices[w].distance(&target) < 1e-9)
                .expect("octahedra are centrally symmetric")
        };
        let mut seen = BTreeSet::new();
        for &f in &poly.facets[k] {
            let face: BTreeSet<usize> = poly.faces2[f].iter().copied().collect();
            let opposite: BTreeSet<usize> = face.iter().map(|&v| antipode(v)).collect();
            let key = face.clone().min(opposite.clone());
            if !seen.insert(key) {
                continue;
            }
            let mut edges = Vec::with_capacity(6);
            for &a in &face {
                for &b in &opposite {
                    if let Some(&e) = edge_of.get(&(a.min(b), a.max(b))) {
                        edges.push(e);
                    }
                }
            }
            let edges: [usize; 6] = edges.try_into().expect("six edges join opposite faces");
            hexagons.push(Hexagon4::from_edges(&poly, edges));
        }
    }
    (poly, hexagons)
}

/// Projects hexagons and their edge-midpoint vertices; point `e` is the
/// midpoint of polytope edge `e`.
fn project_hexagons(
    poly: &Polytope4,
    hexagons: &[Hexagon4],
    proj: &Projection4to2,
    provenance: Provenance,
) -> Result<GeometricConfiguration, ConstructionError> {
    let points = (0..poly.edges.len())
        .map(|e| proj.apply(&poly.edge_midpoint(e)))
        .collect();
    let mut conics = Vec::with_capacity(hexagons.len());
    let mut flags = BTreeSet::new();
    for (j, h) in hexagons.iter().enumerate() {
        let conic = h.projected_conic(proj).map_err(|e| match e {
            GeometryError::DegeneratePlane(s) => {
                ConstructionError::NonGeneric(format!("hexagon {j} projects degenerately (sine {s:e})"))
            }
            other => other.into(),
        })?;
        conics.push(conic);
        flags.extend(h.edges.iter().map(|&e| (e, j)));
    }
    let g = GeometricConfiguration::new(points, conics, flags, crate::DEFAULT_TOL, provenance);
    check_generic(&g)?;
    Ok(g)
}

fn projection_param(proj: &Projection4to2) -> serde_json::Value {
    serde_json::json!(proj.map)
}

/// The `((2mn)_6)` point-ellipse configuration of the prism hexagons of
/// `P_m × P_n`, projected to the plane.
pub fn pmn(m: usize, n: usize, proj: &Projection4to2) -> Result<GeometricConfiguration, ConstructionError> {
    let (poly, hexagons) = pmn_hexagons(m, n)?;
    let prov = Provenance::new("pmn")
        .param("m", m)
        .param("n", n)
        .param("projection", projection_param(proj));
    project_hexagons(&poly, &hexagons, proj, prov)
}

/// The `(96_6)` configuration of the 24-cell hexagons, projected.
pub fn cell24(proj: &Projection4to2) -> Result<GeometricConfiguration, ConstructionError> {
    let (poly, hexagons) = cell24_hexagons();
    let prov = Provenance::new("cell24").param("projection", projection_param(proj));
    project_hexagons(&poly, &hexagons, proj, prov)
}

/// Incidences of polytope edges in hexagons, as a count per edge.
pub fn edge_degrees(num_edges: usize, hexagons: &[Hexagon4]) -> Vec<usize> {
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for h in hexagons {
        for &e in &h.edges {
            *deg.entry(e).or_default() += 1;
        }
    }
    (0..num_edges).map(|e| deg.get(&e).copied().unwrap_or(0)).collect()
}
