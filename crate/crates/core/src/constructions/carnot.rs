use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{check_generic, rng, ConstructionError, GeometricConfiguration, Provenance, RETRY_BUDGET};
use crate::geometry::{
    carnot_product, carnot_solve_sixth, collinearity, conic_from_5_points, line_conic_intersections, Line, Side,
};
use crate::{Conic, PlanarPoint, Tolerances};

/// Metadata note attached to [`richter_gebert`] output.
pub const RICHTER_GEBERT_NOTE: &str = "type sometimes quoted as (12_6,4_3); \
the incidence count 12*2 = 4*6 = 24 flags forces (12_2,4_6), which is what is emitted";

/// A triangular face: its vertices and, for each of the sides
/// `A` (opposite the first vertex), `B` and `C`, the polytope edge lying on it.
#[derive(Debug, Clone, Copy)]
struct Face {
    tri: [usize; 3],
    sides: [usize; 3],
}

impl Face {
    /// Point slots in Carnot order `(A1, A2, B1, B2, C1, C2)`.
    fn slots(&self) -> [usize; 6] {
        let [a, b, c] = self.sides;
        [2 * a, 2 * a + 1, 2 * b, 2 * b + 1, 2 * c, 2 * c + 1]
    }
}

/// Ends of each edge, in the vertex order used for edge parameters.
struct Surface {
    vertices: Vec<PlanarPoint>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Face>,
}

impl Surface {
    fn edge_param(&self, e: usize, p: &PlanarPoint) -> f64 {
        let (a, b) = self.edges[e];
        let (x, y) = (self.vertices[a], self.vertices[b]);
        let d = y - x;
        (*p - x).dot(&d) / d.dot(&d)
    }

    fn triangle(&self, f: &Face) -> [PlanarPoint; 3] {
        f.tri.map(|v| self.vertices[v])
    }

    fn nondegenerate(&self) -> bool {
        self.faces.iter().all(|f| {
            let [a, b, c] = self.triangle(f);
            collinearity(&a, &b, &c) > 0.05
        })
    }

    fn free_point(&self, e: usize, rng: &mut ChaCha8Rng) -> PlanarPoint {
        let (a, b) = self.edges[e];
        self.vertices[a].lerp(&self.vertices[b], rng.gen_range(0.05..0.95))
    }

    /// Edge points stay away from the vertices, from each other and from
    /// infinity (in edge-parameter units).
    fn placed_well(&self, pts: &[PlanarPoint]) -> bool {
        (0..self.edges.len()).all(|e| {
            let (s, t) = (self.edge_param(e, &pts[2 * e]), self.edge_param(e, &pts[2 * e + 1]));
            let ok = |u: f64| u.is_finite() && u.abs() >= 0.05 && (u - 1.0).abs() >= 0.05 && (-2.0..=3.0).contains(&u);
            ok(s) && ok(t) && (s - t).abs() >= 0.05
        })
    }

    /// Fills every undetermined face in order: all but one of its missing
    /// points at random, the last by the Carnot condition.
    fn fill(&self, pts: &mut [Option<PlanarPoint>], rng: &mut ChaCha8Rng) -> Result<(), ConstructionError> {
        for f in &self.faces {
            let slots = f.slots();
            let missing: Vec<usize> = (0..6).filter(|&k| pts[slots[k]].is_none()).collect();
            let Some((&last, rest)) = missing.split_last() else {
                continue;
            };
            for &k in rest {
                let e = slots[k] / 2;
                pts[slots[k]] = Some(self.free_point(e, rng));
            }
            debug_assert_eq!(last % 2, 1);
            let known: Vec<PlanarPoint> = (0..6).filter(|&k| k != last).map(|k| pts[slots[k]].unwrap()).collect();
            let side = Side::ALL[last / 2];
            let z = carnot_solve_sixth(&self.triangle(f), &known.try_into().unwrap(), side)?;
            pts[slots[last]] = Some(z);
        }
        Ok(())
    }

    /// Fits each face conic through its first five points and checks the sixth.
    fn conics(&self, pts: &[PlanarPoint]) -> Result<(Vec<Conic>, Vec<f64>), ConstructionError> {
        let tol = Tolerances::default();
        let mut conics = Vec::with_capacity(self.faces.len());
        let mut carnot = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let six = f.slots().map(|s| pts[s]);
            carnot.push((carnot_product(&self.triangle(f), &six)? - 1.0).abs());
            let conic = conic_from_5_points(&[six[0], six[1], six[2], six[3], six[4]], &tol)?.conic;
            let r = conic.residual(&six[5]);
            if r > tol.incidence {
                return Err(ConstructionError::NonGeneric(format!(
                    "sixth face point off its conic ({r:e})"
                )));
            }
            conics.push(conic);
        }
        Ok((conics, carnot))
    }

    fn configuration(
        &self,
        pts: Vec<PlanarPoint>,
        prov: Provenance,
    ) -> Result<GeometricConfiguration, ConstructionError> {
        let (conics, carnot) = self.conics(&pts)?;
        let flags: BTreeSet<_> = self
            .faces
            .iter()
            .enumerate()
            .flat_map(|(j, f)| f.slots().map(|s| (s, j)))
            .collect();
        let prov = prov
            .param(
                "triangles",
                serde_json::json!(self
                    .faces
                    .iter()
                    .map(|f| self.triangle(f).map(|p| [p.x, p.y]))
                    .collect::<Vec<_>>()),
            )
            .param(
                "face_points",
                serde_json::json!(self.faces.iter().map(Face::slots).collect::<Vec<_>>()),
            )
            .param("carnot_residuals", serde_json::json!(carnot));
        let g = GeometricConfiguration::new(pts, conics, flags, crate::DEFAULT_TOL, prov);
        check_generic(&g)?;
        Ok(g)
    }
}

/// Face triangles and their point indices in the order
/// `(A1, A2, B1, B2, C1, C2)`, as recorded by the Carnot builders; conic
/// `j` belongs to face `j`.
pub fn carnot_faces(g: &GeometricConfiguration) -> Option<Vec<([PlanarPoint; 3], [usize; 6])>> {
    let tris = g.provenance.params.get("triangles")?.as_array()?;
    let slots = g.provenance.params.get("face_points")?.as_array()?;
    tris.iter()
        .zip(slots)
        .map(|(t, s)| {
            let t = t.as_array()?;
            let p = |k: usize| -> Option<PlanarPoint> {
                let xy = t.get(k)?.as_array()?;
                Some(PlanarPoint::new(xy.first()?.as_f64()?, xy.get(1)?.as_f64()?))
            };
            let tri = [p(0)?, p(1)?, p(2)?];
            let pts: Vec<usize> = s
                .as_array()?
                .iter()
                .map(|v| v.as_u64().map(|u| u as usize))
                .collect::<Option<_>>()?;
            let pts: [usize; 6] = pts.try_into().ok()?;
            Some((tri, pts))
        })
        .collect()
}

fn attempt<T>(
    builder: &'static str,
    seed: u64,
    mut f: impl FnMut(&mut ChaCha8Rng) -> Result<T, ConstructionError>,
) -> Result<T, ConstructionError> {
    let mut rng = rng(seed);
    for _ in 0..RETRY_BUDGET {
        match f(&mut rng) {
            Ok(v) => return Ok(v),
            Err(ConstructionError::InvalidParameter(s)) => return Err(ConstructionError::InvalidParameter(s)),
            Err(_) => continue,
        }
    }
    Err(ConstructionError::RetryBudget {
        builder,
        tries: RETRY_BUDGET,
    })
}

/// Planar tetrahedron `ABCD` with two points on each edge line: face `ABC`
/// is cut from a random conic, faces `ABD` and `ACD` are completed by the
/// Carnot condition, and the last face `BCD` closes by itself.
pub fn richter_gebert(seed: u64) -> Result<GeometricConfiguration, ConstructionError> {
    // vertices A, B, C, D = 0..4; edges AB, AC, AD, BC, BD, CD = 0..6
    let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let faces = vec![
        Face {
            tri: [0, 1, 2],
            sides: [3, 1, 0],
        },
        Face {
            tri: [0, 1, 3],
            sides: [4, 2, 0],
        },
        Face {
            tri: [0, 2, 3],
            sides: [5, 2, 1],
        },
        Face {
            tri: [1, 2, 3],
            sides: [5, 4, 3],
        },
    ];
    attempt("richter-gebert", seed, |rng| {
        let vertices: Vec<PlanarPoint> = (0..4)
            .map(|_| PlanarPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let s = Surface {
            vertices,
            edges: edges.clone(),
            faces: faces.clone(),
        };
        if !s.nondegenerate() {
            return Err(ConstructionError::NonGeneric("flat face".into()));
        }
        let [a, b, c] = s.triangle(&s.faces[0]);
        let centroid = (a + b + c) * (1.0 / 3.0);
        let size = a.distance(&b).max(b.distance(&c)).max(c.distance(&a));
        let conic = Conic::ellipse(
            centroid + PlanarPoint::new(rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1)) * size,
            rng.gen_range(0.2..0.6) * size,
            rng.gen_range(0.2..0.6) * size,
            rng.gen_range(0.0..std::f64::consts::PI),
        )?;
        let mut pts = vec![None; 12];
        for e in s.faces[0].sides {
            let (x, y) = s.edges[e];
            let cut = line_conic_intersections(&Line::through(&s.vertices[x], &s.vertices[y]), &conic);
            if cut.len() != 2 {
                return Err(ConstructionError::NonGeneric("conic misses a side".into()));
            }
            pts[2 * e] = Some(cut[0]);
            pts[2 * e + 1] = Some(cut[1]);
        }
        s.fill(&mut pts, rng)?;
        let pts: Vec<PlanarPoint> = pts.into_iter().map(Option::unwrap).collect();
        if !s.placed_well(&pts) {
            return Err(ConstructionError::NonGeneric("edge point too close to a vertex".into()));
        }
        let prov = Provenance::new("richter-gebert")
            .param("seed", seed)
            .note(RICHTER_GEBERT_NOTE);
        s.configuration(pts, prov)
    })
}

/// Carnot configuration `((6n)_2, (2n)_6)` on a projected `n`-gonal
/// dipyramid. Upper faces are visited in ring order, then lower faces;
/// each face fixes its missing points by free choices and one Carnot
/// solve, and the last lower face closes by itself.
pub fn dipyramid_carnot(n: usize, seed: u64) -> Result<GeometricConfiguration, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter(format!("n = {n}: need at least 3")));
    }
    // vertices: ring 0..n, apex N = n, apex S = n + 1
    // edges: spokes N v_i = i, ring v_i v_{i+1} = n + i, spokes S v_i = 2n + i
    let (north, south) = (n, n + 1);
    let mut edges = Vec::with_capacity(3 * n);
    edges.extend((0..n).map(|i| (north, i)));
    edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    edges.extend((0..n).map(|i| (south, i)));
    let mut faces = Vec::with_capacity(2 * n);
    for (apex, spoke) in [(north, 0), (south, 2 * n)] {
        for i in 0..n {
            let next = (i + 1) % n;
            faces.push(Face {
                tri: [apex, i, next],
                sides: [n + i, spoke + next, spoke + i],
            });
        }
    }
    attempt("dipyramid-carnot", seed, |rng| {
        let vertices = projected_dipyramid(n, rng);
        let s = Surface {
            vertices,
            edges: edges.clone(),
            faces: faces.clone(),
        };
        if !s.nondegenerate() {
            return Err(ConstructionError::NonGeneric("flat face".into()));
        }
        let mut pts = vec![None; 6 * n];
        s.fill(&mut pts, rng)?;
        let pts: Vec<PlanarPoint> = pts.into_iter().map(Option::unwrap).collect();
        if !s.placed_well(&pts) {
            return Err(ConstructionError::NonGeneric("edge point too close to a vertex".into()));
        }
        let prov = Provenance::new("dipyramid-carnot").param("n", n).param("seed", seed);
        s.configuration(pts, prov)
    })
}

/// Ring of radius 1 and apices at height ±1.2, turned by a random rotation
/// and projected orthogonally.
fn projected_dipyramid(n: usize, rng: &mut ChaCha8Rng) -> Vec<PlanarPoint> {
    let mut pts3: Vec<[f64; 3]> = (0..n)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            [a.cos(), a.sin(), 0.0]
        })
        .collect();
    pts3.push([0.0, 0.0, 1.2]);
    pts3.push([0.0, 0.0, -1.2]);
    // random rotation from a normalized quaternion
    let q: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-6);
    let [w, x, y, z] = q.map(|c| c / norm);
    let r = [
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
    ];
    pts3.iter()
        .map(|p| {
            PlanarPoint::new(
                r[0][0] * p[0] + r[0][1] * p[1] + r[0][2] * p[2],
                r[1][0] * p[0] + r[1][1] * p[1] + r[1][2] * p[2],
            )
        })
        .collect()
}
