use std::collections::{BTreeSet, HashMap};

use crate::geometry;
use crate::Point4;

/// Convex 4-polytope given by its vertices, edges, 2-faces and facets.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope4 {
    pub vertices: Vec<Point4>,
    /// Vertex pairs with the smaller index first.
    pub edges: Vec<(usize, usize)>,
    /// Vertex cycles.
    pub faces2: Vec<Vec<usize>>,
    /// Sets of 2-face indices.
    pub facets: Vec<Vec<usize>>,
}

impl Polytope4 {
    /// Index of the edge joining `a` and `b`.
    pub fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }

    pub fn edge_midpoint(&self, e: usize) -> Point4 {
        let (a, b) = self.edges[e];
        self.vertices[a].midpoint(&self.vertices[b])
    }

    /// Largest distance of a 2-face vertex from the affine plane of the
    /// face's first three vertices.
    pub fn max_face_nonplanarity(&self) -> f64 {
        self.faces2
            .iter()
            .map(|f| {
                let o = self.vertices[f[0]];
                let basis = orthonormal_basis(&[self.vertices[f[1]] - o, self.vertices[f[2]] - o]);
                f.iter()
                    .map(|&v| off_span(&(self.vertices[v] - o), &basis))
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// `P_m × P_n`: product of a regular m-gon in the `x1 x2` plane and a
    /// regular n-gon in the `x3 x4` plane, both with unit edges. Vertex
    /// `(i, j)` has index `i + m j`.
    pub fn duoprism(m: usize, n: usize) -> Self {
        let u = regular_polygon(m);
        let w = regular_polygon(n);
        let vid = |i: usize, j: usize| (i % m) + m * (j % n);
        let mut vertices = Vec::with_capacity(m * n);
        for wj in &w {
            for ui in &u {
                vertices.push(Point4::new(ui.0, ui.1, wj.0, wj.1));
            }
        }
        let mut edges = Vec::with_capacity(2 * m * n);
        for j in 0..n {
            for i in 0..m {
                edges.push(ordered(vid(i, j), vid(i + 1, j)));
            }
        }
        for j in 0..n {
            for i in 0..m {
                edges.push(ordered(vid(i, j), vid(i, j + 1)));
            }
        }
        let mut faces2 = Vec::new();
        // squares e_i × e_j, index i + m j
        for j in 0..n {
            for i in 0..m {
                faces2.push(vec![vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)]);
            }
        }
        // m-gons P_m × w_j, then n-gons u_i × P_n
        for j in 0..n {
            faces2.push((0..m).map(|i| vid(i, j)).collect());
        }
        for i in 0..m {
            faces2.push((0..n).map(|j| vid(i, j)).collect());
        }
        let mgon = |j: usize| m * n + (j % n);
        let ngon = |i: usize| m * n + n + (i % m);
        let mut facets = Vec::new();
        for j in 0..n {
            let mut f: Vec<usize> = (0..m).map(|i| i + m * j).collect();
            f.extend([mgon(j), mgon(j + 1)]);
            facets.push(f);
        }
        for i in 0..m {
            let mut f: Vec<usize> = (0..n).map(|j| i + m * j).collect();
            f.extend([ngon(i), ngon(i + 1)]);
            facets.push(f);
        }
        Self {
            vertices,
            edges,
            faces2,
            facets,
        }
    }

    /// The 4-cube `{±1/2}⁴`; vertex index has bit `k` set when coordinate
    /// `k` is positive.
    pub fn hypercube() -> Self {
        let vertices: Vec<Point4> = (0..16usize)
            .map(|v| geometry::Point4(std::array::from_fn(|k| if v >> k & 1 == 1 { 0.5 } else { -0.5 })))
            .collect();
        let mut edges = Vec::new();
        for v in 0..16usize {
            for k in 0..4 {
                if v >> k & 1 == 0 {
                    edges.push((v, v | 1 << k));
                }
            }
        }
        let mut faces2 = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                for base in 0..16usize {
                    if base >> i & 1 == 0 && base >> j & 1 == 0 {
                        faces2.push(vec![base, base | 1 << i, base | 1 << i | 1 << j, base | 1 << j]);
                    }
                }
            }
        }
        let mut facets = Vec::new();
        for k in 0..4 {
            for bit in 0..2 {
                let f = faces2
                    .iter()
                    .enumerate()
                    .filter(|(_, face)| face.iter().all(|&v| v >> k & 1 == bit))
                    .map(|(i, _)| i)
                    .collect();
                facets.push(f);
            }
        }
        Self {
            vertices,
            edges,
            faces2,
            facets,
        }
    }

    /// The 24-cell with vertices the permutations of `(±1, ±1, 0, 0)`.
    pub fn cell24() -> Self {
        let mut vertices = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                for si in [1.0, -1.0] {
                    for sj in [1.0, -1.0] {
                        let mut c = [0.0; 4];
                        c[i] = si;
                        c[j] = sj;
                        vertices.push(geometry::Point4(c));
                    }
                }
            }
        }
        let n = vertices.len();
        let adjacent = |a: usize, b: usize| (vertices[a].distance(&vertices[b]) - 2f64.sqrt()).abs() < 1e-9;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if adjacent(a, b) {
                    edges.push((a, b));
                }
            }
        }
        let mut faces2 = Vec::new();
        for &(a, b) in &edges {
            for c in (b + 1)..n {
                if adjacent(a, c) && adjacent(b, c) {
                    faces2.push(vec![a, b, c]);
                }
            }
        }
        let facets = cell24_centers()
            .iter()
            .map(|c| {
                let cell: BTreeSet<usize> = (0..n).filter(|&v| (vertices[v].dot(c) - 1.0).abs() < 1e-9).collect();
                faces2
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.iter().all(|v| cell.contains(v)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Self {
            vertices,
            edges,
            faces2,
            facets,
        }
    }

    /// Vertices of facet `k`.
    pub fn facet_vertices(&self, k: usize) -> BTreeSet<usize> {
        self.facets[k]
            .iter()
            .flat_map(|&f| self.faces2[f].iter().copied())
            .collect()
    }
}

/// Directions `c` with `v · c = 1` on exactly the six vertices of one
/// octahedral cell of the 24-cell.
fn cell24_centers() -> Vec<Point4> {
    let mut out = Vec::new();
    for k in 0..4 {
        for s in [1.0, -1.0] {
            let mut c = [0.0; 4];
            c[k] = s;
            out.push(geometry::Point4(c));
        }
    }
    for signs in 0..16usize {
        out.push(geometry::Point4(std::array::from_fn(|k| {
            if signs >> k & 1 == 1 {
                -0.5
            } else {
                0.5
            }
        })));
    }
    out
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Vertices of a regular k-gon with unit edge, centred at the origin.
pub(crate) fn regular_polygon(k: usize) -> Vec<(f64, f64)> {
    let r = 0.5 / (std::f64::consts::PI / k as f64).sin();
    (0..k)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
            (r * a.cos(), r * a.sin())
        })
        .collect()
}

/// Gram-Schmidt on the given vectors, dropping dependent ones.
pub(crate) fn orthonormal_basis(vs: &[Point4]) -> Vec<Point4> {
    let mut basis: Vec<Point4> = Vec::new();
    for v in vs {
        let mut w = *v;
        for b in &basis {
            w = w - *b * w.dot(b);
        }
        let n = w.norm();
        if n > 1e-12 {
            basis.push(w * (1.0 / n));
        }
    }
    basis
}

/// Distance of `v` from the span of an orthonormal basis.
pub(crate) fn off_span(v: &Point4, basis: &[Point4]) -> f64 {
    let mut w = *v;
    for b in basis {
        w = w - *b * w.dot(b);
    }
    w.norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(p: &Polytope4) -> i64 {
        p.vertices.len() as i64 - p.edges.len() as i64 + p.faces2.len() as i64 - p.facets.len() as i64
    }

    #[test]
    fn hypercube_counts() {
        let q = Polytope4::hypercube();
        assert_eq!(
            (q.vertices.len(), q.edges.len(), q.faces2.len(), q.facets.len()),
            (16, 32, 24, 8)
        );
        assert_eq!(euler(&q), 0);
        assert!(q.facets.iter().all(|f| f.len() == 6));
        assert!(q.max_face_nonplanarity() < 1e-12);
        for &(a, b) in &q.edges {
            assert!((q.vertices[a].distance(&q.vertices[b]) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn duoprism_counts() {
        for (m, n) in [(4, 4), (3, 5), (6, 8)] {
            let p = Polytope4::duoprism(m, n);
            assert_eq!(p.vertices.len(), m * n);
            assert_eq!(p.edges.len(), 2 * m * n);
            assert_eq!(p.faces2.len(), m * n + m + n);
            assert_eq!(p.facets.len(), m + n);
            assert_eq!(euler(&p), 0);
            assert!(p.max_face_nonplanarity() < 1e-12);
            for &(a, b) in &p.edges {
                assert!((p.vertices[a].distance(&p.vertices[b]) - 1.0).abs() < 1e-12);
            }
            assert_eq!(p.edges.iter().collect::<BTreeSet<_>>().len(), 2 * m * n);
        }
    }

    #[test]
    fn cell24_counts() {
        let c = Polytope4::cell24();
        assert_eq!(
            (c.vertices.len(), c.edges.len(), c.faces2.len(), c.facets.len()),
            (24, 96, 96, 24)
        );
        assert_eq!(euler(&c), 0);
        for k in 0..24 {
            assert_eq!(c.facets[k].len(), 8);
            assert_eq!(c.facet_vertices(k).len(), 6);
        }
        // each vertex has degree 8
        let mut deg = [0; 24];
        for &(a, b) in &c.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        assert!(deg.iter().all(|&d| d == 8));
    }
}
