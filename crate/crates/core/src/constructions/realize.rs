use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{check_generic, rng, ConstructionError, GeometricConfiguration, Provenance, RETRY_BUDGET};
use crate::analysis::close_conic_pairs;
use crate::geometry::conic_from_5_points;
use crate::incidence::IncidenceStructure;
use crate::{Conic, PlanarPoint, Real, Tolerances};

/// Threshold for the collinearity and concyclicity determinants on points
/// in the unit square.
pub const GENERICITY_THRESHOLD: f64 = 1e-9;

/// Largest number of 6-subsets scanned for coconical points before
/// falling back to the per-block incidence scan alone.
const COCONIC_SCAN_LIMIT: usize = 200_000;

fn random_points(p: usize, rng: &mut ChaCha8Rng) -> Vec<PlanarPoint> {
    (0..p)
        .map(|_| PlanarPoint::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)))
        .collect()
}

/// `det [b - a, c - a]`.
pub fn orientation_det(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint) -> f64 {
    (*b - *a).cross(&(*c - *a))
}

/// `det [x² + y², x, y, 1]` over four points; zero iff they are concyclic
/// or collinear.
pub fn concyclic_det(p: &[PlanarPoint; 4]) -> f64 {
    // subtract the last row to reduce to a 3×3 determinant
    let d = p[3];
    let rows: Vec<[f64; 3]> = p[..3]
        .iter()
        .map(|q| {
            let (x, y) = (q.x - d.x, q.y - d.y);
            [x * x + y * y, x, y]
        })
        .collect();
    rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
}

fn no_three_collinear(pts: &[PlanarPoint]) -> bool {
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if orientation_det(&pts[a], &pts[b], &pts[c]).abs() <= GENERICITY_THRESHOLD {
                    return false;
                }
            }
        }
    }
    true
}

fn no_four_concyclic(pts: &[PlanarPoint]) -> bool {
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if concyclic_det(&[pts[a], pts[b], pts[c], pts[d]]).abs() <= GENERICITY_THRESHOLD {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Circle through three non-collinear points.
fn circumcircle(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint) -> Result<Conic, ConstructionError> {
    let (ab, ac) = (*b - *a, *c - *a);
    let d = 2.0 * ab.cross(&ac);
    let (sb, sc) = (ab.dot(&ab), ac.dot(&ac));
    let center = *a + PlanarPoint::new(ac.y * sb - ab.y * sc, ab.x * sc - ac.x * sb) * (1.0 / d);
    Ok(Conic::circle(center, center.distance(a))?)
}

/// Realizes a lineal configuration with blocks of size 3 by points and
/// circles: points are drawn in the unit square until no three are
/// collinear and no four concyclic, and each block becomes the circle
/// through its points.
pub fn realize_lineal_by_circles(
    c: &IncidenceStructure,
    seed: u64,
) -> Result<GeometricConfiguration, ConstructionError> {
    for b in 0..c.num_blocks() {
        let size = c.points_of(b).len();
        if size != 3 {
            return Err(ConstructionError::BlockSize {
                block: b,
                size,
                expected: "3",
            });
        }
    }
    if !c.is_lineal() {
        return Err(ConstructionError::NotLineal);
    }
    let mut rng = rng(seed);
    for _ in 0..RETRY_BUDGET {
        let points = random_points(c.num_points(), &mut rng);
        if !no_three_collinear(&points) || !no_four_concyclic(&points) {
            continue;
        }
        let Ok(conics) = (0..c.num_blocks())
            .map(|b| {
                let q = c.points_of(b);
                circumcircle(&points[q[0]], &points[q[1]], &points[q[2]])
            })
            .collect::<Result<Vec<_>, _>>()
        else {
            continue;
        };
        let prov = Provenance::new("realize-lineal-by-circles").param("seed", seed);
        let g = GeometricConfiguration::new(points, conics, c.flags().collect(), crate::DEFAULT_TOL, prov);
        if check_generic(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(ConstructionError::RetryBudget {
        builder: "realize-lineal-by-circles",
        tries: RETRY_BUDGET,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// True if some six of the points lie on one conic: each 5-subset is
/// fitted and every later point tested.
fn has_six_coconical(pts: &[PlanarPoint], tol: &Tolerances<f64>) -> bool {
    let n = pts.len();
    let mut idx = [0usize; 5];
    fn rec(pts: &[PlanarPoint], tol: &Tolerances<f64>, idx: &mut [usize; 5], depth: usize, start: usize) -> bool {
        if depth == 5 {
            let five = idx.map(|i| pts[i]);
            let Ok(fit) = conic_from_5_points(&five, tol) else {
                // a collinear triple: any conic through these points is degenerate
                return false;
            };
            return pts[idx[4] + 1..]
                .iter()
                .any(|p| fit.conic.residual(p) <= 10.0 * tol.incidence);
        }
        for i in start..pts.len() {
            idx[depth] = i;
            if rec(pts, tol, idx, depth + 1, i + 1) {
                return true;
            }
        }
        false
    }
    n >= 6 && rec(pts, tol, &mut idx, 0, 0)
}

/// Smallest unflagged residual of `conic` over the configuration points.
fn clearance(conic: &Conic, pts: &[PlanarPoint], own: &[usize]) -> f64 {
    pts.iter()
        .enumerate()
        .filter(|(i, _)| !own.contains(i))
        .map(|(_, p)| conic.residual(p))
        .fold(f64::INFINITY, f64::min)
}

/// Realizes a conical configuration with blocks of at most five points by
/// points and conics. Blocks of five get their fitted conic; smaller
/// blocks are completed to five by auxiliary random points, which are not
/// part of the output. Auxiliary points are redrawn per block until the
/// conic is clear of every other configuration point by `10 × tol` and
/// differs from the conics already placed.
pub fn realize_by_conics(c: &IncidenceStructure, seed: u64) -> Result<GeometricConfiguration, ConstructionError> {
    for b in 0..c.num_blocks() {
        let size = c.points_of(b).len();
        if size > 5 {
            return Err(ConstructionError::BlockSize {
                block: b,
                size,
                expected: "at most 5",
            });
        }
    }
    for a in 0..c.num_blocks() {
        for b in a + 1..c.num_blocks() {
            let shared = c.points_of(a).iter().filter(|p| c.points_of(b).contains(p)).count();
            if shared >= 5 {
                return Err(ConstructionError::NotConical(a, b));
            }
        }
    }
    let tol = Tolerances::<f64>::default();
    let margin = 10.0 * crate::DEFAULT_TOL;
    let scan_all = binomial(c.num_points(), 6) <= COCONIC_SCAN_LIMIT;
    let mut rng = rng(seed);
    'outer: for _ in 0..RETRY_BUDGET {
        let points = random_points(c.num_points(), &mut rng);
        if scan_all && has_six_coconical(&points, &tol) {
            continue;
        }
        for b in 0..c.num_blocks() {
            if !no_three_collinear(&c.points_of(b).iter().map(|&i| points[i]).collect::<Vec<_>>()) {
                continue 'outer;
            }
        }
        let mut conics: Vec<Conic> = Vec::with_capacity(c.num_blocks());
        for b in 0..c.num_blocks() {
            let own = c.points_of(b);
            let base: Vec<PlanarPoint> = own.iter().map(|&i| points[i]).collect();
            let tries = if own.len() == 5 { 1 } else { RETRY_BUDGET };
            let mut placed = None;
            for _ in 0..tries {
                let mut five = base.clone();
                five.extend(random_points(5 - base.len(), &mut rng));
                if !no_three_collinear(&five) {
                    continue;
                }
                let Ok(fit) = conic_from_5_points(&five.try_into().unwrap(), &tol) else {
                    continue;
                };
                if clearance(&fit.conic, &points, own) <= margin {
                    continue;
                }
                if conics.iter().any(|d| d.is_proportional(&fit.conic, f64::MERGE_TOL)) {
                    continue;
                }
                placed = Some(fit.conic);
                break;
            }
            match placed {
                Some(conic) => conics.push(conic),
                None => continue 'outer,
            }
        }
        if !close_conic_pairs(&conics, f64::MERGE_TOL).is_empty() {
            continue;
        }
        let prov = Provenance::new("realize-by-conics").param("seed", seed);
        let g = GeometricConfiguration::new(points, conics, c.flags().collect(), crate::DEFAULT_TOL, prov);
        if check_generic(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(ConstructionError::RetryBudget {
        builder: "realize-by-conics",
        tries: RETRY_BUDGET,
    })
}

/// Random conical `(p_q, n_k)` structure with `k ≤ 5`: point stubs are
/// shuffled into blocks until no flag repeats and no two blocks share five
/// points.
pub fn random_conical_structure(
    p: usize,
    q: usize,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<IncidenceStructure, ConstructionError> {
    if p * q != n * k {
        return Err(ConstructionError::InvalidParameter(format!(
            "p q = {} differs from n k = {}",
            p * q,
            n * k
        )));
    }
    if k > 5 || q > n || k > p {
        return Err(ConstructionError::InvalidParameter(format!(
            "({p}_{q}, {n}_{k}) is impossible or has blocks of more than 5 points"
        )));
    }
    let mut rng = rng(seed);
    'attempt: for _ in 0..RETRY_BUDGET {
        // each block draws k distinct points, weighted by remaining degree
        let mut left = vec![q; p];
        let mut flags = BTreeSet::new();
        for b in 0..n {
            let mut chosen = Vec::with_capacity(k);
            for _ in 0..k {
                let open: Vec<usize> = (0..p).filter(|&i| left[i] > 0 && !chosen.contains(&i)).collect();
                let Ok(&i) = open.choose_weighted(&mut rng, |&i| left[i]) else {
                    continue 'attempt;
                };
                chosen.push(i);
                left[i] -= 1;
            }
            flags.extend(chosen.into_iter().map(|i| (i, b)));
        }
        let s = IncidenceStructure::new(p, n, flags)?.with_name(format!("random ({p}_{q},{n}_{k})"));
        if s.is_conical() {
            return Ok(s);
        }
    }
    Err(ConstructionError::RetryBudget {
        builder: "random-conical-structure",
        tries: RETRY_BUDGET,
    })
}
