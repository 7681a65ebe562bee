//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{same_point_sets, sweep_intersections, EllipseSpec, P};
use pointconic::analysis::{
    audit, audit_sampled, intersection_type, isometry_check, strongly_isometric_to_circles, Isometry,
};
use pointconic::constructions::{
    carnot_faces, cell24, cell24_hexagons, dipyramid_carnot, pmn, polygon_ring_default, product_with, qcube_48,
    random_conical_structure, realize_by_conics, realize_lineal_by_circles, richter_gebert, GeometricConfiguration,
    Provenance,
};
use pointconic::geometry::{carnot_product, conic_conic_intersections, conic_from_5_points, GeometryError};
use pointconic::incidence::{catalog, Girth};
use pointconic::{Conic, PlanarPoint, Projection4to2, Signature, Tolerances};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    match (out, limit) {
        (Ok(s), Some(l)) if took > l => Err(format!("{s}; took {took:.2?}, limit {l:.0?}")),
        (Ok(s), _) => Ok(format!("{s}; {took:.2?}")),
        (Err(e), _) => Err(e),
    }
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// Point and block degree lists straight from the flags.
fn degrees(g: &GeometricConfiguration) -> (Vec<usize>, Vec<usize>) {
    let mut pd = vec![0; g.points.len()];
    let mut bd = vec![0; g.conics.len()];
    for &(p, b) in &g.flags {
        pd[p] += 1;
        bd[b] += 1;
    }
    (pd, bd)
}

fn c1_pmn44() -> Outcome {
    let g = pmn(4, 4, &Projection4to2::octagonal()).map_err(|e| e.to_string())?;
    let r = audit(&g);
    let t = intersection_type(&g);
    ensure!(r.passed, "audit failed:\n{}", r.summary());
    ensure!(r.signature == Signature::balanced(32, 6), "signature {}", r.signature);
    ensure!(t.types == set(&[1, 2]), "intersection type {}", t.label());
    ensure!(r.max_flag_residual <= 1e-8, "max residual {:e}", r.max_flag_residual);
    Ok(format!(
        "{} type {} max residual {:.1e}",
        r.signature,
        t.label(),
        r.max_flag_residual
    ))
}

fn c2_qcube() -> Outcome {
    let g = qcube_48(&Projection4to2::octagonal()).map_err(|e| e.to_string())?;
    let r = audit(&g);
    let t = intersection_type(&g);
    let (pd, _) = degrees(&g);
    ensure!(r.passed, "audit failed:\n{}", r.summary());
    ensure!(r.signature == Signature::balanced(48, 6), "signature {}", r.signature);
    ensure!(pd[..16].iter().all(|&d| d == 6), "vertex degrees {:?}", &pd[..16]);
    ensure!(pd[16..].iter().all(|&d| d == 6), "midpoint degrees {:?}", &pd[16..]);
    let hist: Vec<(usize, usize)> = t
        .types
        .iter()
        .map(|&k| (k, t.per_pair.values().filter(|&&v| v == k).count()))
        .collect();
    ensure!(
        t.types == set(&[1, 4]),
        "{} with degrees 6, but intersection type {} (pairs per count {:?}), expected {{1,4}}",
        r.signature,
        t.label(),
        hist
    );
    Ok(format!("{} type {}", r.signature, t.label()))
}

fn c3_cell24() -> Outcome {
    let (_, hex) = cell24_hexagons();
    let want = 2f64.sqrt() / 2.0;
    let mut worst: f64 = 0.0;
    for h in &hex {
        let centre = h.vertices.iter().fold([0.0; 4], |mut acc, v| {
            for k in 0..4 {
                acc[k] += v.0[k] / 6.0;
            }
            acc
        });
        for v in &h.vertices {
            let r = (0..4).map(|k| (v.0[k] - centre[k]).powi(2)).sum::<f64>().sqrt();
            worst = worst.max((r - want).abs());
        }
    }
    ensure!(hex.len() == 96, "{} hexagons", hex.len());
    ensure!(worst <= 1e-10, "circumradius deviation {worst:e}");
    let g = cell24(&Projection4to2::octagonal()).map_err(|e| e.to_string())?;
    let r = audit(&g);
    let t = intersection_type(&g);
    ensure!(r.passed, "audit failed:\n{}", r.summary());
    ensure!(r.signature == Signature::balanced(96, 6), "signature {}", r.signature);
    ensure!(t.types == set(&[1, 2]), "intersection type {}", t.label());
    Ok(format!(
        "{} type {} radius deviation {worst:.1e}",
        r.signature,
        t.label()
    ))
}

fn c4_pmn_family() -> Outcome {
    let mut seen = Vec::new();
    for (m, n) in [(4, 6), (6, 6), (6, 8), (8, 8)] {
        let g = pmn(m, n, &Projection4to2::oblique()).map_err(|e| format!("pmn({m},{n}): {e}"))?;
        let r = audit(&g);
        ensure!(r.passed, "pmn({m},{n}) audit failed:\n{}", r.summary());
        ensure!(
            r.signature == Signature::balanced(2 * m * n, 6),
            "pmn({m},{n}) signature {}",
            r.signature
        );
        seen.push(r.signature.to_string());
    }
    Ok(seen.join(" "))
}

/// Real intersections of the line through `x`, `y` with a conic, as line
/// parameters `t` (point `x + t (y - x)`).
fn line_params(c: &Conic, x: &PlanarPoint, y: &PlanarPoint) -> Vec<f64> {
    let [a, b, cc, d, e, f] = c.coefficients();
    let q = |p: &PlanarPoint| a * p.x * p.x + b * p.x * p.y + cc * p.y * p.y + d * p.x + e * p.y + f;
    // q(x + t u) = q0 + t q1 + t² q2
    let u = *y - *x;
    let q2 = a * u.x * u.x + b * u.x * u.y + cc * u.y * u.y;
    let q0 = q(x);
    let q1 = q(y) - q0 - q2;
    let disc = q1 * q1 - 4.0 * q2 * q0;
    if disc <= 0.0 || q2 == 0.0 {
        return vec![];
    }
    let s = disc.sqrt();
    vec![(-q1 - s) / (2.0 * q2), (-q1 + s) / (2.0 * q2)]
}

/// Random triangle with a conic meeting each side line twice, away from
/// the vertices; returns the triangle and the six points in
/// `(A1, A2, B1, B2, C1, C2)` order with their line parameters.
fn carnot_instance(rng: &mut ChaCha8Rng) -> Option<([PlanarPoint; 3], Vec<(PlanarPoint, PlanarPoint, f64)>)> {
    let tri: [PlanarPoint; 3] = std::array::from_fn(|_| P::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let area = (tri[1] - tri[0]).cross(&(tri[2] - tri[0])).abs();
    if area < 0.2 {
        return None;
    }
    let shape = EllipseSpec {
        center: (tri[0] + tri[1] + tri[2]) * (1.0 / 3.0) + P::new(rng.gen_range(-0.2..0.2), rng.gen_range(-0.2..0.2)),
        a: rng.gen_range(0.4..1.2),
        b: rng.gen_range(0.3..0.9),
        angle: rng.gen_range(0.0..std::f64::consts::PI),
    };
    let conic = shape.conic();
    let mut six = Vec::new();
    // side A = BC, B = CA, C = AB
    for (i, j) in [(1, 2), (2, 0), (0, 1)] {
        let ts = line_params(&conic, &tri[i], &tri[j]);
        if ts.len() != 2
            || ts
                .iter()
                .any(|t| t.abs() < 1e-2 || (t - 1.0).abs() < 1e-2 || t.abs() > 20.0)
        {
            return None;
        }
        for t in ts {
            six.push((tri[i], tri[j], t));
        }
    }
    Some((tri, six))
}

fn c5_carnot_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut on, mut off) = (0, 0);
    let (mut worst_on, mut least_off) = (0.0f64, f64::INFINITY);
    while on < 1000 {
        let Some((tri, six)) = carnot_instance(&mut rng) else {
            continue;
        };
        let pts: [PlanarPoint; 6] = std::array::from_fn(|k| {
            let (x, y, t) = six[k];
            x.lerp(&y, t)
        });
        let p = carnot_product(&tri, &pts).map_err(|e| e.to_string())?;
        worst_on = worst_on.max((p - 1.0).abs());
        on += 1;
        // slide one point along its side line by at least 1e-3
        let k = rng.gen_range(0..6);
        let (x, y, t) = six[k];
        let len = x.distance(&y);
        let shift = rng.gen_range(1e-3..1e-1) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 } / len;
        let mut moved = pts;
        moved[k] = x.lerp(&y, t + shift);
        match carnot_product(&tri, &moved) {
            Ok(q) => least_off = least_off.min((q - 1.0).abs()),
            Err(GeometryError::AtVertex(_)) => continue,
            Err(e) => return Err(e.to_string()),
        }
        off += 1;
    }
    ensure!(worst_on <= 1e-9, "coconical instance with |product - 1| = {worst_on:e}");
    ensure!(
        least_off > 1e-6,
        "perturbed instance with |product - 1| = {least_off:e}"
    );
    Ok(format!(
        "{on} on-conic max |P-1| {worst_on:.1e}; {off} perturbed min |P-1| {least_off:.1e}"
    ))
}

fn c6_richter_gebert() -> Outcome {
    let tol = Tolerances::default();
    let (mut worst_carnot, mut worst_fit) = (0.0f64, 0.0f64);
    for seed in 0..100 {
        let g = richter_gebert(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(
            g.points.len() == 12 && g.conics.len() == 4 && g.flags.len() == 24,
            "seed {seed}: {} points, {} conics, {} flags",
            g.points.len(),
            g.conics.len(),
            g.flags.len()
        );
        ensure!(
            g.provenance.notes.iter().any(|n| n.contains("(12_6,4_3)")),
            "seed {seed}: type discrepancy not recorded"
        );
        let faces = carnot_faces(&g).ok_or("no face data in provenance")?;
        let (tri, idx) = faces[3];
        let six = idx.map(|i| g.points[i]);
        worst_carnot = worst_carnot.max((carnot_product(&tri, &six).map_err(|e| e.to_string())? - 1.0).abs());
        for skip in 0..6 {
            let five: Vec<PlanarPoint> = (0..6).filter(|&k| k != skip).map(|k| six[k]).collect();
            let fit = conic_from_5_points(&five.try_into().unwrap(), &tol).map_err(|e| e.to_string())?;
            worst_fit = worst_fit.max(fit.conic.residual(&six[skip]));
        }
        for p in &six {
            worst_fit = worst_fit.max(g.conics[3].residual(p));
        }
    }
    ensure!(worst_carnot <= 1e-7, "fourth-face |P-1| = {worst_carnot:e}");
    ensure!(worst_fit <= 1e-7, "fourth conic misses a point by {worst_fit:e}");
    Ok(format!(
        "100 seeds: 12/4/24, fourth face |P-1| {worst_carnot:.1e}, fit residual {worst_fit:.1e}"
    ))
}

fn c7_dipyramid() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=8 {
        let g = dipyramid_carnot(n, n as u64).map_err(|e| format!("n = {n}: {e}"))?;
        ensure!(
            g.signature() == Signature::regular(6 * n, 2, 2 * n, 6),
            "n = {n}: signature {}",
            g.signature()
        );
        for (tri, idx) in carnot_faces(&g).ok_or("no face data")? {
            let p = carnot_product(&tri, &idx.map(|i| g.points[i])).map_err(|e| e.to_string())?;
            worst = worst.max((p - 1.0).abs());
        }
        ensure!(audit(&g).passed, "n = {n}: audit failed");
    }
    ensure!(worst <= 1e-6, "face |P-1| = {worst:e}");
    Ok(format!("n = 3..8, max face |P-1| {worst:.1e}"))
}

fn c8_product() -> Outcome {
    let d = dipyramid_carnot(3, 0).map_err(|e| e.to_string())?;
    let d2 = product_with(&d, &d, Some(1)).map_err(|e| e.to_string())?;
    let d3 = product_with(&d2, &d, Some(2)).map_err(|e| e.to_string())?;
    ensure!(
        d3.points.len() == 5832 && d3.conics.len() == 5832,
        "{} points, {} conics",
        d3.points.len(),
        d3.conics.len()
    );
    let (pd, bd) = degrees(&d3);
    ensure!(pd.iter().all(|&x| x == 6), "point degrees not all 6");
    ensure!(bd.iter().all(|&x| x == 6), "block degrees not all 6");
    let r = audit_sampled(&d3, 500, 8);
    ensure!(r.passed, "sampled audit failed:\n{}", r.summary());
    Ok(format!("{} sampled audit passed", r.signature))
}

fn c9_polygon_ring() -> Outcome {
    for n in 3..=10 {
        let g = polygon_ring_default(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure!(
            g.signature() == Signature::regular(4 * n, 2, n, 8),
            "n = {n}: signature {}",
            g.signature()
        );
        let axes: Vec<(f64, f64)> = g
            .conics
            .iter()
            .map(|c| c.ellipse_params().map(|e| (e.semi_major, e.semi_minor)))
            .collect::<Option<_>>()
            .ok_or("non-ellipse block")?;
        let spread = axes
            .iter()
            .map(|(a, b)| (a - axes[0].0).abs().max((b - axes[0].1).abs()))
            .fold(0.0, f64::max);
        ensure!(spread <= 1e-8, "n = {n}: semi-axes differ by {spread:e}");
        let iso = isometry_check(&g).map_err(|e| e.to_string())?;
        ensure!(iso == Isometry::Isometric, "n = {n}: {}", iso.name());
        ensure!(audit(&g).passed, "n = {n}: audit failed");
    }
    Ok("n = 3..10 (4n_2,n_8), isometric, not strongly".into())
}

fn c10_catalog() -> Outcome {
    let mut out = Vec::new();
    for (name, sig) in [
        ("anti-miquel-small", Signature::regular(16, 3, 12, 4)),
        ("anti-miquel-large", Signature::regular(32, 3, 24, 4)),
    ] {
        let c = catalog(name).map_err(|e| e.to_string())?;
        let r = c.property_report();
        ensure!(c.signature() == sig, "{name}: signature {}", c.signature());
        ensure!(r.strongly_circular, "{name}: not strongly circular");
        ensure!(
            r.vertex_connectivity == 2,
            "{name}: connectivity {}",
            r.vertex_connectivity
        );
        out.push(format!("{name} {} connectivity 2", c.signature()));
    }
    let fano = catalog("fano").map_err(|e| e.to_string())?;
    let r = fano.property_report();
    ensure!(r.lineal, "fano not lineal");
    ensure!(r.girth == Girth::Finite(6), "fano girth {:?}", r.girth);
    out.push("fano lineal girth 6".into());
    Ok(out.join("; "))
}

fn c11_circles() -> Outcome {
    let mut runs = 0;
    for name in ["fano", "pappus"] {
        let c = catalog(name).map_err(|e| e.to_string())?;
        for seed in 0..10 {
            let g = realize_lineal_by_circles(&c, seed).map_err(|e| format!("{name} seed {seed}: {e}"))?;
            let r = audit(&g);
            ensure!(r.passed, "{name} seed {seed}: audit failed:\n{}", r.summary());
            let p = &g.points;
            let n = p.len();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let det = (p[b].x - p[a].x) * (p[c].y - p[a].y) - (p[b].y - p[a].y) * (p[c].x - p[a].x);
                        ensure!(det.abs() > 1e-9, "{name} seed {seed}: {a},{b},{c} collinear");
                        for d in c + 1..n {
                            let det = concyclic4([p[a], p[b], p[c], p[d]]);
                            ensure!(det.abs() > 1e-9, "{name} seed {seed}: {a},{b},{c},{d} concyclic");
                        }
                    }
                }
            }
            ensure!(
                g.conics.iter().all(|k| k.is_circle(1e-9)),
                "{name} seed {seed}: non-circle block"
            );
            runs += 1;
        }
    }
    Ok(format!("{runs} realizations audited"))
}

/// Full 4×4 determinant of rows `(x² + y², x, y, 1)` by Laplace expansion.
fn concyclic4(p: [PlanarPoint; 4]) -> f64 {
    let rows: Vec<[f64; 4]> = p.iter().map(|q| [q.x * q.x + q.y * q.y, q.x, q.y, 1.0]).collect();
    let minor = |skip_row: usize, skip_col: usize| {
        let m: Vec<Vec<f64>> = (0..4)
            .filter(|&r| r != skip_row)
            .map(|r| (0..4).filter(|&c| c != skip_col).map(|c| rows[r][c]).collect())
            .collect();
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    (0..4)
        .map(|c| if c % 2 == 0 { 1.0 } else { -1.0 } * rows[0][c] * minor(0, c))
        .sum()
}

fn c12_conics() -> Outcome {
    let shapes = [(10, 4, 8, 5), (12, 2, 6, 4), (8, 3, 6, 4), (9, 2, 6, 3), (15, 2, 6, 5)];
    for seed in 0..20u64 {
        let (p, q, n, k) = shapes[seed as usize % shapes.len()];
        let s = random_conical_structure(p, q, n, k, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(s.is_conical(), "seed {seed}: generator produced K_5,2");
        let g = realize_by_conics(&s, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let r = audit(&g);
        ensure!(r.passed, "seed {seed}: audit failed:\n{}", r.summary());
        ensure!(
            r.spurious_incidences.is_empty() && r.missing_incidences.is_empty() && r.borderline.is_empty(),
            "seed {seed}: stray incidences"
        );
        ensure!(g.structure() == s, "seed {seed}: structure changed");
    }
    Ok("20 structures realized, no stray incidences".into())
}

fn c13_translates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let base =
        Conic::ellipse(P::origin(), 0.9, 0.4, rng.gen_range(0.0..std::f64::consts::PI)).map_err(|e| e.to_string())?;
    let conics: Vec<Conic> = (0..5)
        .map(|k| {
            base.translate(P::new(
                0.6 * k as f64 + rng.gen_range(-0.05..0.05),
                rng.gen_range(-0.3..0.3),
            ))
        })
        .collect();
    let mut points = Vec::new();
    let mut flags = BTreeSet::new();
    for k in 0..4 {
        let meet =
            conic_conic_intersections(&conics[k], &conics[k + 1], &Tolerances::default()).map_err(|e| e.to_string())?;
        ensure!(!meet.is_empty(), "fixture translates {k}, {} do not meet", k + 1);
        for p in meet {
            flags.insert((points.len(), k));
            flags.insert((points.len(), k + 1));
            points.push(p);
        }
    }
    let g = GeometricConfiguration::new(points, conics, flags, 1e-8, Provenance::new("translates"));
    ensure!(audit(&g).passed, "fixture audit failed");
    let c = strongly_isometric_to_circles(&g).map_err(|e| e.to_string())?;
    let r = audit(&c);
    ensure!(r.passed, "audit lost:\n{}", r.summary());
    let radii: Vec<(f64, f64)> = c
        .conics
        .iter()
        .map(|k| k.ellipse_params().map(|e| (e.semi_major, e.semi_minor)))
        .collect::<Option<_>>()
        .ok_or("non-ellipse output")?;
    let r0 = radii[0].0;
    let spread = radii
        .iter()
        .map(|(a, b)| (a - r0).abs().max((b - r0).abs()))
        .fold(0.0, f64::max);
    ensure!(spread <= 1e-8, "radii differ by {spread:e}");
    Ok(format!(
        "{} circles of radius {r0:.6}, spread {spread:.1e}",
        radii.len()
    ))
}

fn c14_kernel() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut worst_fit: f64 = 0.0;
    for _ in 0..500 {
        let e = EllipseSpec::random(&mut rng);
        let five: [P; 5] = std::array::from_fn(|k| e.at(k as f64 * 1.2 + rng.gen_range(0.0..0.3)));
        let fit = conic_from_5_points(&five, &tol).map_err(|err| err.to_string())?;
        worst_fit = worst_fit.max(fit.conic.form_distance(&e.conic()));
    }
    ensure!(worst_fit < 1e-8, "fit round trip distance {worst_fit:e}");
    let mut checked = 0;
    let mut counts = [0usize; 5];
    while checked < 500 {
        let (ea, eb) = (EllipseSpec::random(&mut rng), EllipseSpec::random(&mut rng));
        let Some(want) = sweep_intersections(&ea, &eb.conic()) else {
            continue;
        };
        let got = conic_conic_intersections(&ea.conic(), &eb.conic(), &tol).map_err(|e| e.to_string())?;
        ensure!(got.len() <= 4, "{} intersections", got.len());
        ensure!(got.len() == want.len(), "count {} vs sweep {}", got.len(), want.len());
        ensure!(same_point_sets(&got, &want, 1e-6), "{got:?} vs sweep {want:?}");
        counts[got.len()] += 1;
        checked += 1;
    }
    let mut coincident = 0;
    for _ in 0..100 {
        let e = EllipseSpec::random(&mut rng);
        let five: [P; 5] = std::array::from_fn(|k| e.at(k as f64 * 1.25 + rng.gen_range(0.0..0.2)));
        let fitted = conic_from_5_points(&five, &tol).map_err(|err| err.to_string())?.conic;
        match conic_conic_intersections(&e.conic(), &fitted, &tol) {
            Err(GeometryError::Coincident) => coincident += 1,
            other => return Err(format!("five shared points gave {other:?}")),
        }
    }
    Ok(format!(
        "fit distance {worst_fit:.1e}; 500 sweeps agree (counts 0..4: {counts:?}); {coincident} coincident pairs detected"
    ))
}

fn main() {
    let criteria: [(&str, Option<u64>, fn() -> Outcome); 14] = [
        ("pmn(4,4) is a (32_6) of type {1,2}", Some(1000), c1_pmn44),
        ("qcube_48 is a (48_6) of type {1,4}", Some(1000), c2_qcube),
        ("cell24 is a (96_6) of type {1,2}", Some(2000), c3_cell24),
        ("pmn(m,n) family has signature ((2mn)_6)", Some(5000), c4_pmn_family),
        (
            "Carnot product detects coconical sextuples",
            None,
            c5_carnot_equivalence,
        ),
        ("richter_gebert fourth face closes", None, c6_richter_gebert),
        ("dipyramid_carnot n = 3..8", Some(2000), c7_dipyramid),
        ("dipyramid(3) cubed is a (5832_6)", Some(30000), c8_product),
        ("polygon_ring n = 3..10 is isometric (4n_2,n_8)", None, c9_polygon_ring),
        ("catalog properties", None, c10_catalog),
        ("lineal realizations by circles", None, c11_circles),
        ("conical realizations by conics", None, c12_conics),
        ("strongly isometric to circles", None, c13_translates),
        ("kernel property suite", None, c14_kernel),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let id = k + 1;
        if !filter.is_empty() && !filter.iter().any(|a| a == &id.to_string()) {
            continue;
        }
        match timed(limit.map(Duration::from_millis), *f) {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
