//! Audits of realized configurations, intersection types and isometry.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{ConstructionError, GeometricConfiguration};
use crate::geometry::{conic_conic_intersections, dilation_to_circle, GeometryError};
use crate::incidence::{Flag, IncidenceStructure, Signature};
use crate::{Conic, ConicKind, PlanarPoint, Real, Tolerances};

/// Tolerance for semi-axes and axis angles in [`isometry_check`].
pub const ISOMETRY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("conic {conic} is a {kind:?}, not an ellipse")]
    NotAnEllipse { conic: usize, kind: ConicKind },
    #[error("configuration is {0:?}, not strongly isometric")]
    NotStronglyIsometric(Isometry),
    #[error("conics {0} and {1}: {2}")]
    Pair(usize, usize, GeometryError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Outcome of [`audit`].
///
/// `missing_incidences` are unflagged pairs whose residual is at most
/// `0.1 × tol`: incidences the flag list misses. `spurious_incidences` are
/// flagged pairs whose residual exceeds `tol`. Unflagged pairs in the band
/// `(0.1 × tol, tol]` are `borderline` and do not fail the audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub signature: Signature,
    pub tol: f64,
    pub max_flag_residual: f64,
    pub spurious_incidences: Vec<Flag>,
    pub missing_incidences: Vec<Flag>,
    pub borderline: Vec<Flag>,
    pub duplicate_points: Vec<(usize, usize)>,
    pub coincident_conics: Vec<(usize, usize)>,
    /// Flags and unflagged pairs examined; smaller than the full count for
    /// [`audit_sampled`].
    pub checked_flags: usize,
    pub checked_non_flags: usize,
    pub passed: bool,
}

impl AuditReport {
    fn finish(mut self) -> Self {
        self.passed = self.spurious_incidences.is_empty()
            && self.missing_incidences.is_empty()
            && self.duplicate_points.is_empty()
            && self.coincident_conics.is_empty()
            && self.max_flag_residual <= self.tol;
        self
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "signature {}\nmax flag residual {:.3e} (tol {:.0e})\n",
            self.signature, self.max_flag_residual, self.tol
        );
        for (name, list) in [
            ("spurious incidences", &self.spurious_incidences),
            ("missing incidences", &self.missing_incidences),
            ("borderline pairs", &self.borderline),
            ("duplicate points", &self.duplicate_points),
            ("coincident conics", &self.coincident_conics),
        ] {
            if !list.is_empty() {
                s += &format!("{name}: {} (first {:?})\n", list.len(), list[0]);
            }
        }
        s += if self.passed { "passed" } else { "FAILED" };
        s
    }
}

/// All pairs of points within `tol`.
pub fn close_point_pairs(points: &[PlanarPoint], tol: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x));
    let mut out = Vec::new();
    for (k, &a) in order.iter().enumerate() {
        for &b in &order[k + 1..] {
            if points[b].x - points[a].x > tol {
                break;
            }
            if points[a].distance(&points[b]) <= tol {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// All pairs of proportional conics at `tol`.
pub fn close_conic_pairs(conics: &[Conic], tol: f64) -> Vec<(usize, usize)> {
    // proportional normalized forms agree entrywise up to sign
    let key = |c: &Conic| c.form()[0][0].abs();
    let mut order: Vec<usize> = (0..conics.len()).collect();
    order.sort_by(|&a, &b| key(&conics[a]).total_cmp(&key(&conics[b])));
    let mut out = Vec::new();
    for (k, &a) in order.iter().enumerate() {
        for &b in &order[k + 1..] {
            if key(&conics[b]) - key(&conics[a]) > tol {
                break;
            }
            if conics[a].is_proportional(&conics[b], tol) {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out
}

fn base_report(g: &GeometricConfiguration) -> AuditReport {
    AuditReport {
        signature: g.signature(),
        tol: g.tol,
        max_flag_residual: 0.0,
        spurious_incidences: Vec::new(),
        missing_incidences: Vec::new(),
        borderline: Vec::new(),
        duplicate_points: close_point_pairs(&g.points, f64::MERGE_TOL),
        coincident_conics: close_conic_pairs(&g.conics, f64::MERGE_TOL),
        checked_flags: 0,
        checked_non_flags: 0,
        passed: false,
    }
}

fn record(r: &mut AuditReport, g: &GeometricConfiguration, pair: Flag, flagged: bool) {
    let res = g.conics[pair.1].residual(&g.points[pair.0]);
    if flagged {
        r.checked_flags += 1;
        // NaN must not pass
        r.max_flag_residual = if res.is_nan() {
            f64::INFINITY
        } else {
            r.max_flag_residual.max(res)
        };
        if !(res <= g.tol) {
            r.spurious_incidences.push(pair);
        }
    } else {
        r.checked_non_flags += 1;
        if res <= 0.1 * g.tol {
            r.missing_incidences.push(pair);
        } else if res <= g.tol {
            r.borderline.push(pair);
        }
    }
}

/// Exhaustive audit: every flag and every unflagged point-conic pair.
pub fn audit(g: &GeometricConfiguration) -> AuditReport {
    let mut r = base_report(g);
    for p in 0..g.points.len() {
        for c in 0..g.conics.len() {
            record(&mut r, g, (p, c), g.flags.contains(&(p, c)));
        }
    }
    r.finish()
}

/// Audit on `samples` random flags and `samples` random unflagged pairs;
/// duplicate and coincidence scans stay exhaustive.
pub fn audit_sampled(g: &GeometricConfiguration, samples: usize, seed: u64) -> AuditReport {
    let mut r = base_report(g);
    let mut rng = crate::constructions::rng(seed);
    let flags: Vec<Flag> = g.flags.iter().copied().collect();
    if !flags.is_empty() {
        for _ in 0..samples {
            record(&mut r, g, flags[rng.gen_range(0..flags.len())], true);
        }
    }
    let total = g.points.len() * g.conics.len();
    if total > flags.len() {
        let mut taken = 0;
        while taken < samples {
            let pair = (rng.gen_range(0..g.points.len()), rng.gen_range(0..g.conics.len()));
            if !g.flags.contains(&pair) {
                record(&mut r, g, pair, false);
                taken += 1;
            }
        }
    }
    r.finish()
}

/// Counts of configuration points shared by non-disjoint block pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct IntersectionType {
    pub types: BTreeSet<usize>,
    #[serde(with = "pair_map")]
    pub per_pair: BTreeMap<(usize, usize), usize>,
}

impl IntersectionType {
    /// `{1,2}` style.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.types.iter().map(|t| t.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Pair-keyed maps as lists of `[a, b, value]`.
mod pair_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, V: Serialize + Copy>(
        m: &BTreeMap<(usize, usize), V>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let rows: Vec<(usize, usize, V)> = m.iter().map(|(&(a, b), &v)| (a, b, v)).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, V: Deserialize<'de>>(
        d: D,
    ) -> Result<BTreeMap<(usize, usize), V>, D::Error> {
        let rows: Vec<(usize, usize, V)> = Vec::deserialize(d)?;
        Ok(rows.into_iter().map(|(a, b, v)| ((a, b), v)).collect())
    }
}

/// Intersection type from the flags alone.
pub fn intersection_type_combinatorial(c: &IncidenceStructure) -> IntersectionType {
    let mut per_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in 0..c.num_points() {
        let blocks = c.blocks_of(p);
        for (i, &a) in blocks.iter().enumerate() {
            for &b in &blocks[i + 1..] {
                *per_pair.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
    }
    let types: BTreeSet<usize> = per_pair.values().copied().collect();
    debug_assert!(!c.is_conical() || types.iter().all(|&t| (1..=4).contains(&t)));
    IntersectionType { types, per_pair }
}

pub fn intersection_type(g: &GeometricConfiguration) -> IntersectionType {
    intersection_type_combinatorial(&g.structure())
}

/// The 15 nonempty subsets of `{1, 2, 3, 4}`, the possible intersection
/// types of a conical configuration.
pub fn candidate_intersection_types() -> Vec<BTreeSet<usize>> {
    (1u32..16)
        .map(|mask| (1..=4).filter(|t| mask >> (t - 1) & 1 == 1).collect())
        .collect()
}

/// Actual intersection counts of conic pairs against configuration-point
/// meets.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MeetReport {
    /// `(geometric, configuration)` counts for every conic pair meeting in
    /// at least one real point.
    #[serde(with = "pair_map")]
    pub per_pair: BTreeMap<(usize, usize), (usize, usize)>,
    /// Pairs whose geometric meet exceeds their shared configuration points.
    pub excess: Vec<(usize, usize)>,
    pub max_meet: usize,
}

/// Intersects every conic pair.
pub fn geometric_meets(g: &GeometricConfiguration) -> Result<MeetReport, AnalysisError> {
    let shared = intersection_type(g).per_pair;
    let tol = Tolerances::<f64>::default();
    let mut out = MeetReport::default();
    for a in 0..g.conics.len() {
        for b in a + 1..g.conics.len() {
            let pts = conic_conic_intersections(&g.conics[a], &g.conics[b], &tol)
                .map_err(|e| AnalysisError::Pair(a, b, e))?;
            let config = shared.get(&(a, b)).copied().unwrap_or(0);
            if pts.is_empty() && config == 0 {
                continue;
            }
            out.max_meet = out.max_meet.max(pts.len());
            if pts.len() > config {
                out.excess.push((a, b));
            }
            out.per_pair.insert((a, b), (pts.len(), config));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isometry {
    NotIsometric,
    Isometric,
    StronglyIsometric,
}

impl Isometry {
    pub fn name(self) -> &'static str {
        match self {
            Isometry::NotIsometric => "not isometric",
            Isometry::Isometric => "isometric",
            Isometry::StronglyIsometric => "strongly isometric",
        }
    }
}

/// Angular distance of two axis directions, modulo π.
fn axis_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(std::f64::consts::PI);
    d.min(std::f64::consts::PI - d)
}

/// Compares the ellipses' semi-axes and axis directions at
/// [`ISOMETRY_TOL`]. Equal circles count as strongly isometric.
pub fn isometry_check(g: &GeometricConfiguration) -> Result<Isometry, AnalysisError> {
    let params = g
        .conics
        .iter()
        .enumerate()
        .map(|(j, c)| {
            c.ellipse_params().ok_or(AnalysisError::NotAnEllipse {
                conic: j,
                kind: c.kind(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let Some(first) = params.first() else {
        return Ok(Isometry::StronglyIsometric);
    };
    let congruent = params.iter().all(|p| {
        (p.semi_major - first.semi_major).abs() <= ISOMETRY_TOL
            && (p.semi_minor - first.semi_minor).abs() <= ISOMETRY_TOL
    });
    if !congruent {
        return Ok(Isometry::NotIsometric);
    }
    let round = first.semi_major - first.semi_minor <= ISOMETRY_TOL;
    if round || params.iter().all(|p| axis_gap(p.angle, first.angle) <= ISOMETRY_TOL) {
        Ok(Isometry::StronglyIsometric)
    } else {
        Ok(Isometry::Isometric)
    }
}

/// Maps a strongly isometric configuration by the affine contraction that
/// turns its first ellipse into a circle; all ellipses become circles of
/// one radius and the flags are kept.
pub fn strongly_isometric_to_circles(g: &GeometricConfiguration) -> Result<GeometricConfiguration, AnalysisError> {
    let iso = isometry_check(g)?;
    if iso != Isometry::StronglyIsometric {
        return Err(AnalysisError::NotStronglyIsometric(iso));
    }
    let Some(first) = g.conics.first() else {
        return Ok(g.clone());
    };
    let m = dilation_to_circle(first)?;
    let mut out = g.transformed(&m)?;
    out.provenance.notes.pop();
    out.provenance.notes.push("dilated to circles".into());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Provenance;
    use crate::incidence::catalog;

    fn translates() -> GeometricConfiguration {
        let base = Conic::ellipse(PlanarPoint::origin(), 0.8, 0.3, 0.4).unwrap();
        let shifts = [(0.0, 0.0), (1.0, 0.2), (-0.4, 0.9)];
        let conics = shifts
            .iter()
            .map(|&(x, y)| base.translate(PlanarPoint::new(x, y)))
            .collect();
        GeometricConfiguration::new(vec![], conics, BTreeSet::new(), 1e-8, Provenance::new("translates"))
    }

    #[test]
    fn fifteen_candidates() {
        let c = candidate_intersection_types();
        assert_eq!(c.len(), 15);
        assert_eq!(c.iter().collect::<BTreeSet<_>>().len(), 15);
        assert!(c
            .iter()
            .all(|s| !s.is_empty() && s.iter().all(|&t| (1..=4).contains(&t))));
    }

    #[test]
    fn combinatorial_types() {
        let miquel = catalog("miquel").unwrap();
        let t = intersection_type_combinatorial(&miquel);
        assert_eq!(t.types, BTreeSet::from([2]));
        // 12 pairs of adjacent cube faces
        assert_eq!(t.per_pair.len(), 12);
        let empty = IncidenceStructure::new(3, 2, []).unwrap();
        assert!(intersection_type_combinatorial(&empty).types.is_empty());
    }

    #[test]
    fn audit_detects_deleted_flag() {
        let g = crate::constructions::crossed_ellipses().unwrap();
        assert!(audit(&g).passed);
        let mut h = g.clone();
        let f = *h.flags.iter().next().unwrap();
        h.flags.remove(&f);
        let r = audit(&h);
        assert_eq!(r.missing_incidences, vec![f]);
        assert!(!r.passed);
    }

    #[test]
    fn audit_detects_bad_flag_and_duplicates() {
        let c = Conic::circle(PlanarPoint::origin(), 1.0).unwrap();
        let pts = vec![
            PlanarPoint::new(1.0, 0.0),
            PlanarPoint::new(0.0, 0.5),
            PlanarPoint::new(1.0, 1e-9),
        ];
        let flags = BTreeSet::from([(0, 0), (1, 0)]);
        let g = GeometricConfiguration::new(pts, vec![c, c], flags, 1e-8, Provenance::new("bad"));
        let r = audit(&g);
        assert_eq!(r.spurious_incidences, vec![(1, 0)]);
        assert_eq!(r.duplicate_points, vec![(0, 2)]);
        assert_eq!(r.coincident_conics, vec![(0, 1)]);
        assert!(!r.passed);
    }

    #[test]
    fn translates_are_strongly_isometric() {
        let g = translates();
        assert_eq!(isometry_check(&g).unwrap(), Isometry::StronglyIsometric);
        let circles = strongly_isometric_to_circles(&g).unwrap();
        let r: Vec<f64> = circles
            .conics
            .iter()
            .map(|c| c.ellipse_params().unwrap().semi_major)
            .collect();
        assert!(circles.conics.iter().all(|c| c.is_circle(1e-9)));
        assert!(r.iter().all(|x| (x - r[0]).abs() < 1e-9));
    }

    #[test]
    fn rotated_copies_are_only_isometric() {
        let mut g = translates();
        g.conics[1] = Conic::ellipse(PlanarPoint::new(2.0, 0.0), 0.8, 0.3, 1.0).unwrap();
        assert_eq!(isometry_check(&g).unwrap(), Isometry::Isometric);
        assert!(strongly_isometric_to_circles(&g).is_err());
        g.conics[2] = Conic::ellipse(PlanarPoint::new(2.0, 0.0), 0.8, 0.31, 0.4).unwrap();
        assert_eq!(isometry_check(&g).unwrap(), Isometry::NotIsometric);
    }

    #[test]
    fn axis_gap_wraps() {
        assert!(axis_gap(0.0, std::f64::consts::PI - 1e-12) < 1e-11);
        assert!((axis_gap(0.1, 0.3) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn report_round_trips_through_json() {
        let g = crate::constructions::crossed_ellipses().unwrap();
        let t = intersection_type(&g);
        assert_eq!(t.label(), "{4}");
        let back: IntersectionType = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        let r = audit(&g);
        let back: AuditReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
