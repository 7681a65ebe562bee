#![allow(dead_code)]

use pointconic::geometry::{Conic, Point2};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type P = Point2<f64>;

pub struct EllipseSpec {
    pub center: P,
    pub a: f64,
    pub b: f64,
    pub angle: f64,
}

impl EllipseSpec {
    pub fn random(rng: &mut ChaCha8Rng) -> Self {
        Self {
            center: P::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            a: rng.gen_range(0.3..1.5),
            b: rng.gen_range(0.3..1.5),
            angle: rng.gen_range(0.0..std::f64::consts::PI),
        }
    }

    pub fn conic(&self) -> Conic<f64> {
        Conic::ellipse(self.center, self.a, self.b, self.angle).unwrap()
    }

    pub fn at(&self, theta: f64) -> P {
        self.center + P::new(self.a * theta.cos(), self.b * theta.sin()).rotate(self.angle)
    }
}

/// Intersections of an ellipse with a conic by sweeping the ellipse's
/// parameter for sign changes of the other form and bisecting.
/// `None` when the sweep sees a near-tangency it cannot resolve.
pub fn sweep_intersections(e: &EllipseSpec, other: &Conic<f64>) -> Option<Vec<P>> {
    const N: usize = 20_000;
    let tau = 2.0 * std::f64::consts::PI;
    let g = |t: f64| other.eval(&e.at(t));
    let vals: Vec<f64> = (0..=N).map(|k| g(tau * k as f64 / N as f64)).collect();
    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut out = Vec::new();
    for k in 0..N {
        let (v0, v1) = (vals[k], vals[k + 1]);
        if v0 == 0.0 {
            out.push(e.at(tau * k as f64 / N as f64));
            continue;
        }
        if v0.signum() != v1.signum() && v1 != 0.0 {
            let (mut lo, mut hi) = (tau * k as f64 / N as f64, tau * (k + 1) as f64 / N as f64);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if g(mid).signum() == v0.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push(e.at(0.5 * (lo + hi)));
        }
        // local minimum of |g| close to zero without a sign change
        if k > 0 {
            let (a, b, c) = (vals[k - 1].abs(), v0.abs(), v1.abs());
            if b <= a && b <= c && b < 1e-4 * scale && vals[k - 1].signum() == v1.signum() {
                return None;
            }
        }
    }
    Some(out)
}

pub fn same_point_sets(got: &[P], want: &[P], eps: f64) -> bool {
    got.len() == want.len() && want.iter().all(|w| got.iter().any(|g| g.distance(w) < eps))
}
