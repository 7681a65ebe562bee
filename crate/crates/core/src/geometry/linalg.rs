//! Fixed-size dense helpers: 3×3 matrices, a symmetric 2×2 and 3×3 eigen
//! solver, real cubic roots and the null vector of a 5×6 system.

use crate::Real;

pub type Mat3<T> = [[T; 3]; 3];
pub type Vec3<T> = [T; 3];

pub fn zero3<T: Real>() -> Mat3<T> {
    [[T::zero(); 3]; 3]
}

pub fn det3<T: Real>(m: &Mat3<T>) -> T {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Classical adjugate, `adj(M) M = det(M) I`.
pub fn adjugate<T: Real>(m: &Mat3<T>) -> Mat3<T> {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

pub fn mul3<T: Real>(a: &Mat3<T>, b: &Mat3<T>) -> Mat3<T> {
    let mut out = zero3();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).fold(T::zero(), |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    out
}

pub fn transpose3<T: Real>(a: &Mat3<T>) -> Mat3<T> {
    let mut out = zero3();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn trace_product<T: Real>(a: &Mat3<T>, b: &Mat3<T>) -> T {
    let mut s = T::zero();
    for i in 0..3 {
        for k in 0..3 {
            s = s + a[i][k] * b[k][i];
        }
    }
    s
}

pub fn mat_vec<T: Real>(m: &Mat3<T>, v: &Vec3<T>) -> Vec3<T> {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn dot3<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> Vec3<T> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3<T: Real>(a: &Vec3<T>) -> T {
    dot3(a, a).sqrt()
}

pub fn frobenius<T: Real>(m: &Mat3<T>) -> T {
    m.iter().flatten().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

/// `v^T M v`.
pub fn quad_form<T: Real>(m: &Mat3<T>, v: &Vec3<T>) -> T {
    dot3(v, &mat_vec(m, v))
}

/// Eigen-decomposition of the symmetric matrix `[[a, b], [b, c]]`.
/// Returns `(l1, l2, (cos, sin))` with `l1 >= l2`, the unit vector being the
/// eigenvector of `l1`.
pub fn sym2_eigen<T: Real>(a: T, b: T, c: T) -> (T, T, (T, T)) {
    let two = T::lit(2.0);
    let mean = (a + c) / two;
    let half_diff = (a - c) / two;
    let r = half_diff.hypot(b);
    let l1 = mean + r;
    let l2 = mean - r;
    // angle of the dominant eigenvector: tan(2θ) = 2b / (a - c)
    let theta = b.atan2(half_diff) / two;
    (l1, l2, (theta.cos(), theta.sin()))
}

/// Eigenvalues of a symmetric 3×3 matrix in descending order, by cyclic
/// Jacobi rotations (accurate also for clustered eigenvalues).
pub fn sym3_eigenvalues<T: Real>(m: &Mat3<T>) -> [T; 3] {
    let mut a = *m;
    for _ in 0..32 {
        let off = a[0][1].abs() + a[0][2].abs() + a[1][2].abs();
        let diag = a[0][0].abs() + a[1][1].abs() + a[2][2].abs();
        if off <= T::epsilon() * T::lit(0.01) * diag || off == T::zero() {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][q] == T::zero() {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (T::lit(2.0) * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
            let c = T::one() / (t * t + T::one()).sqrt();
            let s = t * c;
            // A <- Jᵀ A J with the rotation in the (p, q) plane
            for k in 0..3 {
                let (akp, akq) = (a[k][p], a[k][q]);
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let (apk, aqk) = (a[p][k], a[q][k]);
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
        }
    }
    let mut e = [a[0][0], a[1][1], a[2][2]];
    e.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    e
}

/// Real roots of `c3 x^3 + c2 x^2 + c1 x + c0`, polished by Newton steps.
/// Falls back to the quadratic or linear case when leading terms vanish.
pub fn real_cubic_roots<T: Real>(c3: T, c2: T, c1: T, c0: T) -> Vec<T> {
    let scale = c3.abs().max(c2.abs()).max(c1.abs()).max(c0.abs());
    if scale == T::zero() {
        return Vec::new();
    }
    let (c3, c2, c1, c0) = (c3 / scale, c2 / scale, c1 / scale, c0 / scale);
    let tiny = T::epsilon() * T::lit(16.0);
    let mut roots = if c3.abs() <= tiny {
        real_quadratic_roots(c2, c1, c0, T::zero())
    } else {
        let (a, b, c) = (c2 / c3, c1 / c3, c0 / c3);
        let three = T::lit(3.0);
        let nine = T::lit(9.0);
        let q = (a * a - three * b) / nine;
        let r = (T::lit(2.0) * a * a * a - nine * a * b + T::lit(27.0) * c) / T::lit(54.0);
        let q3 = q * q * q;
        if r * r < q3 {
            let theta = (r / q3.sqrt()).max(-T::one()).min(T::one()).acos();
            let s = T::lit(-2.0) * q.sqrt();
            let tau = T::lit(2.0) * T::PI();
            vec![
                s * (theta / three).cos() - a / three,
                s * ((theta + tau) / three).cos() - a / three,
                s * ((theta - tau) / three).cos() - a / three,
            ]
        } else {
            let big_a = -r.signum() * (r.abs() + (r * r - q3).sqrt()).cbrt();
            let big_b = if big_a == T::zero() { T::zero() } else { q / big_a };
            vec![(big_a + big_b) - a / three]
        }
    };
    for x in &mut roots {
        for _ in 0..4 {
            let f = ((c3 * *x + c2) * *x + c1) * *x + c0;
            let df = (T::lit(3.0) * c3 * *x + T::lit(2.0) * c2) * *x + c1;
            if df == T::zero() {
                break;
            }
            let step = f / df;
            let next = *x - step;
            let f_next = ((c3 * next + c2) * next + c1) * next + c0;
            if f_next.abs() <= f.abs() {
                *x = next;
            } else {
                break;
            }
        }
    }
    roots
}

/// Real roots of `a t^2 + b t + c` (coefficients assumed pre-scaled).
/// A discriminant in `[-neg_tol, 0)` counts as a double root.
pub fn real_quadratic_roots<T: Real>(a: T, b: T, c: T, neg_tol: T) -> Vec<T> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == T::zero() {
        return Vec::new();
    }
    let (a, b, c) = (a / scale, b / scale, c / scale);
    let tiny = T::epsilon() * T::lit(16.0);
    if a.abs() <= tiny {
        if b.abs() <= tiny {
            return Vec::new();
        }
        return vec![-c / b];
    }
    let disc = b * b - T::lit(4.0) * a * c;
    if disc < -neg_tol {
        return Vec::new();
    }
    if disc <= T::zero() {
        return vec![-b / (T::lit(2.0) * a)];
    }
    let sq = disc.sqrt();
    let q = T::lit(-0.5) * (b + b.signum() * sq);
    let q = if q == T::zero() { -T::lit(0.5) * sq } else { q };
    let mut r = vec![q / a, c / q];
    r.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    r
}

/// Solves the 3×3 system `m x = rhs` by Cramer's rule; `None` when
/// `|det| <= tol * ||m||^3`.
pub fn solve3<T: Real>(m: &Mat3<T>, rhs: &Vec3<T>, tol: T) -> Option<Vec3<T>> {
    let d = det3(m);
    let scale = frobenius(m);
    if d.abs() <= tol * scale * scale * scale {
        return None;
    }
    let mut out = [T::zero(); 3];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut mc = *m;
        for row in 0..3 {
            mc[row][col] = rhs[row];
        }
        *slot = det3(&mc) / d;
    }
    Some(out)
}

/// Unit null vector of a 5×6 matrix by Gaussian elimination with full
/// pivoting. Also returns the ratio of the largest to the smallest pivot,
/// a cheap condition estimate.
pub fn null_vector_5x6<T: Real>(rows: &[[T; 6]; 5]) -> Option<([T; 6], T)> {
    let mut a = *rows;
    let mut cols: [usize; 6] = [0, 1, 2, 3, 4, 5];
    let mut pivots = [T::zero(); 5];
    for k in 0..5 {
        // full pivot search over the remaining block
        let (mut pr, mut pc, mut best) = (k, k, T::zero());
        for (r, row) in a.iter().enumerate().skip(k) {
            for (c, x) in row.iter().enumerate().skip(k) {
                if x.abs() > best {
                    best = x.abs();
                    pr = r;
                    pc = c;
                }
            }
        }
        if best == T::zero() {
            return None;
        }
        a.swap(k, pr);
        for row in a.iter_mut() {
            row.swap(k, pc);
        }
        cols.swap(k, pc);
        pivots[k] = a[k][k];
        for r in (k + 1)..5 {
            let f = a[r][k] / a[k][k];
            for c in k..6 {
                a[r][c] = a[r][c] - f * a[k][c];
            }
        }
    }
    // back substitution with the free (last) variable set to 1
    let mut x = [T::zero(); 6];
    x[5] = T::one();
    for k in (0..5).rev() {
        let mut s = a[k][5];
        for c in (k + 1)..5 {
            s = s + a[k][c] * x[c];
        }
        x[k] = -s / a[k][k];
    }
    let mut out = [T::zero(); 6];
    for (i, &c) in cols.iter().enumerate() {
        out[c] = x[i];
    }
    let n = out.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
    for v in &mut out {
        *v = *v / n;
    }
    let pmax = pivots.iter().fold(T::zero(), |acc, p| acc.max(p.abs()));
    let pmin = pivots.iter().fold(T::infinity(), |acc, p| acc.min(p.abs()));
    Some((out, pmax / pmin))
}
