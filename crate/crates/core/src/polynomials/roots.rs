//! Simultaneous (Durand–Kerner) iteration for monic real polynomials.

use num_complex::Complex64;

use crate::{Error, Result};

pub const MAX_ITERATIONS: usize = 500;
/// Root movement below which a root is considered settled, relative to
/// `max(1, |z|)`.
pub const MOVEMENT_TOL: f64 = 1e-12;
/// Imaginary parts below this are treated as zero.
pub const REAL_TOL: f64 = 1e-9;

/// Candidate distance for merging a cluster of roots into one multiple root.
const CLUSTER_RADIUS: f64 = 1e-4;
/// A merge is kept only if the roots still reproduce the coefficients to
/// this relative accuracy.
const MERGE_TOL: f64 = 1e-10;

/// `z^m + a₁z^{m−1} + … + a_m` at complex `z`.
pub fn eval_monic(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * z + a)
}

/// `Σ |a_k|·|z|^{m−k}` with `a₀ = 1`, the scale of rounding in [`eval_monic`].
fn eval_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().fold(1.0, |acc, &a| acc * r + a.abs())
}

/// Coefficients `c₁…c_m` of `∏ (v − r_l)`, leading 1 implied.
pub fn expand_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        c.push(Complex64::new(0.0, 0.0));
        for k in (1..c.len()).rev() {
            let prev = c[k - 1];
            c[k] -= r * prev;
        }
    }
    c.split_off(1)
}

/// Largest coefficient deviation between the roots' expansion and `coeffs`,
/// relative to `1 + max|a|`.
fn reconstruction_error(coeffs: &[f64], roots: &[Complex64]) -> f64 {
    let scale = 1.0 + coeffs.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    expand_roots(roots)
        .iter()
        .zip(coeffs)
        .map(|(c, &a)| (c - a).norm())
        .fold(0.0, f64::max)
        / scale
}

/// All `m` complex roots of the monic real polynomial with coefficients
/// `a₁…a_m`, with multiplicity, sorted by real then imaginary part.
///
/// Clusters that behave as one multiple root are replaced by their mean, so
/// repeated roots come back bitwise equal; non-real roots are returned as
/// exact conjugate pairs and near-real roots are snapped to the real axis.
pub fn component_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() {
        return Err(Error::Domain("polynomial degree must be at least 1".into()));
    }
    if let Some(a) = coeffs.iter().find(|a| !a.is_finite()) {
        return Err(Error::Domain(format!("non-finite coefficient {a}")));
    }
    let mut roots = durand_kerner(coeffs)?;
    merge_clusters(coeffs, &mut roots);
    symmetrize(&mut roots);
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn durand_kerner(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let m = coeffs.len();
    let radius = 1.0 + coeffs.iter().fold(0.0f64, |acc, a| acc.max(a.abs()));
    // offset by the golden-ratio angle so no guess sits on a symmetry axis
    let offset = 0.5 * (5f64.sqrt() - 1.0);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / m as f64 + offset;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut settled = true;
        for k in 0..m {
            let zk = z[k];
            let pz = eval_monic(coeffs, zk);
            if pz.norm() <= 8.0 * f64::EPSILON * eval_scale(coeffs, zk) {
                // at the rounding floor of the evaluation
                continue;
            }
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(f64::EPSILON, f64::EPSILON);
            }
            let step = pz / denom;
            z[k] = zk - step;
            if step.norm() > MOVEMENT_TOL * zk.norm().max(1.0) {
                settled = false;
            }
        }
        if settled {
            return Ok(z);
        }
    }
    Err(Error::ConvergenceFailure {
        iterations: MAX_ITERATIONS,
    })
}

/// The `k`-th derivative of the monic polynomial, as full coefficients
/// (leading term first).
fn derivative_coeffs(coeffs: &[f64], k: usize) -> Vec<f64> {
    let mut full: Vec<f64> = std::iter::once(1.0).chain(coeffs.iter().copied()).collect();
    for _ in 0..k {
        let deg = full.len() - 1;
        full = full[..deg]
            .iter()
            .enumerate()
            .map(|(i, &a)| a * (deg - i) as f64)
            .collect();
    }
    full
}

fn horner(full: &[f64], z: Complex64) -> Complex64 {
    full.iter().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// A root of multiplicity `k` is a simple root of the `(k−1)`-th
/// derivative; Newton on that derivative recovers it to full precision.
fn polish_multiple(coeffs: &[f64], k: usize, start: Complex64) -> Complex64 {
    let d = derivative_coeffs(coeffs, k - 1);
    let dd = derivative_coeffs(coeffs, k);
    let mut z = start;
    for _ in 0..50 {
        let denom = horner(&dd, z);
        if denom.norm() == 0.0 {
            break;
        }
        let step = horner(&d, z) / denom;
        z -= step;
        if !z.is_finite() {
            return start;
        }
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Replaces tight clusters by a single multiple root when that keeps the
/// expansion accurate.
fn merge_clusters(coeffs: &[f64], roots: &mut [Complex64]) {
    let m = roots.len();
    let mut assigned = vec![false; m];
    for i in 0..m {
        if assigned[i] {
            continue;
        }
        let members: Vec<usize> = (i..m)
            .filter(|&j| {
                !assigned[j]
                    && (roots[j] - roots[i]).norm() < CLUSTER_RADIUS * (1.0 + roots[i].norm())
            })
            .collect();
        if members.len() < 2 {
            continue;
        }
        let mean = members.iter().map(|&j| roots[j]).sum::<Complex64>() / members.len() as f64;
        let polished = polish_multiple(coeffs, members.len(), mean);
        let centre = if (polished - mean).norm() < CLUSTER_RADIUS * (1.0 + mean.norm()) {
            polished
        } else {
            mean
        };
        let mut trial = roots.to_vec();
        for &j in &members {
            trial[j] = centre;
        }
        let before = reconstruction_error(coeffs, roots);
        let after = reconstruction_error(coeffs, &trial);
        if after <= MERGE_TOL.max(before) {
            roots.copy_from_slice(&trial);
            for &j in &members {
                assigned[j] = true;
            }
        }
    }
}

fn symmetrize(roots: &mut [Complex64]) {
    for r in roots.iter_mut() {
        if r.im.abs() < REAL_TOL {
            r.im = 0.0;
        }
    }
    let mut paired = vec![false; roots.len()];
    for i in 0..roots.len() {
        if paired[i] || roots[i].im <= 0.0 {
            continue;
        }
        let target = roots[i].conj();
        let partner = (0..roots.len())
            .filter(|&j| !paired[j] && roots[j].im < 0.0)
            .min_by(|&a, &b| {
                (roots[a] - target)
                    .norm()
                    .total_cmp(&(roots[b] - target).norm())
            });
        if let Some(j) = partner {
            let re = 0.5 * (roots[i].re + roots[j].re);
            let im = 0.5 * (roots[i].im - roots[j].im);
            roots[i] = Complex64::new(re, im);
            roots[j] = Complex64::new(re, -im);
            paired[i] = true;
            paired[j] = true;
        }
    }
}
