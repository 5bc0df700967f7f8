//! Shared numeric machinery: complex dense linear algebra (via nalgebra),
//! damped Gauss–Newton with pseudo-inverse steps, and univariate
//! polynomial root finding.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

pub type C64 = Complex64;

/// Max-norm of a residual vector.
pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Singular values of a complex matrix, descending.
pub fn singular_values(rows: usize, cols: usize, data: &[C64]) -> Vec<f64> {
    let m = DMatrix::from_row_slice(rows, cols, data);
    let mut sv: Vec<f64> = m.singular_values().iter().cloned().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    // pad with zeros so callers always see min(rows, cols) values
    while sv.len() < rows.min(cols) {
        sv.push(0.0);
    }
    sv
}

/// Minimum-norm least-squares solve via SVD with relative truncation.
pub fn lstsq(rows: usize, cols: usize, a: &[C64], b: &[C64]) -> Result<Vec<C64>> {
    let m = DMatrix::from_row_slice(rows, cols, a);
    let rhs = DVector::from_column_slice(b);
    let svd = m.svd(true, true);
    let eps = svd.singular_values.max() * 1e-13;
    let sol = svd
        .solve(&rhs, eps)
        .map_err(|e| Error::SolverFailed(format!("svd solve: {e}")))?;
    Ok(sol.iter().cloned().collect())
}

/// Numeric Jacobian of a holomorphic map by complex central differences.
pub fn numeric_jacobian<F>(f: &F, x: &[C64], h: f64) -> Result<Vec<C64>>
where
    F: Fn(&[C64]) -> Result<Vec<C64>>,
{
    let n = x.len();
    let f0 = f(x)?;
    let m = f0.len();
    let mut jac = vec![C64::new(0.0, 0.0); m * n];
    let step = C64::new(h, 0.0);
    for j in 0..n {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[j] += step;
        xm[j] -= step;
        let fp = f(&xp)?;
        let fm = f(&xm)?;
        for i in 0..m {
            jac[i * n + j] = (fp[i] - fm[i]) / (2.0 * step);
        }
    }
    Ok(jac)
}

/// Damped Gauss–Newton iteration with pseudo-inverse steps and backtracking
/// line search. Works for square, overdetermined and underdetermined
/// systems; on a positive-dimensional solution set it converges to a nearby
/// point of the set.
pub struct NewtonOptions {
    pub max_iter: usize,
    pub target: f64,
    pub fd_step: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            max_iter: 120,
            target: 1e-12,
            fd_step: 1e-7,
        }
    }
}

pub fn newton_solve<F, J>(
    f: &F,
    jac: &J,
    start: &[C64],
    opts: &NewtonOptions,
) -> Result<(Vec<C64>, f64)>
where
    F: Fn(&[C64]) -> Result<Vec<C64>>,
    J: Fn(&[C64]) -> Result<Vec<C64>>,
{
    let n = start.len();
    let mut x = start.to_vec();
    let mut fx = f(&x)?;
    let mut res = max_abs(&fx);
    for _ in 0..opts.max_iter {
        if res < opts.target {
            return Ok((x, res));
        }
        let j = jac(&x)?;
        let m = fx.len();
        let neg_f: Vec<C64> = fx.iter().map(|z| -z).collect();
        let step = lstsq(m, n, &j, &neg_f)?;
        if max_abs(&step) < 1e-16 {
            break;
        }
        let mut lambda = 1.0;
        let mut improved = false;
        for _ in 0..25 {
            let xn: Vec<C64> = x
                .iter()
                .zip(&step)
                .map(|(xi, si)| xi + lambda * si)
                .collect();
            let fn_ = f(&xn)?;
            let rn = max_abs(&fn_);
            if rn < res {
                x = xn;
                fx = fn_;
                res = rn;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if res < opts.target {
        Ok((x, res))
    } else {
        Err(Error::SolverFailed(format!(
            "newton stalled at residual {res:.3e}"
        )))
    }
}

/// Convenience: Newton with a finite-difference Jacobian.
pub fn newton_solve_fd<F>(f: &F, start: &[C64], opts: &NewtonOptions) -> Result<(Vec<C64>, f64)>
where
    F: Fn(&[C64]) -> Result<Vec<C64>>,
{
    let jac = |x: &[C64]| numeric_jacobian(f, x, opts.fd_step);
    newton_solve(f, &jac, start, opts)
}

/// All roots of a univariate complex polynomial (coefficients ascending,
/// `coeffs[k]` multiplying z^k) by Durand–Kerner iteration. Deterministic
/// starts; roots returned sorted by (re, im).
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let mut c = coeffs.to_vec();
    while let Some(last) = c.last() {
        if last.norm() < 1e-300 && c.len() > 1 {
            c.pop();
        } else {
            break;
        }
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lead = c[deg];
    let monic: Vec<C64> = c.iter().map(|z| z / lead).collect();
    let eval = |z: C64| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for k in (0..=deg).rev() {
            acc = acc * z + monic[k];
        }
        acc
    };
    // starting points on a circle avoiding symmetry
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<C64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            radius * C64::new(theta.cos(), theta.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut max_delta = 0.0f64;
        for i in 0..deg {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-280 {
                continue;
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            max_delta = max_delta.max(delta.norm());
        }
        if max_delta < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    roots
}

/// A complex sample from the square [lo, hi]² (re and im independent).
pub fn sample_complex(rng: &mut impl Rng, lo: f64, hi: f64) -> C64 {
    C64::new(rng.gen_range(lo..hi), rng.gen_range(lo..hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_simple_cubic() {
        // (z-1)(z-2i)(z+3) = z^3 + (2 - 2i) z^2 + (-3 - 4i) z + 6i
        let coeffs = [
            C64::new(0.0, 6.0),
            C64::new(-3.0, -4.0),
            C64::new(2.0, -2.0),
            C64::new(1.0, 0.0),
        ];
        let roots = poly_roots(&coeffs);
        assert_eq!(roots.len(), 3);
        for expect in [C64::new(1.0, 0.0), C64::new(0.0, 2.0), C64::new(-3.0, 0.0)] {
            assert!(
                roots.iter().any(|r| (r - expect).norm() < 1e-10),
                "missing root {expect}"
            );
        }
    }

    #[test]
    fn newton_square_system() {
        // z1^2 - z2 = 0, z2 - 4 = 0  => z2 = 4, z1 = ±2
        let f = |x: &[C64]| -> crate::Result<Vec<C64>> {
            Ok(vec![x[0] * x[0] - x[1], x[1] - C64::new(4.0, 0.0)])
        };
        let (sol, res) = newton_solve_fd(
            &f,
            &[C64::new(1.5, 0.1), C64::new(3.0, 0.0)],
            &NewtonOptions::default(),
        )
        .unwrap();
        assert!(res < 1e-12);
        assert!((sol[0] - C64::new(2.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn lstsq_underdetermined() {
        // x + y = 2 has the min-norm solution (1, 1)
        let a = [C64::new(1.0, 0.0), C64::new(1.0, 0.0)];
        let b = [C64::new(2.0, 0.0)];
        let sol = lstsq(1, 2, &a, &b).unwrap();
        assert!((sol[0] - C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((sol[1] - C64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
