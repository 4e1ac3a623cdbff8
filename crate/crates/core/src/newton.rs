//! Damped Gauss–Newton with deflation for complex systems.
//!
//! Steps use the SVD pseudo-inverse of the Jacobian, so iterations still
//! converge quadratically onto positive-dimensional solution sets where the
//! Jacobian drops rank. Deflation rescales the Newton step by the factor
//! obtained from `m(x) F(x)` with `m(x) = Π_r (‖x − r‖⁻² + 1)`, which keeps
//! later runs from reconverging to known roots.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type Vector = DVector<Complex64>;
pub type Jacobian = DMatrix<Complex64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOptions {
    pub max_iterations: usize,
    /// Convergence threshold on the residual norm.
    pub residual_tol: f64,
    /// Relative cutoff for singular values in the pseudo-inverse.
    pub rank_cutoff: f64,
    /// Upper bound on the length of one step.
    pub max_step: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self {
            max_iterations: 80,
            residual_tol: 1e-12,
            rank_cutoff: 1e-10,
            max_step: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonResult {
    pub root: Vector,
    pub residual: f64,
    pub iterations: usize,
}

/// Runs Newton from `start`, deflating the roots in `known`. `system`
/// returns the residual and Jacobian at a point. Returns `None` when the
/// iteration fails to reach `residual_tol` or runs into a known root.
pub fn solve(
    system: impl Fn(&Vector) -> (Vector, Jacobian),
    start: Vector,
    known: &[Vector],
    opts: &NewtonOptions,
) -> Option<NewtonResult> {
    let mut x = start;
    for it in 0..opts.max_iterations {
        let (f, j) = system(&x);
        let residual = f.norm();
        if !residual.is_finite() {
            return None;
        }
        if residual < opts.residual_tol {
            return Some(NewtonResult {
                root: x,
                residual,
                iterations: it,
            });
        }
        let mut step = pseudo_inverse_step(j, &f, opts.rank_cutoff)?;
        step *= Complex64::from(deflation_factor(&x, &step, known)?);
        let len = step.norm();
        if len > opts.max_step {
            step *= Complex64::from(opts.max_step / len);
        }
        x += &step;
    }
    let (f, _) = system(&x);
    let residual = f.norm();
    (residual < opts.residual_tol).then_some(NewtonResult {
        root: x,
        residual,
        iterations: opts.max_iterations,
    })
}

fn pseudo_inverse_step(j: Jacobian, f: &Vector, cutoff: f64) -> Option<Vector> {
    let svd = j.svd(true, true);
    let sigma_max = svd.singular_values.max();
    if !(sigma_max > 0.0) {
        return None;
    }
    svd.solve(&(-f), cutoff * sigma_max).ok()
}

/// Scalar `τ` with deflated step `τ δ`, where `δ` is the plain Newton step.
/// Writing `m = Π (‖x − r‖⁻² + 1)`, one gets `τ = 1 / (1 − ∇log m · δ)`
/// with the real inner product on C^N ≅ R^2N.
fn deflation_factor(x: &Vector, step: &Vector, known: &[Vector]) -> Option<f64> {
    let mut grad_log_dot = 0.0;
    for r in known {
        let d = x - r;
        let n2 = d.norm_squared();
        if n2 == 0.0 {
            return None;
        }
        let re_dot: f64 = d
            .iter()
            .zip(step.iter())
            .map(|(a, b)| (a.conj() * b).re)
            .sum();
        // ∇(‖d‖⁻²) · δ = −2 Re⟨d, δ⟩ / ‖d‖⁴
        grad_log_dot += (-2.0 * re_dot / (n2 * n2)) / (1.0 / n2 + 1.0);
    }
    let denom = 1.0 - grad_log_dot;
    (denom.abs() > 1e-14).then(|| 1.0 / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// x² − 1 = 0, y − x = 0.
    fn system(v: &Vector) -> (Vector, Jacobian) {
        let (x, y) = (v[0], v[1]);
        let f = Vector::from_vec(vec![x * x - c(1.0), y - x]);
        let j = Jacobian::from_row_slice(2, 2, &[c(2.0) * x, c(0.0), c(-1.0), c(1.0)]);
        (f, j)
    }

    #[test]
    fn deflation_finds_the_other_root() {
        let opts = NewtonOptions::default();
        let first = solve(system, Vector::from_vec(vec![c(0.7), c(0.2)]), &[], &opts).unwrap();
        assert!((first.root[0] - c(1.0)).norm() < 1e-10);
        let known = [first.root];
        let mut others = 0;
        for k in 0..8 {
            let start = Vector::from_vec(vec![Complex64::new(0.5 + 0.1 * k as f64, 0.3), c(0.0)]);
            if let Some(r) = solve(system, start, &known, &opts) {
                assert!(
                    (r.root[0] + c(1.0)).norm() < 1e-10,
                    "deflated run returned {}",
                    r.root[0]
                );
                others += 1;
            }
        }
        assert!(others > 0);
    }

    #[test]
    fn converges_onto_a_curve() {
        // (x − y)² = 0 twice: a double line, rank 1 Jacobian on it.
        let line = |v: &Vector| {
            let d = v[0] - v[1];
            (
                Vector::from_vec(vec![d, d]),
                Jacobian::from_row_slice(2, 2, &[c(1.0), c(-1.0), c(1.0), c(-1.0)]),
            )
        };
        let r = solve(
            line,
            Vector::from_vec(vec![c(0.3), c(-0.4)]),
            &[],
            &NewtonOptions::default(),
        )
        .unwrap();
        assert!((r.root[0] - r.root[1]).norm() < 1e-12);
    }
}
