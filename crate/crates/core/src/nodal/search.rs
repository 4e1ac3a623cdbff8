use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::newton::{self, Jacobian, NewtonOptions, Vector};
use crate::symmetry::orbit;
use crate::tripoly::{Chart, MultiForm, TriForm};
use crate::FloatPoint;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub trials: usize,
    pub seed: u64,
    /// Threshold on `|F|` at a unit representative and on the projective
    /// distance used to identify points.
    pub tol: f64,
    /// Roots sought per start before giving up on the start.
    pub roots_per_trial: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            trials: 200,
            seed: 0,
            tol: 1e-9,
            roots_per_trial: 4,
        }
    }
}

/// One singular point up to the action of `G`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoundPoint {
    #[serde(serialize_with = "display")]
    pub point: FloatPoint,
    pub residual: f64,
    /// Number of converged runs that landed in this G-orbit.
    pub hits: usize,
}

/// Best-effort list of singular points, one canonical representative per
/// G-orbit, sorted canonically.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub trials: usize,
    pub converged_runs: usize,
    pub points: Vec<FoundPoint>,
    pub max_residual: f64,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The image of `p` under `G` that is least in canonical point order, scaled
/// to unit factors.
pub fn canonical_representative(p: &FloatPoint) -> FloatPoint {
    orbit(p)
        .iter()
        .map(FloatPoint::unit)
        .min_by(|a, b| a.canonical_cmp(b))
        .expect("orbit is nonempty")
}

/// Derivatives of the coefficient-normalized form up to order two.
struct Derivatives {
    form: TriForm<Complex64>,
    /// `first[f][c]` = ∂F/∂(coordinate c of factor f).
    first: [[MultiForm<Complex64>; 2]; 3],
    second: [[[[MultiForm<Complex64>; 2]; 3]; 2]; 3],
}

impl Derivatives {
    fn new(form: &TriForm<Complex64>) -> Self {
        let scale = form.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
        let form = if scale > 0.0 {
            form.scale(&Complex64::from(1.0 / scale))
        } else {
            form.clone()
        };
        let m = form.as_multi();
        let first = std::array::from_fn(|f| std::array::from_fn(|c| m.diff(f, c)));
        let second = std::array::from_fn(|f| {
            std::array::from_fn(|c| {
                let d: &MultiForm<Complex64> = &first[f][c];
                std::array::from_fn(|g| std::array::from_fn(|e| d.diff(g, e)))
            })
        });
        Self {
            form,
            first,
            second,
        }
    }

    fn point(chart: Chart, t: &Vector) -> FloatPoint {
        let one = Complex64::new(1.0, 0.0);
        FloatPoint {
            factors: std::array::from_fn(|f| {
                if chart[f] == 0 {
                    [one, t[f]]
                } else {
                    [t[f], one]
                }
            }),
        }
    }

    /// Affine gradient and Hessian in `chart`.
    fn system(&self, chart: Chart, t: &Vector) -> (Vector, Jacobian) {
        let p = Self::point(chart, t);
        let free = chart.map(|c| 1 - c);
        let g = Vector::from_fn(3, |f, _| self.first[f][free[f]].eval(&p));
        let h = Jacobian::from_fn(3, 3, |f, k| self.second[f][free[f]][k][free[k]].eval(&p));
        (g, h)
    }

    fn affine_coords(chart: Chart, p: &FloatPoint) -> Vector {
        Vector::from_fn(3, |f, _| {
            p.factors[f][1 - chart[f]] / p.factors[f][chart[f]]
        })
    }
}

/// Multistart Newton with deflation for critical points of the affine
/// dehomogenizations of `form`, kept when `|F|` vanishes to `tol`.
///
/// Each trial draws a chart and a start from its own stream of a ChaCha
/// generator seeded with `opts.seed`, so the result does not depend on
/// thread scheduling.
pub fn numerical_singular_search(form: &TriForm<Complex64>, opts: &SearchOptions) -> SearchReport {
    let der = Derivatives::new(form);
    let runs: Vec<Vec<(FloatPoint, f64)>> = (0..opts.trials)
        .into_par_iter()
        .map(|trial| run_trial(&der, trial as u64, opts))
        .collect();
    let converged_runs = runs.iter().map(Vec::len).sum();
    let mut points: Vec<FoundPoint> = Vec::new();
    for (p, residual) in runs.into_iter().flatten() {
        let rep = canonical_representative(&p);
        match points
            .iter_mut()
            .find(|q| q.point.distance(&rep) < opts.tol)
        {
            Some(q) => {
                q.hits += 1;
                q.residual = q.residual.max(residual);
            }
            None => points.push(FoundPoint {
                point: rep,
                residual,
                hits: 1,
            }),
        }
    }
    points.sort_by(|a, b| a.point.canonical_cmp(&b.point));
    let max_residual = points.iter().map(|p| p.residual).fold(0.0, f64::max);
    SearchReport {
        trials: opts.trials,
        converged_runs,
        points,
        max_residual,
    }
}

fn run_trial(der: &Derivatives, trial: u64, opts: &SearchOptions) -> Vec<(FloatPoint, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(trial);
    let chart: Chart = std::array::from_fn(|_| rng.random_range(0..2));
    let start = Vector::from_fn(3, |_, _| {
        Complex64::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5))
    });
    let newton_opts = NewtonOptions::default();
    let mut known = Vec::new();
    let mut hits = Vec::new();
    for _ in 0..opts.roots_per_trial {
        let Some(r) = newton::solve(
            |t| der.system(chart, t),
            start.clone(),
            &known,
            &newton_opts,
        ) else {
            break;
        };
        let p = polish(der, &Derivatives::point(chart, &r.root));
        known.push(r.root);
        let unit = p.unit();
        let value = der.form.eval(&unit).norm();
        let auto = unit.auto_chart();
        let grad = der
            .system(auto, &Derivatives::affine_coords(auto, &unit))
            .0
            .norm();
        if value < opts.tol && grad < opts.tol {
            hits.push((unit, value.max(grad)));
        }
    }
    hits
}

/// A few undeflated Newton steps in the well-conditioned chart of `p`.
fn polish(der: &Derivatives, p: &FloatPoint) -> FloatPoint {
    let chart = p.auto_chart();
    let t = Derivatives::affine_coords(chart, p);
    let opts = NewtonOptions {
        max_iterations: 20,
        ..NewtonOptions::default()
    };
    match newton::solve(|x| der.system(chart, x), t, &[], &opts) {
        Some(r) => Derivatives::point(chart, &r.root),
        None => p.clone(),
    }
}
