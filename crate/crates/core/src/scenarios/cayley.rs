//! Exact verification of the Cayley nodal cubic `x₁x₂x₃ + x₀x₂x₃ + x₀x₁x₃ + x₀x₁x₂`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::data::{cayley_data, LineData};
use crate::linalg;
use crate::newton::{self, Jacobian, NewtonOptions, Vector};
use crate::Rational;

/// A homogeneous polynomial in `x₀, …, x₃` over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly4 {
    terms: BTreeMap<[u32; 4], Rational>,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Poly4 {
    pub fn new(terms: impl IntoIterator<Item = ([u32; 4], Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        Self { terms: map }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).all_equal()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, p: &[Rational; 4]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                (0..4).fold(c.clone(), |acc, i| {
                    acc * num_traits::pow(p[i].clone(), e[i] as usize)
                })
            })
            .sum()
    }

    pub fn eval_c64(&self, p: &[Complex64; 4]) -> Complex64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(e, c)| {
                (0..4).fold(Complex64::from(c.to_f64().unwrap_or(f64::NAN)), |acc, i| {
                    acc * p[i].powu(e[i])
                })
            })
            .sum()
    }

    pub fn diff(&self, i: usize) -> Self {
        Self::new(self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut f = *e;
            f[i] -= 1;
            (f, c * int(e[i] as i64))
        }))
    }

    /// Sets the variables outside `support` to zero.
    pub fn restrict_to_support(&self, support: &[usize]) -> Self {
        Self::new(
            self.terms
                .iter()
                .filter(|(e, _)| (0..4).all(|i| support.contains(&i) || e[i] == 0))
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficients of `f(s·p + t·q)` as a binary form in `s, t`, from
    /// `t⁰` up, by exact interpolation at `s = 1`, `t = 0, …, d`.
    pub fn restrict_to_line(&self, p: &[i64; 4], q: &[i64; 4]) -> Vec<Rational> {
        let d = self.degree().unwrap_or(0) as usize;
        let point =
            |s: i64, t: i64| -> [Rational; 4] { std::array::from_fn(|i| int(s * p[i] + t * q[i])) };
        // Rows: Vandermonde in t at s = 1, augmented with the value.
        let rows: linalg::Matrix<Rational> = (0..=d as i64)
            .map(|t| {
                let mut row: Vec<Rational> = (0..=d).map(|k| num_traits::pow(int(t), k)).collect();
                row.push(self.eval(&point(1, t)));
                row
            })
            .collect();
        let (red, _) = linalg::rref(rows);
        red.iter().map(|r| r[d + 1].clone()).collect()
    }
}

/// Exact node check at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeCheck {
    pub point: [i64; 4],
    pub on_surface: bool,
    pub singular: bool,
    /// Rank of the affine Hessian, which is the rank of the tangent cone.
    pub cone_rank: usize,
}

impl NodeCheck {
    pub fn is_node(&self) -> bool {
        self.on_surface && self.singular && self.cone_rank == 3
    }
}

/// Singular points whose nonzero coordinates are exactly `support`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportCheck {
    pub support: Vec<usize>,
    /// Some partial restricted to the support is a single monomial, so it has
    /// no zero with all support coordinates nonzero.
    pub excluded: bool,
    /// For a single coordinate, whether the coordinate point is singular.
    pub coordinate_point_singular: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    pub name: String,
    pub on_surface: bool,
    /// For the three lines of the plane section, whether they lie in the plane.
    pub in_plane: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceCheck {
    pub line: String,
    pub edge: String,
    pub meets: bool,
    pub expected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CayleyOptions {
    /// Multistart runs in the open torus, where the exact sweep does not reach.
    pub trials: usize,
    pub seed: u64,
}

impl Default for CayleyOptions {
    fn default() -> Self {
        Self {
            trials: 64,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CayleyReport {
    pub degree: u32,
    pub nodes: Vec<NodeCheck>,
    pub sweep: Vec<SupportCheck>,
    pub interior_trials: usize,
    /// Singular points found numerically with all coordinates nonzero.
    pub interior_singular_points: Vec<[Complex64; 4]>,
    pub lines: Vec<LineCheck>,
    pub incidences: Vec<IncidenceCheck>,
    /// The nine lines are pairwise distinct.
    pub lines_distinct: bool,
    pub passed: bool,
}

fn line_meets(a: &LineData, b: &LineData) -> bool {
    let m: linalg::Matrix<Rational> = a
        .points
        .iter()
        .chain(&b.points)
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect();
    linalg::determinant(&m).is_zero()
}

fn same_line(a: &LineData, b: &LineData) -> bool {
    let m: linalg::Matrix<Rational> = a
        .points
        .iter()
        .chain(&b.points)
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect();
    linalg::rank(&m) == 2
}

fn hessian_rank_at(f: &Poly4, p: &[i64; 4]) -> usize {
    let point: [Rational; 4] = std::array::from_fn(|i| int(p[i]));
    let chart = p.iter().position(|&x| x != 0).expect("nonzero point");
    let vars: Vec<usize> = (0..4).filter(|&i| i != chart).collect();
    let h: linalg::Matrix<Rational> = vars
        .iter()
        .map(|&i| {
            vars.iter()
                .map(|&j| f.diff(i).diff(j).eval(&point))
                .collect()
        })
        .collect();
    linalg::rank(&h)
}

/// Gauss–Newton on the gradient in the chart `x₀ = 1` from random starts.
fn interior_search(f: &Poly4, opts: &CayleyOptions) -> Vec<[Complex64; 4]> {
    let grad: Vec<Poly4> = (0..4).map(|i| f.diff(i)).collect();
    let hess: Vec<Vec<Poly4>> = (0..4)
        .map(|i| (1..4).map(|j| grad[i].diff(j)).collect())
        .collect();
    let at = |v: &Vector| -> [Complex64; 4] { [Complex64::from(1.0), v[0], v[1], v[2]] };
    let system = |v: &Vector| {
        let p = at(v);
        let g = Vector::from_fn(4, |i, _| grad[i].eval_c64(&p));
        let j = Jacobian::from_fn(4, 3, |i, k| hess[i][k].eval_c64(&p));
        (g, j)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut found: Vec<[Complex64; 4]> = Vec::new();
    let newton_opts = NewtonOptions::default();
    for _ in 0..opts.trials {
        let start = Vector::from_fn(3, |_, _| {
            Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))
        });
        if let Some(r) = newton::solve(system, start, &[], &newton_opts) {
            let p = at(&r.root);
            let scale = p.iter().fold(0.0f64, |m, x| m.max(x.norm()));
            let interior = p.iter().all(|x| x.norm() > 1e-6 * scale);
            if interior
                && !found
                    .iter()
                    .any(|q| q.iter().zip(&p).all(|(a, b)| (a - b).norm() < 1e-8))
            {
                found.push(p);
            }
        }
    }
    found
}

/// Checks the nodes, singular locus, lines and incidences of the bundled
/// Cayley cubic. Every check except the torus search is exact.
pub fn cayley_verify(opts: &CayleyOptions) -> CayleyReport {
    let data = cayley_data();
    let f = Poly4::new(data.cubic.terms.iter().map(|t| {
        (
            t.exp,
            t.coeff.parse::<Rational>().expect("rational coefficient"),
        )
    }));
    let degree = f.degree().unwrap_or(0);
    let grad: Vec<Poly4> = (0..4).map(|i| f.diff(i)).collect();

    let nodes: Vec<NodeCheck> = data
        .nodes
        .iter()
        .map(|p| {
            let q: [Rational; 4] = std::array::from_fn(|i| int(p[i]));
            NodeCheck {
                point: *p,
                on_surface: f.eval(&q).is_zero(),
                singular: grad.iter().all(|g| g.eval(&q).is_zero()),
                cone_rank: hessian_rank_at(&f, p),
            }
        })
        .collect();

    let sweep: Vec<SupportCheck> = (1..4)
        .flat_map(|k| (0..4).combinations(k))
        .map(|support| {
            let excluded = grad
                .iter()
                .any(|g| g.restrict_to_support(&support).is_monomial());
            let coordinate_point_singular = (support.len() == 1).then(|| {
                let q: [Rational; 4] = std::array::from_fn(|i| {
                    if i == support[0] {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                });
                grad.iter().all(|g| g.eval(&q).is_zero())
            });
            SupportCheck {
                support,
                excluded,
                coordinate_point_singular,
            }
        })
        .collect();

    let interior_singular_points = interior_search(&f, opts);

    let plane = data.plane;
    let mut lines: Vec<LineCheck> = Vec::new();
    for (l, in_plane) in data
        .edges
        .iter()
        .map(|l| (l, None))
        .chain(data.plane_lines.iter().map(|l| {
            let inside = l
                .points
                .iter()
                .all(|p| p.iter().zip(&plane).map(|(a, b)| a * b).sum::<i64>() == 0);
            (l, Some(inside))
        }))
    {
        let on_surface = f
            .restrict_to_line(&l.points[0], &l.points[1])
            .iter()
            .all(Zero::is_zero);
        lines.push(LineCheck {
            name: l.name.clone(),
            on_surface,
            in_plane,
        });
    }

    let incidences: Vec<IncidenceCheck> = data
        .plane_lines
        .iter()
        .flat_map(|l| {
            data.edges.iter().map(move |e| IncidenceCheck {
                line: l.name.clone(),
                edge: e.name.clone(),
                meets: line_meets(l, e),
                expected: l.meets.contains(&e.name),
            })
        })
        .collect();

    let all: Vec<&LineData> = data.edges.iter().chain(&data.plane_lines).collect();
    let lines_distinct = all
        .iter()
        .tuple_combinations()
        .all(|(a, b)| !same_line(a, b));

    let passed = degree == 3
        && f.is_homogeneous()
        && nodes.len() == 4
        && nodes.iter().all(NodeCheck::is_node)
        && sweep
            .iter()
            .all(|s| s.excluded || s.coordinate_point_singular == Some(true))
        && interior_singular_points.is_empty()
        && lines.len() == 9
        && lines
            .iter()
            .all(|l| l.on_surface && l.in_plane != Some(false))
        && incidences.iter().all(|i| i.meets == i.expected)
        && lines_distinct;

    CayleyReport {
        degree,
        nodes,
        sweep,
        interior_trials: opts.trials,
        interior_singular_points,
        lines,
        incidences,
        lines_distinct,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_restriction_recovers_coefficients() {
        // x₀² x₁ on the line (1,0,0,0) + t(0,1,0,0) is t.
        let f = Poly4::new([([2, 1, 0, 0], int(1))]);
        let c = f.restrict_to_line(&[1, 0, 0, 0], &[0, 1, 0, 0]);
        assert_eq!(c, vec![int(0), int(1), int(0), int(0)]);
    }
}
