use num_traits::Zero;
use serde::Serialize;

use super::search::{numerical_singular_search, FoundPoint, SearchOptions, SearchReport};
use super::{canonical_representative, NodalError, NodeSurface};
use crate::scalar::format_qi;
use crate::symmetry::{g0_fixed_lines, isolated_fixed_points, FixedLine};
use crate::tripoly::{
    affine_hessian_with, BinaryForm, Chart, GaussianForm, TriForm, TriPoint, FACTOR_NAMES,
};
use crate::{Qi, Scalar};

/// Exact node test at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeCheck {
    pub point: String,
    pub gradient_zero: bool,
    pub chart: Chart,
    pub hessian_det: String,
    pub hessian_rank: usize,
    pub node: bool,
}

/// Ordinary double point test: all six partials vanish exactly and the
/// affine Hessian has rank 3.
pub fn verify_node(form: &TriForm<Qi>, q: &TriPoint<Qi>) -> Result<NodeCheck, NodalError> {
    let f = GaussianForm::from(form.as_multi());
    let critical = f.eval(q).is_zero() && (0..6).all(|k| f.diff(k / 2, k % 2).eval(q).is_zero());
    if !critical {
        return Err(NodalError::NotCritical);
    }
    let h = affine_hessian_with(q, None, |i, j, chart| {
        let g = f.diff(i, 1 - chart[i]).diff(j, 1 - chart[j]);
        (g.eval(q), g.degrees())
    })?;
    let determinant = h.determinant();
    let rank = h.rank();
    Ok(NodeCheck {
        point: q.to_string(),
        gradient_zero: true,
        chart: h.chart,
        hessian_det: format_qi(&determinant),
        hessian_rank: rank,
        node: rank == 3,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointCheck {
    pub element: String,
    pub point: String,
    /// `F` does not vanish at the point.
    pub avoided: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineCheck {
    pub element: String,
    pub line: String,
    /// `F` restricted to the line is not identically zero.
    pub nonzero: bool,
    /// The restriction has two distinct roots.
    pub squarefree: bool,
    /// No point of `Z` on the line is singular.
    pub smooth: bool,
}

impl LineCheck {
    pub fn passed(&self) -> bool {
        self.nonzero && self.squarefree && self.smooth
    }
}

/// `x=1:0,y=0:1,z=*` for the line with free factor `z`.
pub(crate) fn describe_line(line: &FixedLine<Qi>) -> String {
    (0..3)
        .map(|f| {
            let coords = if f == line.free {
                "*".to_string()
            } else {
                let u = &line.pins.factors[f];
                format!("{}:{}", format_qi(&u[0]), format_qi(&u[1]))
            };
            format!("{}={}", FACTOR_NAMES[f], coords)
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Everything [`certify`] established about a surface. All fields are exact
/// except `search`, which is a best-effort numerical completeness check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeCertificate {
    pub nodes: Vec<Result<NodeCheck, String>>,
    pub fixed_points: Vec<PointCheck>,
    pub fixed_lines: Vec<LineCheck>,
    pub search: SearchReport,
    /// Singular points found by the search outside the node orbit.
    pub extra_singularities: Vec<FoundPoint>,
}

impl NodeCertificate {
    /// The first failed condition, preferring extra singularities, then
    /// fixed-locus violations, then degenerate nodes.
    ///
    /// Members of `|T0|` are G-invariant, so a fixed-locus violation forces a
    /// singular point at the fixed locus, and the search usually reports it
    /// too. [`Self::exact_verdict`] names the exact violation instead.
    pub fn verdict(&self) -> Result<(), NodalError> {
        if let Some(x) = self.extra_singularities.first() {
            return Err(NodalError::ExtraSingularityFound {
                point: x.point.to_string(),
                residual: x.residual,
            });
        }
        self.exact_verdict()
    }

    /// The first failed exact condition: fixed points, then fixed lines, then
    /// nodes. Ignores the numerical search.
    pub fn exact_verdict(&self) -> Result<(), NodalError> {
        if let Some(c) = self.fixed_points.iter().find(|c| !c.avoided) {
            return Err(NodalError::FixedLocusViolation(format!(
                "Z contains {} fixed by {}",
                c.point, c.element
            )));
        }
        if let Some(c) = self.fixed_lines.iter().find(|c| !c.passed()) {
            let what = if !c.nonzero {
                "contains"
            } else if !c.smooth {
                "is singular on"
            } else {
                "is tangent to"
            };
            return Err(NodalError::FixedLocusViolation(format!(
                "Z {what} the fixed line {} of {}",
                c.line, c.element
            )));
        }
        for (index, n) in self.nodes.iter().enumerate() {
            match n {
                Err(_) => return Err(NodalError::NotSingularAtOrbit(index)),
                Ok(n) if !n.node => {
                    return Err(NodalError::DegenerateNode {
                        index,
                        rank: n.hessian_rank,
                    })
                }
                Ok(_) => {}
            }
        }
        Ok(())
    }

    pub fn exact_checks_passed(&self) -> bool {
        self.exact_verdict().is_ok()
    }
}

/// Runs every check on `z` and returns the full report, whatever its verdict.
pub fn certify(z: &NodeSurface, opts: &SearchOptions) -> NodeCertificate {
    let f = &z.form;
    let nodes = z
        .orbit
        .iter()
        .map(|q| verify_node(f, q).map_err(|e| e.to_string()))
        .collect();
    let fixed_points = isolated_fixed_points::<Qi>()
        .into_iter()
        .map(|(g, p)| PointCheck {
            element: g.to_string(),
            point: p.to_string(),
            avoided: !f.eval(&p).is_zero(),
        })
        .collect();
    let partials = f.partials();
    let fixed_lines = g0_fixed_lines::<Qi>()
        .iter()
        .map(|line| {
            let r = f.restrict_to_line(line.free, &line.pins);
            let nonzero = !r.is_zero();
            let squarefree = nonzero && r.squarefree() == Ok(true);
            let mut all = vec![r];
            all.extend(
                partials
                    .iter()
                    .map(|d| d.restrict_to_line(line.free, &line.pins)),
            );
            let smooth = nonzero && BinaryForm::common_root_degree(&all) == Some(0);
            LineCheck {
                element: line.element.to_string(),
                line: describe_line(line),
                nonzero,
                squarefree,
                smooth,
            }
        })
        .collect();
    let search = numerical_singular_search(&z.float_form(), opts);
    let node_rep = canonical_representative(&z.seed_point.map_scalars(Scalar::to_c64));
    let extra_singularities = search
        .points
        .iter()
        .filter(|p| p.point.distance(&node_rep) >= opts.tol)
        .cloned()
        .collect();
    NodeCertificate {
        nodes,
        fixed_points,
        fixed_lines,
        search,
        extra_singularities,
    }
}

/// [`certify`], failing with the first violated condition.
pub fn membership_check(
    z: &NodeSurface,
    opts: &SearchOptions,
) -> Result<NodeCertificate, NodalError> {
    let cert = certify(z, opts);
    cert.verdict()?;
    Ok(cert)
}
