use itertools::Itertools;
use nalgebra::SMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::search::canonical_representative;
use super::{NodalError, NodeSurface};
use crate::symmetry::{eigenspace_decomposition, g0_fixed_lines, orbit, GroupElement};
use crate::{ExactPoint, FloatPoint, Qi, Scalar};

/// How to obtain the roots of `F` on the fixed lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMode {
    /// Fail unless every restricted quadratic splits over Q(i).
    Exact,
    /// Exact roots where they exist, floating roots elsewhere.
    Numeric,
}

/// A point of `Z` on a fixed line of a G₀ element.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPointRecord {
    #[serde(serialize_with = "display")]
    pub element: GroupElement,
    /// Index into the twelve fixed lines.
    pub line: usize,
    #[serde(serialize_with = "display")]
    pub point: FloatPoint,
    #[serde(serialize_with = "display_opt")]
    pub exact: Option<ExactPoint>,
}

/// Four G₀-fixed points forming one G-orbit; one node of the quotient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientClass {
    #[serde(serialize_with = "display")]
    pub element: GroupElement,
    /// Sorted canonically; the first member is the representative.
    pub members: Vec<FixedPointRecord>,
}

impl QuotientClass {
    pub fn representative(&self) -> &FixedPointRecord {
        &self.members[0]
    }
}

/// The seven nodes of the quotient: six classes of G₀-fixed points, indexed
/// 1..=6, and the image of the node orbit, indexed 7.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientNodes {
    pub classes: Vec<QuotientClass>,
    #[serde(serialize_with = "display")]
    pub orbit_node: ExactPoint,
}

impl QuotientNodes {
    /// One float representative per quotient node, in index order.
    pub fn representatives(&self) -> Vec<FloatPoint> {
        let mut reps: Vec<FloatPoint> = self
            .classes
            .iter()
            .map(|c| c.representative().point.clone())
            .collect();
        reps.push(self.orbit_node.map_scalars(Scalar::to_c64).unit());
        reps
    }
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_opt<T: std::fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// Distance below which two numerically computed fixed points are the same.
const FIXED_POINT_TOL: f64 = 1e-8;

/// The 24 points of `Z` on the fixed lines of `G₀`, grouped into six G-orbits
/// of four. Classes are ordered by the free factor of their element
/// (`x`, `y`, `z`), then canonically.
pub fn quotient_node_points(z: &NodeSurface, mode: RootMode) -> Result<QuotientNodes, NodalError> {
    let lines = g0_fixed_lines::<Qi>();
    let mut records = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let r = z.form.restrict_to_line(line.free, &line.pins);
        match (r.exact_roots(), mode) {
            (Some(roots), _) => records.extend(roots.into_iter().map(|t| {
                let p = line.point(t);
                FixedPointRecord {
                    element: line.element,
                    line: i,
                    point: p.map_scalars(Scalar::to_c64).unit(),
                    exact: Some(p),
                }
            })),
            (None, RootMode::Exact) => return Err(NodalError::IrrationalRoot(i)),
            (None, RootMode::Numeric) => {
                let pins = line.pins.map_scalars(Scalar::to_c64);
                records.extend(r.approx_roots().into_iter().map(|t| {
                    let mut p = pins.clone();
                    p.factors[line.free] = t;
                    FixedPointRecord {
                        element: line.element,
                        line: i,
                        point: p.unit(),
                        exact: None,
                    }
                }));
            }
        }
    }
    if records.len() != 24 {
        return Err(NodalError::UnexpectedFixedPoints(format!(
            "{} points on the fixed lines",
            records.len()
        )));
    }
    let mut classes = Vec::new();
    for free in 0..3 {
        let mut own: Vec<(FloatPoint, FixedPointRecord)> = records
            .iter()
            .filter(|r| lines[r.line].free == free)
            .map(|r| (canonical_representative(&r.point), r.clone()))
            .collect();
        own.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let mut groups: Vec<(FloatPoint, Vec<FixedPointRecord>)> = Vec::new();
        for (rep, rec) in own {
            match groups
                .iter_mut()
                .find(|(r, _)| r.distance(&rep) < FIXED_POINT_TOL)
            {
                Some((_, members)) => members.push(rec),
                None => groups.push((rep, vec![rec])),
            }
        }
        if groups.len() != 2 || groups.iter().any(|(_, m)| m.len() != 4) {
            let sizes: Vec<usize> = groups.iter().map(|(_, m)| m.len()).collect();
            return Err(NodalError::UnexpectedFixedPoints(format!(
                "class sizes {sizes:?} for free factor {free}"
            )));
        }
        for (_, mut members) in groups {
            members.sort_by(|a, b| a.point.canonical_cmp(&b.point));
            classes.push(QuotientClass {
                element: members[0].element,
                members,
            });
        }
    }
    Ok(QuotientNodes {
        classes,
        orbit_node: z.seed_point.clone(),
    })
}

/// A point of P³ as a unit vector.
pub type P3Point = [Complex64; 4];

/// Images of the seven quotient nodes under the four T1 forms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeImages {
    pub points: Vec<P3Point>,
    /// Largest P³ distance between the images of two points of the same
    /// quotient node; zero up to rounding because T1 forms are relatively
    /// invariant.
    pub class_spread: f64,
}

fn t1_image(p: &FloatPoint) -> Option<P3Point> {
    let forms = eigenspace_decomposition()[1].forms::<Complex64>();
    let u = p.unit();
    let v: Vec<Complex64> = forms.iter().map(|f| f.eval(&u)).collect();
    let n = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    (n > 1e-9).then(|| std::array::from_fn(|k| v[k] / n))
}

/// Sine of the angle between two points of P³, computed from the component
/// of `a` orthogonal to `b` to keep full precision near zero.
pub fn p3_distance(a: &P3Point, b: &P3Point) -> f64 {
    let nb: f64 = b.iter().map(|c| c.norm_sqr()).sum();
    let na: f64 = a.iter().map(|c| c.norm_sqr()).sum();
    let dot: Complex64 = b.iter().zip(a).map(|(x, y)| x.conj() * y).sum();
    let k = dot / nb;
    let perp: f64 = a.iter().zip(b).map(|(x, y)| (x - k * y).norm_sqr()).sum();
    (perp / na).sqrt()
}

/// Evaluates the T1 basis at the quotient node representatives.
pub fn node_images(nodes: &QuotientNodes) -> Result<NodeImages, NodalError> {
    let mut points = Vec::new();
    let mut spread: f64 = 0.0;
    let mut groups: Vec<Vec<FloatPoint>> = nodes
        .classes
        .iter()
        .map(|c| c.members.iter().map(|m| m.point.clone()).collect())
        .collect();
    groups.push(orbit(&nodes.orbit_node.map_scalars(Scalar::to_c64)));
    for (index, group) in groups.iter().enumerate() {
        let images: Vec<P3Point> = group
            .iter()
            .map(t1_image)
            .collect::<Option<_>>()
            .ok_or(NodalError::BasePointHit(index + 1))?;
        for w in &images[1..] {
            spread = spread.max(p3_distance(&images[0], w));
        }
        points.push(images[0]);
    }
    Ok(NodeImages {
        points,
        class_spread: spread,
    })
}

/// Index triples (1-based) whose points lie on a line: the smallest singular
/// value of the stacked 3×4 matrix is below `tol` times the largest.
pub fn collinear_triples(points: &[P3Point], tol: f64) -> Vec<[usize; 3]> {
    (0..points.len())
        .tuple_combinations()
        .filter(|&(a, b, c)| {
            let m =
                SMatrix::<Complex64, 3, 4>::from_fn(|r, k| [points[a], points[b], points[c]][r][k]);
            let s = m.singular_values();
            s.min() < tol * s.max()
        })
        .map(|(a, b, c)| [a + 1, b + 1, c + 1])
        .collect()
}
