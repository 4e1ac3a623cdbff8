use super::{TriForm, TriPoint, TriPolyError};
use crate::linalg;
use crate::scalar::Scalar;

/// Per factor, the index of the coordinate set to 1.
pub type Chart = [usize; 3];

/// Hessian of the dehomogenized form at a point, in a recorded chart.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineHessian<S> {
    pub chart: Chart,
    pub matrix: [[S; 3]; 3],
}

impl<S: Scalar> AffineHessian<S> {
    pub fn determinant(&self) -> S {
        let m = |i: usize, j: usize| self.matrix[i][j].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    pub fn rank(&self) -> usize {
        if !self.determinant().is_zero() {
            return 3;
        }
        linalg::rank(&self.rows())
    }

    fn rows(&self) -> Vec<Vec<S>> {
        self.matrix.iter().map(|r| r.to_vec()).collect()
    }
}

/// Hessian of `f` at `p` in the affine chart where, per factor, the chart
/// coordinate is 1 and the other coordinate is the affine variable. Without
/// a hint the chart is [`TriPoint::auto_chart`].
///
/// Meaningful as a singularity certificate only at critical points: there
/// the rank does not depend on the chart.
pub fn affine_hessian<S: Scalar>(
    f: &TriForm<S>,
    p: &TriPoint<S>,
    chart: Option<Chart>,
) -> Result<AffineHessian<S>, TriPolyError> {
    affine_hessian_with(p, chart, |i, j, chart| {
        let g = f.as_multi().diff(i, 1 - chart[i]).diff(j, 1 - chart[j]);
        (g.eval(p), g.degrees())
    })
}

/// The affine Hessian at `p` from the second partials: `second(i, j)`
/// returns `∂_i ∂_j F` in the non-chart coordinates of factors `i` and `j`,
/// evaluated at `p` itself, together with its multidegree.
pub fn affine_hessian_with<S: Scalar>(
    p: &TriPoint<S>,
    chart: Option<Chart>,
    second: impl Fn(usize, usize, Chart) -> (S, [usize; 3]),
) -> Result<AffineHessian<S>, TriPolyError> {
    let chart = chart.unwrap_or_else(|| p.auto_chart());
    let c: [S; 3] = std::array::from_fn(|f| p.factors[f][chart[f]].clone());
    if let Some(factor) = c.iter().position(|x| x.is_zero()) {
        return Err(TriPolyError::ChartDegenerate { factor });
    }
    // A form of degree `d_h` in factor `h` takes the value `G(p) / Π c_h^{d_h}`
    // at the chart representative of `p`.
    let matrix = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (value, degrees) = second(i, j, chart);
            let scale = (0..3).fold(S::one(), |acc, h| {
                (0..degrees[h]).fold(acc, |a, _| a * c[h].clone())
            });
            value / scale
        })
    });
    Ok(AffineHessian { chart, matrix })
}
