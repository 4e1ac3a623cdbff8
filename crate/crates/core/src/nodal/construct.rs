use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::NodalError;
use crate::linalg::{self, Matrix};
use crate::scalar::{format_qi, parse_qi};
use crate::symmetry::{eigenspace_decomposition, orbit, stabilizer};
use crate::tripoly::{GaussianForm, TriForm, TriFormJson, TriPoint};
use crate::{Qi, Scalar};

/// The T0 basis `sss, sdd, dsd, dds, ppp`.
pub fn t0_forms() -> Vec<TriForm<Qi>> {
    static FORMS: std::sync::OnceLock<Vec<TriForm<Qi>>> = std::sync::OnceLock::new();
    FORMS
        .get_or_init(|| eigenspace_decomposition()[0].forms())
        .clone()
}

/// The 4×5 matrix of conditions on T0-coordinates for `Σ λ_k T0_k` to be
/// singular at `p`: the value at `p` and, per factor, the derivative in the
/// non-chart coordinate.
///
/// This suffices for all seven conditions (value and six partials). Per
/// factor the Euler identity `u_c ∂_c F + u_f ∂_f F = 2F` holds, and the
/// chart coordinate `u_c` is nonzero, so `F(p) = 0` and `∂_f F(p) = 0` force
/// `∂_c F(p) = 0`.
pub fn condition_matrix(p: &TriPoint<Qi>) -> Matrix<Qi> {
    let chart = p.auto_chart();
    let basis = t0_forms();
    let mut rows: Matrix<Qi> = vec![basis.iter().map(|f| f.eval(p)).collect()];
    for (factor, &c) in chart.iter().enumerate() {
        rows.push(
            basis
                .iter()
                .map(|f| f.as_multi().diff(factor, 1 - c).eval(p))
                .collect(),
        );
    }
    rows
}

/// A surface of `|T0|` singular along the G-orbit of its seed point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "NodeSurfaceJson", try_from = "NodeSurfaceJson")]
pub struct NodeSurface {
    pub form: TriForm<Qi>,
    /// Coordinates in the T0 basis; the first nonzero one is 1.
    pub t0_coords: Vec<Qi>,
    pub seed_point: TriPoint<Qi>,
    /// The eight images of the seed in bit order of the group elements.
    pub orbit: Vec<TriPoint<Qi>>,
}

/// The unique member of `|T0|` singular at `p`, when the singularity
/// conditions cut out a single point of `|T0|`.
pub fn surface_through_node(p: &TriPoint<Qi>) -> Result<NodeSurface, NodalError> {
    if let Some(&g) = stabilizer(p).first() {
        return Err(NodalError::FixedPoint(g));
    }
    let kernel = linalg::kernel(&condition_matrix(p), 5);
    if kernel.len() != 1 {
        return Err(NodalError::DegenerateKernel(kernel.len()));
    }
    let mut coords = kernel.into_iter().next().expect("one kernel vector");
    let lead = coords
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("kernel vector is nonzero");
    for c in coords.iter_mut() {
        *c = c.clone() / lead.clone();
    }
    let form = TriForm::combination(&coords, &t0_forms());
    let surface = NodeSurface {
        form,
        t0_coords: coords,
        seed_point: p.clone(),
        orbit: orbit(p),
    };
    surface.check_orbit_singular()?;
    Ok(surface)
}

impl NodeSurface {
    /// Exact check that the form and all six partials vanish on the orbit.
    pub fn check_orbit_singular(&self) -> Result<(), NodalError> {
        let form = GaussianForm::from(self.form.as_multi());
        let partials: Vec<GaussianForm> = (0..6).map(|k| form.diff(k / 2, k % 2)).collect();
        for (i, q) in self.orbit.iter().enumerate() {
            if !form.eval(q).is_zero() || partials.iter().any(|d| !d.eval(q).is_zero()) {
                return Err(NodalError::NotSingularAtOrbit(i));
            }
        }
        Ok(())
    }

    pub fn float_form(&self) -> TriForm<crate::C64> {
        self.form.map_scalars(Scalar::to_c64)
    }
}

#[derive(Serialize, Deserialize)]
struct NodeSurfaceJson {
    form: TriFormJson,
    t0_basis: Vec<String>,
    t0_coords: Vec<String>,
    seed_point: TriPoint<Qi>,
    orbit: Vec<TriPoint<Qi>>,
}

impl From<NodeSurface> for NodeSurfaceJson {
    fn from(s: NodeSurface) -> Self {
        Self {
            form: TriFormJson::from(&s.form),
            t0_basis: eigenspace_decomposition()[0]
                .basis
                .iter()
                .map(|w| w.to_string())
                .collect(),
            t0_coords: s.t0_coords.iter().map(format_qi).collect(),
            seed_point: s.seed_point,
            orbit: s.orbit,
        }
    }
}

impl TryFrom<NodeSurfaceJson> for NodeSurface {
    type Error = String;

    fn try_from(j: NodeSurfaceJson) -> Result<Self, Self::Error> {
        let form = TriForm::try_from(j.form).map_err(|e| e.to_string())?;
        let t0_coords: Vec<Qi> = j
            .t0_coords
            .iter()
            .map(|t| parse_qi(t))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if t0_coords.len() != 5 {
            return Err(format!(
                "expected 5 T0 coordinates, got {}",
                t0_coords.len()
            ));
        }
        if TriForm::combination(&t0_coords, &t0_forms()) != form {
            return Err("form does not match its T0 coordinates".into());
        }
        let expected = orbit(&j.seed_point);
        if j.orbit.len() != 8
            || j.orbit
                .iter()
                .zip(&expected)
                .any(|(a, b)| !a.projectively_eq(b))
        {
            return Err("orbit does not match the seed point".into());
        }
        Ok(Self {
            form,
            t0_coords,
            seed_point: j.seed_point,
            orbit: expected,
        })
    }
}

/// The seed point drawn by [`sample_seed_point`] from a ChaCha8 stream
/// with the given seed.
pub fn seeded_point(seed: u64) -> TriPoint<Qi> {
    use rand::SeedableRng;
    sample_seed_point(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
}

/// Height bound for random seed coordinates.
pub const SEED_HEIGHT: i64 = 20;

/// A random point with Gaussian-integer coordinates of height at most
/// [`SEED_HEIGHT`], not fixed by any nonidentity element of `G` (and hence on
/// no fixed line).
pub fn sample_seed_point(rng: &mut impl Rng) -> TriPoint<Qi> {
    loop {
        let mut gauss = || {
            Qi::from_gaussian(
                rng.random_range(-SEED_HEIGHT..=SEED_HEIGHT),
                rng.random_range(-SEED_HEIGHT..=SEED_HEIGHT),
            )
        };
        let factors = std::array::from_fn(|_| [gauss(), gauss()]);
        if let Ok(p) = TriPoint::new(factors) {
            if stabilizer(&p).is_empty() {
                return p;
            }
        }
    }
}
