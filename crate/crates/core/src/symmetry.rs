//! The group `G ≅ Z₂³` acting on P¹ × P¹ × P¹ and on (2,2,2)-forms.
//!
//! On a single P¹ the Klein four-group is generated by `e1 = diag(1, −1)` and
//! `e2 = [[0, 1], [1, 0]]`, with `e3 = e1 e2`. `G` is generated by
//! `g3 = (e1, e1, 1)`, `g2 = (e1, 1, e1)` and `h = (e2, e2, e2)`; the
//! subgroup `G₀ = ⟨g3, g2⟩` has one-dimensional fixed loci, the other four
//! nonidentity elements have isolated fixed points.
//!
//! Forms are acted on by substitution `f ↦ f(M·)`. Matrix representatives
//! compose only up to a sign per factor, which is invisible in degree 2.

use std::fmt;

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::tripoly::{ProjPoint, Quad, TriForm, TriPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("the identity element fixes everything")]
    IdentityElement,
}

/// An element of the Klein four-group acting on one P¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KleinElement {
    One,
    E1,
    E2,
    E3,
}

impl KleinElement {
    fn from_bits(e1: bool, e2: bool) -> Self {
        match (e1, e2) {
            (false, false) => Self::One,
            (true, false) => Self::E1,
            (false, true) => Self::E2,
            (true, true) => Self::E3,
        }
    }

    /// Matrix representative `[[a, b], [c, d]]`.
    pub fn matrix<S: Scalar>(self) -> [[S; 2]; 2] {
        let (o, z) = (S::one(), S::zero());
        match self {
            Self::One => [[o.clone(), z.clone()], [z, o]],
            Self::E1 => [[o.clone(), z.clone()], [z, -o]],
            Self::E2 => [[z.clone(), o.clone()], [o, z]],
            Self::E3 => [[z.clone(), o.clone()], [-o, z]],
        }
    }

    /// The two fixed points on P¹; empty for the identity.
    pub fn fixed_points<S: Scalar>(self) -> Vec<ProjPoint<S>> {
        let (o, z, i) = (S::one(), S::zero(), S::imaginary_unit());
        match self {
            Self::One => vec![],
            Self::E1 => vec![[o.clone(), z.clone()], [z, o]],
            Self::E2 => vec![[o.clone(), o.clone()], [o.clone(), -o]],
            Self::E3 => vec![[o.clone(), i.clone()], [o, -i]],
        }
    }

    pub fn apply<S: Scalar>(self, u: &ProjPoint<S>) -> ProjPoint<S> {
        let m = self.matrix::<S>();
        std::array::from_fn(|r| m[r][0].clone() * u[0].clone() + m[r][1].clone() * u[1].clone())
    }

    /// Matrix of `q ↦ q(M·)` on the quadric coefficients `(u0², u0u1, u1²)`:
    /// column `k` holds the image of `u0^(2−k) u1^k`.
    fn quadric_action<S: Scalar>(self) -> [[S; 3]; 3] {
        let [[a, b], [c, d]] = self.matrix::<S>();
        // Linear forms l0 = a u0 + b u1 and l1 = c u0 + d u1.
        let mul = |p: [S; 2], q: [S; 2]| -> [S; 3] {
            [
                p[0].clone() * q[0].clone(),
                p[0].clone() * q[1].clone() + p[1].clone() * q[0].clone(),
                p[1].clone() * q[1].clone(),
            ]
        };
        let l0 = [a, b];
        let l1 = [c, d];
        let cols = [
            mul(l0.clone(), l0.clone()),
            mul(l0, l1.clone()),
            mul(l1.clone(), l1),
        ];
        std::array::from_fn(|r| std::array::from_fn(|k| cols[k][r].clone()))
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::One => "1",
            Self::E1 => "e1",
            Self::E2 => "e2",
            Self::E3 => "e3",
        }
    }
}

/// An element of `G`, stored as exponents of `(g3, g2, h)` in bits 0, 1, 2.
/// Multiplication is XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(u8);

impl GroupElement {
    pub const IDENTITY: Self = Self(0);
    pub const G3: Self = Self(1);
    pub const G2: Self = Self(2);
    pub const H: Self = Self(4);
    pub const GENERATORS: [Self; 3] = [Self::G3, Self::G2, Self::H];

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 8, "group element bits out of range");
        Self(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// All eight elements in bit order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..8).map(Self)
    }

    pub fn mul(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn in_g0(self) -> bool {
        self.0 & 4 == 0
    }

    /// Per-factor components.
    pub fn components(self) -> [KleinElement; 3] {
        let b = |k: u8| self.0 >> k & 1 == 1;
        let e2 = b(2);
        [
            KleinElement::from_bits(b(0) ^ b(1), e2),
            KleinElement::from_bits(b(0), e2),
            KleinElement::from_bits(b(1), e2),
        ]
    }

    pub fn act_on_point<S: Scalar>(self, p: &TriPoint<S>) -> TriPoint<S> {
        let c = self.components();
        TriPoint {
            factors: std::array::from_fn(|f| c[f].apply(&p.factors[f])),
        }
    }

    pub fn act_on_form<S: Scalar>(self, f: &TriForm<S>) -> TriForm<S> {
        let t = self.components().map(KleinElement::quadric_action::<S>);
        let mut out = vec![S::zero(); 27];
        for ([a, b, c], k) in f.terms().filter(|(_, k)| !k.is_zero()) {
            for (i, slot) in out.iter_mut().enumerate() {
                let (a2, b2, c2) = (i / 9, i / 3 % 3, i % 3);
                let w = t[0][a2][a].clone() * t[1][b2][b].clone() * t[2][c2][c].clone();
                if !w.is_zero() {
                    *slot = slot.clone() + k.clone() * w;
                }
            }
        }
        TriForm::from_coeffs(out).expect("27 coefficients")
    }

    /// Fixed locus of a nonidentity element.
    pub fn fixed_locus<S: Scalar>(self) -> Result<FixedLocus<S>, SymmetryError> {
        if self.is_identity() {
            return Err(SymmetryError::IdentityElement);
        }
        let c = self.components();
        let choices: Vec<Vec<ProjPoint<S>>> = c.iter().map(|k| k.fixed_points()).collect();
        if let Some(free) = c.iter().position(|&k| k == KleinElement::One) {
            let placeholder = [S::one(), S::zero()];
            let mut lines = Vec::new();
            let others: Vec<usize> = (0..3).filter(|&f| f != free).collect();
            for u in &choices[others[0]] {
                for v in &choices[others[1]] {
                    let mut factors = [
                        placeholder.clone(),
                        placeholder.clone(),
                        placeholder.clone(),
                    ];
                    factors[others[0]] = u.clone();
                    factors[others[1]] = v.clone();
                    lines.push(FixedLine {
                        element: self,
                        free,
                        pins: TriPoint { factors },
                    });
                }
            }
            Ok(FixedLocus::Lines(lines))
        } else {
            let mut points = Vec::new();
            for u in &choices[0] {
                for v in &choices[1] {
                    for w in &choices[2] {
                        points.push(TriPoint {
                            factors: [u.clone(), v.clone(), w.clone()],
                        });
                    }
                }
            }
            Ok(FixedLocus::Points(points))
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.components().map(KleinElement::name);
        write!(out, "({a},{b},{c})")
    }
}

/// A fixed line: factor `free` varies, the other two are pinned.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedLine<S> {
    pub element: GroupElement,
    pub free: usize,
    /// Pinned coordinates; the entry at `free` is a placeholder.
    pub pins: TriPoint<S>,
}

impl<S: Scalar> FixedLine<S> {
    /// The point of the line with free coordinate `t`.
    pub fn point(&self, t: ProjPoint<S>) -> TriPoint<S> {
        let mut p = self.pins.clone();
        p.factors[self.free] = t;
        p
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FixedLocus<S> {
    Lines(Vec<FixedLine<S>>),
    Points(Vec<TriPoint<S>>),
}

impl<S> FixedLocus<S> {
    pub fn dimension(&self) -> usize {
        match self {
            Self::Lines(_) => 1,
            Self::Points(_) => 0,
        }
    }
}

/// The 12 fixed lines of the nonidentity elements of `G₀`.
pub fn g0_fixed_lines<S: Scalar>() -> Vec<FixedLine<S>> {
    GroupElement::all()
        .filter(|g| g.in_g0() && !g.is_identity())
        .flat_map(|g| match g.fixed_locus() {
            Ok(FixedLocus::Lines(l)) => l,
            _ => unreachable!("nonidentity elements of G0 fix lines"),
        })
        .collect()
}

/// The 32 isolated fixed points of the elements of `G ∖ G₀`, with the
/// element fixing each.
pub fn isolated_fixed_points<S: Scalar>() -> Vec<(GroupElement, TriPoint<S>)> {
    GroupElement::all()
        .filter(|g| !g.in_g0())
        .flat_map(|g| match g.fixed_locus() {
            Ok(FixedLocus::Points(p)) => p.into_iter().map(move |q| (g, q)),
            _ => unreachable!("elements outside G0 fix isolated points"),
        })
        .collect()
}

/// The eight images `g·p` in bit order of `g`.
pub fn orbit<S: Scalar>(p: &TriPoint<S>) -> Vec<TriPoint<S>> {
    GroupElement::all().map(|g| g.act_on_point(p)).collect()
}

/// Nonidentity elements fixing `p` (exact comparison).
pub fn stabilizer<S: Scalar>(p: &TriPoint<S>) -> Vec<GroupElement> {
    GroupElement::all()
        .filter(|g| !g.is_identity() && g.act_on_point(p).projectively_eq(p))
        .collect()
}

/// Number of distinct points in the orbit (exact comparison).
pub fn orbit_size<S: Scalar>(p: &TriPoint<S>) -> usize {
    8 / (stabilizer(p).len() + 1)
}

/// A product `q1(x) q2(y) q3(z)` of eigen-quadrics, written e.g. `sdd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdpWord(pub [Quad; 3]);

impl SdpWord {
    /// All 27 words in lexicographic order with `s < d < p`.
    pub fn all() -> impl Iterator<Item = Self> {
        const Q: [Quad; 3] = [Quad::S, Quad::D, Quad::P];
        (0..27).map(|i| Self([Q[i / 9], Q[i / 3 % 3], Q[i % 3]]))
    }

    pub fn form<S: Scalar>(self) -> TriForm<S> {
        let [a, b, c] = self.0;
        TriForm::product(&a.coeffs(), &b.coeffs(), &c.coeffs())
    }
}

impl fmt::Display for SdpWord {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in self.0 {
            write!(out, "{}", q.letter())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SdpWord {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let q: Vec<Quad> = text
            .chars()
            .map(Quad::from_letter)
            .collect::<Option<_>>()
            .ok_or_else(|| format!("not an s/d/p word: `{text}`"))?;
        let q: [Quad; 3] = q
            .try_into()
            .map_err(|_| format!("word `{text}` must have length 3"))?;
        Ok(Self(q))
    }
}

/// Character values on `(g3, g2, h)`.
pub type Character = [i8; 3];

/// `Some(χ)` when `f` is a nonzero simultaneous eigenvector of `G`.
pub fn character_of<S: Scalar>(f: &TriForm<S>) -> Option<Character> {
    if f.is_zero() {
        return None;
    }
    let mut chi = [0i8; 3];
    for (k, g) in GroupElement::GENERATORS.into_iter().enumerate() {
        let image = g.act_on_form(f);
        chi[k] = if image == *f {
            1
        } else if image == f.scale(&-S::one()) {
            -1
        } else {
            return None;
        };
    }
    Some(chi)
}

/// Value of a character on any group element.
pub fn character_value(chi: Character, g: GroupElement) -> i8 {
    (0..3)
        .filter(|k| g.bits() >> k & 1 == 1)
        .map(|k| chi[k])
        .product()
}

/// One word from each eigenspace fixing the labels `T0..T7`.
const LABEL_WORDS: [&str; 8] = ["sss", "ssd", "ssp", "spp", "psd", "sps", "sdp", "spd"];

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    pub index: usize,
    pub character: Character,
    /// Basis of s/d/p words in lexicographic order.
    pub basis: Vec<SdpWord>,
}

impl Eigenspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn forms<S: Scalar>(&self) -> Vec<TriForm<S>> {
        self.basis.iter().map(|w| w.form()).collect()
    }
}

/// Splits the 27-dimensional space of (2,2,2)-forms into the eight character
/// spaces `T0..T7`. The 27 s/d/p words form a basis of simultaneous
/// eigenvectors, so each space is spanned by the words of its character.
pub fn eigenspace_decomposition() -> Vec<Eigenspace> {
    static SPACES: std::sync::OnceLock<Vec<Eigenspace>> = std::sync::OnceLock::new();
    SPACES.get_or_init(decompose).clone()
}

fn decompose() -> Vec<Eigenspace> {
    let chars: Vec<(SdpWord, Character)> = SdpWord::all()
        .map(|w| {
            let chi = character_of(&w.form::<crate::Qi>()).expect("s/d/p words are eigenvectors");
            (w, chi)
        })
        .collect();
    LABEL_WORDS
        .iter()
        .enumerate()
        .map(|(index, label)| {
            let label: SdpWord = label.parse().expect("label word");
            let character = chars
                .iter()
                .find(|(w, _)| *w == label)
                .expect("label present")
                .1;
            let basis = chars
                .iter()
                .filter(|(_, c)| *c == character)
                .map(|(w, _)| *w)
                .collect();
            Eigenspace {
                index,
                character,
                basis,
            }
        })
        .collect()
}

/// Isolated fixed points of `G ∖ G₀` at which every basis form of `space`
/// vanishes.
pub fn base_points_at_fixed_points(space: &Eigenspace) -> Vec<(GroupElement, TriPoint<crate::Qi>)> {
    let forms = space.forms::<crate::Qi>();
    isolated_fixed_points()
        .into_iter()
        .filter(|(_, p)| forms.iter().all(|f| f.eval(p).is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    fn pt(c: [[i64; 2]; 3]) -> TriPoint<Qi> {
        TriPoint::from_gaussian(c.map(|u| u.map(|n| (n, 0)))).unwrap()
    }

    #[test]
    fn generator_components() {
        use KleinElement::*;
        assert_eq!(GroupElement::G3.components(), [E1, E1, One]);
        assert_eq!(GroupElement::G2.components(), [E1, One, E1]);
        assert_eq!(GroupElement::H.components(), [E2, E2, E2]);
        assert_eq!(
            GroupElement::G3.mul(GroupElement::G2).components(),
            [One, E1, E1]
        );
        assert_eq!(
            GroupElement::H.mul(GroupElement::G3).to_string(),
            "(e3,e3,e2)"
        );
    }

    #[test]
    fn h_swaps_coordinates() {
        let p = pt([[1, 2], [1, 3], [1, 5]]);
        let q = GroupElement::H.act_on_point(&p);
        assert!(q.projectively_eq(&pt([[2, 1], [3, 1], [5, 1]])));
    }

    #[test]
    fn g3_fixes_point_on_its_line() {
        let p = pt([[1, 0], [0, 1], [1, 1]]);
        assert!(GroupElement::G3.act_on_point(&p).projectively_eq(&p));
    }

    #[test]
    fn action_on_products() {
        let ppp = SdpWord::from_str_unchecked("ppp").form::<Qi>();
        assert_eq!(GroupElement::G3.act_on_form(&ppp), ppp);
        let ddd = SdpWord::from_str_unchecked("ddd").form::<Qi>();
        assert_eq!(
            GroupElement::H.act_on_form(&ddd),
            ddd.scale(&-Qi::from_i64(1))
        );
        let ssd = SdpWord::from_str_unchecked("ssd").form::<Qi>();
        assert_eq!(
            GroupElement::H.act_on_form(&ssd),
            ssd.scale(&-Qi::from_i64(1))
        );
    }

    impl SdpWord {
        fn from_str_unchecked(s: &str) -> Self {
            s.parse().unwrap()
        }
    }

    #[test]
    fn identity_has_no_locus() {
        assert_eq!(
            GroupElement::IDENTITY.fixed_locus::<Qi>(),
            Err(SymmetryError::IdentityElement)
        );
    }

    #[test]
    fn character_values_multiply() {
        let chi = [1, -1, -1];
        assert_eq!(character_value(chi, GroupElement::from_bits(7)), 1);
        assert_eq!(character_value(chi, GroupElement::from_bits(6)), 1);
        assert_eq!(character_value(chi, GroupElement::from_bits(3)), -1);
    }
}
