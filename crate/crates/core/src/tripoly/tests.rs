use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::scalar::{qi, rat};
use crate::Qi;

fn q(n: i64) -> Qi {
    Qi::from_i64(n)
}

fn pt(c: [[i64; 2]; 3]) -> TriPoint<Qi> {
    TriPoint::from_gaussian(c.map(|u| u.map(|n| (n, 0)))).unwrap()
}

fn word(w: &str) -> TriForm<Qi> {
    TriForm::from_word(w).unwrap()
}

#[test]
fn eval_of_product_vanishes_on_factor_zero() {
    // d(x) vanishes at (1:1).
    let f = word("dds");
    assert_eq!(f.eval(&pt([[1, 1], [1, 2], [1, 3]])), q(0));
    // s(1)s(2)s(3) = 2 * 5 * 10.
    assert_eq!(word("sss").eval(&pt([[1, 1], [1, 2], [1, 3]])), q(100));
}

#[test]
fn partials_of_product() {
    let f = word("psd");
    let p = pt([[2, 1], [1, 3], [1, 2]]);
    let parts = f.partials();
    // ∂/∂x0 of x0 x1 is x1; s(y) = 10, d(z) = -3.
    assert_eq!(parts[0].eval(&p), q(-30));
    assert_eq!(parts[1].eval(&p), q(2 * 10 * -3));
    // ∂/∂z1 of d(z) is -2 z1.
    assert_eq!(parts[5].eval(&p), q(2 * 10 * -4));
}

#[test]
fn restriction_to_line() {
    let f = word("sdp");
    let pins = pt([[1, 0], [1, 2], [1, 1]]);
    let r = f.restrict_to_line(0, &pins);
    // d(1,2) p(1,1) = -3 times s(t).
    assert_eq!(r.coeffs(), &[q(-3), q(0), q(-3)]);
    assert_eq!(r.squarefree(), Ok(true));
}

#[test]
fn squarefree_decisions() {
    let sq = BinaryForm::new(vec![q(1), q(2), q(1)]);
    assert_eq!(sq.squarefree(), Ok(false));
    let double_inf = BinaryForm::new(vec![q(1), q(0), q(0)]);
    assert_eq!(double_inf.squarefree(), Ok(false));
    assert_eq!(
        BinaryForm::new(vec![q(0), q(1), q(0)]).squarefree(),
        Ok(true)
    );
    assert_eq!(
        BinaryForm::new(vec![q(0), q(0), q(0)]).squarefree(),
        Err(TriPolyError::ZeroPolynomial)
    );
}

#[test]
fn exact_roots_over_gaussian_rationals() {
    let s = BinaryForm::new(vec![q(1), q(0), q(1)]);
    let roots = s.exact_roots().unwrap();
    assert_eq!(roots.len(), 2);
    for r in &roots {
        assert_eq!(s.eval(r), q(0));
    }
    assert!(BinaryForm::new(vec![q(-2), q(0), q(1)])
        .exact_roots()
        .is_none());
}

#[test]
fn common_roots_counted_with_multiplicity() {
    let a = BinaryForm::new(vec![q(0), q(0), q(1)]); // t1²
    let b = BinaryForm::new(vec![q(0), q(1), q(1)]); // t1 (t0 + t1)
    assert_eq!(BinaryForm::common_root_degree(&[a.clone(), b]), Some(1));
    assert_eq!(
        BinaryForm::common_root_degree(&[a.clone(), a.clone()]),
        Some(2)
    );
    let c = BinaryForm::new(vec![q(1), q(0), q(0)]); // t0²
    assert_eq!(BinaryForm::common_root_degree(&[a, c]), Some(0));
}

#[test]
fn hessian_of_node() {
    // x1² + y1² + z1² in the chart x0 = y0 = z0 = 1 has a node at the origin.
    let mut f = TriForm::<Qi>::zero();
    let mut m = f.as_multi().clone();
    for e in [[2, 0, 0], [0, 2, 0], [0, 0, 2]] {
        m.set_coeff(e, q(1));
    }
    f = TriForm::from_multi(m).unwrap();
    let p = pt([[1, 0], [1, 0], [1, 0]]);
    let h = affine_hessian(&f, &p, None).unwrap();
    assert_eq!(h.rank(), 3);
    assert_eq!(h.determinant(), q(8));
    assert!(affine_hessian(&f, &p, Some([1, 0, 0])).is_err());
}

#[test]
fn hessian_rank_is_chart_independent_at_a_singular_point() {
    // s(x)s(y)s(z) - ... : use d(x)d(y)d(z), singular wherever two d-factors vanish.
    let f = word("ddd");
    let p = pt([[1, 1], [1, 1], [1, 2]]);
    for chart in [[0, 0, 0], [1, 1, 1], [0, 1, 0]] {
        let h = affine_hessian(&f, &p, Some(chart)).unwrap();
        assert_eq!(h.rank(), 2, "chart {chart:?}");
    }
}

#[test]
fn point_text_round_trip() {
    let p: TriPoint<Qi> = "1:2,1:i,3/2:-1+2i".parse().unwrap();
    assert_eq!(p.factors[2][0], qi(rat(3, 2), rat(0, 1)));
    let back: TriPoint<Qi> = p.to_string().parse().unwrap();
    assert_eq!(back, p);
    assert!("0:0,1:0,1:0".parse::<TriPoint<Qi>>().is_err());
}

#[test]
fn float_point_distance() {
    let a = TriPoint::<Complex64>::from_gaussian([
        [(1, 0), (1, 0)],
        [(1, 0), (0, 0)],
        [(0, 0), (1, 0)],
    ])
    .unwrap();
    let b = TriPoint {
        factors: a.factors.map(|u| [u[0] * 3.0, u[1] * 3.0]),
    };
    assert!(a.distance(&b) < 1e-15);
    assert_eq!(a.canonical_cmp(&b), std::cmp::Ordering::Equal);
}

fn gaussian() -> impl Strategy<Value = Qi> {
    (-20i64..=20, -20i64..=20).prop_map(|(a, b)| Qi::from_gaussian(a, b))
}

fn any_form() -> impl Strategy<Value = TriForm<Qi>> {
    proptest::collection::vec(gaussian(), 27).prop_map(|c| TriForm::from_coeffs(c).unwrap())
}

fn any_point() -> impl Strategy<Value = TriPoint<Qi>> {
    proptest::array::uniform3((gaussian(), gaussian())).prop_filter_map("zero factor", |f| {
        TriPoint::new(f.map(|(a, b)| [a, b])).ok()
    })
}

proptest! {
    #[test]
    fn euler_identity_per_factor(f in any_form(), p in any_point()) {
        let parts = f.partials();
        let value = f.eval(&p);
        for k in 0..3 {
            let u = &p.factors[k];
            let lhs = u[0].clone() * parts[2 * k].eval(&p) + u[1].clone() * parts[2 * k + 1].eval(&p);
            prop_assert_eq!(lhs, q(2) * value.clone());
        }
    }

    #[test]
    fn eval_is_homogeneous(f in any_form(), p in any_point(), l in gaussian()) {
        prop_assume!(l != q(0));
        let mut scaled = p.clone();
        scaled.factors[1] = [p.factors[1][0].clone() * l.clone(), p.factors[1][1].clone() * l.clone()];
        prop_assert_eq!(f.eval(&scaled), f.eval(&p) * l.clone() * l);
    }

    #[test]
    fn json_round_trip(f in any_form()) {
        let text = serde_json::to_string(&f).unwrap();
        let back: TriForm<Qi> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn restriction_agrees_with_eval(f in any_form(), p in any_point(), free in 0usize..3) {
        let r = f.restrict_to_line(free, &p);
        prop_assert_eq!(r.eval(&p.factors[free]), f.eval(&p));
    }
}
