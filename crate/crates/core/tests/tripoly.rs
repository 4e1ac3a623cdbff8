use enriques7_core::scalar::{format_qi, parse_qi};
use enriques7_core::tripoly::{TriForm, TriFormJson, TriPoint};
use enriques7_core::{Qi, Scalar, C64};
use proptest::prelude::*;

fn point(text: &str) -> TriPoint<Qi> {
    text.parse().unwrap()
}

fn word(w: &str) -> TriForm<Qi> {
    TriForm::from_word(w).unwrap()
}

/// `Σ c · x0^(2-a) x1^a · y0^(2-b) y1^b · z0^(2-c) z1^c` written out.
fn naive_eval(f: &TriForm<Qi>, p: &TriPoint<Qi>) -> Qi {
    let pow = |u: &Qi, k: usize| (0..k).fold(Qi::from_i64(1), |acc, _| acc * u.clone());
    let mut total = Qi::from_i64(0);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let [x, y, z] = &p.factors;
                let m = pow(&x[0], 2 - a)
                    * pow(&x[1], a)
                    * pow(&y[0], 2 - b)
                    * pow(&y[1], b)
                    * pow(&z[0], 2 - c)
                    * pow(&z[1], c);
                total += f.coeff([a, b, c]).clone() * m;
            }
        }
    }
    total
}

#[test]
fn listed_values() {
    assert_eq!(word("sss").eval(&point("1:0,1:0,1:0")), Qi::from_i64(1));
    assert_eq!(word("ppp").eval(&point("1:0,1:1,1:1")), Qi::from_i64(0));
    assert_eq!(word("ddd").eval(&point("1:1,1:2,1:3")), Qi::from_i64(0));
    assert_eq!(word("sdp").eval(&point("1:i,1:2,1:3")), Qi::from_i64(0));
    assert_eq!(word("sss").eval(&point("1:2,1:2,1:2")), Qi::from_i64(125));
}

#[test]
fn quadrics_in_coordinates() {
    let p = point("2:3,1:0,1:0");
    assert_eq!(word("sss").eval(&p), Qi::from_i64(13));
    assert_eq!(word("dss").eval(&p), Qi::from_i64(-5));
    assert_eq!(word("pss").eval(&p), Qi::from_i64(6));
}

#[test]
fn point_text_round_trip() {
    for text in ["1:0,0:1,1:1", "1:i,1:2,1:3", "1/2:-3+i,5:7/3,-i:1"] {
        assert_eq!(point(text).to_string(), text);
    }
    assert!("1:0,0:0,1:1".parse::<TriPoint<Qi>>().is_err());
    assert!("1:0,1:1".parse::<TriPoint<Qi>>().is_err());
}

#[test]
fn json_round_trip() {
    let f = word("sss").add(&word("ppp").scale(&parse_qi("1/3-2i").unwrap()));
    let j = TriFormJson::from(&f);
    let text = serde_json::to_string(&j).unwrap();
    let back: TriFormJson = serde_json::from_str(&text).unwrap();
    assert_eq!(TriForm::try_from(back).unwrap(), f);
}

fn gaussian() -> impl Strategy<Value = Qi> {
    (-6i64..=6, -6i64..=6).prop_map(|(a, b)| Qi::from_gaussian(a, b))
}

fn any_form() -> impl Strategy<Value = TriForm<Qi>> {
    prop::collection::vec(gaussian(), 27).prop_map(|c| TriForm::from_coeffs(c).unwrap())
}

fn any_point() -> impl Strategy<Value = TriPoint<Qi>> {
    prop::collection::vec(gaussian(), 6).prop_filter_map("zero factor", |v| {
        TriPoint::new([
            [v[0].clone(), v[1].clone()],
            [v[2].clone(), v[3].clone()],
            [v[4].clone(), v[5].clone()],
        ])
        .ok()
    })
}

proptest! {
    #[test]
    fn eval_matches_expanded_sum(f in any_form(), p in any_point()) {
        prop_assert_eq!(f.eval(&p), naive_eval(&f, &p));
    }

    #[test]
    fn euler_identity_per_factor(f in any_form(), p in any_point()) {
        let d = f.partials();
        for k in 0..3 {
            let [u0, u1] = p.factors[k].clone();
            let lhs = u0 * d[2 * k].eval(&p) + u1 * d[2 * k + 1].eval(&p);
            prop_assert_eq!(lhs, f.eval(&p) * Qi::from_i64(2));
        }
    }

    #[test]
    fn bihomogeneous_scaling(f in any_form(), p in any_point(), k in gaussian(), factor in 0usize..3) {
        prop_assume!(k != Qi::from_i64(0));
        let mut q = p.clone();
        q.factors[factor] = [k.clone() * p.factors[factor][0].clone(), k.clone() * p.factors[factor][1].clone()];
        prop_assert_eq!(f.eval(&q), f.eval(&p) * k.clone() * k);
    }

    #[test]
    fn restriction_agrees_with_eval(f in any_form(), p in any_point(), free in 0usize..3) {
        let r = f.restrict_to_line(free, &p);
        prop_assert_eq!(r.eval(&p.factors[free]), f.eval(&p));
    }

    #[test]
    fn float_eval_tracks_exact(f in any_form(), p in any_point()) {
        let exact = f.eval(&p).to_c64();
        let approx: C64 = f.map_scalars(Scalar::to_c64).eval(&p.map_scalars(Scalar::to_c64));
        let scale = 1.0 + exact.norm();
        prop_assert!((exact - approx).norm() <= 1e-9 * scale, "{} vs {}", format_qi(&f.eval(&p)), approx);
    }

    #[test]
    fn text_round_trip(p in any_point()) {
        prop_assert_eq!(point(&p.to_string()), p);
    }
}
