use enriques7_core::linalg;
use enriques7_core::nodal::{
    certify, condition_matrix, membership_check, seeded_point, surface_through_node, verify_node,
    NodalError, NodeSurface, SearchOptions,
};
use enriques7_core::scenarios::reducible_surface;
use enriques7_core::symmetry::{character_of, GroupElement};
use enriques7_core::tripoly::{TriForm, TriPoint};
use enriques7_core::{Qi, Scalar};
use proptest::prelude::*;

fn point(text: &str) -> TriPoint<Qi> {
    text.parse().unwrap()
}

fn zero() -> Qi {
    Qi::from_i64(0)
}

/// Determinant of the affine Hessian in the chart where every first
/// coordinate is 1, by cofactor expansion.
fn hessian_det_first_chart(f: &TriForm<Qi>, p: &TriPoint<Qi>) -> Qi {
    let q = TriPoint {
        factors: p
            .factors
            .clone()
            .map(|u| [Qi::from_i64(1), u[1].clone() / u[0].clone()]),
    };
    let first: Vec<_> = (0..3).map(|i| f.as_multi().diff(i, 1)).collect();
    let h: Vec<Vec<Qi>> = (0..3)
        .map(|i| (0..3).map(|j| first[i].diff(j, 1).eval(&q)).collect())
        .collect();
    let m = |i: usize, j: usize| h[i][j].clone();
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

fn search() -> SearchOptions {
    SearchOptions {
        trials: 200,
        tol: 1e-9,
        ..SearchOptions::default()
    }
}

#[test]
fn constructed_surfaces_have_eight_exact_nodes() {
    for seed in 0..20 {
        let p = seeded_point(seed);
        let z = surface_through_node(&p).unwrap();
        assert_eq!(character_of(&z.form), Some([1, 1, 1]), "seed {seed}");
        assert_eq!(z.orbit.len(), 8);
        let partials = z.form.partials();
        for q in &z.orbit {
            assert_eq!(z.form.eval(q), zero());
            assert!(partials.iter().all(|d| d.eval(q) == zero()));
            let check = verify_node(&z.form, q).unwrap();
            assert!(check.node, "seed {seed} at {q}");
            if q.factors.iter().all(|u| u[0] != zero()) {
                assert_ne!(
                    hessian_det_first_chart(&z.form, q),
                    zero(),
                    "seed {seed} at {q}"
                );
            }
        }
    }
}

#[test]
fn generic_condition_matrices_have_rank_four() {
    let full = (0..100)
        .filter(|&seed| linalg::rank(&condition_matrix(&seeded_point(seed))) == 4)
        .count();
    assert!(full >= 95, "{full}/100");
}

#[test]
fn constructed_surfaces_are_members() {
    for seed in 0..10 {
        let z = surface_through_node(&seeded_point(seed)).unwrap();
        let cert = certify(&z, &SearchOptions { seed, ..search() });
        assert_eq!(cert.fixed_points.len(), 32);
        assert!(cert.fixed_points.iter().all(|c| c.avoided), "seed {seed}");
        assert_eq!(cert.fixed_lines.len(), 12);
        assert!(cert.fixed_lines.iter().all(|c| c.passed()), "seed {seed}");
        assert!(
            cert.extra_singularities.is_empty(),
            "seed {seed}: {:?}",
            cert.extra_singularities
        );
        assert_eq!(cert.search.points.len(), 1, "seed {seed}");
        assert_eq!(cert.verdict(), Ok(()));
    }
}

#[test]
fn reducible_member_is_rejected() {
    let z = reducible_surface();
    z.check_orbit_singular().unwrap();
    let cert = certify(&z, &search());
    assert!(
        matches!(
            cert.verdict(),
            Err(NodalError::ExtraSingularityFound { .. })
        ),
        "{:?}",
        cert.verdict()
    );
    assert!(matches!(
        membership_check(&z, &search()),
        Err(NodalError::ExtraSingularityFound { .. })
    ));
}

#[test]
fn surface_through_a_fixed_point_violates_the_fixed_locus() {
    let z = surface_through_node(&point("1:2,1:3,1:6")).unwrap();
    assert_eq!(z.form.eval(&point("1:1,1:1,1:1")), zero());
    let cert = certify(&z, &search());
    assert!(matches!(
        cert.exact_verdict(),
        Err(NodalError::FixedLocusViolation(_))
    ));
    assert!(cert.verdict().is_err());
}

#[test]
fn fixed_seeds_are_refused() {
    for text in ["1:0,0:1,1:1", "1:1,1:1,1:1", "1:i,1:i,1:1"] {
        assert!(
            matches!(
                surface_through_node(&point(text)),
                Err(NodalError::FixedPoint(_))
            ),
            "{text}"
        );
    }
}

#[test]
fn degenerate_double_point_is_not_a_node() {
    let mut c = vec![zero(); 27];
    c[9 * 2] = Qi::from_i64(1);
    c[3 * 2] = Qi::from_i64(1);
    c[9 + 2] = Qi::from_i64(1);
    let f = TriForm::from_coeffs(c).unwrap();
    let origin = point("1:0,1:0,1:0");
    let check = verify_node(&f, &origin).unwrap();
    assert!(!check.node);
    assert_eq!(check.hessian_rank, 2);
}

#[test]
fn smooth_point_is_not_critical() {
    let z = surface_through_node(&seeded_point(0)).unwrap();
    let f = TriForm::from_word("sss").unwrap();
    assert_eq!(
        verify_node(&f, &point("1:i,1:2,1:3")),
        Err(NodalError::NotCritical)
    );
    assert_eq!(
        verify_node(&z.form, &point("1:2,1:3,1:5")),
        Err(NodalError::NotCritical)
    );
}

#[test]
fn surface_json_round_trip() {
    let z = surface_through_node(&seeded_point(4)).unwrap();
    let text = serde_json::to_string(&z).unwrap();
    let back: NodeSurface = serde_json::from_str(&text).unwrap();
    assert_eq!(back, z);
}

fn gaussian() -> impl Strategy<Value = Qi> {
    (-9i64..=9, -9i64..=9).prop_map(|(a, b)| Qi::from_gaussian(a, b))
}

fn free_point() -> impl Strategy<Value = TriPoint<Qi>> {
    prop::collection::vec(gaussian(), 3).prop_filter_map("fixed or degenerate", |v| {
        let one = Qi::from_i64(1);
        let p = TriPoint::new([
            [one.clone(), v[0].clone()],
            [one.clone(), v[1].clone()],
            [one, v[2].clone()],
        ])
        .ok()?;
        surface_through_node(&p).ok().map(|_| p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn construction_is_equivariant(p in free_point(), bits in 1u8..8) {
        let g = GroupElement::from_bits(bits);
        let z = surface_through_node(&p).unwrap();
        let zg = surface_through_node(&g.act_on_point(&p)).unwrap();
        prop_assert!(zg.form.projectively_eq(&z.form));
        prop_assert!(z.orbit.iter().any(|q| q.projectively_eq(&g.act_on_point(&p))));
    }

    #[test]
    fn constructed_forms_are_invariant(p in free_point(), bits in 0u8..8) {
        let z = surface_through_node(&p).unwrap();
        let g = GroupElement::from_bits(bits);
        prop_assert_eq!(g.act_on_form(&z.form), z.form.clone());
    }
}
