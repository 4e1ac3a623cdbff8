use enriques7_core::linalg;
use enriques7_core::symmetry::{
    base_points_at_fixed_points, character_of, character_value, eigenspace_decomposition,
    g0_fixed_lines, isolated_fixed_points, orbit, orbit_size, FixedLocus, GroupElement, SdpWord,
};
use enriques7_core::tripoly::{TriForm, TriPoint};
use enriques7_core::{Qi, Scalar};
use proptest::prelude::*;

const LISTED: [&[&str]; 8] = [
    &["sss", "sdd", "dsd", "dds", "ppp"],
    &["ssd", "sds", "dss", "ddd"],
    &["ssp", "pps", "ddp"],
    &["spp", "pss", "pdd"],
    &["psd", "pds", "dpp"],
    &["sps", "psp", "dpd"],
    &["sdp", "ppd", "dsp"],
    &["spd", "pdp", "dps"],
];

fn word(w: &str) -> SdpWord {
    w.parse().unwrap()
}

#[test]
fn dimensions_and_listed_bases() {
    let spaces = eigenspace_decomposition();
    let dims: Vec<usize> = spaces.iter().map(|t| t.dimension()).collect();
    assert_eq!(dims, [5, 4, 3, 3, 3, 3, 3, 3]);
    assert_eq!(dims.iter().sum::<usize>(), 27);
    for (t, listed) in spaces.iter().zip(LISTED) {
        let mut expected: Vec<SdpWord> = listed.iter().map(|w| word(w)).collect();
        expected.sort();
        assert_eq!(t.basis, expected, "T{}", t.index);
        for w in listed {
            assert_eq!(
                character_of(&word(w).form::<Qi>()),
                Some(t.character),
                "{w} in T{}",
                t.index
            );
        }
    }
    assert_eq!(spaces[0].character, [1, 1, 1]);
    assert_eq!(spaces[1].character, [1, 1, -1]);
}

/// Dimension of each character space from the rank of the projector
/// `Σ χ(g) g` applied to all 27 monomials.
#[test]
fn projector_ranks_agree() {
    let monomials: Vec<TriForm<Qi>> = (0..27)
        .map(|i| {
            let mut c = vec![Qi::from_i64(0); 27];
            c[i] = Qi::from_i64(1);
            TriForm::from_coeffs(c).unwrap()
        })
        .collect();
    for t in eigenspace_decomposition() {
        let images: Vec<Vec<Qi>> = monomials
            .iter()
            .map(|m| {
                GroupElement::all()
                    .fold(TriForm::zero(), |acc: TriForm<Qi>, g| {
                        let v = Qi::from_i64(character_value(t.character, g).into());
                        acc.add(&g.act_on_form(m).scale(&v))
                    })
                    .coeffs()
                    .to_vec()
            })
            .collect();
        assert_eq!(linalg::rank(&images), t.dimension(), "T{}", t.index);
    }
}

#[test]
fn fixed_loci_shapes() {
    for g in GroupElement::all().skip(1) {
        let locus = g.fixed_locus::<Qi>().unwrap();
        match (&locus, g.in_g0()) {
            (FixedLocus::Lines(l), true) => assert_eq!(l.len(), 4),
            (FixedLocus::Points(p), false) => assert_eq!(p.len(), 8),
            _ => panic!("{g} has the wrong locus type"),
        }
    }
    assert_eq!(g0_fixed_lines::<Qi>().len(), 12);
    assert_eq!(isolated_fixed_points::<Qi>().len(), 32);
}

#[test]
fn fixed_loci_are_fixed() {
    for (g, p) in isolated_fixed_points::<Qi>() {
        assert!(g.act_on_point(&p).projectively_eq(&p), "{g} at {p}");
    }
    for line in g0_fixed_lines::<Qi>() {
        for t in [[1, 0], [0, 1], [2, 7], [-3, 5]] {
            let p = line.point([Qi::from_i64(t[0]), Qi::from_i64(t[1])]);
            assert!(line.element.act_on_point(&p).projectively_eq(&p));
        }
    }
}

#[test]
fn listed_fixed_points() {
    let h = GroupElement::H.fixed_locus::<Qi>().unwrap();
    let FixedLocus::Points(points) = h else {
        panic!()
    };
    let one = TriPoint::<Qi>::from_gaussian([[(1, 0), (1, 0)]; 3]).unwrap();
    assert!(points.iter().any(|p| p.projectively_eq(&one)));
    let e332 = GroupElement::H.mul(GroupElement::G3);
    let FixedLocus::Points(points) = e332.fixed_locus::<Qi>().unwrap() else {
        panic!()
    };
    let target: TriPoint<Qi> = "1:i,1:i,1:1".parse().unwrap();
    assert!(points.iter().any(|p| p.projectively_eq(&target)));
}

#[test]
fn nontrivial_eigenspaces_have_base_points_at_isolated_fixed_points() {
    let spaces = eigenspace_decomposition();
    assert!(base_points_at_fixed_points(&spaces[0]).is_empty());
    for t in &spaces[1..] {
        assert!(!base_points_at_fixed_points(t).is_empty(), "T{}", t.index);
    }
}

#[test]
fn generic_orbit_has_eight_points() {
    let p: TriPoint<Qi> = "1:2,1:3,1:5".parse().unwrap();
    let o = orbit(&p);
    for i in 0..8 {
        for j in 0..i {
            assert!(!o[i].projectively_eq(&o[j]));
        }
    }
    assert_eq!(orbit_size(&p), 8);
    let fixed: TriPoint<Qi> = "1:0,1:0,1:0".parse().unwrap();
    assert_eq!(orbit_size(&fixed), 2);
}

fn gaussian() -> impl Strategy<Value = Qi> {
    (-9i64..=9, -9i64..=9).prop_map(|(a, b)| Qi::from_gaussian(a, b))
}

fn any_form() -> impl Strategy<Value = TriForm<Qi>> {
    proptest::collection::vec(gaussian(), 27).prop_map(|c| TriForm::from_coeffs(c).unwrap())
}

fn any_point() -> impl Strategy<Value = TriPoint<Qi>> {
    proptest::array::uniform3((gaussian(), gaussian())).prop_filter_map("zero factor", |f| {
        TriPoint::new(f.map(|(a, b)| [a, b])).ok()
    })
}

fn any_element() -> impl Strategy<Value = GroupElement> {
    (0u8..8).prop_map(GroupElement::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn form_action_is_substitution(g in any_element(), f in any_form(), p in any_point()) {
        prop_assert_eq!(g.act_on_form(&f).eval(&p), f.eval(&g.act_on_point(&p)));
    }

    #[test]
    fn form_action_is_a_group_action(g in any_element(), h in any_element(), f in any_form()) {
        prop_assert_eq!(g.act_on_form(&h.act_on_form(&f)), g.mul(h).act_on_form(&f));
    }

    #[test]
    fn point_action_is_an_involution(g in any_element(), p in any_point()) {
        prop_assert!(g.act_on_point(&g.act_on_point(&p)).projectively_eq(&p));
    }

    #[test]
    fn basis_forms_carry_their_character(g in any_element()) {
        for t in eigenspace_decomposition() {
            for f in t.forms::<Qi>() {
                let v = Qi::from_i64(character_value(t.character, g).into());
                prop_assert_eq!(g.act_on_form(&f), f.scale(&v));
            }
        }
    }

    #[test]
    fn orbit_size_matches_stabilizer(p in any_point()) {
        let distinct = {
            let o = orbit(&p);
            (0..8).filter(|&i| (0..i).all(|j| !o[i].projectively_eq(&o[j]))).count()
        };
        prop_assert_eq!(orbit_size(&p), distinct);
        prop_assert_eq!(8 % distinct, 0);
    }
}
