use enriques7_core::codes::CodeClass;
use enriques7_core::nodal::{p3_distance, NodalError, SearchOptions};
use enriques7_core::scenarios::{
    cayley_data, cayley_verify, pipeline, Adversarial, CayleyOptions, PipelineOptions, Stage,
    StageError,
};

/// `x1x2x3 + x0x2x3 + x0x1x3 + x0x1x2`, written out.
fn cubic(p: [i64; 4]) -> i64 {
    let [a, b, c, d] = p;
    b * c * d + a * c * d + a * b * d + a * b * c
}

#[test]
fn cayley_cubic_claims() {
    let r = cayley_verify(&CayleyOptions::default());
    assert_eq!(r.degree, 3);
    assert_eq!(r.nodes.len(), 4);
    assert!(r.nodes.iter().all(|n| n.is_node() && n.cone_rank == 3));
    assert_eq!(r.lines.len(), 9);
    assert!(r.lines.iter().all(|l| l.on_surface));
    assert_eq!(
        r.lines.iter().filter(|l| l.in_plane == Some(true)).count(),
        3
    );
    assert!(r.lines_distinct);
    assert!(r.incidences.iter().all(|i| i.meets == i.expected));
    assert!(r.interior_singular_points.is_empty());
    assert!(r.passed);
}

#[test]
fn cayley_data_against_the_written_cubic() {
    let d = cayley_data();
    for n in &d.nodes {
        assert_eq!(cubic(*n), 0);
    }
    for line in d.edges.iter().chain(&d.plane_lines) {
        let [p, q] = line.points;
        for (s, t) in [(1, 0), (0, 1), (1, 1), (2, -3), (5, 7)] {
            let x = std::array::from_fn(|i| s * p[i] + t * q[i]);
            assert_eq!(cubic(x), 0, "{} at ({s}, {t})", line.name);
        }
    }
    for line in &d.plane_lines {
        for p in &line.points {
            assert_eq!(
                p.iter().zip(&d.plane).map(|(a, b)| a * b).sum::<i64>(),
                0,
                "{}",
                line.name
            );
        }
    }
    // The tangent cone at (1:0:0:0) is x1x2 + x1x3 + x2x3, with determinant 2.
    let cone = [[0, 1, 1], [1, 0, 1], [1, 1, 0]];
    let det = cone[0][0] * (cone[1][1] * cone[2][2] - cone[1][2] * cone[2][1])
        - cone[0][1] * (cone[1][0] * cone[2][2] - cone[1][2] * cone[2][0])
        + cone[0][2] * (cone[1][0] * cone[2][1] - cone[1][1] * cone[2][0]);
    assert_eq!(det, 2);
}

fn opts(seed: u64) -> PipelineOptions {
    PipelineOptions {
        seed,
        search: SearchOptions {
            trials: 200,
            ..SearchOptions::default()
        },
        ..PipelineOptions::default()
    }
}

#[test]
fn pipeline_on_seeded_surfaces() {
    for seed in 0..3 {
        let r = pipeline(&opts(seed)).unwrap();
        assert_eq!(r.collinear_triples.len(), 3, "seed {seed}");
        assert!(r.collinear_triples.iter().all(|t| t.contains(&7)));
        let mut covered: Vec<usize> = r
            .collinear_triples
            .iter()
            .flat_map(|t| t[..2].to_vec())
            .collect();
        covered.sort();
        assert_eq!(covered, [1, 2, 3, 4, 5, 6]);
        assert_eq!(r.code.dimension, 2);
        assert_eq!(r.code.weight_enumerator, [1, 0, 0, 0, 3, 0, 0, 0]);
        assert_eq!(r.code.class, CodeClass::WeightFourPlane7);
        assert_eq!(r.code.unused_indices, [7]);
        assert!(r.code.consistency.consistent());
        assert_eq!(
            (
                r.invariants.k_square,
                r.invariants.chi,
                r.invariants.p_g,
                r.invariants.l_square
            ),
            (3, 1, 0, -2)
        );
        let pts = r.image_points();
        for i in 0..7 {
            for j in 0..i {
                assert!(
                    p3_distance(&pts[i], &pts[j]) > 1e-6,
                    "seed {seed}: images {i} and {j} coincide"
                );
            }
        }
        assert!(r.images.class_spread < 1e-9);
    }
}

#[test]
fn pipeline_is_deterministic() {
    let a = serde_json::to_string(&pipeline(&opts(1)).unwrap()).unwrap();
    let b = serde_json::to_string(&pipeline(&opts(1)).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn adversarial_inputs_stop_at_membership() {
    let e = pipeline(&PipelineOptions {
        adversarial: Some(Adversarial::Reducible),
        ..opts(0)
    })
    .unwrap_err();
    assert_eq!(e.stage, Stage::Membership);
    assert!(matches!(
        e.error,
        StageError::Nodal(NodalError::ExtraSingularityFound { .. })
    ));

    let e = pipeline(&PipelineOptions {
        adversarial: Some(Adversarial::FixedLocus),
        ..opts(0)
    })
    .unwrap_err();
    assert_eq!(e.stage, Stage::Membership);
    let cert = e
        .certificate
        .expect("membership failure carries its certificate");
    assert!(matches!(
        cert.exact_verdict(),
        Err(NodalError::FixedLocusViolation(_))
    ));
}

#[test]
fn fixed_seed_stops_at_construction() {
    let point = Some("1:0,0:1,1:1".parse().unwrap());
    let e = pipeline(&PipelineOptions { point, ..opts(0) }).unwrap_err();
    assert_eq!(e.stage, Stage::Construct);
    assert!(matches!(
        e.error,
        StageError::Nodal(NodalError::FixedPoint(_))
    ));
}

#[test]
fn adversarial_names() {
    assert_eq!(
        "reducible".parse::<Adversarial>(),
        Ok(Adversarial::Reducible)
    );
    assert_eq!(
        "fixed-locus".parse::<Adversarial>(),
        Ok(Adversarial::FixedLocus)
    );
    assert!("other".parse::<Adversarial>().is_err());
}
