use enriques7_core::lattice::{
    euler_budget, fibre_catalog, fibre_type, index_theorem_violated, zariski_fibre_check,
    DualGraph, FibreType, GramMatrix, LatticeError,
};
use enriques7_core::scenarios::{fibre_configs, figure1, figure2, lattices};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Leibniz expansion, for matrices up to size 6.
fn leibniz(m: &[Vec<i64>]) -> i128 {
    fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i128 {
        if row == m.len() {
            return 1;
        }
        let mut total = 0i128;
        let mut sign = 1i128;
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            used[col] = true;
            total += sign * m[row][col] as i128 * rec(m, row + 1, used);
            used[col] = false;
            sign = -sign;
        }
        total
    }
    rec(m, 0, &mut vec![false; m.len()])
}

/// Inertia from floating eigenvalues.
fn float_signature(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let a = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let e = a.symmetric_eigen().eigenvalues;
    let pos = e.iter().filter(|&&x| x > 1e-9).count();
    let neg = e.iter().filter(|&&x| x < -1e-9).count();
    (pos, neg, n - pos - neg)
}

#[test]
fn figure2_block_violates_the_index_theorem() {
    let fig = figure2();
    let g = fig.graph.gram().unwrap();
    assert_eq!(g.size(), 10);
    assert_eq!(g.signature(), (1, 9, 0));
    assert_eq!(float_signature(&g.entries), (1, 9, 0));
    assert!(!index_theorem_violated(&g));
    let doubled = g.direct_sum(&g, "'");
    assert_eq!(doubled.signature(), (2, 18, 0));
    assert!(index_theorem_violated(&doubled));
}

#[test]
fn catalog_graphs_are_fibres() {
    let expected = [
        (FibreType::I2, 2),
        (FibreType::DoubleI2, 2),
        (FibreType::I0Star, 6),
        (FibreType::I2Star, 8),
    ];
    let catalog = fibre_catalog();
    assert_eq!(catalog.len(), expected.len());
    for ((kind, graph), (want, euler)) in catalog.iter().zip(expected) {
        assert_eq!(*kind, want);
        assert!(zariski_fibre_check(graph).unwrap().passed, "{kind}");
        let t = fibre_type(graph).unwrap();
        assert_eq!(t.fibre_type, want);
        assert_eq!(t.euler_from_type, euler);
        if want != FibreType::DoubleI2 {
            assert_eq!(t.euler_from_graph, euler);
        }
    }
}

#[test]
fn figure1_classes_are_i2_star_fibres() {
    let fig = figure1();
    assert_eq!(fig.fibre_classes.len(), 3);
    for class in &fig.fibre_classes {
        let g = fig.class_graph(class).unwrap().support();
        let z = zariski_fibre_check(&g).unwrap();
        assert!(z.passed, "{}", class.name);
        assert!(z.degrees.iter().all(|&d| d == 0));
        assert_eq!(
            fibre_type(&g).unwrap().fibre_type,
            FibreType::I2Star,
            "{}",
            class.name
        );
        let odd: Vec<usize> = class
            .mult
            .iter()
            .filter(|(name, m)| name.starts_with('N') && *m % 2 == 1)
            .map(|(name, _)| name[1..].parse().unwrap())
            .collect();
        assert_eq!(odd, class.even_set, "{}", class.name);
    }
}

#[test]
fn non_fibres_are_rejected() {
    let fig = figure1();
    let mut g = fig.class_graph(&fig.fibre_classes[0]).unwrap().support();
    g.vertices[0].mult += 1;
    assert!(!zariski_fibre_check(&g).unwrap().passed);
    assert!(matches!(fibre_type(&g), Err(LatticeError::NotAFibre(_))));
    let disconnected: DualGraph = serde_json::from_str(
        r#"{"vertices": [{"name": "a", "self": -2}, {"name": "b", "self": -2}], "edges": []}"#,
    )
    .unwrap();
    assert_eq!(
        zariski_fibre_check(&disconnected),
        Err(LatticeError::Disconnected)
    );
}

#[test]
fn configurations_fill_the_euler_budget() {
    let cases = fibre_configs();
    assert_eq!(cases.len(), 3);
    for c in &cases {
        for p in &c.pencils {
            let r = euler_budget(p);
            assert_eq!(r.total, 12, "case {}", c.case);
            assert!(r.within_budget && r.saturated);
        }
    }
    assert!(!euler_budget(&[FibreType::I2Star, FibreType::I2Star]).within_budget);
}

#[test]
fn bundled_lattices() {
    let data = lattices();
    let disc = |n: &str| data.get(n).unwrap().discriminant();
    assert_eq!(disc("M_prime"), BigInt::from(768));
    assert_eq!(disc("M"), BigInt::from(3));
    assert_eq!(disc("N7"), BigInt::from(128));
    let e = data.get("e_triple").unwrap();
    assert_eq!(e.signature(), (1, 2, 0));
    assert_eq!(e.direct_sum(e, "'").signature(), (2, 4, 0));
}

#[test]
fn malformed_gram_matrices() {
    assert_eq!(
        GramMatrix::from_entries(vec![vec![1, 2]]),
        Err(LatticeError::NotSquare)
    );
    assert_eq!(
        GramMatrix::from_entries(vec![vec![1, 2], vec![3, 1]]),
        Err(LatticeError::NotSymmetric(1, 0))
    );
    assert!(serde_json::from_str::<GramMatrix>(
        r#"{"labels": ["a"], "entries": [[1, 0], [0, 1]]}"#
    )
    .is_err());
}

fn symmetric(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |v| {
        let mut m = vec![vec![0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m[i][j] = v[k];
                m[j][i] = v[k];
                k += 1;
            }
        }
        m
    })
}

/// Products of elementary matrices `I + c·E_ij` and row swaps, which are
/// unimodular by construction.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..6).prop_map(move |ops| {
        let mut p: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for (i, j, c, swap) in ops {
            if swap {
                p.swap(i, j);
            } else if i != j {
                for col in 0..n {
                    p[i][col] += c * p[j][col];
                }
            }
        }
        p
    })
}

fn sized_pair() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (1usize..=5).prop_flat_map(|n| (symmetric(n), unimodular(n)))
}

proptest! {
    #[test]
    fn determinant_matches_leibniz(m in (1usize..=6).prop_flat_map(symmetric)) {
        let g = GramMatrix::from_entries(m.clone()).unwrap();
        prop_assert_eq!(g.determinant(), BigInt::from(leibniz(&m)));
    }

    #[test]
    fn signature_matches_eigenvalues(m in (1usize..=6).prop_flat_map(symmetric)) {
        let g = GramMatrix::from_entries(m.clone()).unwrap();
        prop_assert_eq!(g.signature(), float_signature(&m));
    }

    #[test]
    fn unimodular_congruence_preserves_invariants((m, p) in sized_pair()) {
        let g = GramMatrix::from_entries(m).unwrap();
        let h = g.congruent(&p);
        prop_assert_eq!(h.discriminant(), g.discriminant());
        prop_assert_eq!(h.signature(), g.signature());
    }

    #[test]
    fn direct_sum_adds_invariants(a in (1usize..=3).prop_flat_map(symmetric), b in (1usize..=3).prop_flat_map(symmetric)) {
        let ga = GramMatrix::from_entries(a).unwrap();
        let gb = GramMatrix::from_entries(b).unwrap();
        let s = ga.direct_sum(&gb, "'");
        prop_assert_eq!(s.determinant(), ga.determinant() * gb.determinant());
        let (sa, sb, ss) = (ga.signature(), gb.signature(), s.signature());
        prop_assert_eq!(ss, (sa.0 + sb.0, sa.1 + sb.1, sa.2 + sb.2));
    }
}
