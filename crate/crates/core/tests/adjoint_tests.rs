use ywall_core::{
    adjoint_graph, axiom_check, coherent_map, minimal_vector, verify_perfect, Adjoint, Crystal,
    Weight, XY,
};

#[test]
fn level_4_statistics_at_sample_points() {
    let adj = Adjoint::finite(4);
    let b = XY::new(1, 2);
    assert_eq!(adj.eps(1, &b), 2);
    assert_eq!(adj.phi(1, &b), 1);
    assert_eq!(adj.eps(0, &b), 1); // l - 2y + |x - y|
    assert_eq!(adj.phi(0, &b), 3); // l - 2x + |x - y|
    assert_eq!(adj.wt(&b), Weight::new(2, -1, 0));
}

#[test]
fn level_4_graph_is_the_expected_one() {
    let g = adjoint_graph(4).unwrap();
    assert_eq!(g.nodes.len(), 15);
    let mut edges: Vec<(String, u8, String)> = g
        .edges
        .iter()
        .map(|&(s, i, d)| (g.nodes[s].key.clone(), i, g.nodes[d].key.clone()))
        .collect();
    edges.sort();
    let expected: Vec<(String, u8, String)> = [
        ("(0,0)", 0, "(1,0)"),
        ("(0,1)", 0, "(0,0)"),
        ("(0,2)", 0, "(0,1)"),
        ("(0,3)", 0, "(0,2)"),
        ("(0,4)", 0, "(0,3)"),
        ("(1,0)", 0, "(2,0)"),
        ("(1,0)", 1, "(0,1)"),
        ("(1,1)", 0, "(2,1)"),
        ("(1,1)", 1, "(0,2)"),
        ("(1,2)", 0, "(1,1)"),
        ("(1,2)", 1, "(0,3)"),
        ("(1,3)", 0, "(1,2)"),
        ("(1,3)", 1, "(0,4)"),
        ("(2,0)", 0, "(3,0)"),
        ("(2,0)", 1, "(1,1)"),
        ("(2,1)", 0, "(3,1)"),
        ("(2,1)", 1, "(1,2)"),
        ("(2,2)", 1, "(1,3)"),
        ("(3,0)", 0, "(4,0)"),
        ("(3,0)", 1, "(2,1)"),
        ("(3,1)", 1, "(2,2)"),
        ("(4,0)", 1, "(3,1)"),
    ]
    .iter()
    .map(|&(s, i, d)| (s.to_string(), i, d.to_string()))
    .collect();
    assert_eq!(edges, expected);
    let zero: usize = g.edges.iter().filter(|&&(_, i, _)| i == 0).count();
    assert_eq!(zero, 12);
    assert_eq!(g.edges.len() - zero, 10);
}

#[test]
fn minimal_vectors_are_the_diagonal_points() {
    assert_eq!(minimal_vector(4, 0).unwrap(), XY::new(0, 0));
    assert_eq!(minimal_vector(4, 1).unwrap(), XY::new(1, 1));
    assert_eq!(minimal_vector(4, 2).unwrap(), XY::new(2, 2));
    assert!(minimal_vector(4, 3).is_err());
}

#[test]
fn axioms_hold_on_small_levels() {
    for l in 1..=5 {
        let adj = Adjoint::finite(l);
        let report = axiom_check(&adj, &adj.elements());
        assert!(
            report.violations.is_empty(),
            "level {l}: {:?}",
            report.violations
        );
    }
}

#[test]
fn corrupted_statistics_are_caught() {
    // Negative control: a crystal with phi_1 off by one must fail the
    // string-statistic axiom.
    struct Corrupted(Adjoint);
    impl Crystal for Corrupted {
        type Elem = XY;
        fn wt(&self, b: &XY) -> Weight {
            self.0.wt(b)
        }
        fn e(&self, i: usize, b: &XY) -> Option<XY> {
            self.0.e(i, b)
        }
        fn f(&self, i: usize, b: &XY) -> Option<XY> {
            self.0.f(i, b)
        }
        fn eps(&self, i: usize, b: &XY) -> i64 {
            self.0.eps(i, b)
        }
        fn phi(&self, i: usize, b: &XY) -> i64 {
            self.0.phi(i, b) + i64::from(i == 1)
        }
        fn encode(&self, b: &XY) -> String {
            self.0.encode(b)
        }
    }
    let c = Corrupted(Adjoint::finite(3));
    let report = axiom_check(&c, &c.0.elements());
    assert!(!report.violations.is_empty());
}

#[test]
fn limit_crystal_operators_are_total_and_inverse() {
    let adj = Adjoint::limit();
    for x in -3..=3 {
        for y in -3..=3 {
            let b = XY::new(x, y);
            for i in [0, 1] {
                let down = adj.f(i, &b).expect("total");
                assert_eq!(adj.e(i, &down), Some(b), "e_{i} f_{i} at {b}");
                let up = adj.e(i, &b).expect("total");
                assert_eq!(adj.f(i, &up), Some(b), "f_{i} e_{i} at {b}");
                assert_eq!(adj.wt(&down), adj.wt(&b) - adj.alpha(i));
            }
        }
    }
}

#[test]
fn coherent_maps_shift_by_the_ground_parameter() {
    assert_eq!(coherent_map(1, &XY::new(3, 2)), XY::new(2, 1));
    assert_eq!(coherent_map(0, &XY::new(3, 2)), XY::new(3, 2));
    // The map intertwines the finite and limit operators away from the
    // boundary of the finite crystal.
    let fin = Adjoint::finite(6);
    let lim = Adjoint::limit();
    let b = XY::new(2, 3);
    for i in [0, 1] {
        let down = fin.f(i, &b).unwrap();
        assert_eq!(
            coherent_map(1, &down),
            lim.f(i, &coherent_map(1, &b)).unwrap()
        );
    }
}

#[test]
fn perfectness_passes_at_small_levels() {
    for l in 1..=4 {
        let report = verify_perfect(l);
        for cond in &report.conditions {
            assert!(
                cond.status != ywall_core::adjoint::Status::Failed,
                "level {l}, {}: {}",
                cond.name,
                cond.detail
            );
        }
    }
}
