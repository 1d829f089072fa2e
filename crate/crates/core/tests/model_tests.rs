//! Cross-model checks: the wall crystal against the path crystal, and the
//! verification suites that the acceptance gate runs at larger depth.

use ywall_core::{
    graph_equal, path_component, standard_contexts, suite_intertwine, suite_isomorphism,
    suite_margin_stability, suite_multiplicities, suite_reduced_closure, suite_tensor_double,
    suite_wall_weights, wall_component, wall_component_mode, WallContext, WallMode,
};

#[test]
fn wall_and_path_components_match_at_moderate_depth() {
    for ctx in standard_contexts(2) {
        let rep = suite_isomorphism(ctx, 5);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
}

#[test]
fn limit_components_match() {
    let rep = suite_isomorphism(WallContext::Infinite, 5);
    assert!(rep.passed(), "{:?}", rep.violations);
}

#[test]
fn oracle_and_tensor_modes_agree_as_crystals() {
    for ctx in [WallContext::finite(4, 1).unwrap(), WallContext::Infinite] {
        let a =
            wall_component_mode(ctx, 4, WallMode::Oracle, ywall_core::DEFAULT_NODE_CAP).unwrap();
        let b =
            wall_component_mode(ctx, 4, WallMode::Tensor, ywall_core::DEFAULT_NODE_CAP).unwrap();
        graph_equal(&a, &b).unwrap_or_else(|e| panic!("{ctx:?}: {e}"));
    }
}

#[test]
fn graph_comparison_detects_differences() {
    let a = wall_component(WallContext::finite(1, 0).unwrap(), 4).unwrap();
    let b = path_component(WallContext::finite(1, 0).unwrap(), 3).unwrap();
    assert!(graph_equal(&a, &b).is_err());
}

#[test]
fn reduced_walls_are_closed_under_operators() {
    for ctx in standard_contexts(2) {
        let rep = suite_reduced_closure(ctx, 5);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
    let rep = suite_reduced_closure(WallContext::Infinite, 5);
    assert!(rep.passed(), "{:?}", rep.violations);
}

#[test]
fn wall_weights_agree_with_tensor_weights() {
    for ctx in standard_contexts(2) {
        let rep = suite_wall_weights(ctx, 5);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
    let rep = suite_wall_weights(WallContext::Infinite, 5);
    assert!(rep.passed(), "{:?}", rep.violations);
}

#[test]
fn per_column_counts_match_the_energy_constrained_maxima() {
    for ctx in standard_contexts(2) {
        let rep = suite_intertwine(ctx, 4);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
}

#[test]
fn multiplicities_match() {
    for ctx in standard_contexts(2) {
        let rep = suite_multiplicities(ctx, 5);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
}

#[test]
fn margin_does_not_matter() {
    for ctx in standard_contexts(2) {
        let rep = suite_margin_stability(ctx, 5);
        assert!(rep.passed(), "{ctx:?}: {:?}", rep.violations);
    }
    let rep = suite_margin_stability(WallContext::Infinite, 5);
    assert!(rep.passed(), "{:?}", rep.violations);
}

#[test]
fn tensor_rule_double_implementation_on_strings() {
    for l in 1..=3 {
        let rep = suite_tensor_double(l, 4);
        assert!(rep.passed(), "level {l}: {:?}", rep.violations);
    }
}
