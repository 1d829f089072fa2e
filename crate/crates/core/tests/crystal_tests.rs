use proptest::prelude::*;
use ywall_core::crystal::{
    axiom_check, fold_stats, signature_e_position, signature_f_position, signature_stats,
    tensor_e_position, tensor_f_position, tensor_stats, TensorPower,
};
use ywall_core::{tensor_f, Adjoint, Affinized, Crystal, Graded, TLambda, Weight, XY};

#[test]
fn two_factor_worked_step() {
    let adj = Adjoint::finite(4);
    let s = vec![XY::new(1, 1), XY::new(1, 1)];
    // phi_1(left) = 1 = eps_1(right), so f_1 acts on the right factor.
    assert_eq!(
        tensor_f(&adj, 1, &s),
        Some(vec![XY::new(1, 1), XY::new(0, 2)])
    );
    let st = tensor_stats(&adj, 1, &s);
    assert_eq!((st.eps, st.phi), (1, 1));
}

#[test]
fn affinization_grades_and_weights() {
    let aff = Affinized {
        base: Adjoint::finite(4),
    };
    let b = Graded::new(XY::new(1, 1), 0);
    let down = aff.f(0, &b).unwrap();
    assert_eq!(down, Graded::new(XY::new(2, 1), -1));
    // f_0 lowers the affine weight by the full alpha_0, delta/2 included.
    assert_eq!(aff.wt(&down), aff.wt(&b) - Weight::new(2, -1, 1));
    let side = aff.f(1, &b).unwrap();
    assert_eq!(side.m, 0);
    assert_eq!(aff.wt(&side), aff.wt(&b) - Weight::new(-4, 2, 0));
}

#[test]
fn affinized_axioms_on_a_window() {
    let aff = Affinized {
        base: Adjoint::finite(3),
    };
    let mut elems = Vec::new();
    for b in Adjoint::finite(3).elements() {
        for m in -3..=3 {
            elems.push(Graded::new(b, m));
        }
    }
    let report = axiom_check(&aff, &elems);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
}

#[test]
fn t_lambda_is_inert() {
    let t = TLambda::new(Weight::new(2, 1, 0));
    assert_eq!(t.wt(), Weight::new(2, 1, 0));
    assert_eq!(t.eps(0), None);
    assert_eq!(t.phi(1), None);
}

#[test]
fn fold_stats_matches_tensor_stats_on_crystal_strings() {
    let adj = Adjoint::finite(3);
    let elems = adj.elements();
    for a in &elems {
        for b in &elems {
            for i in [0, 1] {
                let s = vec![*a, *b];
                let direct = tensor_stats(&adj, i, &s);
                let counts = vec![
                    (adj.eps(i, a), adj.phi(i, a)),
                    (adj.eps(i, b), adj.phi(i, b)),
                ];
                let folded = fold_stats(&counts);
                assert_eq!((direct.eps, direct.phi), (folded.eps, folded.phi));
            }
        }
    }
}

#[test]
fn tensor_power_axioms_hold_on_pairs() {
    let adj = Adjoint::finite(2);
    let power = TensorPower { base: &adj };
    let mut elems = Vec::new();
    for a in adj.elements() {
        for b in adj.elements() {
            elems.push(vec![a, b]);
        }
    }
    let report = axiom_check(&power, &elems);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
}

proptest! {
    // The folded two-factor rule and the bracket-cancellation rule are
    // independent implementations; they must agree on arbitrary strings.
    #[test]
    fn tensor_rule_double_implementation(
        level in 1i64..=4,
        raw in prop::collection::vec((0i64..=4, 0i64..=4), 1..=5),
        i in 0usize..=1,
    ) {
        let adj = Adjoint::finite(level);
        let s: Vec<XY> = raw
            .into_iter()
            .map(|(x, y)| XY::new(x.min(level), (y).min(level - x.min(level))))
            .collect();
        let direct = tensor_stats(&adj, i, &s);
        let sig = signature_stats(&adj, i, &s);
        prop_assert_eq!((direct.eps, direct.phi), (sig.eps, sig.phi));
        prop_assert_eq!(tensor_f_position(&adj, i, &s), signature_f_position(&adj, i, &s));
        prop_assert_eq!(tensor_e_position(&adj, i, &s), signature_e_position(&adj, i, &s));
    }
}
