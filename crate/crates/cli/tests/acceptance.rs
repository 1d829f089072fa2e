//! End-to-end acceptance checks for the whole workspace: the adjoint
//! crystal figure, the energy axioms, perfectness, the column bijection,
//! the worked wall examples, and the cross-model graph isomorphisms at
//! truncated depth.  Each check prints a single pass/fail line.

use ywall_core::{
    adjoint_graph, column_big_h, h_classical, minimal_vector, signature_oracle, standard_contexts,
    suite_bijection, suite_isomorphism, suite_multiplicities, suite_reduced_closure,
    suite_tensor_double, suite_wall_weights, verify_energy_axioms, verify_h_constancy,
    verify_perfect, wall_e_oracle, wall_eps, wall_f_oracle, wall_phi, CheckReport, Column, Wall,
    WallContext, XY,
};

fn verdict(number: usize, name: &str, failure: Option<String>) {
    match &failure {
        None => println!("criterion {number:2} ({name}): PASS"),
        Some(why) => println!("criterion {number:2} ({name}): FAIL — {why}"),
    }
    if let Some(why) = failure {
        panic!("criterion {number} ({name}) failed: {why}");
    }
}

fn reports_ok(reports: &[CheckReport]) -> Option<String> {
    reports
        .iter()
        .find(|r| !r.passed())
        .map(|r| format!("{}: {}", r.name, r.violations.join("; ")))
}

fn lvl4() -> WallContext {
    WallContext::finite(4, 1).unwrap()
}

fn worked_wall() -> Wall {
    let ctx = lvl4();
    let c0 = Column::new(ctx, 7, 5, 6).unwrap();
    let c1 = Column::new(ctx, 3, 7, 8).unwrap();
    Wall::new(ctx, vec![c0, c1]).unwrap()
}

#[test]
fn criterion_01_adjoint_crystal_figure() {
    let g = adjoint_graph(4).unwrap();
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
    let minimal: Vec<XY> = (0..=2).map(|a| minimal_vector(4, a).unwrap()).collect();
    let failure = if g.nodes.len() != 15 {
        Some(format!("expected 15 nodes, got {}", g.nodes.len()))
    } else if edges != expected {
        Some("edge set differs from the level-4 figure".into())
    } else if minimal != vec![XY::new(0, 0), XY::new(1, 1), XY::new(2, 2)] {
        Some(format!("minimal vectors {minimal:?}"))
    } else {
        None
    };
    verdict(1, "level-4 adjoint crystal graph", failure);
}

#[test]
fn criterion_02_energy_axioms() {
    let reports: Vec<_> = (1..=5).map(verify_energy_axioms).collect();
    let mut failure = reports_ok(&reports);
    if failure.is_none() {
        if let Some(a) = (0..=8).find(|&a| h_classical(&XY::new(a, a), &XY::new(a, a)) != 0) {
            failure = Some(format!("h((a,a),(a,a)) != 0 at a = {a}"));
        }
    }
    verdict(2, "classical energy axioms, levels 1-5", failure);
}

#[test]
fn criterion_03_affine_energy_constancy() {
    let reports: Vec<_> = (1..=3).map(|l| verify_h_constancy(l, 8, 10)).collect();
    verdict(
        3,
        "affine energy constant on components",
        reports_ok(&reports),
    );
}

#[test]
fn criterion_04_perfectness() {
    let mut failure = None;
    for l in 1..=4 {
        let p = verify_perfect(l);
        if !p.passed() {
            failure = Some(format!("level {l} failed"));
            break;
        }
        let scoped = p
            .conditions
            .iter()
            .any(|c| c.status == ywall_core::adjoint::Status::OutOfScope);
        if !scoped {
            failure = Some(format!(
                "level {l}: condition (i) not reported out of scope"
            ));
            break;
        }
    }
    verdict(4, "perfectness (ii)-(v), levels 1-4", failure);
}

#[test]
fn criterion_05_column_bijection() {
    let mut reports: Vec<_> = standard_contexts(5)
        .into_iter()
        .map(|ctx| suite_bijection(ctx, 10, 10))
        .collect();
    reports.push(suite_bijection(WallContext::Infinite, 10, 10));
    verdict(5, "column bijection round-trips", reports_ok(&reports));
}

#[test]
fn criterion_06_worked_energies() {
    let ctx = lvl4();
    let c = |s, sb, tb| Column::new(ctx, s, sb, tb).unwrap();
    let left = c(0, 4, 6);
    let block = [
        (column_big_h(&left, &c(2, 4, 4)), -2),
        (column_big_h(&left, &c(3, 5, 6)), 0),
        (column_big_h(&left, &c(4, 6, 8)), 2),
        (column_big_h(&left, &c(6, 4, 2)), 2),
    ];
    // Adjacent pairs of the worked wall: the reduced variant has zero
    // energy, swapping in the taller middle column drops it below zero.
    let y2 = c(0, 2, 2);
    let pairs = [
        (column_big_h(&y2, &c(1, 5, 8)), 0),
        (column_big_h(&y2, &c(0, 4, 8)), -2),
    ];
    let failure = block
        .iter()
        .chain(pairs.iter())
        .find(|&&(got, want)| got != want)
        .map(|&(got, want)| format!("H = {got}, expected {want}"));
    verdict(6, "worked column energies", failure);
}

#[test]
fn criterion_07_worked_signatures_and_operators() {
    let ctx = lvl4();
    let w = worked_wall();
    let f0 = Wall::new(
        ctx,
        vec![
            Column::new(ctx, 7, 5, 6).unwrap(),
            Column::new(ctx, 4, 0, 0).unwrap(),
        ],
    )
    .unwrap();
    let e1 = Wall::new(
        ctx,
        vec![
            Column::new(ctx, 7, 3, 2).unwrap(),
            Column::new(ctx, 3, 7, 8).unwrap(),
        ],
    )
    .unwrap();
    let failure = if signature_oracle(&w, 0).strings() != ["+", "--++++", "+++"] {
        Some("0-signature strings differ".into())
    } else if signature_oracle(&w, 1).strings() != ["+", "-", "--+"] {
        Some("1-signature strings differ".into())
    } else if (wall_eps(&w, 0), wall_phi(&w, 0)) != (1, 7) {
        // The cancelled 0-signature is (-+++++++).
        Some("cancelled 0-signature is not one minus, seven pluses".into())
    } else if (wall_eps(&w, 1), wall_phi(&w, 1)) != (2, 1) {
        // The cancelled 1-signature is (--+).
        Some("cancelled 1-signature is not two minuses, one plus".into())
    } else if wall_f_oracle(&w, 0).unwrap() != Some(f0) {
        Some("F0 did not add the 0-block in the middle column".into())
    } else if wall_e_oracle(&w, 1).unwrap() != Some(e1) {
        Some("E1 did not remove the 1-block in the rightmost column".into())
    } else {
        None
    };
    verdict(7, "worked wall signatures and operators", failure);
}

#[test]
fn criterion_08_per_column_counts() {
    let reports: Vec<_> = standard_contexts(3)
        .into_iter()
        .map(|ctx| ywall_core::suite_intertwine(ctx, 6))
        .collect();
    verdict(
        8,
        "per-column counts match the crystal side, depth 6",
        reports_ok(&reports),
    );
}

#[test]
fn criterion_09_finite_realization() {
    let mut reports = Vec::new();
    for ctx in standard_contexts(3) {
        reports.push(suite_isomorphism(ctx, 6));
        reports.push(suite_multiplicities(ctx, 6));
    }
    verdict(
        9,
        "wall/path isomorphism for dominant weights, depth 6",
        reports_ok(&reports),
    );
}

#[test]
fn criterion_10_limit_realization() {
    let reports = [
        suite_isomorphism(WallContext::Infinite, 7),
        suite_multiplicities(WallContext::Infinite, 7),
    ];
    verdict(
        10,
        "wall/path isomorphism for the limit crystal, depth 7",
        reports_ok(&reports),
    );
}

#[test]
fn criterion_11_property_suite() {
    let mut reports = Vec::new();
    for ctx in standard_contexts(3) {
        reports.push(suite_reduced_closure(ctx, 6));
        reports.push(suite_wall_weights(ctx, 6));
    }
    reports.push(suite_reduced_closure(WallContext::Infinite, 6));
    reports.push(suite_wall_weights(WallContext::Infinite, 6));
    for l in 1..=3 {
        reports.push(suite_tensor_double(l, 6));
    }
    verdict(
        11,
        "closure, weight, and double-implementation properties",
        reports_ok(&reports),
    );
}
