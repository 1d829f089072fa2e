use ywall_core::verify::{suite_bijection, suite_column_energy};
use ywall_core::{
    column_big_h, column_e, column_f, normalize, phi_inv, render_column, Column, Graded,
    WallContext, XY,
};

fn lvl4() -> WallContext {
    WallContext::finite(4, 1).unwrap()
}

#[test]
fn psi_worked_examples() {
    let ctx = lvl4();
    let c = Column::new(ctx, 7, 5, 6).unwrap();
    assert_eq!(c.t(), 8);
    assert_eq!(c.psi().unwrap(), Graded::new(XY::new(1, 2), -7));
    let c = Column::new(ctx, 3, 7, 8).unwrap();
    assert_eq!(c.psi().unwrap(), Graded::new(XY::new(0, 1), -3));
}

#[test]
fn psi_worked_example_limit() {
    let c = Column::new(WallContext::Infinite, 3, -3, -2).unwrap();
    assert_eq!(c.psi().unwrap(), Graded::new(XY::new(1, 2), -3));
}

#[test]
fn tie_normalisation() {
    assert_eq!(normalize(6, 6, 4), (2, 2));
    assert_eq!(normalize(8, 8, 4), (0, 0));
    assert_eq!(normalize(5, 6, 4), (5, 6));
    // Constructing with the non-canonical representative lands on the
    // canonical one.
    let a = Column::new(lvl4(), 0, 6, 6).unwrap();
    let b = Column::new(lvl4(), 0, 2, 2).unwrap();
    assert_eq!(a, b);
}

#[test]
fn invalid_columns_are_rejected() {
    let ctx = lvl4();
    assert!(Column::new(ctx, -1, 0, 0).is_err()); // negative depth
    assert!(Column::new(ctx, 0, 1, 1).is_err()); // odd parity of s - sbar
    assert!(Column::new(ctx, 0, 0, 1).is_err()); // odd tbar
    assert!(Column::new(ctx, 0, 9, 10).is_err()); // out of the level range
}

#[test]
fn column_operator_worked_steps() {
    let ctx = lvl4();
    let c = Column::new(ctx, 3, 7, 8).unwrap();
    assert_eq!(column_f(0, &c), Some(Column::new(ctx, 4, 0, 0).unwrap()));
    let c = Column::new(ctx, 7, 5, 6).unwrap();
    assert_eq!(column_e(1, &c), Some(Column::new(ctx, 7, 3, 2).unwrap()));
    // e_0 on a surface column would raise the grade above zero: null.
    let ground = ctx.ground_column();
    assert_eq!(column_e(0, &ground), None);
}

#[test]
fn energy_worked_block() {
    let ctx = lvl4();
    let c = |s, sb, tb| Column::new(ctx, s, sb, tb).unwrap();
    let left = c(0, 4, 6);
    assert_eq!(column_big_h(&left, &c(2, 4, 4)), -2);
    assert_eq!(column_big_h(&left, &c(3, 5, 6)), 0);
    assert_eq!(column_big_h(&left, &c(4, 6, 8)), 2);
    assert_eq!(column_big_h(&left, &c(6, 4, 2)), 2);
}

#[test]
fn bijection_round_trips() {
    for l in 1..=5 {
        for a in 0..=(l / 2) {
            let ctx = WallContext::finite(l, a).unwrap();
            let report = suite_bijection(ctx, 10, 2 * l + 2);
            assert!(report.passed(), "({l},{a}): {:?}", report.violations);
        }
    }
    let report = suite_bijection(WallContext::Infinite, 10, 10);
    assert!(report.passed(), "limit: {:?}", report.violations);
}

#[test]
fn energy_formula_agrees_with_psi_conjugation() {
    for ctx in [lvl4(), WallContext::Infinite] {
        let report = suite_column_energy(ctx, 6, 8);
        assert!(report.passed(), "{ctx:?}: {:?}", report.violations);
    }
}

#[test]
fn phi_inverts_psi() {
    let ctx = lvl4();
    let c = Column::new(ctx, 7, 5, 6).unwrap();
    assert_eq!(phi_inv(ctx, &c.psi().unwrap()).unwrap(), c);
    // Positive grades never come from columns.
    assert!(phi_inv(ctx, &Graded::new(XY::new(1, 1), 1)).is_err());
}

#[test]
fn rendering_mentions_every_block() {
    let ctx = lvl4();
    let c = Column::new(ctx, 2, 4, 4).unwrap();
    let art = render_column(&c);
    assert_eq!(art.matches("[ 0 ]").count(), 2);
    assert_eq!(art.matches("[1|1]").count(), (c.t() / 2) as usize);
}
