use ywall_core::{
    render_wall, signature_oracle, wall_e_oracle, wall_e_tensor, wall_eps, wall_f_oracle,
    wall_f_tensor, wall_phi, wall_wt_tensor, Column, Wall, WallClass, WallContext, Weight,
};

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
fn worked_wall_signatures() {
    let w = worked_wall();
    let sig0 = signature_oracle(&w, 0);
    assert_eq!(sig0.strings(), vec!["+", "--++++", "+++"]);
    let sig1 = signature_oracle(&w, 1);
    assert_eq!(sig1.strings(), vec!["+", "-", "--+"]);
    assert_eq!((wall_eps(&w, 0), wall_phi(&w, 0)), (1, 7));
    assert_eq!((wall_eps(&w, 1), wall_phi(&w, 1)), (2, 1));
}

#[test]
fn worked_wall_operators_both_routes() {
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
    assert_eq!(wall_f_oracle(&w, 0).unwrap(), Some(f0.clone()));
    assert_eq!(wall_f_tensor(&w, 0).unwrap(), Some(f0));
    assert_eq!(wall_e_oracle(&w, 1).unwrap(), Some(e1.clone()));
    assert_eq!(wall_e_tensor(&w, 1).unwrap(), Some(e1));
}

#[test]
fn worked_wall_weight_via_both_routes() {
    let w = worked_wall();
    assert_eq!(w.wt(), Weight::new(6, -1, -10));
    assert_eq!(wall_wt_tensor(&w, w.ctx).unwrap(), w.wt());
}

#[test]
fn validation_classifies() {
    let ctx = lvl4();
    assert_eq!(Wall::ground(ctx).validate(), WallClass::ReducedWall);
    // A lone deep column next to the implicit ground tail: H < 0.
    let deep = Column::new(ctx, 5, 7, 8).unwrap();
    let bad = Wall::new(ctx, vec![ctx.ground_column(), deep]).unwrap();
    assert!(matches!(bad.validate(), WallClass::NotAWall { .. }));
    // The worked wall itself is a wall but not reduced.
    assert_eq!(worked_wall().validate(), WallClass::Wall);
}

#[test]
fn ground_wall_signature_is_a_single_plus_column() {
    // The one materialised tail copy carries the whole signature of the
    // ground wall: phi_0 = level - 2a, phi_1 = a, eps = 0.
    let w = Wall::ground(lvl4());
    assert_eq!((wall_eps(&w, 0), wall_phi(&w, 0)), (0, 2));
    assert_eq!((wall_eps(&w, 1), wall_phi(&w, 1)), (0, 1));
    assert_eq!(wall_e_oracle(&w, 0).unwrap(), None);
    assert_eq!(wall_e_oracle(&w, 1).unwrap(), None);
}

#[test]
fn limit_model_operators_are_total() {
    let ctx = WallContext::Infinite;
    let mut w = Wall::ground(ctx);
    // Ten alternating lowering steps never annihilate in the limit model.
    for step in 0..10 {
        let i = step % 2;
        w = wall_f_oracle(&w, i)
            .unwrap()
            .unwrap_or_else(|| panic!("f_{i} must be total on the limit model"));
        let t = wall_f_tensor(&Wall::ground(ctx), i).unwrap();
        assert!(t.is_some());
    }
    // And e comes back: eps counts the way home.
    let mut back = 0;
    let mut cur = w;
    while let Some(prev) = [0, 1]
        .into_iter()
        .find_map(|i| wall_e_oracle(&cur, i).unwrap())
    {
        cur = prev;
        back += 1;
        assert!(back <= 10, "raising must terminate at the ground wall");
    }
    assert_eq!(cur, Wall::ground(ctx));
}

#[test]
fn limit_ground_wall_first_steps() {
    let ctx = WallContext::Infinite;
    let w = Wall::ground(ctx);
    let f0 = wall_f_oracle(&w, 0).unwrap().unwrap();
    assert_eq!(f0.columns, vec![Column::new(ctx, 1, 1, 0).unwrap()]);
    let f1 = wall_f_oracle(&w, 1).unwrap().unwrap();
    assert_eq!(f1.columns, vec![Column::new(ctx, 0, 0, 2).unwrap()]);
    assert_eq!(wall_f_tensor(&w, 0).unwrap().unwrap(), f0);
    assert_eq!(wall_f_tensor(&w, 1).unwrap().unwrap(), f1);
    assert_eq!(f0.wt(), Weight::new(-2, 1, -1)); // -alpha_0
    assert_eq!(f1.wt(), Weight::new(4, -2, 0)); // -alpha_1
}

#[test]
fn serde_round_trip() {
    let w = worked_wall();
    let json = serde_json::to_string(&w).unwrap();
    assert_eq!(serde_json::from_str::<Wall>(&json).unwrap(), w);
    let winf = wall_f_oracle(&Wall::ground(WallContext::Infinite), 0)
        .unwrap()
        .unwrap();
    let json = serde_json::to_string(&winf).unwrap();
    assert!(json.contains("infinity"));
    assert_eq!(serde_json::from_str::<Wall>(&json).unwrap(), winf);
}

#[test]
fn deserialisation_rejects_broken_input() {
    let bad = r#"{"lambda":{"l":1,"a":1},"columns":[]}"#;
    assert!(serde_json::from_str::<Wall>(bad).is_err());
    let bad = r#"{"lambda":{"l":4,"a":1},"columns":[{"s":-1,"sbar":0,"tbar":0}]}"#;
    assert!(serde_json::from_str::<Wall>(bad).is_err());
}

#[test]
fn rendering_shows_each_column() {
    let art = render_wall(&worked_wall());
    assert!(art.contains("C0"));
    assert!(art.contains("C1"));
    assert!(art.contains("[ 0 ]"));
    assert!(art.contains("[1|1]"));
}
