//! Walk through one non-trivial Young wall over `2Λ0 + Λ1`: its signature
//! strings, statistics, operators (computed via both routes), weight, and
//! ASCII picture.
//!
//! Run with `cargo run -p ywall-core --example worked_wall`.

use ywall_core::{
    column_big_h, render_wall, signature_oracle, wall_e_oracle, wall_e_tensor, wall_eps,
    wall_f_oracle, wall_f_tensor, wall_phi, Column, Wall, WallContext,
};

fn main() {
    let ctx = WallContext::finite(4, 1).unwrap();
    let c0 = Column::new(ctx, 7, 5, 6).unwrap();
    let c1 = Column::new(ctx, 3, 7, 8).unwrap();
    let w = Wall::new(ctx, vec![c0, c1]).unwrap();

    println!("{}", render_wall(&w));
    println!("validates as: {:?}", w.validate());
    println!("weight: {}", w.wt());
    println!("psi(C0) = {:?}", c0.psi().unwrap());
    println!("psi(C1) = {:?}", c1.psi().unwrap());

    for i in [0usize, 1] {
        let sig = signature_oracle(&w, i);
        println!("{i}-signatures (deepest first): {:?}", sig.strings());
        println!(
            "  eps_{i} = {}, phi_{i} = {}",
            wall_eps(&w, i),
            wall_phi(&w, i)
        );
    }

    // The two operator routes (block-level signature oracle, graded tensor
    // string) agree on every wall; shown here on F0 and E1.
    let f0 = wall_f_oracle(&w, 0).unwrap().unwrap();
    assert_eq!(wall_f_tensor(&w, 0).unwrap().unwrap(), f0);
    println!("F0: {}", f0.encode());
    let e1 = wall_e_oracle(&w, 1).unwrap().unwrap();
    assert_eq!(wall_e_tensor(&w, 1).unwrap().unwrap(), e1);
    println!("E1: {}", e1.encode());

    // Adjacent column energies decide wallhood: H >= 0 everywhere.
    println!(
        "adjacent energies: H(ground, C1) = {}, H(C1, C0) = {}",
        column_big_h(&ctx.ground_column(), &c1),
        column_big_h(&c1, &c0),
    );
}
