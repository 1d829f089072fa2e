#![forbid(unsafe_code)]

//! Adjoint crystals, energy functions, and the Young-wall model for the
//! twisted affine type `A2(2)`.
//!
//! The crate provides:
//!
//! * the affine weight lattice in the `{Λ0, Λ1, δ/2}` basis ([`weight`]);
//! * a generic crystal interface with tensor products, affinization,
//!   semi-infinite strings, component graphs, and axiom checking
//!   ([`crystal`]);
//! * the level-`l` adjoint crystal, its limit, and the perfectness checks
//!   ([`adjoint`]);
//! * classical and affine energy functions with exhaustive verifications
//!   ([`energy`]);
//! * Young-wall columns and walls with two independent operator routes
//!   ([`column`], [`wall`]);
//! * path realizations serving as the independent oracle ([`path`]);
//! * cross-model verification suites ([`verify`]).

pub mod adjoint;
pub mod column;
pub mod crystal;
pub mod energy;
pub mod path;
pub mod verify;
pub mod wall;
pub mod weight;

pub use adjoint::{
    adjoint_graph, coherent_map, minimal_vector, verify_perfect, Adjoint, PerfectReport, XY,
};
pub use column::{
    column_big_h, column_e, column_f, column_h, normalize, phi_inv, render_column, Column,
    ColumnError, WallContext,
};
pub use crystal::{
    axiom_check, component, graph_equal, tensor_e, tensor_f, Affinized, Crystal, CrystalGraph,
    Direction, Graded, GraphError, TLambda, DEFAULT_NODE_CAP,
};
pub use energy::{
    h_affine, h_classical, verify_energy_axioms, verify_energy_axioms_with, verify_h_constancy,
    CheckReport,
};
pub use path::{
    classical_path_component, multiplicity_table, path_component, path_e, path_f, ClassicalPath,
    ClassicalPathCrystal, Path, PathCrystal, PathError,
};
pub use verify::{
    enumerate_reduced_walls, standard_contexts, suite_bijection, suite_column_energy,
    suite_intertwine, suite_isomorphism, suite_margin_stability, suite_multiplicities,
    suite_perfect, suite_reduced_closure, suite_tensor_double, suite_wall_weights, wall_component,
    wall_component_mode,
};
pub use wall::{
    render_wall, signature_oracle, wall_e_oracle, wall_e_tensor, wall_eps, wall_eps_tensor,
    wall_f_oracle, wall_f_tensor, wall_phi, wall_phi_tensor, wall_wt_tensor, Wall, WallClass,
    WallCrystal, WallError, WallMode, WallSignature,
};
pub use weight::{dominant, ClassicalWeight, Weight, ALPHA_0, ALPHA_1, DELTA};
