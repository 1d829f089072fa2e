//! Path realizations built from the adjoint crystal.
//!
//! An affine `λ`-path (at grade offset zero) is a semi-infinite string
//! `… ⊗ b_2(−m_2) ⊗ b_1(−m_1) ⊗ b_0(−m_0)` of graded adjoint elements,
//! equal to the ground element `(a, a)(0)` far to the left, with vanishing
//! affine energy between adjacent entries (boundary pair included).  The
//! limit (`∞`) model uses `(0, 0)(0)` over the limit crystal.  Classical
//! paths are the same strings with the grades forgotten.
//!
//! All path operators are tensor operators of the underlying crystal; the
//! path component is the independent oracle that the Young-wall model is
//! compared against.

use crate::adjoint::{Adjoint, XY};
use crate::column::WallContext;
use crate::crystal::{
    component, tail_e, tail_eps, tail_f, tail_phi, tail_wt, Affinized, Crystal, CrystalGraph,
    Direction, Graded, GraphError, TailString, DEFAULT_NODE_CAP,
};
use crate::energy::h_affine;
use crate::weight::Weight;
use std::collections::BTreeMap;
use thiserror::Error;

/// Margin of materialised tail copies.
pub const PATH_MARGIN: usize = 2;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    pub ctx: WallContext,
    /// `entries[0]` is the rightmost element; the implicit tail is the
    /// ground element of the context.
    pub entries: Vec<Graded<XY>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("entry {0} lies outside the crystal of the context")]
    OutsideCrystal(String),
    #[error("entry {0} has positive grade")]
    PositiveGrade(String),
    #[error("adjacent energy H must vanish on a path, found {found} at position {pos}")]
    EnergyNotZero { pos: usize, found: i64 },
}

impl Path {
    pub fn ground(ctx: WallContext) -> Path {
        Path {
            ctx,
            entries: Vec::new(),
        }
    }

    pub fn new(ctx: WallContext, entries: Vec<Graded<XY>>) -> Result<Path, PathError> {
        let mut p = Path { ctx, entries };
        p.trim();
        p.validate()?;
        Ok(p)
    }

    fn trim(&mut self) {
        let tail = self.ctx.ground_elem();
        while self.entries.last() == Some(&tail) {
            self.entries.pop();
        }
    }

    /// Entry at depth `k`, with the implicit tail for `k ≥ len`.
    pub fn entry(&self, k: usize) -> Graded<XY> {
        self.entries
            .get(k)
            .copied()
            .unwrap_or_else(|| self.ctx.ground_elem())
    }

    /// Check the path conditions: entries in the crystal, grades
    /// non-positive, all adjacent energies zero (boundary included).
    pub fn validate(&self) -> Result<(), PathError> {
        let adj = self.ctx.adjoint();
        for g in &self.entries {
            if !adj.contains(&g.b) {
                return Err(PathError::OutsideCrystal(format!("{}({})", g.b, g.m)));
            }
            if g.m > 0 {
                return Err(PathError::PositiveGrade(format!("{}({})", g.b, g.m)));
            }
        }
        for k in 0..self.entries.len() {
            let h = h_affine(&self.entry(k + 1), &self.entry(k));
            if h != 0 {
                return Err(PathError::EnergyNotZero { pos: k, found: h });
            }
        }
        Ok(())
    }

    fn tail_string(&self) -> TailString<Graded<XY>> {
        TailString::new(self.ctx.ground_elem(), self.entries.clone())
    }

    /// Affine weight `λ + Σ_k (wt(b_k) + m_k · δ/2)` over the stored entries
    /// (the ground element has weight zero).
    pub fn wt(&self) -> Weight {
        tail_wt(&aff(self.ctx), self.ctx.lambda(), &self.tail_string())
    }

    pub fn encode(&self) -> String {
        let a = aff(self.ctx);
        let parts: Vec<String> = self.entries.iter().map(|g| a.encode(g)).collect();
        format!("[{}]", parts.join(","))
    }
}

fn aff(ctx: WallContext) -> Affinized<Adjoint> {
    Affinized {
        base: ctx.adjoint(),
    }
}

/// Apply `f_i`, asserting that the result is again a path (the energies are
/// preserved by tensor operators, so this is a consistency check rather
/// than a filter).
pub fn path_f(p: &Path, i: usize) -> Option<Path> {
    let next = tail_f(
        &aff(p.ctx),
        i,
        &p.tail_string(),
        PATH_MARGIN,
        p.ctx.is_infinite(),
    )?;
    let out = Path {
        ctx: p.ctx,
        entries: next.prefix,
    };
    out.validate()
        .expect("tensor operators preserve the path conditions");
    Some(out)
}

/// Apply `e_i`; see [`path_f`].
pub fn path_e(p: &Path, i: usize) -> Option<Path> {
    let next = tail_e(&aff(p.ctx), i, &p.tail_string(), PATH_MARGIN)?;
    let out = Path {
        ctx: p.ctx,
        entries: next.prefix,
    };
    out.validate()
        .expect("tensor operators preserve the path conditions");
    Some(out)
}

/// The affine path space as a crystal.
pub struct PathCrystal {
    pub ctx: WallContext,
}

impl Crystal for PathCrystal {
    type Elem = Path;

    fn wt(&self, b: &Path) -> Weight {
        b.wt()
    }

    fn e(&self, i: usize, b: &Path) -> Option<Path> {
        path_e(b, i)
    }

    fn f(&self, i: usize, b: &Path) -> Option<Path> {
        path_f(b, i)
    }

    fn eps(&self, i: usize, b: &Path) -> i64 {
        tail_eps(&aff(self.ctx), i, &b.tail_string())
    }

    fn phi(&self, i: usize, b: &Path) -> i64 {
        tail_phi(&aff(self.ctx), i, &b.tail_string())
    }

    fn encode(&self, b: &Path) -> String {
        b.encode()
    }
}

/// Component of the ground path to the given depth, following `f` only.
pub fn path_component(ctx: WallContext, depth: usize) -> Result<CrystalGraph, GraphError> {
    path_component_capped(ctx, depth, DEFAULT_NODE_CAP)
}

pub fn path_component_capped(
    ctx: WallContext,
    depth: usize,
    cap: usize,
) -> Result<CrystalGraph, GraphError> {
    let c = PathCrystal { ctx };
    component(&c, &Path::ground(ctx), Some(depth), Direction::Down, cap)
}

/// Node count per affine weight of the depth-truncated path component.
pub fn multiplicity_table(
    ctx: WallContext,
    depth: usize,
) -> Result<BTreeMap<Weight, usize>, GraphError> {
    Ok(path_component(ctx, depth)?.weight_multiplicities())
}

// ---------------------------------------------------------------------------
// Classical paths (grades forgotten)
// ---------------------------------------------------------------------------

/// A classical path: entries without grades, implicit tail `(a, a)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassicalPath {
    pub ctx: WallContext,
    pub entries: Vec<XY>,
}

impl ClassicalPath {
    pub fn ground(ctx: WallContext) -> ClassicalPath {
        ClassicalPath {
            ctx,
            entries: Vec::new(),
        }
    }

    fn tail_string(&self) -> TailString<XY> {
        TailString::new(self.ctx.ground_elem().b, self.entries.clone())
    }

    /// Forget the grades of an affine path.
    pub fn from_affine(p: &Path) -> ClassicalPath {
        ClassicalPath {
            ctx: p.ctx,
            entries: p.entries.iter().map(|g| g.b).collect(),
        }
    }
}

/// The classical path space as a crystal.
pub struct ClassicalPathCrystal {
    pub ctx: WallContext,
}

impl Crystal for ClassicalPathCrystal {
    type Elem = ClassicalPath;

    fn wt(&self, b: &ClassicalPath) -> Weight {
        tail_wt(
            &self.ctx.adjoint(),
            self.ctx.lambda().classical().lift(),
            &b.tail_string(),
        )
    }

    fn e(&self, i: usize, b: &ClassicalPath) -> Option<ClassicalPath> {
        let next = tail_e(&self.ctx.adjoint(), i, &b.tail_string(), PATH_MARGIN)?;
        Some(ClassicalPath {
            ctx: b.ctx,
            entries: next.prefix,
        })
    }

    fn f(&self, i: usize, b: &ClassicalPath) -> Option<ClassicalPath> {
        let next = tail_f(
            &self.ctx.adjoint(),
            i,
            &b.tail_string(),
            PATH_MARGIN,
            self.ctx.is_infinite(),
        )?;
        Some(ClassicalPath {
            ctx: b.ctx,
            entries: next.prefix,
        })
    }

    fn eps(&self, i: usize, b: &ClassicalPath) -> i64 {
        tail_eps(&self.ctx.adjoint(), i, &b.tail_string())
    }

    fn phi(&self, i: usize, b: &ClassicalPath) -> i64 {
        tail_phi(&self.ctx.adjoint(), i, &b.tail_string())
    }

    fn encode(&self, b: &ClassicalPath) -> String {
        let parts: Vec<String> = b.entries.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Component of the classical ground path to the given depth.
pub fn classical_path_component(
    ctx: WallContext,
    depth: usize,
) -> Result<CrystalGraph, GraphError> {
    let c = ClassicalPathCrystal { ctx };
    component(
        &c,
        &ClassicalPath::ground(ctx),
        Some(depth),
        Direction::Down,
        DEFAULT_NODE_CAP,
    )
}
