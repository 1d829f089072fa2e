//! Single columns of Young walls and their correspondence with graded
//! adjoint crystal elements.
//!
//! A column is recorded as `⟨s, s̄, t̄⟩` where `s` counts 0-blocks above the
//! ground-state column, `s̄` counts 0-blocks above the fixed reference line,
//! and `t̄` counts 1-blocks above the reference line; the count `t` of
//! 1-blocks above the ground-state column is derived,
//! `t = t̄ + (s − s̄)`.  The map `psi` identifies columns with graded
//! crystal elements `(x, y)(−s)`; `phi_inv` is its inverse.
//!
//! The crystal operators on columns are *defined* by conjugating the graded
//! adjoint operators through `psi`.  Naive coordinate surgery (such as
//! `t̄ ± 2` for the index-1 operators) is wrong in general because stacking
//! interacts with the front/back identification of half-thickness blocks;
//! conjugation handles every case uniformly.

use crate::adjoint::{Adjoint, XY};
use crate::crystal::{Affinized, Crystal, Graded};
use crate::energy::h_affine;
use crate::weight::{dominant, Weight, ALPHA_0, ALPHA_1};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The highest-weight context a wall lives in: a dominant weight
/// `(l − 2a)Λ0 + aΛ1` of positive level, or the limit (`∞`) model.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum WallContext {
    Finite {
        /// Level `l ≥ 1`.
        level: i64,
        /// Ground parameter `a` with `0 ≤ 2a ≤ l`.
        ground: i64,
    },
    Infinite,
}

impl WallContext {
    pub fn finite(level: i64, ground: i64) -> Result<Self, ColumnError> {
        dominant(level, ground).map_err(|_| ColumnError::BadContext { level, ground })?;
        if level < 1 {
            return Err(ColumnError::BadContext { level, ground });
        }
        Ok(WallContext::Finite { level, ground })
    }

    /// Whether this is the limit (`∞`) model, where the lowering operators
    /// are total and `phi` loses its counting meaning.
    pub fn is_infinite(&self) -> bool {
        matches!(self, WallContext::Infinite)
    }

    /// The crystal the context's columns map into.
    pub fn adjoint(&self) -> Adjoint {
        match self {
            WallContext::Finite { level, .. } => Adjoint::finite(*level),
            WallContext::Infinite => Adjoint::limit(),
        }
    }

    /// Highest weight: `λ` in the finite case, `0` for the limit model.
    pub fn lambda(&self) -> Weight {
        match self {
            WallContext::Finite { level, ground } => {
                dominant(*level, *ground).expect("contexts are validated on construction")
            }
            WallContext::Infinite => Weight::ZERO,
        }
    }

    /// Ground-state element: `(a, a)(0)` or `(0, 0)(0)`.
    pub fn ground_elem(&self) -> Graded<XY> {
        match self {
            WallContext::Finite { ground, .. } => Graded::new(XY::new(*ground, *ground), 0),
            WallContext::Infinite => Graded::new(XY::new(0, 0), 0),
        }
    }

    /// Ground-state column: `⟨0, 2a, 2a⟩` or `⟨0, 0, 0⟩`.
    pub fn ground_column(&self) -> Column {
        match self {
            WallContext::Finite { ground, .. } => Column {
                ctx: *self,
                s: 0,
                sbar: 2 * ground,
                tbar: 2 * ground,
            },
            WallContext::Infinite => Column {
                ctx: *self,
                s: 0,
                sbar: 0,
                tbar: 0,
            },
        }
    }
}

impl fmt::Display for WallContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallContext::Finite { level, ground } => write!(f, "lambda({level},{ground})"),
            WallContext::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColumnError {
    #[error("invalid context: level {level}, ground {ground}")]
    BadContext { level: i64, ground: i64 },
    #[error("invalid column <{s},{sbar},{tbar}>: {reason}")]
    Invalid {
        s: i64,
        sbar: i64,
        tbar: i64,
        reason: String,
    },
    #[error("graded element {elem} has positive grade and no column preimage")]
    PositiveGrade { elem: String },
    #[error("graded element {elem} is outside the crystal of this context")]
    OutsideCrystal { elem: String },
}

/// A single column `⟨s, s̄, t̄⟩` in a fixed context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Column {
    pub ctx: WallContext,
    pub s: i64,
    pub sbar: i64,
    pub tbar: i64,
}

impl Column {
    /// Build a column, normalising the reference-line counts in the finite
    /// case and validating everything.
    pub fn new(ctx: WallContext, s: i64, sbar: i64, tbar: i64) -> Result<Column, ColumnError> {
        let (sbar, tbar) = match ctx {
            WallContext::Finite { level, .. } => normalize(sbar, tbar, level),
            WallContext::Infinite => (sbar, tbar),
        };
        let col = Column { ctx, s, sbar, tbar };
        col.validate()?;
        Ok(col)
    }

    /// Derived count of 1-blocks above the ground-state column.
    pub fn t(&self) -> i64 {
        self.tbar + self.s - self.sbar
    }

    fn fail(&self, reason: &str) -> ColumnError {
        ColumnError::Invalid {
            s: self.s,
            sbar: self.sbar,
            tbar: self.tbar,
            reason: reason.into(),
        }
    }

    /// Validity: `s ≥ 0`, `t̄` even, `s − s̄` even (so the derived `t` is
    /// even too), and in the finite case the reference-line counts must be
    /// in the canonical range: either `s̄ ≥ t̄` with `0 ≤ t̄` and `s̄ ≤ l`, or
    /// `l ≤ s̄ < t̄ ≤ 2l`, with ties `s̄ = t̄` normalised to the small
    /// representative.  These are exactly the constraints that make `psi` a
    /// bijection onto the non-positively graded part of the crystal.
    pub fn validate(&self) -> Result<(), ColumnError> {
        if self.s < 0 {
            return Err(self.fail("s must be non-negative"));
        }
        if self.tbar % 2 != 0 {
            return Err(self.fail("tbar must be even"));
        }
        if (self.s - self.sbar) % 2 != 0 {
            return Err(self.fail("s - sbar must be even"));
        }
        if let WallContext::Finite { level, .. } = self.ctx {
            let l = level;
            let high = self.sbar >= self.tbar && self.tbar >= 0 && self.sbar <= l;
            let low = l <= self.sbar && self.sbar < self.tbar && self.tbar <= 2 * l;
            if !(high || low) {
                return Err(self.fail("reference-line counts out of range for this level"));
            }
            if self.sbar == self.tbar && self.sbar > l {
                return Err(
                    self.fail("not normalised: sbar = tbar must take the small representative")
                );
            }
        }
        Ok(())
    }

    /// The graded crystal element of this column.
    pub fn psi(&self) -> Result<Graded<XY>, ColumnError> {
        self.validate()?;
        let (x, y) = match self.ctx {
            WallContext::Finite { level: l, .. } => {
                if self.sbar >= self.tbar {
                    (self.sbar - self.tbar / 2, self.tbar / 2)
                } else {
                    (l - self.tbar / 2, l - self.sbar + self.tbar / 2)
                }
            }
            WallContext::Infinite => {
                if self.sbar >= self.tbar {
                    (self.sbar - self.tbar / 2, self.tbar / 2)
                } else {
                    (-self.tbar / 2, -self.sbar + self.tbar / 2)
                }
            }
        };
        Ok(Graded::new(XY::new(x, y), -self.s))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{},{}>", self.s, self.sbar, self.tbar)
    }
}

/// Canonical representative of the reference-line counts under the
/// full-column identification `v ↔ 2l − v` when `s̄ = t̄`.
pub fn normalize(sbar: i64, tbar: i64, level: i64) -> (i64, i64) {
    if sbar == tbar {
        let v = sbar.min(2 * level - sbar);
        (v, v)
    } else {
        (sbar, tbar)
    }
}

/// Inverse of [`Column::psi`]: the column of a non-positively graded
/// element.
pub fn phi_inv(ctx: WallContext, elem: &Graded<XY>) -> Result<Column, ColumnError> {
    let adj = ctx.adjoint();
    if elem.m > 0 {
        return Err(ColumnError::PositiveGrade {
            elem: format!("{}({})", elem.b, elem.m),
        });
    }
    if !adj.contains(&elem.b) {
        return Err(ColumnError::OutsideCrystal {
            elem: format!("{}({})", elem.b, elem.m),
        });
    }
    let s = -elem.m;
    let (x, y) = (elem.b.x, elem.b.y);
    let (sbar, tbar) = match ctx {
        WallContext::Finite { level: l, .. } => {
            if x >= y {
                (x + y, 2 * y)
            } else {
                (2 * l - (x + y), 2 * (l - x))
            }
        }
        WallContext::Infinite => {
            if x >= y {
                (x + y, 2 * y)
            } else {
                (-(x + y), -2 * x)
            }
        }
    };
    Ok(Column { ctx, s, sbar, tbar })
}

/// Crystal operator `f_i` on a single column, by conjugation through `psi`.
/// `None` both when the underlying operator is null and when the result
/// would have positive grade (blocks cannot be removed from below the
/// reference line, so such columns do not exist).
pub fn column_f(i: usize, col: &Column) -> Option<Column> {
    conjugate(col, |aff, g| aff.f(i, g))
}

/// Crystal operator `e_i` on a single column; see [`column_f`].
pub fn column_e(i: usize, col: &Column) -> Option<Column> {
    conjugate(col, |aff, g| aff.e(i, g))
}

fn conjugate(
    col: &Column,
    op: impl Fn(&Affinized<Adjoint>, &Graded<XY>) -> Option<Graded<XY>>,
) -> Option<Column> {
    let aff = Affinized {
        base: col.ctx.adjoint(),
    };
    let g = col.psi().expect("operators require a valid column");
    let moved = op(&aff, &g)?;
    phi_inv(col.ctx, &moved).ok()
}

/// Classical column energy `h(C, C′)`, a four-term maximum depending on
/// which side of the `s̄ ≥ t̄` split each column falls on.  The limit model
/// uses the same expressions with the level terms dropped (`l = 0`).
pub fn column_h(c: &Column, cp: &Column) -> i64 {
    assert_eq!(c.ctx, cp.ctx, "column energies need a common context");
    let l = match c.ctx {
        WallContext::Finite { level, .. } => level,
        WallContext::Infinite => 0,
    };
    let (sb, tb) = (c.sbar, c.tbar);
    let (sbp, tbp) = (cp.sbar, cp.tbar);
    match (sb >= tb, sbp >= tbp) {
        (true, true) => (sb - sbp)
            .max(sb + sbp - 2 * tbp)
            .max(sbp - sb)
            .max(sbp - 3 * sb + 2 * tb),
        (true, false) => (sb + sbp - 2 * l)
            .max(2 * l - 3 * sb - sbp + 2 * tb)
            .max(2 * l - sb - sbp)
            .max(-2 * l + sb + 3 * sbp - 2 * tbp),
        (false, true) => (2 * l - sb - sbp)
            .max(-2 * l - sb + sbp + 2 * tb)
            .max(-2 * l + sb + sbp)
            .max(2 * l - sb + sbp - 2 * tbp),
        (false, false) => (sb - sbp)
            .max(-sb - sbp + 2 * tb)
            .max(sbp - sb)
            .max(-sb + 3 * sbp - 2 * tbp),
    }
}

/// Affine column energy `H(C ⊗ C′) = −s + s′ − h(C, C′)`, with `C` the
/// deeper (left) column.  Agrees with the affine energy of the images under
/// `psi` (a tested invariant).
pub fn column_big_h(c: &Column, cp: &Column) -> i64 {
    -c.s + cp.s - column_h(c, cp)
}

/// Same energy computed on the crystal side, used as the independent
/// cross-check of [`column_big_h`].
pub fn column_big_h_via_psi(c: &Column, cp: &Column) -> Result<i64, ColumnError> {
    Ok(h_affine(&c.psi()?, &cp.psi()?))
}

/// Weight of a single column relative to the ground state:
/// `wt(psi(C)) − wt(ground) = −s·α0 − (t/2)·α1`.
pub fn column_wt(col: &Column) -> Weight {
    Weight::ZERO - col.s * ALPHA_0 - (col.t() / 2) * ALPHA_1
}

/// Deterministic ASCII picture of a column: a header with the coordinates,
/// then the blocks above the ground-state column from top to bottom
/// (`[ 0 ]` is a 0-block, `[1|1]` a pair of half-height 1-blocks).
pub fn render_column(col: &Column) -> String {
    let mut out = format!("{} over {} (t = {})\n", col, col.ctx, col.t());
    for _ in 0..col.s {
        out.push_str("  [ 0 ]\n");
    }
    let pairs = col.t() / 2;
    for _ in 0..pairs {
        out.push_str("  [1|1]\n");
    }
    if col.t() % 2 != 0 {
        out.push_str("  [1| ]\n");
    }
    out.push_str("  ==G==\n");
    out
}
