//! Young walls: finite lists of columns with an implicit ground-state tail.
//!
//! `columns[0]` is the rightmost (shallowest) column; the wall continues
//! with ground-state columns to the left of the last stored one.  A list is
//! a *wall* when every adjacent energy `H(C_{k+1} ⊗ C_k)` — including the
//! boundary pair with the first implicit ground column — is non-negative,
//! and a *reduced wall* when all of them vanish.
//!
//! Kashiwara operators are provided along two independent routes:
//!
//! * the *tensor* route maps the columns through `psi` and lets the
//!   semi-infinite tensor machinery pick the factor to act on;
//! * the *oracle* route builds per-column signatures by literally trying to
//!   add or remove blocks with [`column_f`]/[`column_e`] and re-validating
//!   the whole wall after each attempt, then cancels the signatures.
//!
//! The two routes agreeing (and the per-column counts matching the string
//! statistics of the graded elements) is the combinatorial heart of the
//! model and is verified at depth in the test suite.

use crate::adjoint::{Adjoint, XY};
use crate::column::{column_big_h, column_e, column_f, Column, ColumnError, WallContext};
use crate::crystal::{
    tail_e, tail_eps, tail_f, tail_phi, tail_wt, Affinized, Crystal, Graded, Signature, TailString,
};
use crate::weight::{Weight, ALPHA_0, ALPHA_1};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Margin of materialised tail copies for the tensor route.
pub const TAIL_MARGIN: usize = 2;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Wall {
    pub ctx: WallContext,
    /// `columns[0]` is the rightmost column; trailing ground-state columns
    /// are trimmed away.
    pub columns: Vec<Column>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WallError {
    #[error(transparent)]
    Column(#[from] ColumnError),
    #[error("not a wall: {0}")]
    NotAWall(String),
    #[error("operator output violates the wall condition: {0}")]
    BrokeWallCondition(String),
}

/// Classification of a column list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum WallClass {
    NotAWall { reason: String },
    Wall,
    ReducedWall,
}

impl Wall {
    /// Build a wall-shaped object (columns are validated; trailing ground
    /// columns trimmed; the wall condition itself is *not* enforced here —
    /// use [`Wall::validate`]).
    pub fn new(ctx: WallContext, columns: Vec<Column>) -> Result<Wall, WallError> {
        for col in &columns {
            if col.ctx != ctx {
                return Err(WallError::NotAWall(format!(
                    "column {col} carries context {} instead of {ctx}",
                    col.ctx
                )));
            }
            col.validate()?;
        }
        let mut w = Wall { ctx, columns };
        w.trim();
        Ok(w)
    }

    /// The ground-state wall `Y_λ` (no stored columns).
    pub fn ground(ctx: WallContext) -> Wall {
        Wall {
            ctx,
            columns: Vec::new(),
        }
    }

    fn trim(&mut self) {
        let ground = self.ctx.ground_column();
        while self.columns.last() == Some(&ground) {
            self.columns.pop();
        }
    }

    /// Column at depth `k`, with the implicit tail for `k ≥ len`.
    pub fn column(&self, k: usize) -> Column {
        self.columns
            .get(k)
            .copied()
            .unwrap_or_else(|| self.ctx.ground_column())
    }

    /// Adjacent energies `H(C_{k+1} ⊗ C_k)` for `k = 0 … N−1`, the last one
    /// being the boundary pair with the implicit ground column.
    pub fn adjacent_energies(&self) -> Vec<i64> {
        (0..self.columns.len())
            .map(|k| column_big_h(&self.column(k + 1), &self.column(k)))
            .collect()
    }

    /// Classify this column list per the wall condition.
    pub fn validate(&self) -> WallClass {
        for col in &self.columns {
            if let Err(e) = col.validate() {
                return WallClass::NotAWall {
                    reason: e.to_string(),
                };
            }
        }
        let energies = self.adjacent_energies();
        if let Some((k, h)) = energies.iter().enumerate().find(|(_, h)| **h < 0) {
            return WallClass::NotAWall {
                reason: format!("H(C_{} (x) C_{}) = {h} < 0", k + 1, k),
            };
        }
        if energies.iter().all(|h| *h == 0) {
            WallClass::ReducedWall
        } else {
            WallClass::Wall
        }
    }

    pub fn is_wall(&self) -> bool {
        !matches!(self.validate(), WallClass::NotAWall { .. })
    }

    pub fn is_reduced(&self) -> bool {
        self.validate() == WallClass::ReducedWall
    }

    /// The semi-infinite string of graded elements under `psi`.
    pub fn to_tail_string(&self) -> Result<TailString<Graded<XY>>, ColumnError> {
        let prefix = self
            .columns
            .iter()
            .map(|c| c.psi())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TailString::new(self.ctx.ground_elem(), prefix))
    }

    /// Affine weight `λ − k0·α0 − (k1/2)·α1`, where `k0` (resp. `k1`) is
    /// the total number of 0-blocks (resp. 1-blocks) above the ground-state
    /// wall.
    pub fn wt(&self) -> Weight {
        let k0: i64 = self.columns.iter().map(|c| c.s).sum();
        let k1: i64 = self.columns.iter().map(|c| c.t()).sum();
        self.ctx.lambda() - k0 * ALPHA_0 - (k1 / 2) * ALPHA_1
    }

    /// Total number of blocks above the ground-state wall (1-blocks counted
    /// in pairs), i.e. the BFS depth of the wall in the crystal graph.
    pub fn block_count(&self) -> i64 {
        self.columns.iter().map(|c| c.s + c.t() / 2).sum()
    }

    pub fn encode(&self) -> String {
        let parts: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.encode(), self.ctx)
    }
}

// ---------------------------------------------------------------------------
// Signature oracle
// ---------------------------------------------------------------------------

/// Per-column `i`-signature of a wall, deepest column first.  Entry `k`
/// describes the column at depth `n_tail + len − 1 − k` … i.e. the vector
/// runs from the single materialised tail copy down to `C_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallSignature {
    /// `(depth index, minus count, plus count)`, deepest first.
    pub per_column: Vec<(usize, usize, usize)>,
}

impl WallSignature {
    /// `"−"^minus "+"^plus` per column, concatenated deepest first.
    pub fn strings(&self) -> Vec<String> {
        self.per_column
            .iter()
            .map(|&(_, m, p)| format!("{}{}", "-".repeat(m), "+".repeat(p)))
            .collect()
    }

    fn cancelled(&self) -> Signature {
        let counts: Vec<(i64, i64)> = self
            .per_column
            .iter()
            .map(|&(_, m, p)| (m as i64, p as i64))
            .collect();
        Signature::from_counts(&counts)
    }
}

/// Replace column `k` of the wall (extending with ground columns if `k`
/// points into the tail).
fn with_column(w: &Wall, k: usize, col: Column) -> Wall {
    let mut columns = w.columns.clone();
    while columns.len() <= k {
        columns.push(w.ctx.ground_column());
    }
    columns[k] = col;
    let mut out = Wall {
        ctx: w.ctx,
        columns,
    };
    out.trim();
    out
}

/// Safety bound on consecutive moves per column; a column constrained by a
/// neighbour loses at least one unit of adjacent energy every few moves, so
/// real counts stay far below this.
const MOVE_CAP: usize = 4096;

/// Plus-count cap for the rightmost column of the limit (`∞`) model, whose
/// admissible slots are not bounded by any right-hand neighbour (the ground
/// wall accepts `0`-blocks forever).  Only the *existence* of such a slot
/// matters for the operators: these pluses sit rightmost in the signature
/// and can neither cancel a minus nor displace the leftmost plus.
const INFINITE_PLUS_CAP: usize = 8;

/// Count how many times `op` can be applied to column `k` while the whole
/// wall stays a wall, up to `cap`.
fn count_moves(w: &Wall, k: usize, cap: usize, op: impl Fn(&Column) -> Option<Column>) -> usize {
    let mut col = w.column(k);
    let mut n = 0;
    while n < cap {
        match op(&col) {
            Some(next) if with_column(w, k, next).is_wall() => {
                col = next;
                n += 1;
            }
            _ => break,
        }
    }
    n
}

/// The block-level `i`-signature of a wall: for each column from one tail
/// copy down to `C_0`, the number of removable `i`-blocks (minus signs) and
/// admissible `i`-slots (plus signs), found by literally editing the wall
/// with [`column_e`]/[`column_f`] and re-running the wall validation.
///
/// One tail copy suffices: a ground column whose right-hand neighbour is
/// also ground admits no move at all, so deeper copies contribute empty
/// signatures (asserted in the tests).  In the limit model the rightmost
/// plus count is truncated at [`INFINITE_PLUS_CAP`].
pub fn signature_oracle(w: &Wall, i: usize) -> WallSignature {
    let n = w.columns.len();
    let mut per_column = Vec::with_capacity(n + 1);
    for k in (0..=n).rev() {
        let plus_cap = if k == 0 && w.ctx.is_infinite() {
            INFINITE_PLUS_CAP
        } else {
            MOVE_CAP
        };
        let minus = count_moves(w, k, MOVE_CAP, |c| column_e(i, c));
        let plus = count_moves(w, k, plus_cap, |c| column_f(i, c));
        per_column.push((k, minus, plus));
    }
    WallSignature { per_column }
}

/// `eps_i` of a wall via the signature oracle.
pub fn wall_eps(w: &Wall, i: usize) -> i64 {
    signature_oracle(w, i).cancelled().minus_positions.len() as i64
}

/// `phi_i` of a wall: the cancelled plus count of the signature oracle in
/// the highest-weight model.  In the limit model the plus count is not
/// finite, so `phi_i = eps_i + ⟨h_i, wt⟩` (the convention under which the
/// string-statistic axiom keeps holding) is used instead.
pub fn wall_phi(w: &Wall, i: usize) -> i64 {
    if w.ctx.is_infinite() {
        wall_eps(w, i) + w.wt().pair(i)
    } else {
        signature_oracle(w, i).cancelled().plus_positions.len() as i64
    }
}

/// `f_i` on a wall, positioning the added block with the signature oracle.
/// `Ok(None)` when the operator annihilates the wall; an error if the
/// edited column list fails the wall condition (which the theory rules out
/// for reduced walls, but which is surfaced rather than hidden).
pub fn wall_f_oracle(w: &Wall, i: usize) -> Result<Option<Wall>, WallError> {
    let sig = signature_oracle(w, i);
    let k = match sig.cancelled().f_position() {
        Some(slot) => sig.per_column[slot].0,
        // In the limit model `f_i` is total: with no plus sign anywhere the
        // action falls through to the rightmost column, mirroring the
        // rightmost-factor fallback of the tensor route.
        None if w.ctx.is_infinite() => 0,
        None => return Ok(None),
    };
    let col = w.column(k);
    let next = column_f(i, &col)
        .ok_or_else(|| WallError::BrokeWallCondition(format!("no addable {i}-block on {col}")))?;
    finish(with_column(w, k, next))
}

/// `e_i` on a wall via the signature oracle; see [`wall_f_oracle`].
pub fn wall_e_oracle(w: &Wall, i: usize) -> Result<Option<Wall>, WallError> {
    let sig = signature_oracle(w, i);
    let Some(slot) = sig.cancelled().e_position() else {
        return Ok(None);
    };
    let k = sig.per_column[slot].0;
    let col = w.column(k);
    let next = column_e(i, &col)
        .ok_or_else(|| WallError::BrokeWallCondition(format!("no removable {i}-block on {col}")))?;
    finish(with_column(w, k, next))
}

fn finish(w: Wall) -> Result<Option<Wall>, WallError> {
    match w.validate() {
        WallClass::NotAWall { reason } => Err(WallError::BrokeWallCondition(reason)),
        _ => Ok(Some(w)),
    }
}

// ---------------------------------------------------------------------------
// Tensor route
// ---------------------------------------------------------------------------

fn aff(ctx: WallContext) -> Affinized<Adjoint> {
    Affinized {
        base: ctx.adjoint(),
    }
}

fn from_tail_string(ctx: WallContext, s: &TailString<Graded<XY>>) -> Result<Wall, WallError> {
    let columns = s
        .prefix
        .iter()
        .map(|g| crate::column::phi_inv(ctx, g))
        .collect::<Result<Vec<_>, _>>()?;
    Wall::new(ctx, columns)
}

/// `f_i` on a wall through the `psi` conjugation and the semi-infinite
/// tensor machinery.
pub fn wall_f_tensor(w: &Wall, i: usize) -> Result<Option<Wall>, WallError> {
    let s = w.to_tail_string()?;
    match tail_f(&aff(w.ctx), i, &s, TAIL_MARGIN, w.ctx.is_infinite()) {
        None => Ok(None),
        Some(next) => from_tail_string(w.ctx, &next).and_then(finish),
    }
}

/// `e_i` on a wall through the `psi` conjugation.
pub fn wall_e_tensor(w: &Wall, i: usize) -> Result<Option<Wall>, WallError> {
    let s = w.to_tail_string()?;
    match tail_e(&aff(w.ctx), i, &s, TAIL_MARGIN) {
        None => Ok(None),
        Some(next) => from_tail_string(w.ctx, &next).and_then(finish),
    }
}

/// `eps_i` computed on the tensor side (cross-check for [`wall_eps`]).
pub fn wall_eps_tensor(w: &Wall, i: usize) -> Result<i64, WallError> {
    Ok(tail_eps(&aff(w.ctx), i, &w.to_tail_string()?))
}

/// `phi_i` computed on the tensor side (cross-check for [`wall_phi`]).
pub fn wall_phi_tensor(w: &Wall, i: usize) -> Result<i64, WallError> {
    Ok(tail_phi(&aff(w.ctx), i, &w.to_tail_string()?))
}

/// Weight computed on the tensor side (cross-check for [`Wall::wt`]).
pub fn wall_wt_tensor(w: &Wall, i_ctx: WallContext) -> Result<Weight, WallError> {
    let s = w.to_tail_string()?;
    Ok(tail_wt(&aff(i_ctx), i_ctx.lambda(), &s))
}

// ---------------------------------------------------------------------------
// Crystal view
// ---------------------------------------------------------------------------

/// Which operator route a [`WallCrystal`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallMode {
    Oracle,
    Tensor,
}

/// The set of reduced walls of a context as a crystal.  Operators panic on
/// a broken wall condition, which cannot occur on the reduced component
/// (the closure property is itself checked in the tests).
pub struct WallCrystal {
    pub ctx: WallContext,
    pub mode: WallMode,
}

impl Crystal for WallCrystal {
    type Elem = Wall;

    fn wt(&self, b: &Wall) -> Weight {
        b.wt()
    }

    fn e(&self, i: usize, b: &Wall) -> Option<Wall> {
        let r = match self.mode {
            WallMode::Oracle => wall_e_oracle(b, i),
            WallMode::Tensor => wall_e_tensor(b, i),
        };
        r.expect("wall condition broke under e_i on a reduced wall")
    }

    fn f(&self, i: usize, b: &Wall) -> Option<Wall> {
        let r = match self.mode {
            WallMode::Oracle => wall_f_oracle(b, i),
            WallMode::Tensor => wall_f_tensor(b, i),
        };
        r.expect("wall condition broke under f_i on a reduced wall")
    }

    fn eps(&self, i: usize, b: &Wall) -> i64 {
        match self.mode {
            WallMode::Oracle => wall_eps(b, i),
            WallMode::Tensor => wall_eps_tensor(b, i).expect("valid wall"),
        }
    }

    fn phi(&self, i: usize, b: &Wall) -> i64 {
        match self.mode {
            WallMode::Oracle => wall_phi(b, i),
            WallMode::Tensor => wall_phi_tensor(b, i).expect("valid wall"),
        }
    }

    fn encode(&self, b: &Wall) -> String {
        b.encode()
    }
}

// ---------------------------------------------------------------------------
// Serialisation and rendering
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct WallJson {
    lambda: LambdaJson,
    columns: Vec<ColumnJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LambdaJson {
    Infinity(String),
    Finite { l: i64, a: i64 },
}

#[derive(Serialize, Deserialize)]
struct ColumnJson {
    s: i64,
    sbar: i64,
    tbar: i64,
}

impl Serialize for Wall {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let lambda = match self.ctx {
            WallContext::Finite { level, ground } => LambdaJson::Finite {
                l: level,
                a: ground,
            },
            WallContext::Infinite => LambdaJson::Infinity("infinity".into()),
        };
        WallJson {
            lambda,
            columns: self
                .columns
                .iter()
                .map(|c| ColumnJson {
                    s: c.s,
                    sbar: c.sbar,
                    tbar: c.tbar,
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Wall {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Wall, D::Error> {
        let raw = WallJson::deserialize(de)?;
        let ctx = match raw.lambda {
            LambdaJson::Finite { l, a } => WallContext::finite(l, a).map_err(D::Error::custom)?,
            LambdaJson::Infinity(tag) => {
                if tag != "infinity" {
                    return Err(D::Error::custom(format!("unknown lambda tag '{tag}'")));
                }
                WallContext::Infinite
            }
        };
        let columns = raw
            .columns
            .into_iter()
            .map(|c| Column::new(ctx, c.s, c.sbar, c.tbar))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Wall::new(ctx, columns).map_err(D::Error::custom)
    }
}

/// ASCII rendering of a whole wall: columns side by side, deepest first,
/// blocks above the ground line from top to bottom.
pub fn render_wall(w: &Wall) -> String {
    let mut out = format!("{w}\n");
    let n = w.columns.len();
    let mut lines: Vec<Vec<String>> = Vec::new();
    let mut stacks: Vec<Vec<String>> = Vec::new();
    for k in (0..n).rev() {
        let col = w.column(k);
        let mut stack = Vec::new();
        for _ in 0..(col.t() / 2) {
            stack.push("[1|1]".to_string());
        }
        for _ in 0..col.s {
            stack.push("[ 0 ]".to_string());
        }
        stacks.push(stack);
    }
    let height = stacks.iter().map(|s| s.len()).max().unwrap_or(0);
    for row in (0..height).rev() {
        let line: Vec<String> = stacks
            .iter()
            .map(|s| s.get(row).cloned().unwrap_or_else(|| "     ".to_string()))
            .collect();
        lines.push(line);
    }
    for line in lines {
        out.push_str(&format!("  {}\n", line.join(" ")));
    }
    out.push_str(&format!(
        "  {}\n",
        vec!["=====".to_string(); n.max(1)].join(" ")
    ));
    for k in (0..n).rev() {
        out.push_str(&format!("  C{k}: {}\n", w.column(k)));
    }
    out
}
