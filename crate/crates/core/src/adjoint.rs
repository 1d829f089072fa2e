//! The level-`l` adjoint crystal of type `A2(2)` and its `l → ∞` limit.
//!
//! The level-`l` crystal lives on `{(x, y) ∈ Z_{≥0}² | x + y ≤ l}`; the
//! limit crystal lives on all of `Z²` with the same operator shapes and the
//! level-dependent constant dropped from the index-0 statistics.  Both are
//! handled by one code path with an optional level.

use crate::crystal::{
    component, Crystal, CrystalGraph, Direction, GraphError, TensorPower, DEFAULT_NODE_CAP,
};
use crate::weight::{dominant, Weight};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// A crystal element `(x, y)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XY {
    pub x: i64,
    pub y: i64,
}

impl XY {
    pub fn new(x: i64, y: i64) -> Self {
        XY { x, y }
    }
}

impl fmt::Display for XY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for XY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The adjoint crystal: `level = Some(l)` for the finite crystal,
/// `level = None` for the limit crystal on `Z²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Adjoint {
    pub level: Option<i64>,
}

impl Adjoint {
    pub fn finite(level: i64) -> Self {
        assert!(level >= 1, "the finite adjoint crystal needs level >= 1");
        Adjoint { level: Some(level) }
    }

    pub fn limit() -> Self {
        Adjoint { level: None }
    }

    fn l(&self) -> i64 {
        self.level.unwrap_or(0)
    }

    pub fn contains(&self, b: &XY) -> bool {
        match self.level {
            Some(l) => b.x >= 0 && b.y >= 0 && b.x + b.y <= l,
            None => true,
        }
    }

    /// All elements of the finite crystal, lexicographically ordered.
    pub fn elements(&self) -> Vec<XY> {
        let l = self.level.expect("the limit crystal is infinite");
        let mut out = Vec::new();
        for x in 0..=l {
            for y in 0..=(l - x) {
                out.push(XY::new(x, y));
            }
        }
        out
    }

    fn guard(&self, b: XY) -> Option<XY> {
        self.contains(&b).then_some(b)
    }
}

impl Crystal for Adjoint {
    type Elem = XY;

    fn wt(&self, b: &XY) -> Weight {
        Weight::new(2 * (b.y - b.x), b.x - b.y, 0)
    }

    fn e(&self, i: usize, b: &XY) -> Option<XY> {
        debug_assert!(self.contains(b));
        let finite = self.level.is_some();
        let (x, y) = (b.x, b.y);
        let cand = match i {
            1 => {
                // Null exactly when `eps_1 = y` hits zero — at finite level
                // only; the limit crystal's operators are total on `Z²`.
                if finite && y == 0 {
                    return None;
                }
                XY::new(x + 1, y - 1)
            }
            0 => {
                if finite && self.eps(0, b) == 0 {
                    return None;
                }
                if x > y {
                    XY::new(x - 1, y)
                } else {
                    XY::new(x, y + 1)
                }
            }
            _ => panic!("index {i} out of range"),
        };
        let out = self.guard(cand);
        debug_assert!(out.is_some(), "domain guard and string statistics disagree");
        out
    }

    fn f(&self, i: usize, b: &XY) -> Option<XY> {
        debug_assert!(self.contains(b));
        let finite = self.level.is_some();
        let (x, y) = (b.x, b.y);
        let cand = match i {
            1 => {
                if finite && x == 0 {
                    return None;
                }
                XY::new(x - 1, y + 1)
            }
            0 => {
                if finite && self.phi(0, b) == 0 {
                    return None;
                }
                if x >= y {
                    XY::new(x + 1, y)
                } else {
                    XY::new(x, y - 1)
                }
            }
            _ => panic!("index {i} out of range"),
        };
        let out = self.guard(cand);
        debug_assert!(out.is_some(), "domain guard and string statistics disagree");
        out
    }

    fn eps(&self, i: usize, b: &XY) -> i64 {
        match i {
            1 => b.y,
            0 => self.l() - 2 * b.y + (b.x - b.y).abs(),
            _ => panic!("index {i} out of range"),
        }
    }

    fn phi(&self, i: usize, b: &XY) -> i64 {
        match i {
            1 => b.x,
            0 => self.l() - 2 * b.x + (b.x - b.y).abs(),
            _ => panic!("index {i} out of range"),
        }
    }

    fn encode(&self, b: &XY) -> String {
        b.to_string()
    }

    /// Classical simple roots: the δ/2 coordinate is invisible to a
    /// classical crystal, whose weights all carry `cd = 0`.
    fn alpha(&self, i: usize) -> Weight {
        match i {
            0 => Weight::new(2, -1, 0),
            1 => Weight::new(-4, 2, 0),
            _ => panic!("index {i} out of range"),
        }
    }
}

/// The minimal vector `(a, a)` attached to the dominant weight
/// `(l − 2a)Λ0 + aΛ1`.
pub fn minimal_vector(level: i64, a: i64) -> Result<XY, crate::weight::WeightError> {
    dominant(level, a)?;
    Ok(XY::new(a, a))
}

/// The coherent-family map `B(level, a-ground) → B(∞-limit)`,
/// `(x, y) ↦ (x − a, y − a)`; it sends the minimal vector `(a, a)` to the
/// origin and strictly intertwines the operators on a window that grows
/// with the level.
pub fn coherent_map(a: i64, b: &XY) -> XY {
    XY::new(b.x - a, b.y - a)
}

/// Graph of the full finite adjoint crystal (it is connected, so this is
/// the component of any element; the root is `(0, 0)`).
pub fn adjoint_graph(level: i64) -> Result<CrystalGraph, GraphError> {
    let c = Adjoint::finite(level);
    component(&c, &XY::new(0, 0), None, Direction::Both, DEFAULT_NODE_CAP)
}

/// Outcome of one perfectness condition.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Passed,
    Failed,
    OutOfScope,
}

/// Report of [`verify_perfect`].
#[derive(Clone, Debug, Serialize)]
pub struct PerfectReport {
    pub level: i64,
    pub conditions: Vec<ConditionReport>,
}

impl PerfectReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.status != Status::Failed)
    }
}

/// Check the perfectness conditions for the level-`l` adjoint crystal.
///
/// * (i) — existence of the associated finite-dimensional module — is a
///   statement about the quantum group, not about the combinatorial data,
///   and is reported as out of scope.
/// * (ii) `B ⊗ B` is connected.
/// * (iii) there is a unique classical weight `λ` with a single element
///   such that every weight of `B` lies in `λ − Z_{≥0}·(α1/2)`.  The
///   half-root generator is forced: in the classical lattice of `A2(2)` the
///   image of `α1` is divisible by two, and consecutive crystal weights
///   differ by `α1/2` (with `α1` itself even the level-1 crystal would
///   fail).
/// * (iv) `⟨c, eps(b)⟩ ≥ l` for every `b`, reading the condition through
///   the central element (`⟨c, eps(b)⟩ = eps_0(b) + 2 eps_1(b)`).
/// * (v) for every dominant `λ` of level `l` there are unique elements
///   `b^λ`, `b_λ` with `eps(b^λ) = λ = phi(b_λ)`; for this crystal both are
///   the minimal vector `(a, a)`.
pub fn verify_perfect(level: i64) -> PerfectReport {
    let c = Adjoint::finite(level);
    let elems = c.elements();
    let mut conditions = Vec::new();

    conditions.push(ConditionReport {
        name: "(i) module existence".into(),
        status: Status::OutOfScope,
        detail: "existence of the underlying module is out of scope (module existence)".into(),
    });

    // (ii) connectedness of B (x) B under both colours, both directions.
    let square = TensorPower { base: &c };
    let all_pairs: Vec<Vec<XY>> = elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| vec![*a, *b]))
        .collect();
    let start = all_pairs[0].clone();
    let reached = component(&square, &start, None, Direction::Both, DEFAULT_NODE_CAP)
        .map(|g| g.node_count())
        .unwrap_or(0);
    conditions.push(ConditionReport {
        name: "(ii) B (x) B connected".into(),
        status: if reached == all_pairs.len() {
            Status::Passed
        } else {
            Status::Failed
        },
        detail: format!("reached {reached} of {} pairs", all_pairs.len()),
    });

    // (iii) unique extremal weight with a singleton fibre covering wt(B).
    let half_alpha1 = Weight::new(-2, 1, 0); // cl(α1)/2 in the Λ basis
    let mut extremal = Vec::new();
    let weights: Vec<Weight> = elems.iter().map(|b| c.wt(b)).collect();
    let distinct: HashSet<Weight> = weights.iter().copied().collect();
    for lam in &distinct {
        let fibre = weights.iter().filter(|w| *w == lam).count();
        if fibre != 1 {
            continue;
        }
        let covers = weights.iter().all(|w| {
            let diff = *lam - *w;
            // diff must be a non-negative multiple of α1/2
            diff.cd == 0
                && diff.c1 * half_alpha1.c0 == diff.c0 * half_alpha1.c1
                && diff.c0 * half_alpha1.c0 + diff.c1 * half_alpha1.c1 >= 0
        });
        if covers {
            extremal.push(*lam);
        }
    }
    conditions.push(ConditionReport {
        name: "(iii) extremal weight (half-root reading)".into(),
        status: if extremal.len() == 1 {
            Status::Passed
        } else {
            Status::Failed
        },
        detail: format!(
            "candidates with singleton fibre covering wt(B) along alpha1/2: {:?}",
            extremal
        ),
    });

    // (iv) ⟨c, eps(b)⟩ >= l for all b, via the central element.
    let bad: Vec<String> = elems
        .iter()
        .filter(|b| c.eps(0, b) + 2 * c.eps(1, b) < level)
        .map(|b| b.to_string())
        .collect();
    conditions.push(ConditionReport {
        name: "(iv) <c, eps(b)> >= level (central-element reading)".into(),
        status: if bad.is_empty() {
            Status::Passed
        } else {
            Status::Failed
        },
        detail: if bad.is_empty() {
            format!("holds for all {} elements", elems.len())
        } else {
            format!("violated at {bad:?}")
        },
    });

    // (v) unique minimal vectors per dominant weight of this level.
    let mut ok = true;
    let mut detail = String::new();
    for a in 0..=(level / 2) {
        let lam = dominant(level, a).expect("a ranges over dominant parameters");
        let with_eps: Vec<&XY> = elems
            .iter()
            .filter(|b| c.eps(0, b) == lam.c0 && c.eps(1, b) == lam.c1)
            .collect();
        let with_phi: Vec<&XY> = elems
            .iter()
            .filter(|b| c.phi(0, b) == lam.c0 && c.phi(1, b) == lam.c1)
            .collect();
        let expected = XY::new(a, a);
        let good = with_eps.len() == 1
            && with_phi.len() == 1
            && *with_eps[0] == expected
            && *with_phi[0] == expected;
        if !good {
            ok = false;
        }
        detail.push_str(&format!(
            "a={a}: eps-fibre {:?}, phi-fibre {:?}; ",
            with_eps, with_phi
        ));
    }
    conditions.push(ConditionReport {
        name: "(v) unique minimal vectors".into(),
        status: if ok { Status::Passed } else { Status::Failed },
        detail,
    });

    PerfectReport { level, conditions }
}
