//! Weight lattice for the twisted affine type `A2(2)`.
//!
//! The affine weight lattice is written in the basis `{Λ0, Λ1, δ/2}`:
//! because the null root is `δ = 2α0 + α1`, the element `δ/2` (rather than
//! `δ` itself, or the scaling element basis `Λ0, Λ1, d`) generates the
//! imaginary direction actually reached by integral weights here.  The
//! canonical central element is `c = h0 + 2 h1`, so the level of a weight is
//! `⟨c, w⟩ = w.c0 + 2 w.c1`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// An integral affine weight `c0·Λ0 + c1·Λ1 + cd·(δ/2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    /// Coefficient of the fundamental weight `Λ0`.
    #[serde(rename = "L0")]
    pub c0: i64,
    /// Coefficient of the fundamental weight `Λ1`.
    #[serde(rename = "L1")]
    pub c1: i64,
    /// Coefficient of `δ/2`.
    #[serde(rename = "half_delta")]
    pub cd: i64,
}

/// A classical weight `c0·cl(Λ0) + c1·cl(Λ1)`, i.e. a weight modulo the
/// imaginary direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalWeight {
    #[serde(rename = "L0")]
    pub c0: i64,
    #[serde(rename = "L1")]
    pub c1: i64,
}

/// The simple root `α0 = 2Λ0 − Λ1 + δ/2`.
pub const ALPHA_0: Weight = Weight {
    c0: 2,
    c1: -1,
    cd: 1,
};
/// The simple root `α1 = −4Λ0 + 2Λ1`.
pub const ALPHA_1: Weight = Weight {
    c0: -4,
    c1: 2,
    cd: 0,
};
/// The null root `δ = 2α0 + α1`.
pub const DELTA: Weight = Weight {
    c0: 0,
    c1: 0,
    cd: 2,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("dominant(level {level}, a = {a}): need 0 <= a and 2a <= level")]
    NotDominant { level: i64, a: i64 },
}

impl Weight {
    pub const ZERO: Weight = Weight {
        c0: 0,
        c1: 0,
        cd: 0,
    };

    pub fn new(c0: i64, c1: i64, cd: i64) -> Self {
        Weight { c0, c1, cd }
    }

    /// `⟨h_i, w⟩` for `i ∈ {0, 1}`.  The pairings `⟨h_i, δ/2⟩` vanish, so the
    /// result only sees the `Λ` coordinates.
    pub fn pair(&self, i: usize) -> i64 {
        match i {
            0 => self.c0,
            1 => self.c1,
            _ => panic!("index {i} out of range for A2(2) (expected 0 or 1)"),
        }
    }

    /// Level `⟨c, w⟩` with `c = h0 + 2h1`.
    pub fn level(&self) -> i64 {
        self.c0 + 2 * self.c1
    }

    /// Forget the imaginary coordinate.
    pub fn classical(&self) -> ClassicalWeight {
        ClassicalWeight {
            c0: self.c0,
            c1: self.c1,
        }
    }
}

impl ClassicalWeight {
    pub const ZERO: ClassicalWeight = ClassicalWeight { c0: 0, c1: 0 };

    pub fn new(c0: i64, c1: i64) -> Self {
        ClassicalWeight { c0, c1 }
    }

    pub fn pair(&self, i: usize) -> i64 {
        match i {
            0 => self.c0,
            1 => self.c1,
            _ => panic!("index {i} out of range for A2(2) (expected 0 or 1)"),
        }
    }

    pub fn level(&self) -> i64 {
        self.c0 + 2 * self.c1
    }

    /// Lift to an affine weight with vanishing `δ/2` coordinate.
    pub fn lift(&self) -> Weight {
        Weight {
            c0: self.c0,
            c1: self.c1,
            cd: 0,
        }
    }
}

/// The dominant weight `(l − 2a)Λ0 + aΛ1` of level `l`.
///
/// Every dominant classical weight of level `l` has this form for a unique
/// `a` with `0 <= a <= l/2`.
pub fn dominant(level: i64, a: i64) -> Result<Weight, WeightError> {
    if a < 0 || 2 * a > level {
        return Err(WeightError::NotDominant { level, a });
    }
    Ok(Weight::new(level - 2 * a, a, 0))
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.c0 + rhs.c0, self.c1 + rhs.c1, self.cd + rhs.cd)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.c0 - rhs.c0, self.c1 - rhs.c1, self.cd - rhs.cd)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c0, -self.c1, -self.cd)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight::new(self * rhs.c0, self * rhs.c1, self * rhs.cd)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L0+{}L1+{}(d/2)", self.c0, self.c1, self.cd)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L0+{}L1", self.c0, self.c1)
    }
}

impl fmt::Debug for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
