//! Exact half-integer arithmetic for angular momentum labels.
//!
//! Total spin `j` and magnetic numbers `m` are stored as doubled integers so
//! index arithmetic (`j - m`, `j + m`, ranges of `m`) stays exact; no
//! floating-point labels ever enter an index computation.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A half-integer stored as `2j` (or `2m`) exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInteger {
    twice: i32,
}

impl HalfInteger {
    /// Builds from the doubled value, e.g. `from_twice(3)` is `3/2`.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInteger { twice }
    }

    /// Builds from an integer value.
    pub const fn from_int(value: i32) -> Self {
        HalfInteger { twice: 2 * value }
    }

    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };

    /// The doubled value `2j`.
    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// Representation dimension `2j + 1`. Panics if negative.
    pub fn dimension(self) -> usize {
        assert!(self.twice >= 0, "dimension of negative half-integer");
        (self.twice + 1) as usize
    }

    /// Whether `m` is a valid magnetic number for this `j`: `|m| <= j` and
    /// `j - m` integer.
    pub fn admits_magnetic(self, m: HalfInteger) -> bool {
        m.twice.abs() <= self.twice && (self.twice - m.twice) % 2 == 0
    }

    /// Iterates `m = -j, -j+1, ..., j`.
    pub fn magnetic_range(self) -> impl DoubleEndedIterator<Item = HalfInteger> + Clone {
        let two_j = self.twice;
        (0..=two_j.max(-1)).map(move |k| HalfInteger::from_twice(-two_j + 2 * k))
    }

    /// Zero-based index of `m` within `-j..=j`.
    pub fn magnetic_index(self, m: HalfInteger) -> usize {
        debug_assert!(self.admits_magnetic(m));
        ((m.twice + self.twice) / 2) as usize
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        HalfInteger::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: Self) -> Self {
        HalfInteger::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> Self {
        HalfInteger::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
