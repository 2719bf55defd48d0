//! Homology classes on the one-point blow-up of the projective plane.
//!
//! A class is an integer pair `(d, m)` standing for `dL - mE`, where `L` is
//! the pullback of a line and `E` is the exceptional divisor. The
//! intersection pairing is `(d1, m1) . (d2, m2) = d1*d2 - m1*m2`.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::Error;

/// The class `dL - mE` on the blow-up of the plane at one point.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    /// Coefficient of the line class `L`.
    pub d: i64,
    /// Coefficient of the exceptional class `E` (sign convention `dL - mE`).
    pub m: i64,
}

/// The line class `l = (1, 0)`.
pub const LINE: CurveClass = CurveClass { d: 1, m: 0 };

/// The exceptional class `e = (0, -1)`, i.e. `E` itself.
pub const EXCEPTIONAL: CurveClass = CurveClass { d: 0, m: -1 };

impl CurveClass {
    pub fn new(d: i64, m: i64) -> Self {
        CurveClass { d, m }
    }

    /// True for the zero class, which no moduli problem accepts.
    pub fn is_zero(self) -> bool {
        self.d == 0 && self.m == 0
    }

    /// Intersection pairing `d1*d2 - m1*m2`.
    pub fn pairing(self, other: CurveClass) -> i64 {
        self.d * other.d - self.m * other.m
    }

    /// Pairing with the line class; equals the `d` component.
    pub fn line_degree(self) -> i64 {
        self.pairing(LINE)
    }

    /// All decompositions `self = a1 + a2` with both parts nonzero that can
    /// contribute to the recursion.
    ///
    /// The window is `0 <= d1 <= d` and `-1 <= m1 <= m + 1`; every pair
    /// outside it has a provably vanishing summand, so the infinite sum over
    /// integer pairs collapses to this finite list. Pairs are emitted in a
    /// fixed order with no duplicates.
    pub fn splits(self) -> Result<Vec<(CurveClass, CurveClass)>, Error> {
        self.splits_widened(0)
    }

    /// [`splits`](Self::splits) with the window enlarged by `margin` on every
    /// side. The extra pairs all contribute zero; exposing the margin lets
    /// callers check that claim directly.
    pub fn splits_widened(self, margin: i64) -> Result<Vec<(CurveClass, CurveClass)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        let mut out = Vec::new();
        for d1 in -margin..=self.d + margin {
            for m1 in -1 - margin..=self.m + 1 + margin {
                let a1 = CurveClass::new(d1, m1);
                let a2 = self - a1;
                if a1.is_zero() || a2.is_zero() {
                    continue;
                }
                out.push((a1, a2));
            }
        }
        Ok(out)
    }
}

impl Add for CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(self.d + rhs.d, self.m + rhs.m)
    }
}

impl Sub for CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(self.d - rhs.d, self.m - rhs.m)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.m)
    }
}
