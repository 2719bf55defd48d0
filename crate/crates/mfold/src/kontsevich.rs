//! The classical count of rational plane curves, used as a cross-check.
//!
//! `n_d` is the number of rational curves of degree `d` in the plane through
//! `3d - 1` generic points. It satisfies `n_1 = 1` and, for `d >= 2`,
//!
//! ```text
//! n_d = sum over d1 + d2 = d, d1, d2 >= 1 of
//!       n_d1 * n_d2 * ( d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1) )
//! ```
//!
//! This module is deliberately independent of the family recursion: it keeps
//! its own memo and computes binomial coefficients its own way (a Pascal
//! row), so agreement between the two is a meaningful check.

use crate::error::Error;
use crate::scalar::ExactInt;

/// Memoizing evaluator for the plane counts `n_d`.
#[derive(Debug, Clone, Default)]
pub struct PlaneCounter<T> {
    // values[d - 1] = n_d
    values: Vec<T>,
}

impl<T: ExactInt> PlaneCounter<T> {
    pub fn new() -> Self {
        PlaneCounter { values: Vec::new() }
    }

    /// The number of rational degree-`d` plane curves through `3d - 1`
    /// generic points.
    pub fn n_plane(&mut self, d: i64) -> Result<T, Error> {
        if d < 1 {
            return Err(Error::NonPositiveDegree(d));
        }
        let d = d as usize;
        while self.values.len() < d {
            let next = self.compute(self.values.len() + 1);
            self.values.push(next);
        }
        Ok(self.values[d - 1].clone())
    }

    fn compute(&self, d: usize) -> T {
        if d == 1 {
            return T::one();
        }
        let row = pascal_row::<T>(3 * d - 4);
        let mut total = T::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            let (n1, n2) = (&self.values[d1 - 1], &self.values[d2 - 1]);
            let (a, b) = (d1 as i64, d2 as i64);
            let positive = T::from(a * a * b * b) * &row[3 * d1 - 2];
            let negative = T::from(a * a * a * b) * &row[3 * d1 - 1];
            total = total + n1.clone() * n2 * (positive - negative);
        }
        total
    }
}

/// Row `n` of Pascal's triangle, built by additions only.
fn pascal_row<T: ExactInt>(n: usize) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(T::one());
        for k in 1..row.len() {
            next.push(row[k - 1].clone() + &row[k]);
        }
        next.push(T::one());
        row = next;
    }
    row
}
