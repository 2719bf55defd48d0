//! Euler-class computation for curves with a prescribed multiple point.
//!
//! Work in the product of the linear system of degree-`d` plane curves (a
//! projective space of dimension `d(d+3)/2`, hyperplane class `y`) with the
//! plane itself (hyperplane class `a`). The locus of pairs (curve, point)
//! where the curve has an `m`-fold point at the point is cut out by the
//! vanishing of all derivative jets up to order `m - 1`; each jet is a
//! section of a vector bundle `V_k` of rank `k + 1`, so the class of the
//! locus is the product of their Euler classes.
//!
//! Everything lives in the truncated ring `Z[y, a] / (y^(dim+1), a^3)`,
//! with exact integer coefficients.
//!
//! For `m = d - 1` an `m`-fold point already forces the curve to be
//! rational, so these numbers independently confirm the recursion's output.
//! For smaller `m` the locus contains non-rational curves and the two counts
//! must not be compared.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::scalar::ExactInt;

/// Dimension `d(d+3)/2` of the linear system of degree-`d` plane curves.
pub fn linear_system_dim(d: i64) -> usize {
    debug_assert!(d >= 1);
    (d * (d + 3) / 2) as usize
}

/// Dimension of the family of degree-`d` curves with an `m`-fold point,
/// `d(d+3)/2 - (m^2 + m - 4)/2`; it is the total number of constraints the
/// family can absorb. For `m = d - 1` it equals `2d + 2`.
pub fn singular_family_dim(d: i64, m: i64) -> i64 {
    d * (d + 3) / 2 - (m * m + m - 4) / 2
}

/// An element of `Z[y, a] / (y^(dim+1), a^3)`.
///
/// Coefficients are stored sparsely, keyed by `(y exponent, a exponent)`;
/// zero coefficients are never stored, and exponents beyond the truncation
/// never appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomClass<T> {
    dim: usize,
    coeffs: BTreeMap<(u32, u32), T>,
}

impl<T: ExactInt> CohomClass<T> {
    pub fn zero(dim: usize) -> Self {
        CohomClass {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, 0, 0, T::one())
    }

    /// The class `coeff * y^y_exp * a^a_exp`. A monomial beyond the
    /// truncation is the zero class.
    pub fn monomial(dim: usize, y_exp: u32, a_exp: u32, coeff: T) -> Self {
        let mut class = Self::zero(dim);
        if y_exp as usize <= dim && a_exp <= 2 && !coeff.is_zero() {
            class.coeffs.insert((y_exp, a_exp), coeff);
        }
        class
    }

    /// Truncation degree of the `y` generator (the dimension of the linear
    /// system).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `y^y_exp * a^a_exp`.
    pub fn coefficient(&self, y_exp: u32, a_exp: u32) -> T {
        self.coeffs
            .get(&(y_exp, a_exp))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.coeffs.iter().map(|(&(y, a), c)| (y, a, c))
    }

    /// If every term has the same total degree `y_exp + a_exp`, return it.
    /// The zero class is homogeneous of every degree and returns `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.coeffs.keys().map(|&(y, a)| y + a);
        let first = degrees.next()?;
        degrees.all(|deg| deg == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (&key, c) in &other.coeffs {
            let sum = out.coefficient(key.0, key.1) + c;
            if sum.is_zero() {
                out.coeffs.remove(&key);
            } else {
                out.coeffs.insert(key, sum);
            }
        }
        Ok(out)
    }

    /// Ring product with the relations `a^3 = 0` and `y^(dim+1) = 0`
    /// applied eagerly.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = Self::zero(self.dim);
        for (&(y1, a1), c1) in &self.coeffs {
            for (&(y2, a2), c2) in &other.coeffs {
                let (y, a) = (y1 + y2, a1 + a2);
                if y as usize > self.dim || a > 2 {
                    continue;
                }
                let sum = out.coefficient(y, a) + c1.clone() * c2;
                if sum.is_zero() {
                    out.coeffs.remove(&(y, a));
                } else {
                    out.coeffs.insert((y, a), sum);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero(self.dim);
        if factor == 0 {
            return out;
        }
        for (&key, c) in &self.coeffs {
            out.coeffs.insert(key, T::from(factor) * c);
        }
        out
    }

    fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.dim);
        for _ in 0..exp {
            out = out.mul(self).expect("same ring");
        }
        out
    }
}

/// First Chern class `y + d*a` of the line bundle whose sections evaluate a
/// degree-`d` form at a point of the plane.
fn evaluation_chern<T: ExactInt>(d: i64) -> CohomClass<T> {
    let dim = linear_system_dim(d);
    CohomClass::monomial(dim, 1, 0, T::one())
        .add(&CohomClass::monomial(dim, 0, 1, T::from(d)))
        .expect("same ring")
}

/// Euler class of the rank-`(k+1)` bundle `V_k` whose sections are the
/// order-`k` derivative jets of degree-`d` forms.
///
/// By the splitting principle `e(V_k)` is the product of `c1 + i*x1 +
/// (k-i)*x2` over `i = 0..k`, where `c1 = y + d*a` and `x1, x2` are the
/// Chern roots of the cotangent bundle of the plane: `x1 + x2 = -3a` and
/// `x1 * x2 = 3a^2`. Because `a^3 = 0`, only the first two elementary
/// symmetric functions of the linear factors survive, and their closed forms
/// in the power sums `S1 = k(k+1)/2`, `S2 = k(k+1)(2k+1)/6` are
///
/// ```text
/// e1 = S1 * (x1 + x2)
/// e2 = (S1^2 - S2)/2 * (x1^2 + x2^2) + (S1^2 - k*S1 + S2) * x1*x2
/// ```
///
/// with `x1^2 + x2^2 = (x1 + x2)^2 - 2*x1*x2`.
pub fn euler_class<T: ExactInt>(k: u32, d: i64) -> CohomClass<T> {
    let dim = linear_system_dim(d);
    let c1 = evaluation_chern::<T>(d);
    let root_sum = CohomClass::monomial(dim, 0, 1, T::from(-3));
    let root_product = CohomClass::monomial(dim, 0, 2, T::from(3));

    let k64 = k as i64;
    let s1 = k64 * (k64 + 1) / 2;
    let s2 = k64 * (k64 + 1) * (2 * k64 + 1) / 6;
    let square_coeff = (s1 * s1 - s2) / 2;
    let product_coeff = s1 * s1 - k64 * s1 + s2;

    let mut e = c1.pow(k + 1);
    if k >= 1 {
        e = e
            .add(&c1.pow(k).mul(&root_sum.scale(s1)).expect("same ring"))
            .expect("same ring");
        let sym2 = root_sum
            .mul(&root_sum)
            .expect("same ring")
            .scale(square_coeff)
            .add(&root_product.scale(product_coeff - 2 * square_coeff))
            .expect("same ring");
        e = e
            .add(&c1.pow(k - 1).mul(&sym2).expect("same ring"))
            .expect("same ring");
    }
    e
}

/// Class of the locus of (curve, point) pairs where the curve has a point of
/// multiplicity at least `m`: the product of `e(V_k)` for `k = 0..m-1`.
pub fn singularity_class<T: ExactInt>(m: i64, d: i64) -> Result<CohomClass<T>, Error> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    if m < 2 {
        return Err(Error::MultiplicityTooSmall(m));
    }
    let mut product = CohomClass::one(linear_system_dim(d));
    for k in 0..m as u32 {
        product = product.mul(&euler_class(k, d))?;
    }
    Ok(product)
}

/// Number of degree-`d` curves in the full linear system with an `m`-fold
/// point on a generic cycle of codimension `theta`, passing through the
/// complementary number of generic points.
///
/// This is the coefficient of the fundamental class `y^dim * a^2` in the
/// product of [`singularity_class`] with `y^(j - theta) * a^theta`, where
/// `j` is [`singular_family_dim`]. When `j - theta` is negative the family
/// cannot absorb the constraints and the count is zero.
pub fn euler_count<T: ExactInt>(d: i64, m: i64, theta: i64) -> Result<T, Error> {
    if !(0..=2).contains(&theta) {
        return Err(Error::CodimOutOfRange(theta));
    }
    let locus = singularity_class::<T>(m, d)?;
    let dim = linear_system_dim(d);
    let points = singular_family_dim(d, m) - theta;
    if points < 0 {
        return Ok(T::zero());
    }
    let constraints = CohomClass::monomial(dim, points as u32, theta as u32, T::one());
    Ok(locus.mul(&constraints)?.coefficient(dim as u32, 2))
}
