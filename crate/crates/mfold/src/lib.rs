//! Exact counts of rational plane curves with an ordinary `m`-fold point.
//!
//! The central quantity is the number of rational curves of degree `d` in
//! the projective plane that pass through `3d + 1 - m` generic points and
//! have a point where `m` smooth branches meet pairwise transversally.
//! Blowing up the singular point identifies these curves with rational
//! curves in the class `dL - mE` on the blown-up plane, and letting the
//! blown-up point move in a family yields a recursion in the style of
//! Kontsevich's formula that determines all of the counts from a handful of
//! line and conic seeds.
//!
//! The crate provides:
//!
//! - [`CurveClass`] and [`CountQuery`]: the classes `dL - mE` with their
//!   intersection pairing, and validated enumerative problems;
//! - [`FamilyCounter`]: the memoized recursion behind [`FamilyCounter::count`];
//! - [`PlaneCounter`]: the classical plane-curve counts `n_d`, implemented
//!   independently as a cross-check;
//! - [`chern`]: an Euler-class computation in a truncated cohomology ring
//!   that independently confirms the `m = d - 1` counts;
//! - [`verify`]: embedded golden tables and cross-oracle identities;
//! - [`MemoStore`]: a persistent, versioned JSON cache of computed counts.
//!
//! All arithmetic is exact. Algorithms are generic over the integer scalar
//! (see [`ExactInt`]); the crate-level alias [`Count`] fixes the default,
//! arbitrary-precision instantiation.
//!
//! ```
//! use mfold::{Count, CountQuery, CurveClass, FamilyCounter};
//!
//! let mut counter = FamilyCounter::<Count>::new();
//! let q = CountQuery::new(CurveClass::new(4, 3), 10, 0).unwrap();
//! assert_eq!(counter.count(q).to_string(), "60");
//! ```

pub mod cache;
pub mod chern;
pub mod curve;
pub mod error;
pub mod kontsevich;
pub mod recursion;
pub mod scalar;
pub mod verify;

pub use cache::{MemoStore, CACHE_FORMAT_VERSION};
pub use curve::{CurveClass, EXCEPTIONAL, LINE};
pub use error::Error;
pub use kontsevich::PlaneCounter;
pub use recursion::{base_case, dimension_gate, CountQuery, FamilyCounter};
pub use scalar::ExactInt;

/// The default exact count scalar: arbitrary-precision signed integers.
pub type Count = num_bigint::BigInt;
