//! Exact localization computations for delta-matroids.
//!
//! The crate computes interlace polynomials, localized K-theory and Chow
//! classes on the type B permutohedral variety and on the maximal
//! orthogonal Grassmannian, and the Euler characteristics and integrals of
//! those classes, all in exact rational arithmetic.
//!
//! ```
//! use deltak::delta::DeltaMatroid;
//!
//! let d = DeltaMatroid::from_sets(3, &[vec![1, 2, 3], vec![1], vec![2], vec![3]]).unwrap();
//! assert_eq!(d.interlace().to_string(), "4 + 4v");
//! ```

pub mod acceptance;
pub mod algebra;
pub mod chow;
pub mod classes;
pub mod delta;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod semigroup;
pub mod typeb;
pub mod verify;

pub use error::{Error, Result};
