//! Hyperbolic twocomplex numbers.
//!
//! A twocomplex number is `x + δy` with `δ² = 1`, also known as a
//! split-complex or double number. Multiplication is commutative and
//! associative, and becomes componentwise in the canonical variables
//! `v₊ = x + y`, `v₋ = x − y`. Everything in this crate is built on that
//! decomposition and cross-checked against the direct algebra.
//!
//! - [`algebra`]: the value type, arithmetic, idempotent base, matrices
//! - [`forms`]: exponential and trigonometric forms in the sector `v₊ > 0, v₋ > 0`
//! - [`functions`]: exp, log, powers, circular and hyperbolic functions
//! - [`series`]: power series and their convergence regions
//! - [`analysis`]: derivatives, Cauchy-Riemann-type checks, contour integrals
//! - [`polynomials`]: component roots and the (non-unique) factorizations
//! - [`cli`]: the `hypercx` command line front end
//!
//! ```
//! use hypercx::TwoComplex;
//!
//! let delta = TwoComplex::DELTA;
//! assert_eq!(delta * delta, TwoComplex::ONE);
//!
//! let a = TwoComplex::new(1.0, 1.0).unwrap();
//! let b = TwoComplex::new(1.0, -1.0).unwrap();
//! assert_eq!(a * b, TwoComplex::ZERO);
//! ```

pub mod algebra;
pub mod analysis;
pub mod cli;
mod error;
pub mod forms;
pub mod functions;
pub mod polynomials;
pub mod series;

pub use algebra::{CanonicalPair, Matrix2, TwoComplex};
pub use error::{Error, Result};
