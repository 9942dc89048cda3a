//! The twocomplex value type and its exact-form arithmetic.
//!
//! Multiplication follows `δ² = 1`:
//! `(x, y)·(x′, y′) = (xx′ + yy′, xy′ + yx′)`.
//! In the canonical variables `v₊ = x + y`, `v₋ = x − y` the product is
//! componentwise, which is what most of the crate leans on.

mod literal;
mod matrix;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::{Error, Result};

pub use literal::format_real;
pub use matrix::Matrix2;

/// A hyperbolic twocomplex number `x + δy`.
///
/// Equality is componentwise. Values built through [`TwoComplex::new`] are
/// always finite; arithmetic on finite values can still overflow, and the
/// functions that can overflow report it.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TwoComplex {
    x: f64,
    y: f64,
}

/// Coordinates in the idempotent base: `u = v₊·e₊ + v₋·e₋`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CanonicalPair {
    pub v_plus: f64,
    pub v_minus: f64,
}

impl TwoComplex {
    pub const ZERO: TwoComplex = TwoComplex { x: 0.0, y: 0.0 };
    pub const ONE: TwoComplex = TwoComplex { x: 1.0, y: 0.0 };
    /// The unit `δ` with `δ² = 1`.
    pub const DELTA: TwoComplex = TwoComplex { x: 0.0, y: 1.0 };
    /// `e₊ = (1 + δ)/2`.
    pub const E_PLUS: TwoComplex = TwoComplex { x: 0.5, y: 0.5 };
    /// `e₋ = (1 − δ)/2`.
    pub const E_MINUS: TwoComplex = TwoComplex { x: 0.5, y: -0.5 };

    /// Builds `x + δy`, rejecting NaN and infinite components.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(TwoComplex { x, y })
        } else {
            Err(Error::Domain(format!("non-finite component in ({x}, {y})")))
        }
    }

    /// Builds `x + δy` without the finiteness check.
    ///
    /// Used on arithmetic results; callers are responsible for the inputs.
    #[inline]
    pub const fn new_unchecked(x: f64, y: f64) -> Self {
        TwoComplex { x, y }
    }

    #[inline]
    pub const fn from_real(x: f64) -> Self {
        TwoComplex { x, y: 0.0 }
    }

    #[inline]
    pub const fn x(self) -> f64 {
        self.x
    }

    #[inline]
    pub const fn y(self) -> f64 {
        self.y
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// `ν = x² − y²`, evaluated as `v₊·v₋` so it keeps full relative
    /// precision near the nodal lines.
    #[inline]
    pub fn nu(self) -> f64 {
        (self.x + self.y) * (self.x - self.y)
    }

    /// Euclidean modulus `d = √(x² + y²)`.
    #[inline]
    pub fn modulus(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Amplitude `ρ = √ν`, defined only for `ν > 0`.
    pub fn amplitude(self) -> Result<f64> {
        let nu = self.nu();
        if nu > 0.0 {
            Ok(nu.sqrt())
        } else {
            Err(Error::AmplitudeUndefined { nu })
        }
    }

    /// True iff `v₊ = 0` or `v₋ = 0` exactly.
    pub fn is_zero_divisor(self) -> bool {
        self.x + self.y == 0.0 || self.x - self.y == 0.0
    }

    /// Tolerant variant of [`is_zero_divisor`](Self::is_zero_divisor):
    /// true iff `|v₊| ≤ eps` or `|v₋| ≤ eps`.
    pub fn is_near_zero_divisor(self, eps: f64) -> bool {
        let c = self.to_canonical();
        c.v_plus.abs() <= eps || c.v_minus.abs() <= eps
    }

    /// Multiplicative inverse `(x/ν, −y/ν)`.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero_divisor() {
            return Err(Error::ZeroDivisor(self.to_string()));
        }
        let nu = self.nu();
        Ok(TwoComplex::new_unchecked(self.x / nu, -self.y / nu))
    }

    /// `self / rhs`, failing when `rhs` is a zero divisor.
    pub fn checked_div(self, rhs: TwoComplex) -> Result<Self> {
        if rhs.is_zero_divisor() {
            return Err(Error::ZeroDivisor(rhs.to_string()));
        }
        // pure real and pure δ divisors are divided exactly
        if rhs.y == 0.0 {
            return Ok(TwoComplex::new_unchecked(self.x / rhs.x, self.y / rhs.x));
        }
        if rhs.x == 0.0 {
            return Ok(TwoComplex::new_unchecked(self.y / rhs.y, self.x / rhs.y));
        }
        Ok(self * rhs.inverse()?)
    }

    pub fn scale(self, k: f64) -> Self {
        TwoComplex::new_unchecked(self.x * k, self.y * k)
    }

    pub fn to_canonical(self) -> CanonicalPair {
        CanonicalPair {
            v_plus: self.x + self.y,
            v_minus: self.x - self.y,
        }
    }

    pub fn from_canonical(p: CanonicalPair) -> Self {
        p.to_twocomplex()
    }

    /// The idempotent base `(e₊, e₋)`.
    pub const fn idempotents() -> (TwoComplex, TwoComplex) {
        (Self::E_PLUS, Self::E_MINUS)
    }

    /// The representing matrix `[[x, y], [y, x]]`.
    pub fn to_matrix(self) -> Matrix2 {
        Matrix2::new([[self.x, self.y], [self.y, self.x]])
    }

    /// `T·U·T⁻¹`, which is `diag(v₊, v₋)` up to rounding.
    pub fn diagonalize(self) -> Matrix2 {
        let t = Matrix2::diagonalizer();
        t.mul(&self.to_matrix()).mul(&t.inverse().expect("T is orthogonal"))
    }
}

impl CanonicalPair {
    pub const fn new(v_plus: f64, v_minus: f64) -> Self {
        CanonicalPair { v_plus, v_minus }
    }

    /// `x = (v₊ + v₋)/2`, `y = (v₊ − v₋)/2`.
    pub fn to_twocomplex(self) -> TwoComplex {
        TwoComplex::new_unchecked(
            0.5 * (self.v_plus + self.v_minus),
            0.5 * (self.v_plus - self.v_minus),
        )
    }

    /// Applies a real function to each component.
    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        CanonicalPair::new(f(self.v_plus), f(self.v_minus))
    }

    pub fn is_finite(self) -> bool {
        self.v_plus.is_finite() && self.v_minus.is_finite()
    }
}

impl From<f64> for TwoComplex {
    fn from(x: f64) -> Self {
        TwoComplex::from_real(x)
    }
}

impl From<CanonicalPair> for TwoComplex {
    fn from(p: CanonicalPair) -> Self {
        p.to_twocomplex()
    }
}

impl From<TwoComplex> for CanonicalPair {
    fn from(u: TwoComplex) -> Self {
        u.to_canonical()
    }
}

impl Add for TwoComplex {
    type Output = TwoComplex;
    #[inline]
    fn add(self, rhs: TwoComplex) -> TwoComplex {
        TwoComplex::new_unchecked(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for TwoComplex {
    type Output = TwoComplex;
    #[inline]
    fn sub(self, rhs: TwoComplex) -> TwoComplex {
        TwoComplex::new_unchecked(self.x - rhs.x, self.y - rhs.y)
    }
}

/// Componentwise product, the image of twocomplex multiplication.
impl Mul for CanonicalPair {
    type Output = CanonicalPair;

    fn mul(self, rhs: CanonicalPair) -> CanonicalPair {
        CanonicalPair::new(self.v_plus * rhs.v_plus, self.v_minus * rhs.v_minus)
    }
}

impl Mul for TwoComplex {
    type Output = TwoComplex;
    #[inline]
    fn mul(self, rhs: TwoComplex) -> TwoComplex {
        TwoComplex::new_unchecked(
            self.x * rhs.x + self.y * rhs.y,
            self.x * rhs.y + self.y * rhs.x,
        )
    }
}

impl Mul<f64> for TwoComplex {
    type Output = TwoComplex;
    #[inline]
    fn mul(self, k: f64) -> TwoComplex {
        self.scale(k)
    }
}

impl Neg for TwoComplex {
    type Output = TwoComplex;
    #[inline]
    fn neg(self) -> TwoComplex {
        TwoComplex::new_unchecked(-self.x, -self.y)
    }
}

impl AddAssign for TwoComplex {
    fn add_assign(&mut self, rhs: TwoComplex) {
        *self = *self + rhs;
    }
}

impl SubAssign for TwoComplex {
    fn sub_assign(&mut self, rhs: TwoComplex) {
        *self = *self - rhs;
    }
}

impl MulAssign for TwoComplex {
    fn mul_assign(&mut self, rhs: TwoComplex) {
        *self = *self * rhs;
    }
}

impl Sum for TwoComplex {
    fn sum<I: Iterator<Item = TwoComplex>>(iter: I) -> TwoComplex {
        iter.fold(TwoComplex::ZERO, Add::add)
    }
}

impl fmt::Display for TwoComplex {
    /// `(x,y)` with 17 significant digits unless a precision is given.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "({:.*},{:.*})", p, self.x, p, self.y),
            None => write!(f, "({},{})", format_real(self.x), format_real(self.y)),
        }
    }
}
