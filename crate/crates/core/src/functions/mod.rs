//! Elementary functions of a twocomplex variable.
//!
//! Because `e₊` and `e₋` are orthogonal idempotents, any function given by
//! a power series acts componentwise in the canonical base:
//! `f(v₊e₊ + v₋e₋) = f(v₊)e₊ + f(v₋)e₋`. `log` and `pow_real` are computed
//! exactly that way. `exp`, `cos`, `sin`, `cosh` and `sinh` use the
//! equivalent addition-theorem forms, e.g. `exp(x + δy) = eˣ(cosh y + δ sinh y)`,
//! which avoid the cancellation `(e^{v₊} − e^{v₋})/2` suffers near the real axis.
//!
//! The defining power series are kept in [`reference`] as an independent
//! oracle.

pub mod reference;

use crate::algebra::{CanonicalPair, TwoComplex};
use crate::forms::sector_components;
use crate::{Error, Result};

fn finite(u: TwoComplex, what: &'static str) -> Result<TwoComplex> {
    if u.is_finite() {
        Ok(u)
    } else {
        Err(Error::Overflow(what))
    }
}

/// `exp(x + δy) = eˣ·(cosh y + δ sinh y)`.
pub fn exp(u: TwoComplex) -> Result<TwoComplex> {
    let ex = u.x().exp();
    finite(
        TwoComplex::new_unchecked(ex * u.y().cosh(), ex * u.y().sinh()),
        "exp",
    )
}

/// `ln u = e₊ ln v₊ + e₋ ln v₋`, defined for `v₊ > 0, v₋ > 0`.
pub fn log(u: TwoComplex) -> Result<TwoComplex> {
    let c = sector_components(u)?;
    Ok(c.map(f64::ln).to_twocomplex())
}

/// `uⁿ = e₊v₊ⁿ + e₋v₋ⁿ` for real `n`, defined in the sector.
pub fn pow_real(u: TwoComplex, n: f64) -> Result<TwoComplex> {
    if !n.is_finite() {
        return Err(Error::Domain(format!("non-finite exponent {n}")));
    }
    let c = sector_components(u)?;
    finite(c.map(|v| v.powf(n)).to_twocomplex(), "pow_real")
}

/// `uᵐ` by repeated squaring in the algebra; valid for any `u` when `m ≥ 0`
/// and off the nodal lines when `m < 0`.
pub fn pow_int(u: TwoComplex, m: i64) -> Result<TwoComplex> {
    let base = if m < 0 { u.inverse()? } else { u };
    let mut e = m.unsigned_abs();
    let mut acc = TwoComplex::ONE;
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc *= sq;
        }
        e >>= 1;
        if e > 0 {
            sq *= sq;
        }
    }
    finite(acc, "pow_int")
}

/// `cos(x + δy) = cos x cos y − δ sin x sin y`.
pub fn cos(u: TwoComplex) -> TwoComplex {
    let (sx, cx) = u.x().sin_cos();
    let (sy, cy) = u.y().sin_cos();
    TwoComplex::new_unchecked(cx * cy, -sx * sy)
}

/// `sin(x + δy) = sin x cos y + δ cos x sin y`.
pub fn sin(u: TwoComplex) -> TwoComplex {
    let (sx, cx) = u.x().sin_cos();
    let (sy, cy) = u.y().sin_cos();
    TwoComplex::new_unchecked(sx * cy, cx * sy)
}

/// `cosh(x + δy) = cosh x cosh y + δ sinh x sinh y`.
pub fn cosh(u: TwoComplex) -> Result<TwoComplex> {
    let (x, y) = (u.x(), u.y());
    finite(
        TwoComplex::new_unchecked(x.cosh() * y.cosh(), x.sinh() * y.sinh()),
        "cosh",
    )
}

/// `sinh(x + δy) = sinh x cosh y + δ cosh x sinh y`.
pub fn sinh(u: TwoComplex) -> Result<TwoComplex> {
    let (x, y) = (u.x(), u.y());
    finite(
        TwoComplex::new_unchecked(x.sinh() * y.cosh(), x.cosh() * y.sinh()),
        "sinh",
    )
}

/// Applies a real function to both canonical components and recombines.
///
/// This is the generic form of every function above; it is exposed for
/// callers who want a function the crate does not provide.
pub fn canonical_map(u: TwoComplex, f: impl Fn(f64) -> f64) -> TwoComplex {
    CanonicalPair::map(u.to_canonical(), f).to_twocomplex()
}
