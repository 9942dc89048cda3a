//! Exponential and trigonometric forms.
//!
//! Both forms exist only in the sector `v₊ > 0, v₋ > 0`, where
//! `u = ρ·exp(δλ)` with amplitude `ρ = √(v₊v₋)` and argument
//! `λ = ½·ln(v₊/v₋)`. The trigonometric form replaces `ρ` by the modulus `d`
//! and the angle `θ = atan(v₊/v₋) ∈ (0, π/2)`, with `ρ = d·√(sin 2θ)` and
//! `λ = ½·ln tan θ`. The other three sectors are rejected with
//! [`Error::OutsideSector`]; no continuation is attempted.
//!
//! There is no cyclic variable here, so `λ` is single valued.

use crate::algebra::{CanonicalPair, TwoComplex};
use crate::{Error, Result};

/// `u = ρ·exp(δλ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentialForm {
    pub rho: f64,
    pub lambda: f64,
}

/// `u = d·√(sin 2θ)·exp(½·δ·ln tan θ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigForm {
    pub d: f64,
    pub theta: f64,
}

/// Residuals of the product rules for amplitude, argument and `tan θ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdditivityReport {
    pub rho: f64,
    pub lambda: f64,
    pub tan_theta: f64,
}

/// Canonical components of `u`, or `OutsideSector`.
pub fn sector_components(u: TwoComplex) -> Result<CanonicalPair> {
    let c = u.to_canonical();
    if c.v_plus > 0.0 && c.v_minus > 0.0 {
        Ok(c)
    } else {
        Err(Error::OutsideSector {
            v_plus: c.v_plus,
            v_minus: c.v_minus,
        })
    }
}

pub fn in_sector(u: TwoComplex) -> bool {
    sector_components(u).is_ok()
}

pub fn to_exponential(u: TwoComplex) -> Result<ExponentialForm> {
    let c = sector_components(u)?;
    Ok(ExponentialForm {
        rho: (c.v_plus * c.v_minus).sqrt(),
        lambda: 0.5 * (c.v_plus / c.v_minus).ln(),
    })
}

/// `(ρ cosh λ, ρ sinh λ)`, evaluated as `v₊ = ρe^λ`, `v₋ = ρe^{−λ}`.
pub fn from_exponential(f: ExponentialForm) -> Result<TwoComplex> {
    if !(f.rho > 0.0 && f.rho.is_finite()) || !f.lambda.is_finite() {
        return Err(Error::Domain(format!(
            "exponential form needs finite rho > 0 and finite lambda, got rho = {}, lambda = {}",
            f.rho, f.lambda
        )));
    }
    let c = CanonicalPair::new(f.rho * f.lambda.exp(), f.rho * (-f.lambda).exp());
    if !c.is_finite() {
        return Err(Error::Overflow("from_exponential"));
    }
    let u = c.to_twocomplex();
    if !in_sector(u) {
        // e^{-2|λ|} below the resolution of x and y: the result would land
        // on a nodal line
        return Err(Error::Domain(format!(
            "lambda = {} is too large to represent as (x, y)",
            f.lambda
        )));
    }
    Ok(u)
}

/// `θ = atan(v₊/v₋)`.
pub fn theta_of(u: TwoComplex) -> Result<f64> {
    let c = sector_components(u)?;
    Ok(c.v_plus.atan2(c.v_minus))
}

pub fn to_trigonometric(u: TwoComplex) -> Result<TrigForm> {
    let theta = theta_of(u)?;
    Ok(TrigForm {
        d: u.modulus(),
        theta,
    })
}

impl TrigForm {
    /// `ρ = d·√(sin 2θ)`, `λ = ½·ln tan θ`.
    pub fn to_exponential(self) -> ExponentialForm {
        ExponentialForm {
            rho: self.d * (2.0 * self.theta).sin().sqrt(),
            lambda: 0.5 * self.theta.tan().ln(),
        }
    }

    pub fn to_twocomplex(self) -> Result<TwoComplex> {
        if !(self.theta > 0.0 && self.theta < std::f64::consts::FRAC_PI_2) {
            return Err(Error::Domain(format!(
                "theta = {} outside (0, pi/2)",
                self.theta
            )));
        }
        from_exponential(self.to_exponential())
    }
}

/// Compares the forms of `u1·u2` against the product rules
/// `ρ = ρ₁ρ₂`, `λ = λ₁ + λ₂`, `tan θ = tan θ₁·tan θ₂`.
pub fn argument_additivity_check(u1: TwoComplex, u2: TwoComplex) -> Result<AdditivityReport> {
    let f1 = to_exponential(u1)?;
    let f2 = to_exponential(u2)?;
    let product = u1 * u2;
    let f = to_exponential(product)?;
    // tan θ = v₊/v₋ exactly, no need to go through the angle
    let tan = |u: TwoComplex| -> Result<f64> {
        let c = sector_components(u)?;
        Ok(c.v_plus / c.v_minus)
    };
    Ok(AdditivityReport {
        rho: (f.rho - f1.rho * f2.rho).abs(),
        lambda: (f.lambda - (f1.lambda + f2.lambda)).abs(),
        tan_theta: (tan(product)? - tan(u1)? * tan(u2)?).abs(),
    })
}
