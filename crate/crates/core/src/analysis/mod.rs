//! Calculus of twocomplex functions.
//!
//! For an analytic `f = P + δQ` the difference quotient does not depend on
//! the direction of approach, which forces `∂P/∂x = ∂Q/∂y` and
//! `∂Q/∂x = ∂P/∂y`; both `P` and `Q` then satisfy the wave equation
//! `∂²/∂x² − ∂²/∂y² = 0`. Integrals `∫ f du` are path independent away
//! from singularities. A singularity at `u₀` spoils the whole pair of lines
//! through `u₀` parallel to the nodal lines, see [`singular_lines`].
//!
//! Functions are opaque callables with a declared list of singular points;
//! nothing here tries to discover singularities.

mod path;

pub use path::{integrate, singular_lines, IntegralResult, NodalLine, Path};

use std::fmt;

use crate::algebra::TwoComplex;
use crate::series::PowerSeries;
use crate::{Error, Result};

/// Points closer than this (in a canonical coordinate) to a singular line
/// are refused.
pub const SINGULARITY_THRESHOLD: f64 = 1e-9;

type Callable = dyn Fn(TwoComplex) -> Result<TwoComplex> + Send + Sync;

/// `u ↦ f(u)` plus the points whose nodal-parallel lines are singular.
///
/// The callable must be deterministic and safe to call from several threads.
pub struct TwoComplexFunction {
    f: Box<Callable>,
    singularities: Vec<TwoComplex>,
}

impl TwoComplexFunction {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(TwoComplex) -> TwoComplex + Send + Sync + 'static,
    {
        TwoComplexFunction {
            f: Box::new(move |u| Ok(f(u))),
            singularities: Vec::new(),
        }
    }

    pub fn fallible<F>(f: F) -> Self
    where
        F: Fn(TwoComplex) -> Result<TwoComplex> + Send + Sync + 'static,
    {
        TwoComplexFunction {
            f: Box::new(f),
            singularities: Vec::new(),
        }
    }

    /// The function defined by a (truncated) power series.
    pub fn from_series(s: PowerSeries) -> Self {
        TwoComplexFunction::new(move |u| s.eval(u))
    }

    /// Declares a singularity at `u0`.
    pub fn with_singularity(mut self, u0: TwoComplex) -> Self {
        self.singularities.push(u0);
        self
    }

    pub fn singularities(&self) -> &[TwoComplex] {
        &self.singularities
    }

    pub fn eval(&self, u: TwoComplex) -> Result<TwoComplex> {
        (self.f)(u)
    }

    /// The singular point whose lines pass within `threshold` of `u`.
    pub fn near_singular_line(&self, u: TwoComplex, threshold: f64) -> Option<TwoComplex> {
        let c = u.to_canonical();
        self.singularities.iter().copied().find(|s| {
            let s = s.to_canonical();
            (c.v_plus - s.v_plus).abs() < threshold || (c.v_minus - s.v_minus).abs() < threshold
        })
    }

    fn eval_regular(&self, u: TwoComplex) -> Result<TwoComplex> {
        if let Some(s) = self.near_singular_line(u, SINGULARITY_THRESHOLD) {
            return Err(Error::ZeroDivisor(format!(
                "{u} lies on a singular line through {s}"
            )));
        }
        self.eval(u)
    }

    /// Rejects a finite-difference stencil of half-width `reach` around `u`
    /// that touches or straddles a singular line.
    fn check_stencil(&self, u: TwoComplex, reach: f64) -> Result<()> {
        match self.near_singular_line(u, reach + SINGULARITY_THRESHOLD) {
            Some(s) => Err(Error::ZeroDivisor(format!(
                "stencil of half-width {reach} around {u} meets a singular line through {s}"
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for TwoComplexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwoComplexFunction")
            .field("singularities", &self.singularities)
            .finish_non_exhaustive()
    }
}

/// Central-difference derivative at `u0`.
///
/// The quotient `(f(u₀+s) − f(u₀−s)) / 2s` is formed for `s = h` and for
/// `s = δh`; if the two differ by more than `√h·(1 + |f′|)` the function is
/// not analytic at this resolution and `DirectionMismatch` is returned.
pub fn derivative(f: &TwoComplexFunction, u0: TwoComplex, h: f64) -> Result<TwoComplex> {
    let (along_x, along_delta) = directional_derivatives(f, u0, h)?;
    let tol = h.sqrt() * (1.0 + along_x.modulus());
    if (along_x - along_delta).modulus() > tol {
        return Err(Error::DirectionMismatch {
            along_x: along_x.to_string(),
            along_delta: along_delta.to_string(),
        });
    }
    Ok(along_x)
}

/// The two central-difference quotients along `(1,0)` and `(0,1)`.
pub fn directional_derivatives(
    f: &TwoComplexFunction,
    u0: TwoComplex,
    h: f64,
) -> Result<(TwoComplex, TwoComplex)> {
    check_step(h)?;
    f.check_stencil(u0, h)?;
    let (x, y) = (u0.x(), u0.y());
    let quotient = |a: TwoComplex, b: TwoComplex| -> Result<TwoComplex> {
        (f.eval_regular(a)? - f.eval_regular(b)?).checked_div(a - b)
    };
    let along_x = quotient(
        TwoComplex::new_unchecked(x + h, y),
        TwoComplex::new_unchecked(x - h, y),
    )?;
    let along_delta = quotient(
        TwoComplex::new_unchecked(x, y + h),
        TwoComplex::new_unchecked(x, y - h),
    )?;
    Ok((along_x, along_delta))
}

fn check_step(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("step must be positive and finite, got {h}")))
    }
}

/// Coefficients of the same series expanded about `u0`:
/// `c_k = Σ_l C(k+l, l)·a_{k+l}·u₀ˡ`, computed by repeated synthetic
/// division.
pub fn taylor_recenter(s: &PowerSeries, u0: TwoComplex) -> PowerSeries {
    let mut b = s.coeffs().to_vec();
    let n = b.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let carry = u0 * b[j + 1];
            b[j] += carry;
        }
    }
    PowerSeries::new(b).expect("same length as a valid series")
}

/// Finite-difference residuals of the Cauchy-Riemann-type relations and of
/// the wave equation for `P` and `Q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CRReport {
    /// `|∂P/∂x − ∂Q/∂y|`
    pub residual_1: f64,
    /// `|∂Q/∂x − ∂P/∂y|`
    pub residual_2: f64,
    /// `|∂²P/∂x² − ∂²P/∂y²|`
    pub wave_p: f64,
    /// `|∂²Q/∂x² − ∂²Q/∂y²|`
    pub wave_q: f64,
    pub step: f64,
}

impl CRReport {
    pub fn max_residual(&self) -> f64 {
        self.residual_1
            .max(self.residual_2)
            .max(self.wave_p)
            .max(self.wave_q)
    }
}

/// First and second central differences along one axis, using the steps
/// actually realised in floating point.
struct AxisDiff {
    first: TwoComplex,
    second: TwoComplex,
}

fn axis_diff(
    f: &TwoComplexFunction,
    centre: f64,
    h: f64,
    at: impl Fn(f64) -> TwoComplex,
    f0: TwoComplex,
) -> Result<AxisDiff> {
    let (hi, lo) = (centre + h, centre - h);
    let (h1, h2) = (hi - centre, centre - lo);
    let fp = f.eval_regular(at(hi))?;
    let fm = f.eval_regular(at(lo))?;
    // divide rather than multiply by reciprocals: exact for linear f
    let div = |u: TwoComplex, d: f64| TwoComplex::new_unchecked(u.x() / d, u.y() / d);
    let first = div(fp - fm, hi - lo);
    let second = div(div(fp - f0, h1) - div(f0 - fm, h2), 0.5 * (h1 + h2));
    Ok(AxisDiff { first, second })
}

/// Evaluates the relations on the 5-point stencil `p, p ± h, p ± δh`.
pub fn check_cr(f: &TwoComplexFunction, p: TwoComplex, h: f64) -> Result<CRReport> {
    check_step(h)?;
    f.check_stencil(p, h)?;
    let (x, y) = (p.x(), p.y());
    let f0 = f.eval_regular(p)?;
    let dx = axis_diff(f, x, h, |t| TwoComplex::new_unchecked(t, y), f0)?;
    let dy = axis_diff(f, y, h, |t| TwoComplex::new_unchecked(x, t), f0)?;
    // P is the x component of f, Q the y component
    Ok(CRReport {
        residual_1: (dx.first.x() - dy.first.y()).abs(),
        residual_2: (dx.first.y() - dy.first.x()).abs(),
        wave_p: (dx.second.x() - dy.second.x()).abs(),
        wave_q: (dx.second.y() - dy.second.y()).abs(),
        step: h,
    })
}
