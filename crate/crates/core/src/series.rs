//! Twocomplex power series `a₀ + a₁u + a₂u² + …` and their convergence
//! regions.
//!
//! Writing `A_{l±} = a_{lx} ± a_{ly}`, the series splits into two real
//! series `Σ A_{l+} v₊ˡ` and `Σ A_{l−} v₋ˡ`. The circular bound `|u| < c₀`
//! follows from `|u₁u₂| ≤ √2|u₁||u₂|`; the component ratios give the
//! rectangle `|v₊| < c₊, |v₋| < c₋` with sides parallel to `x = ±y`, which
//! contains the disc.
//!
//! A [`PowerSeries`] is always a finite truncation. Its region describes the
//! untruncated series and is never used to refuse an evaluation.

use std::str::FromStr;

use rand::Rng;

use crate::algebra::TwoComplex;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<TwoComplex>,
}

/// Circular bound `c₀` and rectangle half-widths `c₊`, `c₋`. Any of them may
/// be `+∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRegion {
    pub c0: f64,
    pub c_plus: f64,
    pub c_minus: f64,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<TwoComplex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("power series needs at least one coefficient".into()));
        }
        if let Some(i) = coeffs.iter().position(|a| !a.is_finite()) {
            return Err(Error::Domain(format!("coefficient {i} is not finite")));
        }
        Ok(PowerSeries { coeffs })
    }

    /// First `len` coefficients of `Σ uˡ/l!`.
    pub fn exp_truncation(len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut a = 1.0;
        for l in 0..len {
            if l > 0 {
                a /= l as f64;
            }
            coeffs.push(TwoComplex::from_real(a));
        }
        PowerSeries::new(coeffs).expect("len > 0")
    }

    pub fn coeffs(&self) -> &[TwoComplex] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The real component series `(A_{l+}, A_{l−})`.
    pub fn component_coeffs(&self) -> (Vec<f64>, Vec<f64>) {
        self.coeffs
            .iter()
            .map(|a| {
                let c = a.to_canonical();
                (c.v_plus, c.v_minus)
            })
            .unzip()
    }

    /// Horner per canonical component, recombined.
    pub fn eval(&self, u: TwoComplex) -> TwoComplex {
        let v = u.to_canonical();
        let (mut p, mut m) = (0.0, 0.0);
        for a in self.coeffs[1..].iter().rev() {
            let c = a.to_canonical();
            p = p * v.v_plus + c.v_plus;
            m = m * v.v_minus + c.v_minus;
        }
        // the last step a₀ + u·(…) is done directly so that a₀ is not
        // round-tripped through canonical coordinates
        let tail = crate::CanonicalPair::new(p, m).to_twocomplex();
        self.coeffs[0] + u * tail
    }

    /// Horner directly in the twocomplex algebra.
    pub fn eval_direct(&self, u: TwoComplex) -> TwoComplex {
        self.coeffs
            .iter()
            .rev()
            .fold(TwoComplex::ZERO, |acc, &a| acc * u + a)
    }

    /// Term-by-term derivative `Σ l·a_l u^{l−1}`; a constant series yields
    /// the zero series.
    pub fn derivative(&self) -> PowerSeries {
        if self.coeffs.len() == 1 {
            return PowerSeries { coeffs: vec![TwoComplex::ZERO] };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &a)| a.scale((i + 1) as f64))
            .collect();
        PowerSeries { coeffs }
    }

    /// Estimates `c₀`, `c₊` and `c₋` from the tail of consecutive
    /// coefficient ratios. See [`estimate_limit`].
    pub fn estimate_region(&self) -> Result<ConvergenceRegion> {
        if self.coeffs.len() < 4 {
            return Err(Error::Domain(format!(
                "region estimate needs at least 4 coefficients, got {}",
                self.coeffs.len()
            )));
        }
        let (plus, minus) = self.component_coeffs();
        let moduli: Vec<f64> = self.coeffs.iter().map(|a| a.modulus()).collect();
        let c0 = estimate_limit(&moduli)? / std::f64::consts::SQRT_2;
        let c_plus = estimate_limit(&plus)?;
        let c_minus = estimate_limit(&minus)?;
        Ok(ConvergenceRegion { c0, c_plus, c_minus })
    }
}

/// Ratios above this in all of the last three positions mean divergence.
const DIVERGENT_RATIO: f64 = 1e12;
/// Log-log growth rate of the tail ratios above which they are taken to
/// grow without bound (factorial-type decay has rate 1).
const DIVERGENT_GROWTH: f64 = 0.5;

/// Limit of `|a_l| / |a_{l+1}|` from the tail of a coefficient sequence.
///
/// The window is the last `max(3, n/4)` of the `n` ratios; the estimate is
/// their median. The limit is `+∞` when the last three ratios all exceed
/// `1e12`, or when the window is strictly increasing and grows like `l^p`
/// with `p ≥ 0.5`. A zero coefficient inside the window is an error.
pub fn estimate_limit(coeffs: &[f64]) -> Result<f64> {
    let n = coeffs.len().saturating_sub(1);
    if n < 3 {
        return Err(Error::Domain("need at least 4 coefficients".into()));
    }
    let window = (n / 4).max(3);
    let first = n - window;
    if let Some(idx) = (first..=n).find(|&i| coeffs[i] == 0.0) {
        return Err(Error::DegenerateCoefficients { index: idx });
    }
    // ratios[i] pairs coefficient (first + i) with (first + i + 1)
    let ratios: Vec<f64> = (first..n)
        .map(|l| coeffs[l].abs() / coeffs[l + 1].abs())
        .collect();

    if ratios[ratios.len() - 3..].iter().all(|&r| r > DIVERGENT_RATIO) {
        return Ok(f64::INFINITY);
    }
    let increasing = ratios.windows(2).all(|w| w[1] > w[0]);
    if increasing {
        // the ratio at index l is tagged with l + 1 to keep logs finite
        let (l0, l1) = ((first + 1) as f64, n as f64);
        let growth = (ratios[ratios.len() - 1] / ratios[0]).ln() / (l1 / l0).ln();
        if growth >= DIVERGENT_GROWTH {
            return Ok(f64::INFINITY);
        }
    }
    let mut sorted = ratios;
    sorted.sort_by(f64::total_cmp);
    let k = sorted.len();
    Ok(if k % 2 == 1 {
        sorted[k / 2]
    } else {
        0.5 * (sorted[k / 2 - 1] + sorted[k / 2])
    })
}

/// `(|u₁u₂|, √2·|u₁|·|u₂|)`; the first never exceeds the second.
pub fn modulus_product_bound(u1: TwoComplex, u2: TwoComplex) -> (f64, f64) {
    (
        (u1 * u2).modulus(),
        std::f64::consts::SQRT_2 * u1.modulus() * u2.modulus(),
    )
}

/// Samples `samples` points uniformly from the disc `|u| < c₀` and checks
/// each lies in the rectangle `|v₊| < c₊`, `|v₋| < c₋` (relative slack
/// `1e-9`).
pub fn region_inclusion_check<R: Rng + ?Sized>(
    region: &ConvergenceRegion,
    samples: usize,
    rng: &mut R,
) -> Result<bool> {
    let ConvergenceRegion { c0, c_plus, c_minus } = *region;
    if !(c0.is_finite() && c_plus.is_finite() && c_minus.is_finite()) {
        return Err(Error::Domain("inclusion check needs finite c0, c+, c-".into()));
    }
    if c0 < 0.0 || c_plus < 0.0 || c_minus < 0.0 {
        return Err(Error::Domain("convergence radii must be nonnegative".into()));
    }
    if c0 == 0.0 {
        return Ok(true);
    }
    let slack = 1.0 + 1e-9;
    for _ in 0..samples {
        let r = c0 * rng.gen::<f64>().sqrt();
        let phi = std::f64::consts::TAU * rng.gen::<f64>();
        let u = TwoComplex::new_unchecked(r * phi.cos(), r * phi.sin());
        let v = u.to_canonical();
        if v.v_plus.abs() >= c_plus * slack || v.v_minus.abs() >= c_minus * slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One coefficient per line in the literal format; `#` comments and blank
/// lines are skipped.
impl FromStr for PowerSeries {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let coeffs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<TwoComplex>>>()?;
        PowerSeries::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tc(x: f64, y: f64) -> TwoComplex {
        TwoComplex::new(x, y).unwrap()
    }

    fn series(c: &[(f64, f64)]) -> PowerSeries {
        PowerSeries::new(c.iter().map(|&(x, y)| tc(x, y)).collect()).unwrap()
    }

    /// Canonical components `(A₊, A₋)` back to a twocomplex coefficient.
    fn from_components(p: f64, m: f64) -> TwoComplex {
        crate::CanonicalPair::new(p, m).to_twocomplex()
    }

    #[test]
    fn eval_examples() {
        let s = series(&[(1.0, 0.0); 3]);
        assert_eq!(s.eval(TwoComplex::DELTA), tc(2.0, 1.0));
        assert_eq!(s.eval_direct(TwoComplex::DELTA), tc(2.0, 1.0));

        let s = series(&[(0.3, -2.0), (5.0, 1.0), (7.0, 7.0)]);
        assert_eq!(s.eval(TwoComplex::ZERO), tc(0.3, -2.0));

        // geometric series through u⁸
        let g = series(&[(1.0, 0.0); 9]);
        assert_eq!(g.eval(tc(0.5, 0.0)), tc(1.99609375, 0.0));
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(PowerSeries::new(vec![]).is_err());
        assert!(PowerSeries::new(vec![TwoComplex::new_unchecked(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn product_bound_examples() {
        let (l, r) = modulus_product_bound(tc(1.0, 1.0), tc(2.0, 2.0));
        assert!((l - 4.0 * 2f64.sqrt()).abs() <= 4.0 * f64::EPSILON * l);
        assert!((l - r).abs() <= 4.0 * f64::EPSILON * r);

        let (l, r) = modulus_product_bound(TwoComplex::ONE, TwoComplex::ONE);
        assert_eq!(l, 1.0);
        assert_eq!(r, 2f64.sqrt());

        let (l, r) = modulus_product_bound(tc(1.0, -1.0), tc(2.0, -2.0));
        assert!((l - r).abs() <= 4.0 * f64::EPSILON * r);
    }

    #[test]
    fn geometric_region() {
        let s = series(&[(1.0, 0.0); 32]);
        let r = s.estimate_region().unwrap();
        assert!((r.c0 - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-9 * r.c0);
        assert!((r.c_plus - 1.0).abs() <= 1e-9);
        assert!((r.c_minus - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn exp_region_is_unbounded() {
        for len in [8, 16, 30, 60] {
            let r = PowerSeries::exp_truncation(len).estimate_region().unwrap();
            assert_eq!(r.c0, f64::INFINITY, "len {len}");
            assert_eq!(r.c_plus, f64::INFINITY);
            assert_eq!(r.c_minus, f64::INFINITY);
        }
    }

    #[test]
    fn component_ratios_differ() {
        let coeffs: Vec<TwoComplex> = (0..32)
            .map(|l| from_components(1.0, 0.5f64.powi(l)))
            .collect();
        let r = PowerSeries::new(coeffs).unwrap().estimate_region().unwrap();
        assert!((r.c_plus - 1.0).abs() <= 1e-9, "{r:?}");
        assert!((r.c_minus - 2.0).abs() <= 1e-9, "{r:?}");
        assert!((r.c0 - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-6, "{r:?}");
    }

    #[test]
    fn convergent_ratio_with_polynomial_factor_stays_finite() {
        // a_l = (l+1)·2^{-l}: ratios 2(l+1)/(l+2) increase towards 2
        let coeffs: Vec<TwoComplex> = (0..40)
            .map(|l| TwoComplex::from_real((l + 1) as f64 * 0.5f64.powi(l)))
            .collect();
        let r = PowerSeries::new(coeffs).unwrap().estimate_region().unwrap();
        assert!((r.c_plus - 2.0).abs() < 0.1, "{r:?}");
    }

    #[test]
    fn huge_ratios_are_infinite() {
        let coeffs: Vec<f64> = (0..8).map(|l| 1e-13f64.powi(l)).collect();
        assert_eq!(estimate_limit(&coeffs).unwrap(), f64::INFINITY);
    }

    #[test]
    fn zero_tail_coefficient_is_degenerate() {
        let s = series(&[(1.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(
            s.estimate_region(),
            Err(Error::DegenerateCoefficients { index: 4 })
        ));
        // u² has A₊ = A₋ = 0 in several slots
        let odd = series(&[(1.0, 1.0), (1.0, 1.0), (1.0, 1.0), (1.0, 1.0)]);
        assert!(matches!(odd.estimate_region(), Err(Error::DegenerateCoefficients { .. })));
        assert!(series(&[(1.0, 0.0); 3]).estimate_region().is_err());
    }

    #[test]
    fn inclusion_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let geo = ConvergenceRegion {
            c0: std::f64::consts::FRAC_1_SQRT_2,
            c_plus: 1.0,
            c_minus: 1.0,
        };
        assert!(region_inclusion_check(&geo, 10_000, &mut rng).unwrap());
        let degenerate = ConvergenceRegion { c0: 0.0, c_plus: 1.0, c_minus: 1.0 };
        assert!(region_inclusion_check(&degenerate, 100, &mut rng).unwrap());
        let corrupt = ConvergenceRegion { c0: 10.0, c_plus: 1.0, c_minus: 1.0 };
        assert!(!region_inclusion_check(&corrupt, 10_000, &mut rng).unwrap());
        let inf = ConvergenceRegion { c0: f64::INFINITY, c_plus: 1.0, c_minus: 1.0 };
        assert!(region_inclusion_check(&inf, 10, &mut rng).is_err());
    }

    #[test]
    fn parses_series_file() {
        let text = "# 1 + u + u^2\n(1,0)\n\n1+0*h\n  (1,0)\n";
        let s: PowerSeries = text.parse().unwrap();
        assert_eq!(s.len(), 3);
        assert!("# nothing\n".parse::<PowerSeries>().is_err());
        assert!("(1,0)\nbogus\n".parse::<PowerSeries>().is_err());
    }

    #[test]
    fn derivative_of_series() {
        let s = series(&[(1.0, 0.0), (2.0, 1.0), (3.0, -1.0)]);
        assert_eq!(s.derivative().coeffs(), &[tc(2.0, 1.0), tc(6.0, -2.0)]);
        assert_eq!(series(&[(4.0, 4.0)]).derivative().coeffs(), &[TwoComplex::ZERO]);
    }
}
