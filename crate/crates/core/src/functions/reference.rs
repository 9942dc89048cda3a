//! Defining power series, summed directly in the twocomplex algebra.
//!
//! These never touch the canonical decomposition or the real elementary
//! functions, so they serve as an independent check on the fast paths.
//! Summation stops once a term drops below `1e-16` times the running sum
//! (by modulus) or after `max_terms` terms.

use crate::algebra::TwoComplex;

/// Hard cap on terms.
pub const DEFAULT_MAX_TERMS: usize = 64;

const STOP_RATIO: f64 = 1e-16;

/// Sums `Σ_k sign(k)·u^k/k!` over the exponents `start, start+2, …` (or
/// every exponent when `step == 1`).
fn sum_series(
    u: TwoComplex,
    start: u32,
    step: u32,
    alternating: bool,
    max_terms: usize,
) -> TwoComplex {
    let mut term = TwoComplex::ONE;
    for k in 1..=start {
        term = term * u * (1.0 / f64::from(k));
    }
    let mut sum = TwoComplex::ZERO;
    let mut k = start;
    for i in 0..max_terms {
        let signed = if alternating && i % 2 == 1 { -term } else { term };
        sum += signed;
        if term.modulus() < STOP_RATIO * sum.modulus() {
            break;
        }
        for _ in 0..step {
            k += 1;
            term = term * u * (1.0 / f64::from(k));
        }
    }
    sum
}

/// `1 + u + u²/2! + …`
pub fn exp_series(u: TwoComplex, max_terms: usize) -> TwoComplex {
    sum_series(u, 0, 1, false, max_terms)
}

/// `1 − u²/2! + u⁴/4! − …`
pub fn cos_series(u: TwoComplex, max_terms: usize) -> TwoComplex {
    sum_series(u, 0, 2, true, max_terms)
}

/// `u − u³/3! + u⁵/5! − …`
pub fn sin_series(u: TwoComplex, max_terms: usize) -> TwoComplex {
    sum_series(u, 1, 2, true, max_terms)
}

/// `1 + u²/2! + u⁴/4! + …`
pub fn cosh_series(u: TwoComplex, max_terms: usize) -> TwoComplex {
    sum_series(u, 0, 2, false, max_terms)
}

/// `u + u³/3! + u⁵/5! + …`
pub fn sinh_series(u: TwoComplex, max_terms: usize) -> TwoComplex {
    sum_series(u, 1, 2, false, max_terms)
}
