#![allow(dead_code)]

use hypercx::TwoComplex;

pub const EPS: f64 = f64::EPSILON;

pub fn tc(x: f64, y: f64) -> TwoComplex {
    TwoComplex::new(x, y).unwrap()
}

/// `|x| + |y|`, the natural magnitude for bounding rounding in products.
pub fn mag(u: TwoComplex) -> f64 {
    u.x().abs() + u.y().abs()
}

/// Componentwise distance.
pub fn dist(a: TwoComplex, b: TwoComplex) -> f64 {
    (a.x() - b.x()).abs().max((a.y() - b.y()).abs())
}

/// `n` units of roundoff relative to `scale`.
pub fn ulps(n: f64, scale: f64) -> f64 {
    n * EPS * scale
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Relative distance between twocomplex numbers, measured against the
/// larger modulus.
pub fn rel_tc(a: TwoComplex, b: TwoComplex) -> f64 {
    let d = (a - b).modulus();
    if d == 0.0 {
        0.0
    } else {
        d / a.modulus().max(b.modulus())
    }
}

/// Evaluates `run` on the project's deterministic test data directory.
pub fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}
