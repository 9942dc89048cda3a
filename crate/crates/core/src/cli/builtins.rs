//! The fixed function table used by `integrate` and `check`.

use crate::algebra::TwoComplex;
use crate::analysis::TwoComplexFunction;
use crate::functions;
use crate::{Error, Result};

/// Names accepted by [`lookup`]; `inv@<literal>` is `1/(u − u₀)`.
pub const NAMES: &[&str] = &[
    "u", "u2", "u3", "exp", "sin", "cos", "cosh", "sinh", "projx", "inv@<u0>",
];

pub fn lookup(name: &str) -> Result<TwoComplexFunction> {
    let f = match name {
        "u" => TwoComplexFunction::new(|u| u),
        "u2" => TwoComplexFunction::new(|u| u * u),
        "u3" => TwoComplexFunction::new(|u| u * u * u),
        "exp" => TwoComplexFunction::fallible(functions::exp),
        "sin" => TwoComplexFunction::new(functions::sin),
        "cos" => TwoComplexFunction::new(functions::cos),
        "cosh" => TwoComplexFunction::fallible(functions::cosh),
        "sinh" => TwoComplexFunction::fallible(functions::sinh),
        // not analytic: P = x, Q = 0
        "projx" => TwoComplexFunction::new(|u| TwoComplex::from_real(u.x())),
        other => match other.strip_prefix("inv@") {
            Some(lit) => {
                let u0: TwoComplex = lit.parse()?;
                TwoComplexFunction::fallible(move |u| (u - u0).inverse()).with_singularity(u0)
            }
            None => {
                return Err(Error::Parse(format!(
                    "unknown function {other:?}; expected one of {}",
                    NAMES.join(", ")
                )))
            }
        },
    };
    Ok(f)
}
