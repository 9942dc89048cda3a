//! exp, log, powers and the circular/hyperbolic functions, checked against
//! their direct power series.

use hypercx::functions::{self, reference};
use hypercx::{Result, TwoComplex};

fn main() -> Result<()> {
    let u = TwoComplex::new(0.4, -0.3)?;
    let n = reference::DEFAULT_MAX_TERMS;

    let rows: [(&str, TwoComplex, TwoComplex); 5] = [
        ("exp", functions::exp(u)?, reference::exp_series(u, n)),
        ("cos", functions::cos(u), reference::cos_series(u, n)),
        ("sin", functions::sin(u), reference::sin_series(u, n)),
        ("cosh", functions::cosh(u)?, reference::cosh_series(u, n)),
        ("sinh", functions::sinh(u)?, reference::sinh_series(u, n)),
    ];
    for (name, closed, series) in rows {
        println!("{name:>4}({u}) = {closed}   |series - closed| = {:e}", (series - closed).modulus());
    }

    let e = functions::exp(TwoComplex::DELTA)?;
    println!("exp(delta) = {e}  (cosh 1 = {}, sinh 1 = {})", 1f64.cosh(), 1f64.sinh());

    let l = functions::log(u + TwoComplex::ONE)?;
    println!("log(1+u) = {l}, exp(log(1+u)) = {}", functions::exp(l)?);
    println!("u^5 = {}", functions::pow_int(u, 5)?);
    println!("(1+u)^0.5 = {}", functions::pow_real(u + TwoComplex::ONE, 0.5)?);
    Ok(())
}
