//! Amplitude/argument and trigonometric forms in the sector `v₊ > 0, v₋ > 0`.

use hypercx::forms::{self, ExponentialForm};
use hypercx::{Result, TwoComplex};

fn main() -> Result<()> {
    let u = TwoComplex::new(3.0, 1.0)?;
    let e = forms::to_exponential(u)?;
    println!("{u} = {} * exp(delta * {})", e.rho, e.lambda);

    let t = forms::to_trigonometric(u)?;
    println!("d = {}, theta = {} (tan theta = {})", t.d, t.theta, t.theta.tan());
    println!("back from trig form: {}", t.to_twocomplex()?);

    let v = forms::from_exponential(ExponentialForm { rho: 2.0, lambda: -0.75 })?;
    println!("rho = 2, lambda = -0.75 -> {v}");

    let r = forms::argument_additivity_check(u, v)?;
    println!("additivity residuals: rho {:e}, lambda {:e}, tan {:e}", r.rho, r.lambda, r.tan_theta);

    // outside the sector the forms are not defined
    if let Err(e) = forms::to_exponential(TwoComplex::new(-1.0, 0.5)?) {
        println!("(-1,0.5): {e}");
    }
    Ok(())
}
