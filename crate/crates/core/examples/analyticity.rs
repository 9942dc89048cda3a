//! Derivatives, the Cauchy-Riemann-type relations and the wave equation.

use hypercx::analysis::{self, TwoComplexFunction};
use hypercx::series::PowerSeries;
use hypercx::{functions, Error, Result, TwoComplex};

fn main() -> Result<()> {
    let p = TwoComplex::new(0.3, 0.2)?;
    let exp = TwoComplexFunction::fallible(functions::exp);
    println!("d/du exp at {p} = {}  (exp = {})", analysis::derivative(&exp, p, 1e-5)?, functions::exp(p)?);

    for (name, f) in [
        ("exp", TwoComplexFunction::fallible(functions::exp)),
        ("sin", TwoComplexFunction::new(functions::sin)),
        ("u^3", TwoComplexFunction::new(|u| u * u * u)),
    ] {
        let r = analysis::check_cr(&f, p, 1e-4)?;
        println!("{name}: max residual {:e}", r.max_residual());
    }

    // x ↦ x is smooth but not analytic in this algebra
    let projx = TwoComplexFunction::new(|u| TwoComplex::from_real(u.x()));
    match analysis::derivative(&projx, p, 1e-5) {
        Err(Error::DirectionMismatch { along_x, along_delta }) => {
            println!("projx: along x {along_x}, along delta {along_delta}")
        }
        other => println!("projx: unexpected {other:?}"),
    }

    let s = PowerSeries::new(vec![TwoComplex::ONE; 4])?;
    let u0 = TwoComplex::new(0.5, 0.25)?;
    let r = analysis::taylor_recenter(&s, u0);
    let u = TwoComplex::new(0.7, 0.1)?;
    println!("recentred series agrees: {} vs {}", r.eval(u - u0), s.eval(u));
    Ok(())
}
