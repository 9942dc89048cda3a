//! Line integrals, path independence and singular lines.

use hypercx::analysis::{self, Path, TwoComplexFunction};
use hypercx::{Result, TwoComplex};

fn tc(x: f64, y: f64) -> TwoComplex {
    TwoComplex::new_unchecked(x, y)
}

fn main() -> Result<()> {
    let square = Path::closed(vec![tc(0.0, 0.0), tc(1.0, 0.0), tc(1.0, 1.0), tc(0.0, 1.0)])?;
    let u = TwoComplexFunction::new(|u| u);
    let r = analysis::integrate(&u, &square, 64)?;
    println!("loop integral of u: {} (estimate {:e})", r.value, r.error_estimate);

    let u2 = TwoComplexFunction::new(|u| u * u);
    let direct = Path::open(vec![tc(0.0, 0.0), tc(1.0, 1.0)])?;
    let detour = Path::open(vec![tc(0.0, 0.0), tc(1.0, 0.0), tc(1.0, 1.0)])?;
    for (name, path) in [("direct", &direct), ("detour", &detour)] {
        let r = analysis::integrate(&u2, path, 64)?;
        println!("int u^2 du {name}: {}", r.value);
    }
    println!("antiderivative: {}", (tc(1.0, 1.0) * tc(1.0, 1.0) * tc(1.0, 1.0)).scale(1.0 / 3.0));

    // 1/u is singular on the whole of x = y and x = -y
    let (l1, l2) = analysis::singular_lines(TwoComplex::ZERO);
    println!("singular lines of 1/u: {l1}, {l2}");
    let inv = TwoComplexFunction::fallible(|u| u.inverse()).with_singularity(TwoComplex::ZERO);
    let crossing: Path = "open\n(1,0)\n(1,2)\n".parse()?;
    match analysis::integrate(&inv, &crossing, 64) {
        Ok(r) => println!("unexpected value {}", r.value),
        Err(e) => println!("crossing path: {e}"),
    }
    Ok(())
}
