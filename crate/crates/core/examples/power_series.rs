//! Evaluating power series and estimating where they converge.

use hypercx::series::{self, PowerSeries};
use hypercx::{Result, TwoComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let geometric = PowerSeries::new(vec![TwoComplex::ONE; 40])?;
    let u = TwoComplex::new(0.3, 0.2)?;
    println!("sum u^l at {u}: {}  (1/(1-u) = {})", geometric.eval(u), (TwoComplex::ONE - u).inverse()?);

    let region = geometric.estimate_region()?;
    println!("geometric: c0 = {}, c+ = {}, c- = {}", region.c0, region.c_plus, region.c_minus);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!("disc |u| < c0 inside the rectangle: {}", series::region_inclusion_check(&region, 10_000, &mut rng)?);

    let exp = PowerSeries::exp_truncation(30);
    let r = exp.estimate_region()?;
    println!("exp: c0 = {}, c+ = {}, c- = {}", r.c0, r.c_plus, r.c_minus);

    // different radii along the two canonical directions
    let text = "# a_l with A+ = 1, A- = 2^-l\n".to_string()
        + &(0..24)
            .map(|l| {
                let m = 0.5f64.powi(l);
                format!("({},{})\n", 0.5 * (1.0 + m), 0.5 * (1.0 - m))
            })
            .collect::<String>();
    let s: PowerSeries = text.parse()?;
    let r = s.estimate_region()?;
    println!("skewed: c0 = {}, c+ = {}, c- = {}", r.c0, r.c_plus, r.c_minus);

    let (lhs, rhs) = series::modulus_product_bound(TwoComplex::new(1.0, 1.0)?, TwoComplex::new(2.0, 2.0)?);
    println!("|u1 u2| = {lhs} <= sqrt2 |u1||u2| = {rhs}");
    Ok(())
}
