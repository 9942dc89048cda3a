//! A polynomial over the twocomplex numbers can factor in several ways.

use hypercx::polynomials::{self, TwoComplexPolynomial};
use hypercx::{Result, TwoComplex};

fn show(p: &TwoComplexPolynomial) -> Result<()> {
    let set = polynomials::enumerate_factorizations(p, polynomials::DEFAULT_DEGREE_CAP)?;
    println!("{} factorization(s), all verified: {}", set.len(), set.all_verified());
    for f in &set.factorizations {
        match f.real_roots() {
            Some(roots) => {
                let roots: Vec<String> = roots.iter().map(|r| format!("(u - {r})")).collect();
                println!("  {}   residual {:e}", roots.join(""), f.residual);
            }
            None => println!("  complex component roots {:?}", f.roots),
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    // u^2 - 1: in the file format, the degree and then a1, a2
    let p: TwoComplexPolynomial = "2\n(0,0)\n(-1,0)\n".parse()?;
    println!("u^2 - 1:");
    show(&p)?;

    let roots = [TwoComplex::new(1.0, 0.5)?, TwoComplex::new(-2.0, 0.25)?, TwoComplex::new(0.5, 3.0)?];
    let q = TwoComplexPolynomial::from_roots(&roots)?;
    println!("cubic with roots (1,0.5), (-2,0.25), (0.5,3):");
    show(&q)?;

    println!("u^2 + 1:");
    show(&"2\n0\n1\n".parse()?)?;
    Ok(())
}
