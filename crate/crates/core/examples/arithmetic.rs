//! Basic arithmetic, canonical coordinates and zero divisors.

use hypercx::{TwoComplex, Result};

fn main() -> Result<()> {
    let a: TwoComplex = "(3,1)".parse()?;
    let b: TwoComplex = "2-0.5*h".parse()?;

    println!("a = {a}, b = {b}");
    println!("a + b = {}", a + b);
    println!("a * b = {}", a * b);
    println!("a / b = {}", a.checked_div(b)?);
    println!("delta^2 = {}", TwoComplex::DELTA * TwoComplex::DELTA);

    // multiplication is componentwise in (v+, v-)
    let (ca, cb) = (a.to_canonical(), b.to_canonical());
    println!("canonical a = ({}, {}), b = ({}, {})", ca.v_plus, ca.v_minus, cb.v_plus, cb.v_minus);
    let prod = (ca * cb).to_twocomplex();
    println!("product via canonical coordinates = {prod}");

    println!("nu(a) = {}, nu(b) = {}, nu(ab) = {}", a.nu(), b.nu(), (a * b).nu());
    println!("|a| = {}, amplitude(a) = {}", a.modulus(), a.amplitude()?);

    let (ep, em) = TwoComplex::idempotents();
    let back = ep * ca.v_plus + em * ca.v_minus;
    println!("e+ = {ep}, e- = {em}; v+ e+ + v- e- = {back}");

    // numbers on x = ±y have no inverse and multiply to zero
    let p = TwoComplex::new(2.0, 2.0)?;
    let q = TwoComplex::new(5.0, -5.0)?;
    println!("{p} * {q} = {}", p * q);
    match p.inverse() {
        Ok(_) => unreachable!(),
        Err(e) => println!("inverse of {p}: {e}"),
    }
    Ok(())
}
