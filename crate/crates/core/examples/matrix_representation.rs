//! The 2×2 real matrix picture: `x + δy ↔ [[x, y], [y, x]]`.

use hypercx::{Matrix2, Result, TwoComplex};

fn main() -> Result<()> {
    let u = TwoComplex::new(1.5, -0.5)?;
    let w = TwoComplex::new(0.25, 2.0)?;

    let mu = u.to_matrix();
    println!("U =\n{mu}");
    println!("det U = {}  nu(u) = {}", mu.det(), u.nu());

    let prod = mu.mul(&w.to_matrix());
    println!("U W represents {}", prod.to_twocomplex().expect("twocomplex shape"));
    println!("u w            = {}", u * w);

    // T U T^-1 is diagonal with the canonical coordinates on the diagonal
    let d = u.diagonalize();
    let c = u.to_canonical();
    println!("T U T^-1 =\n{d}");
    println!("(v+, v-) = ({}, {})", c.v_plus, c.v_minus);
    let t = Matrix2::diagonalizer();
    println!("T =\n{t}");
    Ok(())
}
