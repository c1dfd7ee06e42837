//! Vacuum expectations of field derivatives, exact and in floating point.

use freeboson::algebra::{Insertion, PlainWord};
use freeboson::correlator::{expect_plain, kernel};
use freeboson::ComplexScalar;

fn main() -> freeboson::Result<()> {
    let points: Vec<ComplexScalar> = (0..4).map(ComplexScalar::integer).collect();
    let word = PlainWord::first_order(points.clone());
    println!("<[1,0][1,1][1,2][1,3]> = {}", expect_plain(&word)?);

    let float = PlainWord::first_order(points.iter().map(ComplexScalar::to_float));
    println!("same word in floats    = {}", expect_plain(&float)?);

    let z = ComplexScalar::rational(1, 2) + ComplexScalar::i() * ComplexScalar::rational(1, 3);
    println!("C(2, z, 3, 0) for z = {z}: {}", kernel(2, &z, 3, &ComplexScalar::zero())?);

    let mixed = PlainWord::new(vec![
        Insertion::new(2, ComplexScalar::rational(1, 4)),
        Insertion::new(1, ComplexScalar::rational(-1, 2)),
        Insertion::new(1, z.clone()),
        Insertion::new(2, ComplexScalar::i() * ComplexScalar::rational(-1, 5)),
    ]);
    println!("{mixed} -> {}", expect_plain(&mixed)?);

    let pole = PlainWord::first_order([z.clone(), z]);
    println!("coincident points: {}", expect_plain(&pole).unwrap_err());
    Ok(())
}
