// The three exact backends: rationals, Gaussian rationals and the prime
// fields F2, F3, F5. Each carries its own involution.

use std::error::Error;

use wcinv::{GaussianRational, Rational, StarScalar, F5};

pub fn run() -> Result<(), Box<dyn Error>> {
    let half: Rational = "2/4".parse()?;
    println!("2/4 = {half}, inverse {}", half.inv()?);
    assert_eq!(half.to_string(), "1/2");

    let z = GaussianRational::from_ints(1, 2);
    let zinv = z.inv()?;
    println!("(1+2i)* = {}, (1+2i)^-1 = {zinv}", z.conj());
    assert_eq!(z.clone() * &zinv, GaussianRational::one());

    let three = F5::new(3);
    println!("3^-1 in F5 = {}", three.inv()?);
    assert_eq!(three.inv()?, F5::new(2));
    assert!(F5::zero().inv().is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
