// Closed forms (a*ea + ep)⁻¹a*e and f⁻¹a*(af⁻¹a* + qf⁻¹)⁻¹.

use std::error::Error;

use wcinv::characterize;
use wcinv::ginverse;
use wcinv::{Mat, Rational, Weight};

type M = Mat<Rational>;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = M::from_ints([[1, 2, 0], [0, 0, 0], [1, 0, 1]]);
    let e = Weight::new(M::from_ints([[2, 0, 1], [0, 1, 0], [1, 0, 1]]))?;
    let f = Weight::new(M::from_ints([[1, 1, 0], [1, 2, 0], [0, 0, 3]]))?;

    let gram = characterize::gram_formula(&a, &e)?.map_err(|m| m.to_string())?;
    let core = ginverse::e_core(&a, &e)?.map_err(|m| m.to_string())?.value;
    println!("(a*ea + ep)^-1 a*e = {gram}");
    assert_eq!(gram, core);

    let dual = characterize::dual_gram_formula(&a, &f)?.map_err(|m| m.to_string())?;
    println!("f^-1 a*(af^-1 a* + qf^-1)^-1 = {dual}");
    assert_eq!(
        dual,
        ginverse::f_dual_core(&a, &f)?
            .map_err(|m| m.to_string())?
            .value
    );

    // Converse: any e-projection killing a from the left whose Gram sum is
    // invertible recovers the inverse.
    let p = characterize::decompose_idempotent(&a, &e, 1)?
        .map_err(|m| m.to_string())?
        .element;
    let check = characterize::gram_converse_check(&a, &e, &p)?;
    println!(
        "converse: invertible {}, recovered {:?}",
        check.invertible,
        check.recovered.is_some()
    );
    assert_eq!(check.recovered, Some(core));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
