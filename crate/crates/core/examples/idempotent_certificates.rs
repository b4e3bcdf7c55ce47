// Certificates (element, unit) for the e-core and f-dual-core inverses:
// decompose a known inverse, then rebuild it from the certificate alone.

use std::error::Error;

use wcinv::characterize::{self, Flavor, Side};
use wcinv::ginverse;
use wcinv::random::{random_group_invertible, random_weight, rng_from_seed, Signature};
use wcinv::{Mat, Rational};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: Mat<Rational> = random_group_invertible(3, 2, 5);
    let e = random_weight(3, Signature::Indefinite, 6);
    let core = ginverse::e_core(&a, &e)?.map_err(|m| m.to_string())?.value;
    println!("a = {a}\ne-core = {core}");

    let p = characterize::decompose_idempotent(&a, &e, 1)?
        .map_err(|m| m.to_string())?
        .element;
    println!("p = {p}");
    for n in 1..=3 {
        for flavor in Flavor::ALL {
            let d = characterize::decompose(&a, &e, n, flavor, Side::Core)?
                .map_err(|m| m.to_string())?;
            assert_eq!(characterize::reconstruct(&a, &e, &d)?, core);
        }
        println!("n = {n}: p, s, q and t certificates rebuild the inverse");
    }

    // A non-idempotent element witness s.
    let mut rng = rng_from_seed(7);
    let s = characterize::random_element_witness(&a, &e, 2, Flavor::ElemS, Side::Core, &mut rng)?
        .map_err(|m| m.to_string())?
        .ok_or("no invertible unit found")?;
    println!("s = {s} (idempotent: {})", s.is_idempotent());
    assert_eq!(characterize::core_from_s(&a, &e, &s, 2)?, core);

    // The idempotent p is unique.
    let unique =
        characterize::uniqueness_audit(&a, &e, 1, Flavor::IdemP)?.map_err(|m| m.to_string())?;
    println!("p unique: {unique}");
    assert!(unique);

    // A tampered certificate is rejected.
    let mut d = characterize::decompose_idempotent(&a, &e, 1)?.map_err(|m| m.to_string())?;
    d.unit = Mat::identity(3);
    println!(
        "tampered: {}",
        characterize::reconstruct(&a, &e, &d).unwrap_err()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
