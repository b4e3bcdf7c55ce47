// The e-core inverse as a^{n−1}·s*·e from a ∈ R(a*)ⁿea ∩ Raⁿ, and dually.
// Every power gives the same inverse.

use std::error::Error;

use wcinv::ginverse;
use wcinv::random::{random_group_invertible, random_weight, Signature};
use wcinv::{GaussianRational, Mat};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: Mat<GaussianRational> = random_group_invertible(3, 2, 11);
    let e = random_weight(3, Signature::Definite, 12);
    let f = random_weight(3, Signature::Definite, 13);
    println!("a = {a}");

    let direct = ginverse::e_core(&a, &e)?.map_err(|m| m.to_string())?.value;
    let dual = ginverse::f_dual_core(&a, &f)?
        .map_err(|m| m.to_string())?
        .value;
    for n in 2..=4 {
        let via = ginverse::e_core_via_power(&a, &e, n)?.map_err(|m| m.to_string())?;
        let dvia = ginverse::f_dual_core_via_power(&a, &f, n)?.map_err(|m| m.to_string())?;
        println!(
            "n = {n}: e-core agrees {}, f-dual-core agrees {}",
            via.value == direct,
            dvia.value == dual
        );
        assert_eq!(via.value, direct);
        assert_eq!(dvia.value, dual);
    }

    let (r_cond, core_cond) = ginverse::lemma_r_core_check(&a, &e, 2)?;
    println!("a ∈ Ra² ∩ R(a*)²ea: {r_cond}, e-core invertible: {core_cond}");
    assert_eq!(r_cond, core_cond);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
