// Differential testing against brute force over M₂(F₂) and M₂(F₃), and a
// seeded sampled sweep over M₃(F₅).

use std::error::Error;

use wcinv::ginverse::GInverseKind;
use wcinv::oracle::{self, Sample};
use wcinv::{Mat, Weight, F2, F3, F5};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = Mat::<F3>::from_ints([[1, 2], [0, 0]]);
    let e = Weight::new(Mat::from_ints([[1, 1], [1, 2]]))?;
    let sols = oracle::brute_solutions(GInverseKind::ECore, &a, Some(&e), None)?;
    println!("e-core solutions of {a} over F3: {}", sols.len());
    assert_eq!(sols.len(), 1);

    let r2 = oracle::sweep::<F2>(2, 1, None)?;
    println!(
        "M2(F2): {} checks, {} mismatches",
        r2.checked,
        r2.mismatches.len()
    );
    let r3 = oracle::sweep::<F3>(2, 2, None)?;
    println!(
        "M2(F3): {} checks, {} mismatches",
        r3.checked,
        r3.mismatches.len()
    );
    let r5 = oracle::sweep::<F5>(3, 1, Some(Sample { count: 3, seed: 1 }))?;
    println!(
        "M3(F5) sampled: {} checks, {} mismatches",
        r5.checked,
        r5.mismatches.len()
    );
    assert!(r2.mismatches.is_empty() && r3.mismatches.is_empty() && r5.mismatches.is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
