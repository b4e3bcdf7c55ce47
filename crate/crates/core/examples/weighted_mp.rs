// Weighted Moore–Penrose inverse a^(1,4f)·a·a^(1,3e) and its four equations.

use std::error::Error;

use wcinv::ginverse::{self, GInverseKind};
use wcinv::{Mat, Rational, Weight};

type M = Mat<Rational>;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = M::from_ints([[1, 2], [2, 4]]);
    let e = Weight::new(M::from_ints([[1, 0], [0, 2]]))?;
    let f = Weight::new(M::from_ints([[3, 1], [1, 1]]))?;

    let mp = ginverse::weighted_mp(&a, &e, &f)?.map_err(|m| m.to_string())?;
    println!("a = {a}\na†(e,f) = {}", mp.value);
    let report = ginverse::verify(GInverseKind::WeightedMp, &a, &mp.value, Some(&e), Some(&f))?;
    for (eq, ok) in &report.results {
        println!("  {} {ok}", eq.label());
    }
    assert!(report.holds());

    // Identity weights give the ordinary pseudoinverse a*/25 of this rank-one a.
    let id = Weight::identity(2);
    let plain = ginverse::weighted_mp(&a, &id, &id)?.map_err(|m| m.to_string())?;
    assert_eq!(plain.value, a.star().scale(&Rational::new(1, 25)?));
    println!("a† = {}", plain.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
