// Group inverse from the two memberships a ∈ a²R and a ∈ Ra².

use std::error::Error;

use wcinv::ginverse::{self, GInverseKind};
use wcinv::{Mat, Rational};

type M = Mat<Rational>;

pub fn run() -> Result<(), Box<dyn Error>> {
    let idem = M::from_ints([[1, 1], [0, 0]]);
    let g = ginverse::group_inverse(&idem)?;
    println!("a = {idem}\na# = {}", g.value);
    assert_eq!(g.value, idem);
    for (name, w) in &g.witnesses {
        println!("  witness {name} = {w}");
    }

    let a = M::from_ints([[2, 1], [0, 0]]);
    let g = ginverse::group_inverse(&a)?;
    let report = ginverse::verify(GInverseKind::Group, &a, &g.value, None, None)?;
    println!(
        "a = {a}\na# = {}, equations hold: {}",
        g.value,
        report.holds()
    );
    assert!(report.holds());

    let nil = M::from_ints([[0, 1], [0, 0]]);
    let miss = ginverse::group_inverse(&nil).unwrap_err();
    println!("nilpotent: {miss}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
