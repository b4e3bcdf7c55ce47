// e-core and f-dual-core inverses under non-trivial weights, with a
// certificate serialized to JSON and replayed.

use std::error::Error;

use wcinv::codec;
use wcinv::ginverse::{self, GInverseKind};
use wcinv::{Mat, Rational, Weight};

type M = Mat<Rational>;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = M::from_ints([[1, 1], [0, 0]]);
    let e = Weight::new(M::from_ints([[2, 1], [1, 1]]))?;
    let f = Weight::new(M::from_ints([[1, 0], [0, 3]]))?;

    let core = ginverse::e_core(&a, &e)?.map_err(|m| m.to_string())?;
    println!("e-core of {a} under e = {}:\n  {}", e.mat(), core.value);
    let report = ginverse::verify(GInverseKind::ECore, &a, &core.value, Some(&e), None)?;
    for (eq, ok) in &report.results {
        println!("  {} {}", eq.label(), if *ok { "holds" } else { "FAILS" });
    }
    assert!(report.holds());

    let dual = ginverse::f_dual_core(&a, &f)?.map_err(|m| m.to_string())?;
    println!("f-dual-core under f = {}:\n  {}", f.mat(), dual.value);

    // Certificates survive a JSON round trip.
    let json = codec::certificate_to_json(&core);
    let back = codec::certificate_from_json::<Rational>(&json)?;
    assert_eq!(back, core);
    assert!(back.check_witnesses(&a, Some(&e), None)?.is_empty());

    // With e = 1 the classical core inverse is recovered.
    let plain = ginverse::e_core(&a, &Weight::identity(2))?.map_err(|m| m.to_string())?;
    println!("core inverse (e = 1): {}", plain.value);
    assert_eq!(plain.value, M::from_ints([[1, 0], [0, 0]]));

    let nil = M::from_ints([[0, 1], [0, 0]]);
    if let Err(miss) = ginverse::e_core(&nil, &e)? {
        println!("nilpotent: {miss}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
