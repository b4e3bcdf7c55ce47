// Weighted-EP detection: a is EP with respect to (e, f) when its e-core and
// f-dual-core inverses coincide.

use std::error::Error;

use wcinv::characterize;
use wcinv::{Mat, Rational, Weight};

type M = Mat<Rational>;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = M::from_ints([[2, 0], [0, 0]]);
    let e = Weight::new(M::from_ints([[1, 0], [0, 3]]))?;
    let f = Weight::new(M::from_ints([[2, 0], [0, 1]]))?;
    let v = characterize::is_weighted_ep(&a, &e, &f)?;
    println!(
        "diag(2,0): weighted-EP {}, p = {:?}",
        v.weighted_ep,
        v.p.as_ref().map(|p| p.to_string())
    );
    assert!(v.weighted_ep);

    for n in 1..=3 {
        let cert = characterize::ep_decompose(&a, &e, &f, n)?.ok_or("not EP")?;
        println!("  n = {n}: a^n + p = {}", cert.unit);
        let x = characterize::ep_from_s(&a, &e, &f, &cert.p, n)?;
        assert_eq!(Some(x), v.e_core);
    }

    let b = M::from_ints([[1, 1], [0, 0]]);
    let id = Weight::identity(2);
    let v = characterize::is_weighted_ep(&b, &id, &id)?;
    println!(
        "[[1,1],[0,0]]: weighted-EP {}, e-core {}, f-dual-core {}",
        v.weighted_ep,
        v.e_core.as_ref().ok_or("no e-core")?,
        v.f_dual_core.as_ref().ok_or("no f-dual-core")?
    );
    assert!(!v.weighted_ep);
    assert!(characterize::ep_decompose(&b, &id, &id, 1)?.is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
