//! Idempotent/unit characterizations of the e-core and f-dual-core inverses,
//! the Gram-type formulas, and weighted-EP detection.
//!
//! Both directions are provided: `decompose*` turns a known inverse into a
//! certificate (element, unit), and the `*_from_*` functions rebuild the
//! inverse from any certificate satisfying the hypotheses. Reconstructions
//! validate every hypothesis first and reject violations with
//! [`Error::InvalidCertificate`].

use rand::Rng;

use crate::error::{Error, Outcome, Result};
use crate::ginverse::{self, GInverseKind, MAX_POWER};
use crate::matrix::{left_null_space, row_times, Mat, Weight};
use crate::oracle;
use crate::random::random_mat_with;
use crate::scalar::StarScalar;

/// Which clause of the characterization a certificate realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Idempotent p with unit u = aⁿ + p.
    IdemP,
    /// Element s with unit v = aⁿ + s.
    ElemS,
    /// Idempotent q with unit w = aⁿ(1−q) + q (core) or (1−q)aⁿ + q (dual).
    IdemQ,
    /// Element t with unit z = aⁿ(1−t) + t (core) or (1−t)aⁿ + t (dual).
    ElemT,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::IdemP, Flavor::ElemS, Flavor::IdemQ, Flavor::ElemT];

    pub fn letter(self) -> &'static str {
        match self {
            Flavor::IdemP => "p",
            Flavor::ElemS => "s",
            Flavor::IdemQ => "q",
            Flavor::ElemT => "t",
        }
    }

    pub fn from_letter(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.letter() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown flavor {s:?}")))
    }

    pub fn requires_idempotent(self) -> bool {
        matches!(self, Flavor::IdemP | Flavor::IdemQ)
    }

    fn uses_complement(self) -> bool {
        matches!(self, Flavor::IdemQ | Flavor::ElemT)
    }
}

/// Core side: weight e, element annihilates a from the left (element·a = 0).
/// Dual side: weight f, element annihilates a from the right (a·element = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Core,
    Dual,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Core => "core",
            Side::Dual => "dual",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Side::Core),
            "dual" => Ok(Side::Dual),
            other => Err(Error::Malformed(format!("unknown side {other:?}"))),
        }
    }

    pub fn kind(self) -> GInverseKind {
        match self {
            Side::Core => GInverseKind::ECore,
            Side::Dual => GInverseKind::FDualCore,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<S> {
    pub flavor: Flavor,
    pub side: Side,
    pub n: u32,
    pub element: Mat<S>,
    pub unit: Mat<S>,
}

fn check_n(n: u32) -> Result<()> {
    if (1..=MAX_POWER).contains(&n) {
        Ok(())
    } else {
        Err(Error::PowerOutOfRange {
            n,
            min: 1,
            max: MAX_POWER,
        })
    }
}

/// The unit attached to `element` by the flavor's formula.
pub fn unit_for<S: StarScalar>(
    a: &Mat<S>,
    element: &Mat<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
) -> Mat<S> {
    let an = a.pow(n);
    if !flavor.uses_complement() {
        return &an + element;
    }
    let comp = element.complement();
    match side {
        Side::Core => &(&an * &comp) + element,
        Side::Dual => &(&comp * &an) + element,
    }
}

/// The exact inverse (e-core or f-dual-core) of `a`, as a negative outcome
/// when it does not exist.
fn side_inverse<S: StarScalar>(a: &Mat<S>, w: &Weight<S>, side: Side) -> Result<Outcome<Mat<S>>> {
    let cert = match side {
        Side::Core => ginverse::e_core(a, w)?,
        Side::Dual => ginverse::f_dual_core(a, w)?,
    };
    Ok(cert.map(|c| c.value))
}

/// Decompose a known inverse into a certificate of the given flavor. For the
/// element flavors (s, t) the canonical idempotent itself is used as the
/// element.
pub fn decompose<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
) -> Result<Outcome<Decomposition<S>>> {
    check_n(n)?;
    let x = match side_inverse(a, w, side)? {
        Ok(x) => x,
        Err(miss) => return Ok(Err(miss)),
    };
    let element = match side {
        Side::Core => (a * &x).complement(),
        Side::Dual => (&x * a).complement(),
    };
    let unit = unit_for(a, &element, n, flavor, side);
    if !unit.is_invertible() {
        return Err(Error::Inconsistent(format!(
            "unit of the {} decomposition is singular",
            flavor.letter()
        )));
    }
    Ok(Ok(Decomposition {
        flavor,
        side,
        n,
        element,
        unit,
    }))
}

/// p = 1 − a·a^{e,#}, u = aⁿ + p.
pub fn decompose_idempotent<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    n: u32,
) -> Result<Outcome<Decomposition<S>>> {
    decompose(a, e, n, Flavor::IdemP, Side::Core)
}

/// q = 1 − a·a^{e,#}, w = aⁿ(1−q) + q.
pub fn decompose_q<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    n: u32,
) -> Result<Outcome<Decomposition<S>>> {
    decompose(a, e, n, Flavor::IdemQ, Side::Core)
}

/// Dual-side decomposition from the f-dual-core inverse x: element 1 − x·a.
pub fn dual_decompose<S: StarScalar>(
    a: &Mat<S>,
    f: &Weight<S>,
    n: u32,
    flavor: Flavor,
) -> Result<Outcome<Decomposition<S>>> {
    decompose(a, f, n, flavor, Side::Dual)
}

/// Validate every hypothesis of the certificate and return the unit's inverse.
pub fn validate<S: StarScalar>(a: &Mat<S>, w: &Weight<S>, d: &Decomposition<S>) -> Result<Mat<S>> {
    check_n(d.n)?;
    a.same_dim(w.mat())?;
    a.same_dim(&d.element)?;
    a.same_dim(&d.unit)?;
    let invalid = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
    let el = &d.element;
    if d.flavor.requires_idempotent() && !el.is_idempotent() {
        return invalid("element is not idempotent");
    }
    if !el.is_hermitian_wrt(w) {
        return invalid("weight·element is not Hermitian");
    }
    let annihilates = match d.side {
        Side::Core => (el * a).is_zero(),
        Side::Dual => (a * el).is_zero(),
    };
    if !annihilates {
        return invalid(match d.side {
            Side::Core => "element·a ≠ 0",
            Side::Dual => "a·element ≠ 0",
        });
    }
    if d.unit != unit_for(a, el, d.n, d.flavor, d.side) {
        return invalid("unit does not match the flavor's formula");
    }
    d.unit
        .inverse()
        .ok_or_else(|| Error::InvalidCertificate("unit is not invertible".into()))
}

/// Rebuild the inverse from a validated certificate and re-verify it.
pub fn reconstruct<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Mat<S>> {
    let ui = validate(a, w, d)?;
    let el = &d.element;
    let comp = el.complement();
    let n = d.n;
    let lead = a.pow(n.saturating_sub(1));
    let x = match (d.side, d.flavor, n) {
        (Side::Core, Flavor::IdemP, 1) => &ui * &comp,
        (Side::Core, Flavor::ElemS, 1) => &(&ui * a) * &ui,
        (Side::Core, Flavor::IdemQ, 1) => &comp * &ui,
        (Side::Core, Flavor::ElemT, 1) => &(&(&ui * a) * &comp) * &ui,
        (Side::Core, Flavor::IdemP | Flavor::ElemS, _) => &lead * &ui,
        (Side::Core, Flavor::IdemQ | Flavor::ElemT, _) => &(&lead * &comp) * &ui,
        (Side::Dual, Flavor::IdemP, 1) => &comp * &ui,
        (Side::Dual, Flavor::ElemS, 1) => &(&ui * a) * &ui,
        (Side::Dual, Flavor::IdemQ, 1) => &ui * &comp,
        (Side::Dual, Flavor::ElemT, 1) => &(&(&ui * &comp) * a) * &ui,
        (Side::Dual, Flavor::IdemP | Flavor::ElemS, _) => &ui * &lead,
        (Side::Dual, Flavor::IdemQ, _) => &(&comp * &lead) * &ui,
        // (1−t)a^{n−1}z⁻¹ fails for non-idempotent t; z·x = (1−t)a^{n−1} holds.
        (Side::Dual, Flavor::ElemT, _) => &(&ui * &comp) * &lead,
    };
    let kind = d.side.kind();
    let (e, f) = match d.side {
        Side::Core => (Some(w), None),
        Side::Dual => (None, Some(w)),
    };
    if !ginverse::satisfies(kind, a, &x, e, f) {
        return Err(Error::Inconsistent(format!(
            "{} reconstruction from a valid {} certificate fails the {kind} equations",
            d.side.name(),
            d.flavor.letter()
        )));
    }
    Ok(x)
}

fn element_cert<S: StarScalar>(
    a: &Mat<S>,
    element: &Mat<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
) -> Result<Decomposition<S>> {
    check_n(n)?;
    a.same_dim(element)?;
    Ok(Decomposition {
        flavor,
        side,
        n,
        element: element.clone(),
        unit: unit_for(a, element, n, flavor, side),
    })
}

fn expect_flavor<S>(d: &Decomposition<S>, flavor: Flavor, side: Side) -> Result<()> {
    if d.flavor == flavor && d.side == side {
        Ok(())
    } else {
        Err(Error::InvalidCertificate(format!(
            "expected a {} {} certificate",
            side.name(),
            flavor.letter()
        )))
    }
}

/// u⁻¹(1−p) for n = 1, a^{n−1}u⁻¹ for n ≥ 2.
pub fn core_from_pu<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Mat<S>> {
    expect_flavor(d, Flavor::IdemP, Side::Core)?;
    reconstruct(a, e, d)
}

/// v⁻¹av⁻¹ for n = 1, a^{n−1}v⁻¹ for n ≥ 2, with v = aⁿ + s.
pub fn core_from_s<S: StarScalar>(a: &Mat<S>, e: &Weight<S>, s: &Mat<S>, n: u32) -> Result<Mat<S>> {
    reconstruct(a, e, &element_cert(a, s, n, Flavor::ElemS, Side::Core)?)
}

/// (1−q)w⁻¹ for n = 1, a^{n−1}(1−q)w⁻¹ for n ≥ 2.
pub fn core_from_qw<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Mat<S>> {
    expect_flavor(d, Flavor::IdemQ, Side::Core)?;
    reconstruct(a, e, d)
}

/// z⁻¹a(1−t)z⁻¹ for n = 1, a^{n−1}(1−t)z⁻¹ for n ≥ 2, with z = aⁿ(1−t) + t.
pub fn core_from_t<S: StarScalar>(a: &Mat<S>, e: &Weight<S>, t: &Mat<S>, n: u32) -> Result<Mat<S>> {
    reconstruct(a, e, &element_cert(a, t, n, Flavor::ElemT, Side::Core)?)
}

/// (1−p)u⁻¹ for n = 1, u⁻¹a^{n−1} for n ≥ 2.
pub fn dual_from_pu<S: StarScalar>(
    a: &Mat<S>,
    f: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Mat<S>> {
    expect_flavor(d, Flavor::IdemP, Side::Dual)?;
    reconstruct(a, f, d)
}

/// v⁻¹av⁻¹ for n = 1, v⁻¹a^{n−1} for n ≥ 2.
pub fn dual_from_s<S: StarScalar>(a: &Mat<S>, f: &Weight<S>, s: &Mat<S>, n: u32) -> Result<Mat<S>> {
    reconstruct(a, f, &element_cert(a, s, n, Flavor::ElemS, Side::Dual)?)
}

/// w⁻¹(1−q) for n = 1, (1−q)a^{n−1}w⁻¹ for n ≥ 2, with w = (1−q)aⁿ + q.
pub fn dual_from_qw<S: StarScalar>(
    a: &Mat<S>,
    f: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Mat<S>> {
    expect_flavor(d, Flavor::IdemQ, Side::Dual)?;
    reconstruct(a, f, d)
}

/// z⁻¹(1−t)az⁻¹ for n = 1, z⁻¹(1−t)a^{n−1} for n ≥ 2, with z = (1−t)aⁿ + t.
pub fn dual_from_t<S: StarScalar>(a: &Mat<S>, f: &Weight<S>, t: &Mat<S>, n: u32) -> Result<Mat<S>> {
    reconstruct(a, f, &element_cert(a, t, n, Flavor::ElemT, Side::Dual)?)
}

/// Attempts made by [`random_element_witness`] before giving up.
pub const WITNESS_RETRIES: usize = 32;

/// Sample an element certificate (flavor s or t) that is generally not
/// idempotent: p·w⁻¹·k·p with k a random Hermitian matrix and p the canonical
/// idempotent. w·(p w⁻¹ k p) = p*·k·p is Hermitian and the annihilation
/// condition is inherited from p. Retries until the unit is invertible.
///
/// Returns `Ok(None)` when no invertible unit was found within
/// [`WITNESS_RETRIES`] attempts.
pub fn random_element_witness<S: StarScalar, R: Rng + ?Sized>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
    rng: &mut R,
) -> Result<Outcome<Option<Mat<S>>>> {
    if flavor.requires_idempotent() {
        return Err(Error::Malformed(
            "element witnesses are flavors s and t".into(),
        ));
    }
    let base = match decompose(a, w, n, Flavor::IdemP, side)? {
        Ok(d) => d.element,
        Err(miss) => return Ok(Err(miss)),
    };
    for _ in 0..WITNESS_RETRIES {
        let m: Mat<S> = random_mat_with(a.dim(), rng);
        let k = &m + &m.star();
        let candidate = &(&(&base * w.inv()) * &k) * &base;
        if unit_for(a, &candidate, n, flavor, side).is_invertible() {
            return Ok(Ok(Some(candidate)));
        }
    }
    Ok(Ok(None))
}

// ---------------------------------------------------------------------------
// Gram formulas

/// (a*ea + ep)⁻¹a*e with p = 1 − a·a^{e,#}.
pub fn gram_formula<S: StarScalar>(a: &Mat<S>, e: &Weight<S>) -> Result<Outcome<Mat<S>>> {
    let d = match decompose_idempotent(a, e, 1)? {
        Ok(d) => d,
        Err(miss) => return Ok(Err(miss)),
    };
    let a_star_e = &a.star() * e.mat();
    let gram = &(&a_star_e * a) + &(e.mat() * &d.element);
    let gi = gram
        .inverse()
        .ok_or_else(|| Error::Inconsistent("a*ea + ep is singular".into()))?;
    Ok(Ok(&gi * &a_star_e))
}

/// Outcome of [`gram_converse_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramCheck<S> {
    /// Whether a*ea + ep is invertible.
    pub invertible: bool,
    /// (a*ea + ep)⁻¹a*e, equal to the e-core inverse, when invertible.
    pub recovered: Option<Mat<S>>,
}

/// Given an idempotent p with (ep)* = ep and pa = 0, decide whether a*ea + ep
/// is invertible. In a matrix ring this already forces a to be e-core
/// invertible with inverse (a*ea + ep)⁻¹a*e; that is checked too.
pub fn gram_converse_check<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    p: &Mat<S>,
) -> Result<GramCheck<S>> {
    a.same_dim(e.mat())?;
    a.same_dim(p)?;
    if !p.is_idempotent() {
        return Err(Error::InvalidCertificate("p is not idempotent".into()));
    }
    if !p.is_hermitian_wrt(e) {
        return Err(Error::InvalidCertificate("ep is not Hermitian".into()));
    }
    if !(p * a).is_zero() {
        return Err(Error::InvalidCertificate("pa ≠ 0".into()));
    }
    let a_star_e = &a.star() * e.mat();
    let gram = &(&a_star_e * a) + &(e.mat() * p);
    let Some(gi) = gram.inverse() else {
        return Ok(GramCheck {
            invertible: false,
            recovered: None,
        });
    };
    let recovered = &gi * &a_star_e;
    match ginverse::e_core(a, e)? {
        Ok(c) if c.value == recovered => Ok(GramCheck {
            invertible: true,
            recovered: Some(recovered),
        }),
        Ok(_) => Err(Error::Inconsistent(
            "Gram formula disagrees with the e-core inverse".into(),
        )),
        Err(_) => Err(Error::Inconsistent(
            "a*ea + ep is invertible but a has no e-core inverse".into(),
        )),
    }
}

/// f⁻¹a*(af⁻¹a* + qf⁻¹)⁻¹ with q = 1 − a_{f,#}·a.
pub fn dual_gram_formula<S: StarScalar>(a: &Mat<S>, f: &Weight<S>) -> Result<Outcome<Mat<S>>> {
    let d = match dual_decompose(a, f, 1, Flavor::IdemQ)? {
        Ok(d) => d,
        Err(miss) => return Ok(Err(miss)),
    };
    let finv_astar = f.inv() * &a.star();
    let gram = &(a * &finv_astar) + &(&d.element * f.inv());
    let gi = gram
        .inverse()
        .ok_or_else(|| Error::Inconsistent("af⁻¹a* + qf⁻¹ is singular".into()))?;
    Ok(Ok(&finv_astar * &gi))
}

// ---------------------------------------------------------------------------
// Weighted-EP

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpVerdict<S> {
    pub weighted_ep: bool,
    pub e_core: Option<Mat<S>>,
    pub f_dual_core: Option<Mat<S>>,
    /// 1 − a^#·a, present when weighted-EP.
    pub p: Option<Mat<S>>,
}

/// Weighted-EP with respect to (e, f): both one-sided core inverses exist and
/// coincide.
pub fn is_weighted_ep<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
) -> Result<EpVerdict<S>> {
    let ec = side_inverse(a, e, Side::Core)?.ok();
    let fc = side_inverse(a, f, Side::Dual)?.ok();
    let weighted_ep = matches!((&ec, &fc), (Some(x), Some(y)) if x == y);
    let p = if weighted_ep {
        let g = ginverse::group_inverse(a)
            .map_err(|_| Error::Inconsistent("EP element without a group inverse".into()))?;
        Some((&g.value * a).complement())
    } else {
        None
    };
    Ok(EpVerdict {
        weighted_ep,
        e_core: ec,
        f_dual_core: fc,
        p,
    })
}

/// Idempotent certificate of weighted-EP-ness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpCertificate<S> {
    pub n: u32,
    /// p = 1 − a^#·a
    pub p: Mat<S>,
    /// aⁿ + p
    pub unit: Mat<S>,
}

/// For a weighted-EP element, p = 1 − a^#·a with (ep)* = ep, (fp)* = fp,
/// ap = pa = 0 and aⁿ + p invertible. `Ok(None)` when a is not weighted-EP.
pub fn ep_decompose<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
    n: u32,
) -> Result<Option<EpCertificate<S>>> {
    check_n(n)?;
    let verdict = is_weighted_ep(a, e, f)?;
    let Some(p) = verdict.p else {
        return Ok(None);
    };
    let g = ginverse::group_inverse(a)
        .map_err(|_| Error::Inconsistent("EP element without a group inverse".into()))?;
    let fail = |what: &str| Err(Error::Inconsistent(format!("EP idempotent: {what}")));
    if p != (a * &g.value).complement() {
        return fail("1 − a^#a ≠ 1 − aa^#");
    }
    if !p.is_idempotent() || !p.is_hermitian_wrt(e) || !p.is_hermitian_wrt(f) {
        return fail("not an (e, f)-projection");
    }
    if !(a * &p).is_zero() || !(&p * a).is_zero() {
        return fail("does not annihilate a");
    }
    let unit = &a.pow(n) + &p;
    if !unit.is_invertible() {
        return fail("aⁿ + p is singular");
    }
    Ok(Some(EpCertificate { n, p, unit }))
}

/// Certify weighted-EP from an element s with (es)* = es, (fs)* = fs,
/// as = sa = 0 and aⁿ + s invertible. Returns the common inverse
/// a^{e,#} = a_{f,#} = a^#.
pub fn ep_from_s<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
    s: &Mat<S>,
    n: u32,
) -> Result<Mat<S>> {
    if !(a * s).is_zero() || !(s * a).is_zero() {
        return Err(Error::InvalidCertificate(
            "s must satisfy as = sa = 0".into(),
        ));
    }
    let core = core_from_s(a, e, s, n)?;
    let dual = dual_from_s(a, f, s, n)?;
    if core != dual {
        return Err(Error::Inconsistent(
            "e-core and f-dual-core inverses differ under the EP hypotheses".into(),
        ));
    }
    Ok(core)
}

// ---------------------------------------------------------------------------
// Uniqueness

/// Check that the idempotent of the given flavor (p or q, core side) is unique.
///
/// On finite backends every idempotent satisfying the clause is enumerated and
/// the set must be exactly the canonical one. On infinite backends the
/// left-annihilator identity ∘(aⁿ) = ∘(1−p) is checked on bases of both sides.
pub fn uniqueness_audit<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    n: u32,
    flavor: Flavor,
) -> Result<Outcome<bool>> {
    if !flavor.requires_idempotent() {
        return Err(Error::Malformed(
            "uniqueness holds for the idempotent flavors p and q".into(),
        ));
    }
    let d = match decompose(a, e, n, flavor, Side::Core)? {
        Ok(d) => d,
        Err(miss) => return Ok(Err(miss)),
    };
    if S::elements().is_some() {
        let space = oracle::EnumerationSpace::for_backend::<S>(a.dim());
        if space.is_exhaustive() {
            let all = oracle::brute_idempotent_certificates(a, e, n, flavor, Side::Core)?;
            return Ok(Ok(all == vec![d.element]));
        }
    }
    let an = a.pow(n);
    let comp = d.element.complement();
    let forward = left_null_space(&an)
        .iter()
        .all(|v| row_times(v, &comp).iter().all(S::is_zero));
    let backward = left_null_space(&comp)
        .iter()
        .all(|v| row_times(v, &an).iter().all(S::is_zero));
    Ok(Ok(forward && backward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational as Q, F2, F3};

    type M = Mat<Q>;

    fn id() -> Weight<Q> {
        Weight::identity(2)
    }

    fn idem() -> M {
        M::from_ints([[1, 1], [0, 0]])
    }

    fn core_of_idem() -> M {
        M::from_ints([[1, 0], [0, 0]])
    }

    #[test]
    fn decompose_idempotent_examples() {
        let d = decompose_idempotent(&M::identity(2), &id(), 1)
            .unwrap()
            .unwrap();
        assert!(d.element.is_zero());
        assert_eq!(d.unit, M::identity(2));

        let d = decompose_idempotent(&M::zeros(2), &id(), 1)
            .unwrap()
            .unwrap();
        assert_eq!(d.element, M::identity(2));
        assert_eq!(d.unit, M::identity(2));

        let d = decompose_idempotent(&idem(), &id(), 1).unwrap().unwrap();
        assert_eq!(d.element, M::from_ints([[0, 0], [0, 1]]));
        assert_eq!(d.unit, M::from_ints([[1, 1], [0, 1]]));
    }

    #[test]
    fn decompose_q_examples() {
        let d = decompose_q(&M::identity(2), &id(), 1).unwrap().unwrap();
        assert!(d.element.is_zero());
        assert_eq!(d.unit, M::identity(2));
        let d = decompose_q(&idem(), &id(), 1).unwrap().unwrap();
        assert_eq!(d.element, M::from_ints([[0, 0], [0, 1]]));
        assert_eq!(d.unit, M::identity(2));
        let d = decompose_q(&M::zeros(2), &id(), 1).unwrap().unwrap();
        assert_eq!((d.element, d.unit), (M::identity(2), M::identity(2)));
    }

    #[test]
    fn core_from_certificates() {
        let a = idem();
        for n in 1..=3 {
            let d = decompose_idempotent(&a, &id(), n).unwrap().unwrap();
            assert_eq!(core_from_pu(&a, &id(), &d).unwrap(), core_of_idem());
            let d = decompose_q(&a, &id(), n).unwrap().unwrap();
            assert_eq!(core_from_qw(&a, &id(), &d).unwrap(), core_of_idem());
        }
        let s = M::from_ints([[0, 0], [0, 2]]);
        assert_eq!(
            unit_for(&a, &s, 1, Flavor::ElemS, Side::Core),
            M::from_ints([[1, 1], [0, 2]])
        );
        assert_eq!(core_from_s(&a, &id(), &s, 1).unwrap(), core_of_idem());
        let t = M::from_ints([[0, 0], [0, 3]]);
        assert_eq!(core_from_t(&a, &id(), &t, 1).unwrap(), core_of_idem());

        assert_eq!(
            core_from_s(&M::identity(2), &id(), &M::zeros(2), 1).unwrap(),
            M::identity(2)
        );
        assert_eq!(
            core_from_t(&M::identity(2), &id(), &M::zeros(2), 1).unwrap(),
            M::identity(2)
        );
        assert!(core_from_s(&M::zeros(2), &id(), &M::identity(2), 1)
            .unwrap()
            .is_zero());
        assert!(core_from_t(&M::zeros(2), &id(), &M::identity(2), 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn dual_from_certificates() {
        let a = idem().star();
        let expected = core_of_idem().star();
        for n in 1..=3 {
            for flavor in Flavor::ALL {
                let d = dual_decompose(&a, &id(), n, flavor).unwrap().unwrap();
                assert_eq!(
                    reconstruct(&a, &id(), &d).unwrap(),
                    expected,
                    "{flavor:?} n={n}"
                );
            }
        }
        assert!(dual_from_s(&M::zeros(2), &id(), &M::identity(2), 1)
            .unwrap()
            .is_zero());
        assert_eq!(
            dual_from_t(&M::identity(2), &id(), &M::zeros(2), 2).unwrap(),
            M::identity(2)
        );
    }

    #[test]
    fn reconstruction_rejects_bad_certificates() {
        let a = idem();
        // s not e-Hermitian.
        let bad = M::from_ints([[0, 0], [1, 1]]);
        assert!(matches!(
            core_from_s(&a, &id(), &bad, 1),
            Err(Error::InvalidCertificate(_))
        ));
        // Non-idempotent element under an idempotent flavor.
        let d = Decomposition {
            flavor: Flavor::IdemP,
            side: Side::Core,
            n: 1,
            element: M::from_ints([[0, 0], [0, 2]]),
            unit: M::from_ints([[1, 1], [0, 2]]),
        };
        assert!(matches!(
            core_from_pu(&a, &id(), &d),
            Err(Error::InvalidCertificate(_))
        ));
        // Unit that does not match its formula.
        let mut d = decompose_idempotent(&a, &id(), 1).unwrap().unwrap();
        d.unit = M::identity(2);
        assert!(matches!(
            core_from_pu(&a, &id(), &d),
            Err(Error::InvalidCertificate(_))
        ));
        // Wrong flavor for the entry point.
        let d = decompose_q(&a, &id(), 1).unwrap().unwrap();
        assert!(core_from_pu(&a, &id(), &d).is_err());
        // Singular unit: t = 0 with a nilpotent... a = 0 gives z = 0.
        assert!(matches!(
            core_from_t(&M::zeros(2), &id(), &M::zeros(2), 1),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(
            gram_formula(&M::identity(2), &id()).unwrap().unwrap(),
            M::identity(2)
        );
        assert_eq!(
            gram_formula(&idem(), &id()).unwrap().unwrap(),
            core_of_idem()
        );
        assert!(gram_formula(&M::zeros(2), &id())
            .unwrap()
            .unwrap()
            .is_zero());
        assert!(gram_formula(&M::from_ints([[0, 1], [0, 0]]), &id())
            .unwrap()
            .is_err());

        assert_eq!(
            dual_gram_formula(&M::identity(2), &id()).unwrap().unwrap(),
            M::identity(2)
        );
        assert_eq!(
            dual_gram_formula(&idem().star(), &id()).unwrap().unwrap(),
            core_of_idem().star()
        );
        assert!(dual_gram_formula(&M::zeros(2), &id())
            .unwrap()
            .unwrap()
            .is_zero());
    }

    #[test]
    fn gram_converse_examples() {
        let c = gram_converse_check(&M::identity(2), &id(), &M::zeros(2)).unwrap();
        assert!(c.invertible);
        let nil = M::from_ints([[0, 1], [0, 0]]);
        assert!(matches!(
            gram_converse_check(&nil, &id(), &M::from_ints([[1, 0], [0, 0]])),
            Err(Error::InvalidCertificate(_))
        ));
        let c = gram_converse_check(&idem(), &id(), &M::from_ints([[0, 0], [0, 1]])).unwrap();
        assert_eq!(c.recovered, Some(core_of_idem()));
    }

    #[test]
    fn weighted_ep_examples() {
        let inv = M::from_ints([[2, 1], [1, 1]]);
        let e = Weight::new(M::from_ints([[2, 1], [1, 3]])).unwrap();
        assert!(is_weighted_ep(&inv, &e, &id()).unwrap().weighted_ep);

        let proj = M::from_ints([[1, 0], [0, 0]]);
        assert!(is_weighted_ep(&proj, &id(), &id()).unwrap().weighted_ep);
        let d = ep_decompose(&proj, &id(), &id(), 1).unwrap().unwrap();
        assert_eq!(d.p, proj.complement());
        assert_eq!(d.unit, M::identity(2));

        let v = is_weighted_ep(&idem(), &id(), &id()).unwrap();
        assert!(!v.weighted_ep);
        assert_eq!(v.e_core, Some(core_of_idem()));
        // a_# = a†·a·a^# = a†·a.
        assert_eq!(
            v.f_dual_core,
            Some(M::from_ints([[1, 1], [1, 1]]).scale(&Q::new(1, 2).unwrap()))
        );
        assert!(ep_decompose(&idem(), &id(), &id(), 1).unwrap().is_none());

        let a = M::from_ints([[2, 0], [0, 0]]);
        let e = Weight::new(M::from_ints([[1, 0], [0, 3]])).unwrap();
        let f = Weight::new(M::from_ints([[2, 0], [0, 1]])).unwrap();
        let d = ep_decompose(&a, &e, &f, 2).unwrap().unwrap();
        assert_eq!(d.p, M::from_ints([[0, 0], [0, 1]]));
        assert_eq!(d.unit, M::from_ints([[4, 0], [0, 1]]));
        let s = d.p.scale(&Q::from(2));
        assert_eq!(
            ep_from_s(&a, &e, &f, &s, 2).unwrap(),
            M::from_ints([[1, 0], [0, 0]]).scale(&Q::new(1, 2).unwrap())
        );
    }

    #[test]
    fn uniqueness_examples() {
        let e2 = Weight::<F2>::identity(2);
        assert_eq!(
            uniqueness_audit(&Mat::<F2>::identity(2), &e2, 1, Flavor::IdemP).unwrap(),
            Ok(true)
        );
        let e3 = Weight::<F3>::identity(2);
        let a = Mat::<F3>::from_ints([[1, 0], [0, 0]]);
        assert_eq!(
            uniqueness_audit(&a, &e3, 1, Flavor::IdemP).unwrap(),
            Ok(true)
        );
        assert_eq!(
            uniqueness_audit(&a, &e3, 2, Flavor::IdemQ).unwrap(),
            Ok(true)
        );
        assert_eq!(
            uniqueness_audit(&M::zeros(2), &id(), 1, Flavor::IdemP).unwrap(),
            Ok(true)
        );
        assert_eq!(
            uniqueness_audit(&idem(), &id(), 2, Flavor::IdemQ).unwrap(),
            Ok(true)
        );
    }
}
