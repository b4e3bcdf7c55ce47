//! Construction and verification of group, {1,3e}, {1,4f}, weighted
//! Moore–Penrose, e-core and f-dual-core inverses.
//!
//! Every constructor re-checks its output against the defining equations of
//! its kind before returning, so a returned [`InverseCertificate`] is always
//! valid. Nonexistence is reported as [`NotInvertible`], never as an [`Error`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, NotInvertible, Outcome, Reason, Result};
use crate::matrix::{solve_left, solve_right, Mat, Weight};
use crate::scalar::StarScalar;

/// Largest power accepted by the power representations.
pub const MAX_POWER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GInverseKind {
    Group,
    OneThreeE,
    OneFourF,
    WeightedMp,
    ECore,
    FDualCore,
}

impl GInverseKind {
    pub const ALL: [GInverseKind; 6] = [
        GInverseKind::Group,
        GInverseKind::OneThreeE,
        GInverseKind::OneFourF,
        GInverseKind::WeightedMp,
        GInverseKind::ECore,
        GInverseKind::FDualCore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GInverseKind::Group => "group",
            GInverseKind::OneThreeE => "13e",
            GInverseKind::OneFourF => "14f",
            GInverseKind::WeightedMp => "wmp",
            GInverseKind::ECore => "ecore",
            GInverseKind::FDualCore => "fdualcore",
        }
    }

    /// Defining equations for this kind.
    pub fn equations(self) -> &'static [Equation] {
        use Equation::*;
        match self {
            GInverseKind::Group => &[Inner, Outer, Commute],
            GInverseKind::OneThreeE => &[Inner, ThreeE],
            GInverseKind::OneFourF => &[Inner, FourF],
            GInverseKind::WeightedMp => &[Inner, Outer, ThreeE, FourF],
            GInverseKind::ECore => &[Inner, Outer, ThreeE, Six, Seven],
            GInverseKind::FDualCore => &[Inner, Outer, FourF, Eight, Nine],
        }
    }

    pub fn needs_e(self) -> bool {
        self.equations().contains(&Equation::ThreeE)
    }

    pub fn needs_f(self) -> bool {
        self.equations().contains(&Equation::FourF)
    }
}

impl fmt::Display for GInverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GInverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GInverseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown inverse kind {s:?}")))
    }
}

/// The numbered defining equations, evaluated for a candidate x of a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Equation {
    /// (1) axa = a
    Inner,
    /// (2) xax = x
    Outer,
    /// (3e) (eax)* = eax
    ThreeE,
    /// (4f) (fxa)* = fxa
    FourF,
    /// (5) ax = xa
    Commute,
    /// (6) xa² = a
    Six,
    /// (7) ax² = x
    Seven,
    /// (8) a²x = a
    Eight,
    /// (9) x²a = x
    Nine,
}

impl Equation {
    pub fn label(self) -> &'static str {
        match self {
            Equation::Inner => "(1)",
            Equation::Outer => "(2)",
            Equation::ThreeE => "(3e)",
            Equation::FourF => "(4f)",
            Equation::Commute => "(5)",
            Equation::Six => "(6)",
            Equation::Seven => "(7)",
            Equation::Eight => "(8)",
            Equation::Nine => "(9)",
        }
    }

    /// Evaluate exactly. Weights must be present when the equation needs them.
    pub fn holds<S: StarScalar>(
        self,
        a: &Mat<S>,
        x: &Mat<S>,
        e: Option<&Weight<S>>,
        f: Option<&Weight<S>>,
    ) -> bool {
        match self {
            Equation::Inner => &(a * x) * a == *a,
            Equation::Outer => &(x * a) * x == *x,
            Equation::ThreeE => {
                let e = e.expect("(3e) needs e");
                (e.mat() * &(a * x)).is_hermitian()
            }
            Equation::FourF => {
                let f = f.expect("(4f) needs f");
                (f.mat() * &(x * a)).is_hermitian()
            }
            Equation::Commute => a * x == x * a,
            Equation::Six => &(x * a) * a == *a,
            Equation::Seven => &(a * x) * x == *x,
            Equation::Eight => &(a * a) * x == *a,
            Equation::Nine => &(x * x) * a == *x,
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Per-equation outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub kind: GInverseKind,
    pub results: Vec<(Equation, bool)>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    pub fn failed(&self) -> Vec<Equation> {
        self.results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(eq, _)| *eq)
            .collect()
    }
}

/// An inverse together with the witnesses it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseCertificate<S> {
    pub kind: GInverseKind,
    pub value: Mat<S>,
    pub witnesses: BTreeMap<String, Mat<S>>,
    /// Power used by a power representation, if any.
    pub n: Option<u32>,
}

impl<S: StarScalar> InverseCertificate<S> {
    fn new(kind: GInverseKind, value: Mat<S>) -> Self {
        Self {
            kind,
            value,
            witnesses: BTreeMap::new(),
            n: None,
        }
    }

    fn with_witness(mut self, name: &str, m: Mat<S>) -> Self {
        self.witnesses.insert(name.to_string(), m);
        self
    }

    /// Check every named witness against the membership equation it stands for.
    /// Returns the names of witnesses that fail; unknown names are an error.
    pub fn check_witnesses(
        &self,
        a: &Mat<S>,
        e: Option<&Weight<S>>,
        f: Option<&Weight<S>>,
    ) -> Result<Vec<String>> {
        let mut failed = Vec::new();
        let n = self.n.unwrap_or(1);
        for (name, w) in &self.witnesses {
            w.same_dim(a)?;
            let ok = match name.as_str() {
                // a = a²x
                "x" => &(a * a) * w == *a,
                // a = ya²
                "y" => &(w * a) * a == *a,
                // a = x·a*ea
                "x13e" => w * &weighted_gram(a, need(e, 'e', self.kind)?) == *a,
                // a = af⁻¹a*·y
                "y14f" => &dual_gram(a, need(f, 'f', self.kind)?) * w == *a,
                // a = s(a*)ⁿea
                "s" => {
                    let e = need(e, 'e', self.kind)?;
                    w * &(&(&a.star().pow(n) * e.mat()) * a) == *a
                }
                // a = af⁻¹(a*)ⁿt
                "t" => {
                    let f = need(f, 'f', self.kind)?;
                    &(&(a * f.inv()) * &a.star().pow(n)) * w == *a
                }
                // a = r·aⁿ
                "r" => w * &a.pow(n) == *a,
                // a = aⁿ·r
                "l" => &a.pow(n) * w == *a,
                // Component inverses are re-verified by kind.
                "group" => satisfies(GInverseKind::Group, a, w, e, f),
                "inv13e" => satisfies(GInverseKind::OneThreeE, a, w, e, f),
                "inv14f" => satisfies(GInverseKind::OneFourF, a, w, e, f),
                other => {
                    return Err(Error::InvalidCertificate(format!(
                        "unknown witness {other:?}"
                    )))
                }
            };
            if !ok {
                failed.push(name.clone());
            }
        }
        Ok(failed)
    }
}

fn need<S>(w: Option<&Weight<S>>, name: char, kind: GInverseKind) -> Result<&Weight<S>> {
    w.ok_or(Error::MissingWeight { kind, weight: name })
}

fn check_weight<S: StarScalar>(a: &Mat<S>, w: &Weight<S>) -> Result<()> {
    a.same_dim(w.mat())
}

fn check_power(n: u32, min: u32) -> Result<()> {
    if (min..=MAX_POWER).contains(&n) {
        Ok(())
    } else {
        Err(Error::PowerOutOfRange {
            n,
            min,
            max: MAX_POWER,
        })
    }
}

/// a*·e·a
fn weighted_gram<S: StarScalar>(a: &Mat<S>, e: &Weight<S>) -> Mat<S> {
    &(&a.star() * e.mat()) * a
}

/// a·f⁻¹·a*
fn dual_gram<S: StarScalar>(a: &Mat<S>, f: &Weight<S>) -> Mat<S> {
    &(a * f.inv()) * &a.star()
}

/// Evaluate every defining equation of `kind` for the candidate x.
pub fn verify<S: StarScalar>(
    kind: GInverseKind,
    a: &Mat<S>,
    x: &Mat<S>,
    e: Option<&Weight<S>>,
    f: Option<&Weight<S>>,
) -> Result<VerifyReport> {
    if kind.needs_e() && e.is_none() {
        return Err(Error::MissingWeight { kind, weight: 'e' });
    }
    if kind.needs_f() && f.is_none() {
        return Err(Error::MissingWeight { kind, weight: 'f' });
    }
    a.same_dim(x)?;
    for w in e.into_iter().chain(f) {
        check_weight(a, w)?;
    }
    let results = kind
        .equations()
        .iter()
        .map(|&eq| (eq, eq.holds(a, x, e, f)))
        .collect();
    Ok(VerifyReport { kind, results })
}

/// Short-circuiting form of [`verify`] for hot loops. Panics if a required
/// weight is missing.
pub fn satisfies<S: StarScalar>(
    kind: GInverseKind,
    a: &Mat<S>,
    x: &Mat<S>,
    e: Option<&Weight<S>>,
    f: Option<&Weight<S>>,
) -> bool {
    kind.equations().iter().all(|eq| eq.holds(a, x, e, f))
}

fn finish<S: StarScalar>(
    cert: InverseCertificate<S>,
    a: &Mat<S>,
    e: Option<&Weight<S>>,
    f: Option<&Weight<S>>,
) -> Outcome<InverseCertificate<S>> {
    let failed: Vec<String> = cert
        .kind
        .equations()
        .iter()
        .filter(|eq| !eq.holds(a, &cert.value, e, f))
        .map(|eq| eq.label().to_string())
        .collect();
    if failed.is_empty() {
        Ok(cert)
    } else {
        Err(NotInvertible::new(
            cert.kind,
            Reason::EquationsFailed(failed),
        ))
    }
}

/// Group inverse a^# = y·a·x from a = a²x = ya².
pub fn group_inverse<S: StarScalar>(a: &Mat<S>) -> Outcome<InverseCertificate<S>> {
    let kind = GInverseKind::Group;
    let a2 = a * a;
    let right = solve_right(&a2, a);
    if !right.consistent {
        return Err(NotInvertible::new(kind, Reason::NotInA2R));
    }
    let left = solve_left(&a2, a);
    if !left.consistent {
        return Err(NotInvertible::new(kind, Reason::NotInRA2));
    }
    let value = &(&left.solution * a) * &right.solution;
    let cert = InverseCertificate::new(kind, value)
        .with_witness("x", right.solution)
        .with_witness("y", left.solution);
    finish(cert, a, None, None)
}

/// {1,3e}-inverse x*·e from a = x·a*ea.
pub fn inv_13e<S: StarScalar>(a: &Mat<S>, e: &Weight<S>) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, e)?;
    let kind = GInverseKind::OneThreeE;
    let sol = solve_left(&weighted_gram(a, e), a);
    if !sol.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInRAstarEA)));
    }
    let value = &sol.solution.star() * e.mat();
    let cert = InverseCertificate::new(kind, value).with_witness("x13e", sol.solution);
    Ok(finish(cert, a, Some(e), None))
}

/// {1,4f}-inverse f⁻¹·y* from a = af⁻¹a*·y.
pub fn inv_14f<S: StarScalar>(a: &Mat<S>, f: &Weight<S>) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, f)?;
    let kind = GInverseKind::OneFourF;
    let sol = solve_right(&dual_gram(a, f), a);
    if !sol.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInAFinvAstarR)));
    }
    let value = f.inv() * &sol.solution.star();
    let cert = InverseCertificate::new(kind, value).with_witness("y14f", sol.solution);
    Ok(finish(cert, a, None, Some(f)))
}

fn prerequisite(kind: GInverseKind, missing: NotInvertible) -> NotInvertible {
    NotInvertible::new(
        kind,
        Reason::Prerequisite(missing.kind, Box::new(missing.reason)),
    )
}

/// e-core inverse a^#·a·a^(1,3e).
pub fn e_core<S: StarScalar>(a: &Mat<S>, e: &Weight<S>) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, e)?;
    let kind = GInverseKind::ECore;
    let group = match group_inverse(a) {
        Ok(g) => g,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let inner = match inv_13e(a, e)? {
        Ok(c) => c,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let value = &(&group.value * a) * &inner.value;
    let cert = InverseCertificate::new(kind, value)
        .with_witness("group", group.value)
        .with_witness("inv13e", inner.value);
    Ok(finish(cert, a, Some(e), None))
}

/// f-dual-core inverse a^(1,4f)·a·a^#.
pub fn f_dual_core<S: StarScalar>(
    a: &Mat<S>,
    f: &Weight<S>,
) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, f)?;
    let kind = GInverseKind::FDualCore;
    let group = match group_inverse(a) {
        Ok(g) => g,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let inner = match inv_14f(a, f)? {
        Ok(c) => c,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let value = &(&inner.value * a) * &group.value;
    let cert = InverseCertificate::new(kind, value)
        .with_witness("group", group.value)
        .with_witness("inv14f", inner.value);
    Ok(finish(cert, a, None, Some(f)))
}

/// e-core inverse a^{n−1}·s*·e from a = s(a*)ⁿea together with a ∈ Raⁿ.
pub fn e_core_via_power<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    n: u32,
) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, e)?;
    check_power(n, 2)?;
    let kind = GInverseKind::ECore;
    let star_n = a.star().pow(n);
    let s = solve_left(&(&(&star_n * e.mat()) * a), a);
    if !s.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInRAstarNEA(n))));
    }
    let r = solve_left(&a.pow(n), a);
    if !r.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInRAn(n))));
    }
    let value = &(&a.pow(n - 1) * &s.solution.star()) * e.mat();
    let mut cert = InverseCertificate::new(kind, value)
        .with_witness("s", s.solution)
        .with_witness("r", r.solution);
    cert.n = Some(n);
    Ok(finish(cert, a, Some(e), None))
}

/// f-dual-core inverse f⁻¹·t*·a^{n−1} from a = af⁻¹(a*)ⁿt together with a ∈ aⁿR.
pub fn f_dual_core_via_power<S: StarScalar>(
    a: &Mat<S>,
    f: &Weight<S>,
    n: u32,
) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, f)?;
    check_power(n, 2)?;
    let kind = GInverseKind::FDualCore;
    let star_n = a.star().pow(n);
    let t = solve_right(&(&(a * f.inv()) * &star_n), a);
    if !t.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInAFinvAstarNR(n))));
    }
    let l = solve_right(&a.pow(n), a);
    if !l.consistent {
        return Ok(Err(NotInvertible::new(kind, Reason::NotInAnR(n))));
    }
    let value = &(f.inv() * &t.solution.star()) * &a.pow(n - 1);
    let mut cert = InverseCertificate::new(kind, value)
        .with_witness("t", t.solution)
        .with_witness("l", l.solution);
    cert.n = Some(n);
    Ok(finish(cert, a, None, Some(f)))
}

/// Weighted Moore–Penrose inverse, built as a^(1,4f)·a·a^(1,3e) and checked
/// against all four weighted Penrose equations.
pub fn weighted_mp<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
) -> Result<Outcome<InverseCertificate<S>>> {
    check_weight(a, e)?;
    check_weight(a, f)?;
    let kind = GInverseKind::WeightedMp;
    let left = match inv_13e(a, e)? {
        Ok(c) => c,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let right = match inv_14f(a, f)? {
        Ok(c) => c,
        Err(miss) => return Ok(Err(prerequisite(kind, miss))),
    };
    let value = &(&right.value * a) * &left.value;
    let cert = InverseCertificate::new(kind, value)
        .with_witness("inv13e", left.value)
        .with_witness("inv14f", right.value);
    Ok(finish(cert, a, Some(e), Some(f)))
}

/// Decide (a ∈ Ra*ea ∩ aⁿR, a ∈ R(a*)ⁿea). The two answers always agree.
pub fn lemma_r_core_check<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    n: u32,
) -> Result<(bool, bool)> {
    check_weight(a, e)?;
    check_power(n, 2)?;
    let lhs =
        solve_left(&weighted_gram(a, e), a).consistent && solve_right(&a.pow(n), a).consistent;
    let rhs = solve_left(&(&(&a.star().pow(n) * e.mat()) * a), a).consistent;
    Ok((lhs, rhs))
}

/// Construct an inverse of the given kind, dispatching on the weights the kind needs.
pub fn construct<S: StarScalar>(
    kind: GInverseKind,
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
) -> Result<Outcome<InverseCertificate<S>>> {
    match kind {
        GInverseKind::Group => {
            check_weight(a, e)?;
            Ok(group_inverse(a))
        }
        GInverseKind::OneThreeE => inv_13e(a, e),
        GInverseKind::OneFourF => inv_14f(a, f),
        GInverseKind::WeightedMp => weighted_mp(a, e, f),
        GInverseKind::ECore => e_core(a, e),
        GInverseKind::FDualCore => f_dual_core(a, f),
    }
}
