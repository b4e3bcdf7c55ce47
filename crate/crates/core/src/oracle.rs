//! Brute-force ground truth on finite matrix rings M_n(𝔽ₚ).
//!
//! Candidates are enumerated in lexicographic order of their row-major
//! entries (entry (0,0) most significant), filtered by the defining equations
//! of each kind, and compared with the closed-form constructions.

use rand::Rng;
use serde::Serialize;
use serde_json::Value;

use crate::characterize::{self, Flavor, Side};
use crate::codec;
use crate::error::{Error, Result};
use crate::ginverse::{self, Equation, GInverseKind};
use crate::matrix::{Mat, Weight};
use crate::random::rng_from_seed;
use crate::scalar::StarScalar;

/// Largest candidate space enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Candidates drawn per instance when the space is too large to enumerate.
pub const SAMPLED_CANDIDATES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationSpace {
    pub p: u32,
    pub dim: usize,
    /// p^(dim²), saturating at u128::MAX.
    pub total: u128,
}

impl EnumerationSpace {
    pub fn new(p: u32, dim: usize) -> Self {
        let total = u32::try_from(dim * dim)
            .ok()
            .and_then(|exp| (p as u128).checked_pow(exp))
            .unwrap_or(u128::MAX);
        Self { p, dim, total }
    }

    /// Space for a finite backend. Panics for infinite backends.
    pub fn for_backend<S: StarScalar>(dim: usize) -> Self {
        let elems = S::elements().expect("enumeration needs a finite backend");
        Self::new(elems.len() as u32, dim)
    }

    pub fn is_exhaustive(&self) -> bool {
        self.total <= EXHAUSTIVE_LIMIT
    }

    fn require_exhaustive(&self) -> Result<()> {
        if self.is_exhaustive() {
            Ok(())
        } else {
            Err(Error::SpaceTooLarge {
                size: self.total,
                limit: EXHAUSTIVE_LIMIT,
            })
        }
    }

    /// The `index`-th matrix in lexicographic order.
    pub fn nth<S: StarScalar>(&self, elems: &[S], mut index: u128) -> Mat<S> {
        let cells = self.dim * self.dim;
        let mut digits = vec![0usize; cells];
        for d in digits.iter_mut().rev() {
            *d = (index % self.p as u128) as usize;
            index /= self.p as u128;
        }
        Mat::from_fn(self.dim, |i, j| elems[digits[i * self.dim + j]].clone())
    }

    /// Every matrix of the space exactly once, in lexicographic order.
    pub fn iter<S: StarScalar>(&self) -> Result<impl Iterator<Item = Mat<S>>> {
        self.require_exhaustive()?;
        let elems = finite_elements::<S>()?;
        let space = *self;
        Ok((0..self.total).map(move |k| space.nth(&elems, k)))
    }
}

fn finite_elements<S: StarScalar>() -> Result<Vec<S>> {
    S::elements().ok_or_else(|| Error::BackendMismatch {
        expected: "Fp".into(),
        found: S::BACKEND.tag().into(),
    })
}

fn space_of<S: StarScalar>(a: &Mat<S>) -> Result<EnumerationSpace> {
    finite_elements::<S>()?;
    Ok(EnumerationSpace::for_backend::<S>(a.dim()))
}

/// Every x in M_n(𝔽ₚ) satisfying all defining equations of `kind`.
pub fn brute_solutions<S: StarScalar>(
    kind: GInverseKind,
    a: &Mat<S>,
    e: Option<&Weight<S>>,
    f: Option<&Weight<S>>,
) -> Result<Vec<Mat<S>>> {
    if kind.needs_e() && e.is_none() {
        return Err(Error::MissingWeight { kind, weight: 'e' });
    }
    if kind.needs_f() && f.is_none() {
        return Err(Error::MissingWeight { kind, weight: 'f' });
    }
    let space = space_of(a)?;
    Ok(space
        .iter()?
        .filter(|x| ginverse::satisfies(kind, a, x, e, f))
        .collect())
}

fn satisfies_clause<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
    p: &Mat<S>,
) -> bool {
    let annihilates = match side {
        Side::Core => (p * a).is_zero(),
        Side::Dual => (a * p).is_zero(),
    };
    annihilates
        && p.is_idempotent()
        && p.is_hermitian_wrt(w)
        && characterize::unit_for(a, p, n, flavor, side).is_invertible()
}

/// Every idempotent satisfying the flavor's clause: weight-Hermitian,
/// annihilating a on the side's side, with invertible unit.
pub fn brute_idempotent_certificates<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
) -> Result<Vec<Mat<S>>> {
    if !flavor.requires_idempotent() {
        return Err(Error::Malformed(
            "idempotent certificates have flavor p or q".into(),
        ));
    }
    let space = space_of(a)?;
    Ok(space
        .iter()?
        .filter(|p| satisfies_clause(a, w, n, flavor, side, p))
        .collect())
}

/// One disagreement between a construction and the brute-force solution set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub a: Value,
    pub e: Value,
    pub f: Value,
    pub constructed: Option<Value>,
    pub brute_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

struct Recorder<'a, S> {
    a: &'a Mat<S>,
    e: &'a Weight<S>,
    f: &'a Weight<S>,
    report: CrossCheckReport,
}

impl<'a, S: StarScalar> Recorder<'a, S> {
    fn new(a: &'a Mat<S>, e: &'a Weight<S>, f: &'a Weight<S>) -> Self {
        Self {
            a,
            e,
            f,
            report: CrossCheckReport {
                checked: 0,
                mismatches: Vec::new(),
            },
        }
    }

    /// `unique`: the construction must be the single brute-force solution.
    /// Otherwise it must merely be one of them.
    fn compare(
        &mut self,
        check: &str,
        constructed: Option<&Mat<S>>,
        brute: &[Mat<S>],
        unique: bool,
    ) {
        self.report.checked += 1;
        let agree = match constructed {
            None => brute.is_empty(),
            Some(x) if unique => brute.len() == 1 && brute[0] == *x,
            Some(x) => brute.contains(x),
        };
        if !agree {
            self.report.mismatches.push(Mismatch {
                check: check.to_string(),
                a: codec::mat_to_json(self.a),
                e: codec::mat_to_json(self.e.mat()),
                f: codec::mat_to_json(self.f.mat()),
                constructed: constructed.map(codec::mat_to_json),
                brute_count: brute.len(),
            });
        }
    }

    /// Sampled-space variant: every sampled solution must be the constructed one.
    fn compare_sampled(&mut self, check: &str, constructed: Option<&Mat<S>>, hits: &[Mat<S>]) {
        self.report.checked += 1;
        let agree = match constructed {
            None => hits.is_empty(),
            Some(x) => hits.iter().all(|h| h == x),
        };
        if !agree {
            self.report.mismatches.push(Mismatch {
                check: format!("{check} (sampled)"),
                a: codec::mat_to_json(self.a),
                e: codec::mat_to_json(self.e.mat()),
                f: codec::mat_to_json(self.f.mat()),
                constructed: constructed.map(codec::mat_to_json),
                brute_count: hits.len(),
            });
        }
    }
}

fn constructed<S: StarScalar>(
    kind: GInverseKind,
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
) -> Result<Option<Mat<S>>> {
    Ok(ginverse::construct(kind, a, e, f)?.ok().map(|c| c.value))
}

fn power_value<S: StarScalar>(
    side: Side,
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
) -> Result<Option<Mat<S>>> {
    let c = match side {
        Side::Core => ginverse::e_core_via_power(a, w, n)?,
        Side::Dual => ginverse::f_dual_core_via_power(a, w, n)?,
    };
    Ok(c.ok().map(|c| c.value))
}

fn decomposition_element<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
) -> Result<Option<Mat<S>>> {
    Ok(characterize::decompose(a, w, n, flavor, side)?
        .ok()
        .map(|d| d.element))
}

/// Compare every construction for (a, e, f) against exhaustive enumeration:
/// group, {1,3e}, {1,4f}, weighted MP, e-core, f-dual-core, the power
/// representations (n ≥ 2) and the p/q idempotent certificates on both sides.
pub fn cross_check<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
    n: u32,
) -> Result<CrossCheckReport> {
    a.same_dim(e.mat())?;
    a.same_dim(f.mat())?;
    let space = space_of(a)?;
    space.require_exhaustive()?;
    let candidates: Vec<Mat<S>> = space.iter()?.collect();
    let mut rec = Recorder::new(a, e, f);
    check_instance(&mut rec, &candidates, n, true)?;
    Ok(rec.report)
}

fn check_instance<S: StarScalar>(
    rec: &mut Recorder<'_, S>,
    candidates: &[Mat<S>],
    n: u32,
    exhaustive: bool,
) -> Result<()> {
    let (a, e, f) = (rec.a, rec.e, rec.f);
    // Everything except {1,3e}/{1,4f} includes (1) and (2).
    let inner: Vec<&Mat<S>> = candidates
        .iter()
        .filter(|x| Equation::Inner.holds(a, x, None, None))
        .collect();
    let outer: Vec<&Mat<S>> = inner
        .iter()
        .copied()
        .filter(|x| Equation::Outer.holds(a, x, None, None))
        .collect();
    for kind in GInverseKind::ALL {
        let pool = match kind {
            GInverseKind::OneThreeE | GInverseKind::OneFourF => &inner,
            _ => &outer,
        };
        let hits: Vec<Mat<S>> = pool
            .iter()
            .filter(|x| ginverse::satisfies(kind, a, x, Some(e), Some(f)))
            .map(|x| (*x).clone())
            .collect();
        let built = constructed(kind, a, e, f)?;
        let unique = !matches!(kind, GInverseKind::OneThreeE | GInverseKind::OneFourF);
        if exhaustive {
            rec.compare(kind.name(), built.as_ref(), &hits, unique);
        } else if unique {
            rec.compare_sampled(kind.name(), built.as_ref(), &hits);
        } else if built.is_none() && !hits.is_empty() {
            rec.compare_sampled(kind.name(), None, &hits);
        }
        if matches!(kind, GInverseKind::ECore | GInverseKind::FDualCore) && n >= 2 {
            let side = if kind == GInverseKind::ECore {
                Side::Core
            } else {
                Side::Dual
            };
            let w = if side == Side::Core { e } else { f };
            let via = power_value(side, a, w, n)?;
            let label = format!("{}_via_power(n={n})", kind.name());
            if exhaustive {
                rec.compare(&label, via.as_ref(), &hits, true);
            } else {
                rec.compare_sampled(&label, via.as_ref(), &hits);
            }
        }
    }
    for side in [Side::Core, Side::Dual] {
        let w = if side == Side::Core { e } else { f };
        for flavor in [Flavor::IdemP, Flavor::IdemQ] {
            let hits: Vec<Mat<S>> = candidates
                .iter()
                .filter(|p| satisfies_clause(a, w, n, flavor, side, p))
                .cloned()
                .collect();
            let built = decomposition_element(a, w, n, flavor, side)?;
            let label = format!("{}_{}(n={n})", side.name(), flavor.letter());
            if exhaustive {
                rec.compare(&label, built.as_ref(), &hits, true);
            } else {
                rec.compare_sampled(&label, built.as_ref(), &hits);
            }
        }
    }
    Ok(())
}

/// Every invertible Hermitian matrix of the space (symmetric, since the
/// conjugation on 𝔽ₚ is the identity).
pub fn all_weights<S: StarScalar>(dim: usize) -> Result<Vec<Weight<S>>> {
    let elems = finite_elements::<S>()?;
    // Enumerate the upper triangle only.
    let cells: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i..dim).map(move |j| (i, j)))
        .collect();
    let count = (elems.len() as u128)
        .checked_pow(cells.len() as u32)
        .filter(|c| *c <= EXHAUSTIVE_LIMIT)
        .ok_or(Error::SpaceTooLarge {
            size: u128::MAX,
            limit: EXHAUSTIVE_LIMIT,
        })?;
    let p = elems.len() as u128;
    let mut out = Vec::new();
    for mut k in 0..count {
        let mut m = Mat::zeros(dim);
        for &(i, j) in cells.iter().rev() {
            let v = elems[(k % p) as usize].clone();
            k /= p;
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
        if let Ok(w) = Weight::new(m) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Sampling parameters for spaces beyond the exhaustive limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpace {
    pub p: u32,
    pub dim: usize,
    pub total: u128,
    pub exhaustive: bool,
    pub sampled: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub space: SweepSpace,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Differential sweep over M_dim(𝔽ₚ).
///
/// Without `sample`, every a is paired with every invertible symmetric weight
/// pair (e, f); this requires the space to be within [`EXHAUSTIVE_LIMIT`].
/// With `sample`, `count` random instances are drawn, and candidate solution
/// sets are enumerated exhaustively when the space allows it, otherwise from
/// [`SAMPLED_CANDIDATES`] random candidates (a one-sided check).
pub fn sweep<S: StarScalar>(dim: usize, n: u32, sample: Option<Sample>) -> Result<SweepReport> {
    let elems = finite_elements::<S>()?;
    let space = EnumerationSpace::for_backend::<S>(dim);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut absorb = |r: CrossCheckReport| {
        checked += r.checked;
        mismatches.extend(r.mismatches);
    };
    match sample {
        None => {
            space.require_exhaustive()?;
            let candidates: Vec<Mat<S>> = space.iter()?.collect();
            let weights = all_weights::<S>(dim)?;
            for a in &candidates {
                for e in &weights {
                    for f in &weights {
                        let mut rec = Recorder::new(a, e, f);
                        check_instance(&mut rec, &candidates, n, true)?;
                        absorb(rec.report);
                    }
                }
            }
        }
        Some(Sample { count, seed }) => {
            let mut rng = rng_from_seed(seed);
            let exhaustive = space.is_exhaustive();
            let full: Vec<Mat<S>> = if exhaustive {
                space.iter()?.collect()
            } else {
                Vec::new()
            };
            for _ in 0..count {
                let a = space.nth(&elems, rng.gen_range(0..space.total));
                let e = random_symmetric_weight(dim, &elems, &mut rng);
                let f = random_symmetric_weight(dim, &elems, &mut rng);
                let drawn: Vec<Mat<S>>;
                let candidates = if exhaustive {
                    &full
                } else {
                    drawn = (0..SAMPLED_CANDIDATES)
                        .map(|_| space.nth(&elems, rng.gen_range(0..space.total)))
                        .chain(known_candidates(&a, &e, &f)?)
                        .collect();
                    &drawn
                };
                let mut rec = Recorder::new(&a, &e, &f);
                check_instance(&mut rec, candidates, n, exhaustive)?;
                absorb(rec.report);
            }
        }
    }
    Ok(SweepReport {
        space: SweepSpace {
            p: space.p,
            dim,
            total: space.total,
            exhaustive: sample.is_none(),
            sampled: sample.map(|s| s.count),
        },
        checked,
        mismatches,
    })
}

/// Constructed values, added to sampled candidate pools so that a sampled
/// check still sees the solution it is comparing against.
fn known_candidates<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
) -> Result<Vec<Mat<S>>> {
    let mut out = Vec::new();
    for kind in GInverseKind::ALL {
        out.extend(constructed(kind, a, e, f)?);
    }
    Ok(out)
}

fn random_symmetric_weight<S: StarScalar, R: Rng + ?Sized>(
    dim: usize,
    elems: &[S],
    rng: &mut R,
) -> Weight<S> {
    loop {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let v = elems[rng.gen_range(0..elems.len())].clone();
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        if let Ok(w) = Weight::new(m) {
            return w;
        }
    }
}
