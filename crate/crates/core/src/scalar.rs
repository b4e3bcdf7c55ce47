//! Exact scalar fields with an involutive conjugation.
//!
//! Three backends are provided: [`Rational`] (ℚ, identity conjugation),
//! [`GaussianRational`] (ℚ(i), complex conjugation) and [`Fp`] (𝔽ₚ for
//! p ∈ {2, 3, 5}, identity conjugation). Every value is kept in canonical
//! form so that `==` is exact mathematical equality.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};

/// Tag identifying a scalar backend in serialized matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    GaussianRational,
    PrimeField(u32),
}

impl Backend {
    pub fn tag(&self) -> &'static str {
        match self {
            Backend::Rational => "Q",
            Backend::GaussianRational => "Qi",
            Backend::PrimeField(_) => "Fp",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::PrimeField(p) => write!(f, "Fp(p = {p})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// An exact field element with a conjugation that is an involutive field
/// automorphism. Conjugate-transpose over these scalars makes square matrices
/// a *-ring.
pub trait StarScalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    fn conj(&self) -> Self;

    /// All field elements, for finite backends.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    /// A small random element, used by the test-input generators.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

macro_rules! forward_binops {
    ($ty:ty, $($trait:ident :: $method:ident),+) => {$(
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                <$ty as $trait<&$ty>>::$method(self, &rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                <$ty as $trait<&$ty>>::$method(self.clone(), rhs)
            }
        }
    )+};
}

// ---------------------------------------------------------------------------
// Rational

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&Rational> for Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(self.0 + &rhs.0)
    }
}

impl Sub<&Rational> for Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(self.0 - &rhs.0)
    }
}

impl Mul<&Rational> for Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(self.0 * &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

forward_binops!(Rational, Add::add, Sub::sub, Mul::mul);

impl StarScalar for Rational {
    const BACKEND: Backend = Backend::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(value: i64) -> Self {
        value.into()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen_range(-2i64..=2).into()
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => s.parse(),
            Value::Number(n) => n
                .as_i64()
                .map(Rational::from)
                .ok_or_else(|| Error::Malformed(format!("not an integer: {n}"))),
            other => Err(Error::Malformed(format!("not a rational: {other}"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(re.into(), im.into())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> Rational {
        self.re.clone() * &self.re + &(self.im.clone() * &self.im)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.0.is_negative() => {
                write!(f, "{}-{}i", self.re, -self.im.clone())
            }
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        let re = self.re.clone() * &rhs.re - &(self.im.clone() * &rhs.im);
        let im = self.re * &rhs.im + &(self.im * &rhs.re);
        GaussianRational::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

forward_binops!(GaussianRational, Add::add, Sub::sub, Mul::mul);

impl StarScalar for GaussianRational {
    const BACKEND: Backend = Backend::GaussianRational;

    fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    fn one() -> Self {
        Self::from_ints(1, 0)
    }

    fn from_i64(value: i64) -> Self {
        Self::from_ints(value, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr().inv()?;
        Ok(GaussianRational::new(
            self.re.clone() * &n,
            -(self.im.clone() * &n),
        ))
    }

    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1))
    }

    fn to_json(&self) -> Value {
        Value::Array(vec![self.re.to_json(), self.im.to_json()])
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::Array(parts) if parts.len() == 2 => Ok(GaussianRational::new(
                Rational::from_json(&parts[0])?,
                Rational::from_json(&parts[1])?,
            )),
            // A bare rational is read as a real Gaussian rational.
            Value::String(_) | Value::Number(_) => Rational::from_json(value).map(Into::into),
            other => Err(Error::Malformed(format!(
                "not a Gaussian rational [re, im]: {other}"
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// An element of 𝔽ₚ. Only p ∈ {2, 3, 5} is accepted; other moduli fail to
/// compile as soon as a value is constructed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;

impl<const P: u32> Fp<P> {
    const SUPPORTED: () = assert!(P == 2 || P == 3 || P == 5, "modulus must be 2, 3 or 5");

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::SUPPORTED;
        Fp(value.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub const fn modulus() -> u32 {
        P
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u32> Add<&Fp<P>> for Fp<P> {
    type Output = Fp<P>;
    fn add(self, rhs: &Fp<P>) -> Fp<P> {
        self + *rhs
    }
}

impl<const P: u32> Sub<&Fp<P>> for Fp<P> {
    type Output = Fp<P>;
    fn sub(self, rhs: &Fp<P>) -> Fp<P> {
        self - *rhs
    }
}

impl<const P: u32> Mul<&Fp<P>> for Fp<P> {
    type Output = Fp<P>;
    fn mul(self, rhs: &Fp<P>) -> Fp<P> {
        self * *rhs
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Fp<P>;
    fn add(self, rhs: Fp<P>) -> Fp<P> {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Fp<P>;
    fn sub(self, rhs: Fp<P>) -> Fp<P> {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Fp<P>;
    fn mul(self, rhs: Fp<P>) -> Fp<P> {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u32> StarScalar for Fp<P> {
    const BACKEND: Backend = Backend::PrimeField(P);

    fn zero() -> Self {
        Fp::new(0)
    }

    fn one() -> Self {
        Fp::new(1)
    }

    fn from_i64(value: i64) -> Self {
        Fp::new(value)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: x^(p-2).
        let mut acc = Fp::<P>::one();
        for _ in 0..P - 2 {
            acc = acc * self;
        }
        Ok(acc)
    }

    fn conj(&self) -> Self {
        *self
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P as i64).map(Fp::new).collect())
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..P as i64))
    }

    fn to_json(&self) -> Value {
        Value::String(self.0.to_string())
    }

    fn from_json(value: &Value) -> Result<Self> {
        let raw = match value {
            Value::String(s) => s.trim().parse::<i64>().ok(),
            Value::Number(n) => n.as_i64(),
            _ => None,
        };
        raw.map(Fp::new)
            .ok_or_else(|| Error::Malformed(format!("not a residue mod {P}: {value}")))
    }
}
