//! Gross-numbers: exact finite sums of terms `c * B^G * G^p`.
//!
//! `G` is grossone, the number of elements of the natural numbers. A term
//! carries a nonzero rational coefficient `c`, a positive rational base `B`
//! of the exponential factor (`B = 1` means the factor is absent) and a
//! rational power `p` of grossone. Terms are kept sorted by their key
//! `(B, p)`, largest first; the key order is the growth order, so the
//! leading term alone decides sign, magnitude class and comparison.

mod format;
pub mod rational;

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use rational::Rational;
use rational::{int, is_integer, perfect_root, pow_big, pow_i64, pow_u64};

/// Upper bound on long-division steps before a divisor is declared
/// non-exact. Exact quotients finish in as many steps as they have terms.
const LONG_DIVISION_STEP_LIMIT: usize = 4096;

/// Largest exponent for powers of multi-term numbers.
pub const MAX_SUM_POWER: i64 = 1 << 12;

/// One monomial `coeff * base^G * G^gpow`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    coeff: Rational,
    base: Rational,
    gpow: Rational,
}

impl GrossTerm {
    pub fn new(coeff: Rational, base: Rational, gpow: Rational) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::NonPositiveBase(rational::fmt_rational(&base)));
        }
        Ok(GrossTerm { coeff, base, gpow })
    }

    /// `coeff * G^gpow` with no exponential factor.
    pub fn power(coeff: Rational, gpow: Rational) -> Self {
        GrossTerm { coeff, base: Rational::one(), gpow }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn gpow(&self) -> &Rational {
        &self.gpow
    }

    fn key_cmp(&self, other: &GrossTerm) -> Ordering {
        self.base.cmp(&other.base).then_with(|| self.gpow.cmp(&other.gpow))
    }

    fn key_cmp_unit(&self) -> Ordering {
        self.base.cmp(&Rational::one()).then_with(|| self.gpow.cmp(&Rational::zero()))
    }

    fn same_key(&self, other: &GrossTerm) -> bool {
        self.base == other.base && self.gpow == other.gpow
    }

    fn mul(&self, other: &GrossTerm) -> GrossTerm {
        GrossTerm {
            coeff: &self.coeff * &other.coeff,
            base: &self.base * &other.base,
            gpow: &self.gpow + &other.gpow,
        }
    }

    fn div(&self, other: &GrossTerm) -> GrossTerm {
        GrossTerm {
            coeff: &self.coeff / &other.coeff,
            base: &self.base / &other.base,
            gpow: &self.gpow - &other.gpow,
        }
    }
}

/// Magnitude class of a gross-number, read off its leading term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberClass {
    Zero,
    Infinitesimal,
    FinitePure,
    FiniteWithInfinitesimalPart,
    Infinite,
}

impl NumberClass {
    pub fn name(self) -> &'static str {
        match self {
            NumberClass::Zero => "zero",
            NumberClass::Infinitesimal => "infinitesimal",
            NumberClass::FinitePure => "finite",
            NumberClass::FiniteWithInfinitesimalPart => "finite+infinitesimal",
            NumberClass::Infinite => "infinite",
        }
    }
}

impl std::fmt::Display for NumberClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A canonical gross-number. The empty term list is zero.
///
/// Equality is structural, which coincides with numeric equality because
/// the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GrossNumber {
    terms: Vec<GrossTerm>,
}

impl GrossNumber {
    pub fn zero() -> Self {
        GrossNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// Grossone itself.
    pub fn grossone() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::normalize([GrossTerm::power(r, Rational::zero())])
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(int(n))
    }

    /// `coeff * G^gpow`.
    pub fn monomial(coeff: Rational, gpow: Rational) -> Self {
        Self::normalize([GrossTerm::power(coeff, gpow)])
    }

    /// `a*G + d`, the shape of most counts.
    pub fn linear(a: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::normalize([
            GrossTerm::power(int(a), Rational::one()),
            GrossTerm::power(int(d), Rational::zero()),
        ])
    }

    /// Merge like keys, drop zero coefficients and sort descending by key.
    pub fn normalize(raw: impl IntoIterator<Item = GrossTerm>) -> Self {
        let mut raw: Vec<GrossTerm> = raw.into_iter().collect();
        raw.sort_by(|a, b| b.key_cmp(a));
        let mut terms: Vec<GrossTerm> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.same_key(&t) => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        GrossNumber { terms }
    }

    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&GrossTerm> {
        self.terms.first()
    }

    /// -1, 0 or +1: the sign of the leading coefficient.
    pub fn sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(t) if t.coeff.is_positive() => 1,
            Some(_) => -1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// The value as a plain rational when it has no infinite or
    /// infinitesimal part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.key_cmp_unit() == Ordering::Equal => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(is_integer).map(|r| r.to_integer())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn constant_coeff(&self) -> Rational {
        self.terms
            .iter()
            .find(|t| t.key_cmp_unit() == Ordering::Equal)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Gross-integer test: only `G^p` with integer `p >= 0`, integer
    /// constant term. Non-constant terms may carry any rational coefficient
    /// since `G/n` is an integer for every finite `n`.
    pub fn is_gross_integer(&self) -> bool {
        self.terms.iter().all(|t| {
            t.base.is_one()
                && is_integer(&t.gpow)
                && !t.gpow.is_negative()
                && (!t.gpow.is_zero() || is_integer(&t.coeff))
        })
    }

    fn require_gross_integer(&self) -> Result<()> {
        if self.is_gross_integer() {
            Ok(())
        } else {
            Err(Error::NotAGrossInteger(self.to_string()))
        }
    }

    /// Parity of a gross-integer. `G` is a multiple of `2n` for every finite
    /// `n`, so every non-constant term is even and only the constant term
    /// decides.
    pub fn parity(&self) -> Result<Parity> {
        self.require_gross_integer()?;
        let c = self.constant_coeff().to_integer();
        Ok(if c.is_even() { Parity::Even } else { Parity::Odd })
    }

    /// Euclidean division by a finite positive integer:
    /// `self = n * quotient + remainder`, `0 <= remainder < n`.
    pub fn floor_div_mod(&self, n: &BigInt) -> Result<(GrossNumber, BigInt)> {
        self.require_gross_integer()?;
        if !n.is_positive() {
            return Err(Error::ZeroModulus);
        }
        let rem = self.constant_coeff().to_integer().mod_floor(n);
        let shifted = self - &GrossNumber::from_integer(rem.clone());
        let quotient = shifted.scale(&Rational::new(BigInt::one(), n.clone()));
        Ok((quotient, rem))
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> GrossNumber {
        if r.is_zero() {
            return GrossNumber::zero();
        }
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm { coeff: &t.coeff * r, ..t.clone() })
                .collect(),
        }
    }

    fn mul_term(&self, t: &GrossTerm) -> GrossNumber {
        // multiplication by a term is strictly monotone in the key order
        GrossNumber { terms: self.terms.iter().map(|s| s.mul(t)).collect() }
    }

    /// Exact division. Monomial divisors divide termwise; otherwise graded
    /// long division runs in descending key order and must leave no
    /// remainder.
    pub fn div_exact(&self, divisor: &GrossNumber) -> Result<GrossNumber> {
        let not_exact = || Error::NotExactlyDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (lead, low) = match divisor.terms.as_slice() {
            [] => return Err(Error::DivisionByZero),
            [t] => {
                return Ok(GrossNumber {
                    terms: self.terms.iter().map(|s| s.div(t)).collect(),
                })
            }
            [first, .., last] => (first, last),
        };
        let Some(self_low) = self.terms.last() else {
            return Ok(GrossNumber::zero());
        };
        // an exact quotient's smallest term is low(self) / low(divisor)
        let floor = self_low.div(low);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(r_lead) = rem.terms.first() {
            let q = r_lead.div(lead);
            if q.key_cmp(&floor) == Ordering::Less || quotient.len() >= LONG_DIVISION_STEP_LIMIT {
                return Err(not_exact());
            }
            rem = &rem - &divisor.mul_term(&q);
            quotient.push(q);
        }
        Ok(GrossNumber::normalize(quotient))
    }

    /// Integer power. Negative exponents need a monomial; sums are expanded
    /// term by term, up to [`MAX_SUM_POWER`].
    pub fn pow_int(&self, k: i64) -> Result<GrossNumber> {
        if self.is_zero() {
            return match k.cmp(&0) {
                Ordering::Equal => Err(Error::ZeroToZero),
                Ordering::Less => Err(Error::DivisionByZero),
                Ordering::Greater => Ok(GrossNumber::zero()),
            };
        }
        if let [t] = self.terms.as_slice() {
            let too_large = || Error::ExponentTooLarge(k.to_string());
            let coeff = pow_i64(&t.coeff, k).ok_or_else(too_large)?;
            let base = pow_i64(&t.base, k).ok_or_else(too_large)?;
            return Ok(GrossNumber::normalize([GrossTerm {
                coeff,
                base,
                gpow: &t.gpow * int(k),
            }]));
        }
        if k < 0 {
            return Err(Error::NegativePowerOfSum(self.to_string()));
        }
        if k > MAX_SUM_POWER {
            return Err(Error::ExponentTooLarge(k.to_string()));
        }
        let mut e = u64::try_from(k).unwrap_or_default();
        let mut acc = GrossNumber::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `n`-th root of a monomial with a perfect-power coefficient and no
    /// exponential factor.
    pub fn nth_root(&self, n: u32) -> Result<GrossNumber> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let t = match self.terms.as_slice() {
            [t] => t,
            [] => return Ok(GrossNumber::zero()),
            _ => return Err(Error::NotAMonomial(self.to_string())),
        };
        if !t.base.is_one() {
            return Err(Error::BaseRootUnsupported(self.to_string()));
        }
        let coeff = perfect_root(&t.coeff, n)
            .filter(|c| n % 2 == 1 || c.is_positive())
            .ok_or_else(|| Error::CoefficientNotPerfectPower(self.to_string(), n))?;
        Ok(GrossNumber::monomial(coeff, &t.gpow / int(n)))
    }

    pub fn classify(&self) -> NumberClass {
        let Some(lead) = self.leading() else {
            return NumberClass::Zero;
        };
        match lead.key_cmp_unit() {
            Ordering::Greater => NumberClass::Infinite,
            Ordering::Less => NumberClass::Infinitesimal,
            Ordering::Equal if self.terms.len() > 1 => NumberClass::FiniteWithInfinitesimalPart,
            Ordering::Equal => NumberClass::FinitePure,
        }
    }

    fn part(&self, which: Ordering) -> GrossNumber {
        GrossNumber {
            terms: self.terms.iter().filter(|t| t.key_cmp_unit() == which).cloned().collect(),
        }
    }

    pub fn infinite_part(&self) -> GrossNumber {
        self.part(Ordering::Greater)
    }

    pub fn finite_part(&self) -> GrossNumber {
        self.part(Ordering::Equal)
    }

    pub fn infinitesimal_part(&self) -> GrossNumber {
        self.part(Ordering::Less)
    }

    /// Decompose `a*G + d` with integer `a`, `d`.
    pub fn linear_in_grossone(&self) -> Option<(BigInt, BigInt)> {
        let mut a = BigInt::zero();
        let mut d = BigInt::zero();
        for t in &self.terms {
            if !t.base.is_one() || !is_integer(&t.coeff) {
                return None;
            }
            if t.gpow.is_one() {
                a = t.coeff.to_integer();
            } else if t.gpow.is_zero() {
                d = t.coeff.to_integer();
            } else {
                return None;
            }
        }
        Some((a, d))
    }

    /// Substitute `G := t` and evaluate exactly.
    pub fn eval_at(&self, t: u64) -> Result<Rational> {
        assert!(t > 0, "substitution value must be positive");
        let tr = int(t);
        let mut sum = Rational::zero();
        for term in &self.terms {
            if !is_integer(&term.gpow) {
                return Err(Error::FractionalGrossPower(self.to_string()));
            }
            let p = term
                .gpow
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::ExponentTooLarge(term.gpow.to_string()))?;
            let tp = pow_i64(&tr, p).ok_or_else(|| Error::ExponentTooLarge(p.to_string()))?;
            let mut v = &term.coeff * tp;
            if !term.base.is_one() {
                v *= pow_u64(&term.base, t);
            }
            sum += v;
        }
        Ok(sum)
    }

    pub fn compare(&self, other: &GrossNumber) -> Ordering {
        self.cmp(other)
    }
}

/// `base^exponent` for `exponent = a*G + d` with integer `a`, `d`:
/// the single term `base^d * (base^a)^G`.
///
/// `1^G = 1` and `0^G = 0` follow the identity rules for grossone. A
/// negative base is only accepted when `a = 0`, i.e. for finite exponents.
pub fn exp_gross(base: &Rational, exponent: &GrossNumber) -> Result<GrossNumber> {
    let (a, d) = exponent
        .linear_in_grossone()
        .ok_or_else(|| Error::ExponentNotLinearInGrossone(exponent.to_string()))?;
    if base.is_zero() {
        return if exponent.is_positive() {
            Ok(GrossNumber::zero())
        } else {
            Err(Error::NonPositiveBase("0".into()))
        };
    }
    if base.is_negative() && !a.is_zero() {
        return Err(Error::NonPositiveBase(rational::fmt_rational(base)));
    }
    let too_large = || Error::ExponentTooLarge(exponent.to_string());
    let coeff = pow_big(base, &d).ok_or_else(too_large)?;
    let gbase = pow_big(base, &a).ok_or_else(too_large)?;
    Ok(GrossNumber::normalize([GrossTerm { coeff, base: gbase, gpow: Rational::zero() }]))
}

impl Ord for GrossNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        GrossNumber::from_rational(r)
    }
}

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        GrossNumber::from_integer(n)
    }
}

impl From<BigInt> for GrossNumber {
    fn from(n: BigInt) -> Self {
        GrossNumber::from_integer(n)
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        self.scale(&-Rational::one())
    }
}

impl Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        -&self
    }
}

impl Add for &GrossNumber {
    type Output = GrossNumber;
    fn add(self, rhs: &GrossNumber) -> GrossNumber {
        GrossNumber::normalize(self.terms.iter().chain(&rhs.terms).cloned())
    }
}

impl Sub for &GrossNumber {
    type Output = GrossNumber;
    fn sub(self, rhs: &GrossNumber) -> GrossNumber {
        self + &(-rhs)
    }
}

impl Mul for &GrossNumber {
    type Output = GrossNumber;
    fn mul(self, rhs: &GrossNumber) -> GrossNumber {
        GrossNumber::normalize(
            self.terms.iter().flat_map(|a| rhs.terms.iter().map(move |b| a.mul(b))),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GrossNumber {
            type Output = GrossNumber;
            fn $m(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $m(self, rhs: &GrossNumber) -> GrossNumber {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
