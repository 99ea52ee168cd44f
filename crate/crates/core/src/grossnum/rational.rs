//! Helpers over [`BigRational`], the exact scalar behind every coefficient,
//! base and exponent.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Largest power, in bits of numerator or denominator, that [`pow_i64`]
/// agrees to build.
pub const MAX_POWER_BITS: u64 = 1 << 22;

/// `r^e` for a signed machine exponent. Panics on `0^negative`.
pub fn pow_i64(r: &Rational, e: i64) -> Option<Rational> {
    let mag = u32::try_from(e.unsigned_abs()).ok();
    if r.is_zero() {
        assert!(e >= 0, "zero to a negative power");
        return Some(if e == 0 { Rational::one() } else { Rational::zero() });
    }
    if r.numer().abs().is_one() && r.denom().is_one() {
        // +-1 never grows
        let odd = e.is_odd();
        return Some(if r.is_negative() && odd { -Rational::one() } else { Rational::one() });
    }
    let mag = mag?;
    let bits = r.numer().bits().max(r.denom().bits());
    if bits.saturating_mul(u64::from(mag)) > MAX_POWER_BITS {
        return None;
    }
    let p = Rational::new(r.numer().pow(mag), r.denom().pow(mag));
    Some(if e < 0 { p.recip() } else { p })
}

/// `r^e` for a big exponent; `None` when the result would not fit in memory.
pub fn pow_big(r: &Rational, e: &BigInt) -> Option<Rational> {
    if r.is_zero() {
        return match e.sign() {
            Sign::Minus => None,
            Sign::NoSign => Some(Rational::one()),
            Sign::Plus => Some(Rational::zero()),
        };
    }
    if r.abs().is_one() {
        let neg = r.is_negative() && e.is_odd();
        return Some(if neg { -Rational::one() } else { Rational::one() });
    }
    pow_i64(r, e.to_i64()?)
}

/// `r^t` for an unsigned exponent, used by finite substitution.
pub fn pow_u64(r: &Rational, t: u64) -> Rational {
    let n: BigInt = Pow::pow(r.numer(), t);
    let d: BigInt = Pow::pow(r.denom(), t);
    Rational::new(n, d)
}

/// Exact rational `n`-th root, if one exists.
pub fn perfect_root(r: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if r.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root_of = |v: &BigInt| -> Option<BigInt> {
        let c = v.nth_root(n);
        (Pow::pow(&c, n) == *v).then_some(c)
    };
    Some(Rational::new(root_of(r.numer())?, root_of(r.denom())?))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Canonical text of a rational: `n` or `n/d` (sign on the numerator).
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_biguint(n: &BigInt) -> Option<BigUint> {
    match n.sign() {
        Sign::Minus => None,
        _ => n.to_biguint(),
    }
}
