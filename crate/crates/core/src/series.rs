//! Closed forms for sums with an explicit number of addends.
//!
//! There is deliberately no "sum to infinity": every function takes the
//! length, finite or a gross-integer such as `G`, `G - 1` or `3*G`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grossnum::rational::{frac, int};
use crate::grossnum::{exp_gross, GrossNumber, Parity, Rational};

fn require_positive_length(k: &GrossNumber) -> Result<()> {
    if !k.is_gross_integer() {
        return Err(Error::NotAGrossInteger(k.to_string()));
    }
    if !k.is_positive() {
        return Err(Error::NonPositiveCount(k.to_string()));
    }
    Ok(())
}

fn half() -> Rational {
    frac(1, 2)
}

/// `first + (first + step) + ... ` with `count` addends:
/// `count*first + step*count*(count-1)/2`.
pub fn ap_sum(first: &GrossNumber, step: &GrossNumber, count: &GrossNumber) -> Result<GrossNumber> {
    require_positive_length(count)?;
    let pairs = (count * &(count - &GrossNumber::one())).scale(&half());
    Ok(&(count * first) + &(step * &pairs))
}

/// `1 + 2 + ... + n = n(n+1)/2`.
pub fn triangular(n: &GrossNumber) -> Result<GrossNumber> {
    require_positive_length(n)?;
    Ok((n * &(n + &GrossNumber::one())).scale(&half()))
}

/// `q + q^2 + ... + q^k = q(q^k - 1)/(q - 1)`.
pub fn geometric(q: &Rational, k: &GrossNumber) -> Result<GrossNumber> {
    if q.is_zero() {
        return Err(Error::ZeroRatio);
    }
    if q.is_one() {
        return Err(Error::UnitRatio);
    }
    require_positive_length(k)?;
    let qk = exp_gross(q, k)?;
    let factor = q / (q - Rational::one());
    Ok((&qk - &GrossNumber::one()).scale(&factor))
}

/// `1 + 2 + 4 + ... + 2^(k-1) = 2^k - 1`.
pub fn powers_of_two_sum(k: &GrossNumber) -> Result<GrossNumber> {
    require_positive_length(k)?;
    Ok(&exp_gross(&int(2), k)? - &GrossNumber::one())
}

/// `1 - 1 + 1 - ...` with `k` addends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrandiResult {
    pub value: u8,
    pub length_parity: Parity,
}

pub fn grandi(k: &GrossNumber) -> Result<GrandiResult> {
    require_positive_length(k)?;
    let length_parity = k.parity()?;
    let value = match length_parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    Ok(GrandiResult { value, length_parity })
}

/// The rearrangement `1 + 1 - 1 + 1 + 1 - 1 + ...` of a Grandi sum of even
/// length `k`: blocks of two positives and one negative until the `k/2`
/// positive units run out, then the remaining negatives on their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rearrangement {
    /// number of complete `(1 + 1 - 1)` blocks
    pub blocks: GrossNumber,
    /// 1 when an odd positive is left over after the last block
    pub leftover_positive: BigInt,
    /// negatives summed after the positives are exhausted
    pub trailing_negatives: GrossNumber,
    pub total: GrossNumber,
}

pub fn grandi_rearranged_schedule(k: &GrossNumber) -> Result<Rearrangement> {
    require_positive_length(k)?;
    if k.parity()? == Parity::Odd {
        return Err(Error::OddLength(k.to_string()));
    }
    let two = BigInt::from(2);
    let (positives, _) = k.floor_div_mod(&two)?;
    let negatives = positives.clone();
    let (blocks, leftover_positive) = positives.floor_div_mod(&two)?;
    let trailing_negatives = &negatives - &blocks;
    // (1 + 1 - 1) * blocks + leftover - trailing
    let total = &(&blocks + &GrossNumber::from(leftover_positive.clone())) - &trailing_negatives;
    Ok(Rearrangement { blocks, leftover_positive, trailing_negatives, total })
}

pub fn grandi_rearranged(k: &GrossNumber) -> Result<GrossNumber> {
    grandi_rearranged_schedule(k).map(|r| r.total)
}

/// Recomputation of `-3 c(n)` two ways, where `c(n) = 1 + 2 + ... + n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamanujanAudit {
    #[serde(serialize_with = "crate::series::ser_display")]
    pub lhs: GrossNumber,
    #[serde(serialize_with = "crate::series::ser_display")]
    pub rhs: GrossNumber,
    pub consistent: bool,
}

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The third line of the shifted subtraction `c(n) - 4c(n)` regrouped as
/// odds minus evens minus the `n/2` multiples of four pushed past `n`:
/// `sum(1,3,..,n-1) - sum(2,4,..,n) - 4*((n/2+1) + ... + n)`.
pub fn ramanujan_grouping(n: &GrossNumber) -> Result<GrossNumber> {
    require_positive_length(n)?;
    if n.parity()? == Parity::Odd {
        return Err(Error::OddLength(n.to_string()));
    }
    let (half_n, _) = n.floor_div_mod(&BigInt::from(2))?;
    let one = GrossNumber::one();
    let two = GrossNumber::from(2);
    let odds = ap_sum(&one, &two, &half_n)?;
    let evens = ap_sum(&two, &two, &half_n)?;
    let pushed = ap_sum(&(&half_n + &one), &one, &half_n)?;
    Ok(&(&odds - &evens) - &pushed.scale(&int(4)))
}

pub fn ramanujan_audit_at(n: &GrossNumber) -> Result<RamanujanAudit> {
    let lhs = triangular(n)?.scale(&int(-3));
    let rhs = ramanujan_grouping(n)?;
    let consistent = lhs == rhs;
    Ok(RamanujanAudit { lhs, rhs, consistent })
}

pub fn ramanujan_audit() -> RamanujanAudit {
    ramanujan_audit_at(&GrossNumber::grossone()).expect("G is a positive even gross-integer")
}

/// `G^-2 + G^-2 + ...` with `k` addends.
pub fn infinitesimal_sum(k: &GrossNumber) -> Result<GrossNumber> {
    require_positive_length(k)?;
    Ok(&GrossNumber::monomial(Rational::one(), int(-2)) * k)
}
