//! Sets measured in grossone.
//!
//! Every infinite set handled here is an arithmetic progression with a
//! finite step and a gross-integer number of elements: the residue classes
//! `N(k,n) = {k, k+n, k+2n, ...}` each hold `G/n` elements, the integers run
//! from `-G` to `G`, and so on. Finitely many elements may be added to or
//! removed from a progression ([`AdjustedSet`]).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grossnum::rational::frac;
use crate::grossnum::GrossNumber;

/// `{first + (i-1)*step : 1 <= i <= count}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrossAP {
    first: GrossNumber,
    step: BigInt,
    count: GrossNumber,
}

impl GrossAP {
    pub fn new(first: GrossNumber, step: BigInt, count: GrossNumber) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidStep(step));
        }
        if !first.is_gross_integer() {
            return Err(Error::NotAGrossInteger(first.to_string()));
        }
        if !count.is_gross_integer() || !count.is_positive() {
            return Err(Error::NonPositiveCount(count.to_string()));
        }
        Ok(GrossAP { first, step, count })
    }

    pub fn first(&self) -> &GrossNumber {
        &self.first
    }

    pub fn step(&self) -> &BigInt {
        &self.step
    }

    pub fn count(&self) -> &GrossNumber {
        &self.count
    }

    fn finite_first(&self) -> Result<BigInt> {
        self.first
            .as_integer()
            .ok_or_else(|| Error::GrossFirstUnsupported(self.first.to_string()))
    }

    pub fn last_element(&self) -> GrossNumber {
        let offset = &(&self.count - &GrossNumber::one()) * &GrossNumber::from(self.step.clone());
        &self.first + &offset
    }

    /// The `i`-th element, 1-based.
    pub fn element_at(&self, i: &GrossNumber) -> Result<GrossNumber> {
        let one = GrossNumber::one();
        if !i.is_gross_integer() || *i < one || *i > self.count {
            return Err(Error::IndexOutOfRange { index: i.to_string(), count: self.count.to_string() });
        }
        Ok(&self.first + &(&(i - &one) * &GrossNumber::from(self.step.clone())))
    }

    /// Membership of an arbitrary gross-integer: residue test plus a
    /// symbolic range test.
    pub fn contains(&self, x: &GrossNumber) -> bool {
        if !x.is_gross_integer() || *x < self.first || *x > self.last_element() {
            return false;
        }
        match (x - &self.first).floor_div_mod(&self.step) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn member(&self, x: &BigInt) -> bool {
        self.contains(&GrossNumber::from(x.clone()))
    }

    /// Multiply every element by `m`; the count does not change.
    pub fn scale(&self, m: &BigInt) -> Result<GrossAP> {
        if !m.is_positive() {
            return Err(Error::InvalidStep(m.clone()));
        }
        let mg = GrossNumber::from(m.clone());
        Ok(GrossAP { first: &self.first * &mg, step: &self.step * m, count: self.count.clone() })
    }

    /// Intersection of two progressions with finite first elements.
    ///
    /// The residues are combined with the Chinese remainder theorem; the
    /// upper end is the smaller of the two last elements pulled down into
    /// the common residue class.
    pub fn intersect(&self, other: &GrossAP) -> Result<Option<GrossAP>> {
        let (a1, b1) = (self.finite_first()?, other.finite_first()?);
        let Some((residue, modulus)) = crt(&a1, &self.step, &b1, &other.step) else {
            return Ok(None);
        };
        let low = a1.clone().max(b1.clone());
        // least element >= low in the residue class
        let first = &low + (&residue - &low).mod_floor(&modulus);
        let first_g = GrossNumber::from(first);
        let (la, lb) = (self.last_element(), other.last_element());
        let upper = if la < lb { la } else { lb };
        if upper < first_g {
            return Ok(None);
        }
        let (span, _) = (&upper - &first_g).floor_div_mod(&modulus)?;
        let count = &span + &GrossNumber::one();
        Ok(Some(GrossAP { first: first_g, step: modulus, count }))
    }
}

/// Solve `x = a (mod m)`, `x = b (mod n)`; returns `(x mod l, l)` with
/// `l = lcm(m, n)`, or `None` when the congruences are incompatible.
pub fn crt(a: &BigInt, m: &BigInt, b: &BigInt, n: &BigInt) -> Option<(BigInt, BigInt)> {
    let e = m.extended_gcd(n);
    let g = e.gcd;
    let diff = b - a;
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let l = m / &g * n;
    // m*x + n*y = g  =>  a + m * x * (b-a)/g solves both
    let k = (&diff / &g * &e.x).mod_floor(&(n / &g));
    let x = (a + m * k).mod_floor(&l);
    Some((x, l))
}

/// `N(k,n) = {k, k+n, k+2n, ...}` with `G/n` elements.
pub fn ap_nat(k: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<GrossAP> {
    let (k, n) = (k.into(), n.into());
    if !n.is_positive() || k < BigInt::one() || k > n {
        return Err(Error::ResidueOutOfRange { k, n });
    }
    let count = GrossNumber::grossone().scale(&frac(1, n.clone()));
    Ok(GrossAP { first: GrossNumber::from(k), step: n, count })
}

pub fn naturals() -> GrossAP {
    ap_nat(1, 1).expect("valid residue")
}

pub fn evens() -> GrossAP {
    ap_nat(2, 2).expect("valid residue")
}

pub fn odds() -> GrossAP {
    ap_nat(1, 2).expect("valid residue")
}

/// `{-G, ..., -1, 0, 1, ..., G}` with `2G + 1` elements.
pub fn integers_set() -> GrossAP {
    GrossAP {
        first: -GrossNumber::grossone(),
        step: BigInt::one(),
        count: GrossNumber::linear(2, 1),
    }
}

/// A progression (or nothing) with finitely many elements added/removed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdjustedSet {
    base: Option<GrossAP>,
    added: BTreeSet<BigInt>,
    removed: BTreeSet<BigInt>,
}

impl AdjustedSet {
    pub fn base(&self) -> Option<&GrossAP> {
        self.base.as_ref()
    }

    pub fn added(&self) -> &BTreeSet<BigInt> {
        &self.added
    }

    pub fn removed(&self) -> &BTreeSet<BigInt> {
        &self.removed
    }

    fn in_base(&self, x: &BigInt) -> bool {
        self.base.as_ref().is_some_and(|b| b.member(x))
    }

    fn insert(&mut self, x: &BigInt) -> Result<()> {
        if self.removed.remove(x) {
            return Ok(());
        }
        if self.added.contains(x) || self.in_base(x) {
            return Err(Error::ElementAlreadyPresent(x.clone()));
        }
        self.added.insert(x.clone());
        Ok(())
    }

    fn delete(&mut self, x: &BigInt) -> Result<()> {
        if self.added.remove(x) {
            return Ok(());
        }
        if !self.in_base(x) || self.removed.contains(x) {
            return Err(Error::ElementNotPresent(x.clone()));
        }
        self.removed.insert(x.clone());
        Ok(())
    }
}

/// Any set value produced by this module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrossSet {
    Ap(GrossAP),
    Adjusted(AdjustedSet),
}

impl GrossSet {
    pub fn empty() -> GrossSet {
        GrossSet::Adjusted(AdjustedSet::default())
    }

    pub fn cardinality(&self) -> GrossNumber {
        match self {
            GrossSet::Ap(ap) => ap.count.clone(),
            GrossSet::Adjusted(s) => {
                let base = s.base.as_ref().map(|b| b.count.clone()).unwrap_or_default();
                let delta = s.added.len() as i64 - s.removed.len() as i64;
                &base + &GrossNumber::from(delta)
            }
        }
    }

    pub fn member(&self, x: &BigInt) -> bool {
        match self {
            GrossSet::Ap(ap) => ap.member(x),
            GrossSet::Adjusted(s) => {
                s.added.contains(x) || (s.in_base(x) && !s.removed.contains(x))
            }
        }
    }

    fn into_adjusted(self) -> AdjustedSet {
        match self {
            GrossSet::Ap(ap) => AdjustedSet { base: Some(ap), ..Default::default() },
            GrossSet::Adjusted(s) => s,
        }
    }

    /// Add finite elements, none of which may already belong to the set.
    pub fn add_finite(self, elems: &[BigInt]) -> Result<GrossSet> {
        let mut s = self.into_adjusted();
        for x in elems {
            s.insert(x)?;
        }
        Ok(GrossSet::Adjusted(s))
    }

    /// Set union with finitely many elements; members already present are
    /// skipped.
    pub fn union_finite(self, elems: &[BigInt]) -> GrossSet {
        let mut s = self.into_adjusted();
        for x in elems {
            let _ = s.insert(x);
        }
        GrossSet::Adjusted(s)
    }

    pub fn remove_finite(self, elems: &[BigInt]) -> Result<GrossSet> {
        let mut s = self.into_adjusted();
        for x in elems {
            s.delete(x)?;
        }
        Ok(GrossSet::Adjusted(s))
    }

    /// Largest element, or `None` for the empty set.
    pub fn last(&self) -> Option<GrossNumber> {
        let s = match self {
            GrossSet::Ap(ap) => return Some(ap.last_element()),
            GrossSet::Adjusted(s) => s,
        };
        // walk down from the top of the base past removed elements; only
        // finitely many are removed so this stops quickly
        let mut from_base = None;
        if let Some(b) = &s.base {
            let step = GrossNumber::from(b.step().clone());
            let mut x = b.last_element();
            let mut left = b.count().clone();
            while left.is_positive() {
                match x.as_integer() {
                    Some(v) if s.removed.contains(&v) => {
                        x = &x - &step;
                        left = &left - &GrossNumber::one();
                    }
                    _ => {
                        from_base = Some(x);
                        break;
                    }
                }
            }
        }
        let from_added = s.added.iter().next_back().cloned().map(GrossNumber::from);
        match (from_base, from_added) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn as_ap(&self) -> Option<&GrossAP> {
        match self {
            GrossSet::Ap(ap) => Some(ap),
            GrossSet::Adjusted(s) if s.added.is_empty() && s.removed.is_empty() => s.base.as_ref(),
            GrossSet::Adjusted(_) => None,
        }
    }
}

impl From<GrossAP> for GrossSet {
    fn from(ap: GrossAP) -> Self {
        GrossSet::Ap(ap)
    }
}

/// Number of ordered couples `(a, b)`.
pub fn couples_count(a: &GrossSet, b: &GrossSet) -> GrossNumber {
    &a.cardinality() * &b.cardinality()
}

/// `floor(radicand^(1/degree))`, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    radicand: GrossNumber,
    degree: u32,
}

impl RootCount {
    pub fn new(radicand: GrossNumber, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroModulus);
        }
        radicand.nth_root(degree)?;
        Ok(RootCount { radicand, degree })
    }

    pub fn radicand(&self) -> &GrossNumber {
        &self.radicand
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `radicand^(1/degree)`, the value the floor is taken of.
    pub fn upper_value(&self) -> GrossNumber {
        self.radicand.nth_root(self.degree).expect("checked at construction")
    }

    /// The count itself when no floor is needed.
    pub fn exact_value(&self) -> Option<GrossNumber> {
        let u = self.upper_value();
        u.is_gross_integer().then_some(u)
    }

    /// `J <= upper < J + 1` with `J` the floor: the upper value must
    /// reproduce the radicand, and `upper - 1 < upper`.
    pub fn bracket_holds(&self) -> bool {
        let u = self.upper_value();
        u.pow_int(i64::from(self.degree)).is_ok_and(|p| p == self.radicand)
            && &u - &GrossNumber::one() < u
    }
}

impl fmt::Display for RootCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "floor({})", self.upper_value()),
        }
    }
}

/// Number of squares `i^2 <= G`.
pub fn squares_count() -> RootCount {
    RootCount::new(GrossNumber::grossone(), 2).expect("G is a perfect-square monomial")
}

fn fmt_elems(elems: &BTreeSet<BigInt>) -> String {
    let v: Vec<String> = elems.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

impl fmt::Display for GrossAP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AP(first={}, step={}, count={})", self.first, self.step, self.count)
    }
}

impl fmt::Display for GrossSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrossSet::Ap(ap) => write!(f, "{ap}"),
            GrossSet::Adjusted(s) => {
                let mut parts = Vec::new();
                if let Some(b) = &s.base {
                    parts.push(b.to_string());
                }
                if !s.added.is_empty() || s.base.is_none() {
                    parts.push(fmt_elems(&s.added));
                }
                let mut out = parts.join(" + ");
                if !s.removed.is_empty() {
                    out.push_str(" - ");
                    out.push_str(&fmt_elems(&s.removed));
                }
                f.write_str(&out)
            }
        }
    }
}
