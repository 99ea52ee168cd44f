//! The classical paradoxes of infinity recomputed with grossone.
//!
//! Each scenario returns a [`ParadoxReport`]: a list of claims, each with
//! the computed value and whether the exact check behind it passed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grossnum::rational::{frac, int};
use crate::grossnum::{GrossNumber, NumberClass, Parity, Rational};
use crate::series::{ap_sum, geometric};
use crate::setalgebra::{evens, naturals, squares_count, GrossAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub desc: String,
    pub value: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParadoxReport {
    pub name: String,
    pub claims: Vec<Claim>,
    pub narrative: String,
}

impl ParadoxReport {
    fn new(name: &str, narrative: &str) -> Self {
        ParadoxReport { name: name.into(), claims: Vec::new(), narrative: narrative.into() }
    }

    fn claim(&mut self, desc: impl Into<String>, value: impl fmt::Display, ok: bool) {
        self.claims.push(Claim { desc: desc.into(), value: value.to_string(), ok });
    }

    /// All checks passed.
    pub fn resolved(&self) -> bool {
        self.claims.iter().all(|c| c.ok)
    }

    pub fn claim_value(&self, desc: &str) -> Option<&str> {
        self.claims.iter().find(|c| c.desc == desc).map(|c| c.value.as_str())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "claims": self.claims,
            "resolved": self.resolved(),
        })
    }
}

impl fmt::Display for ParadoxReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "paradox: {}", self.name)?;
        for c in &self.claims {
            let mark = if c.ok { "ok" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.desc, c.value)?;
        }
        writeln!(f, "  {}", self.narrative)?;
        write!(f, "status: {}", if self.resolved() { "RESOLVED" } else { "UNRESOLVED" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LampState {
    On,
    Off,
}

impl LampState {
    pub fn toggled(self) -> LampState {
        match self {
            LampState::On => LampState::Off,
            LampState::Off => LampState::On,
        }
    }
}

impl fmt::Display for LampState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LampState::On => "on",
            LampState::Off => "off",
        })
    }
}

impl std::str::FromStr for LampState {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "on" => Ok(LampState::On),
            "off" => Ok(LampState::Off),
            other => Err(format!("lamp state must be on or off, got {other:?}")),
        }
    }
}

fn g() -> GrossNumber {
    GrossNumber::grossone()
}

fn pair(a: &GrossNumber, b: &GrossNumber) -> String {
    format!("({a}, {b})")
}

/// Evens against naturals, and squares against naturals.
pub fn galileo_report() -> ParadoxReport {
    let mut r = ParadoxReport::new(
        "galileo",
        "the evens are half of the naturals and the squares fewer still; the whole exceeds the part",
    );
    let (nat, ev) = (naturals(), evens());
    r.claim("card(N)", nat.count(), *nat.count() == g());
    r.claim("card(E)", ev.count(), *ev.count() == g().scale(&frac(1, 2)));
    r.claim("card(E) < card(N)", "(1/2)*G < G", ev.count() < nat.count());

    let one = GrossNumber::one();
    let first = (ev.element_at(&one), nat.element_at(&one));
    let ok = matches!(&first, (Ok(e), Ok(n)) if *e == GrossNumber::from(2) && n.is_one_value());
    r.claim("first pair (even, index)", pair(&GrossNumber::from(2), &one), ok);

    let last_index = ev.count().clone();
    let last_even = ev.element_at(&last_index);
    let ok = last_even.as_ref().is_ok_and(|e| *e == g() && *e == ev.last_element());
    let shown = last_even.unwrap_or_default();
    r.claim("final pair (even, index)", pair(&shown, &last_index), ok);

    let j = squares_count();
    let upper = j.upper_value();
    r.claim("card(I2)", &j, j.bracket_holds());
    r.claim("final pair (square, index)", format!("({j}^2, {j})"), j.bracket_holds());
    r.claim("upper value of card(I2)", &upper, upper.pow_int(2).is_ok_and(|p| p == g()));
    r.claim("card(I2) < card(N)", format!("{upper} < G"), upper < g());
    r
}

trait IsOne {
    fn is_one_value(&self) -> bool;
}

impl IsOne for GrossNumber {
    fn is_one_value(&self) -> bool {
        *self == GrossNumber::one()
    }
}

/// Doubling every natural number.
pub fn multiplication_report() -> ParadoxReport {
    let mut r = ParadoxReport::new(
        "multiplication",
        "doubling keeps the count, and the doubled set leaves N: G/2 of its elements are extended naturals",
    );
    let nat = naturals();
    let e2 = nat.scale(&BigInt::from(2)).expect("positive factor");
    r.claim("(i) card(N)", nat.count(), *nat.count() == g());
    r.claim("(i) card(E2)", e2.count(), e2.count() == nat.count());
    let two_g = g().scale(&int(2));
    r.claim("last(E2)", e2.last_element(), e2.last_element() == two_g);

    let probe = GrossNumber::linear(1, 2);
    r.claim("(ii) G+2 in E2", "true", e2.contains(&probe));
    r.claim("(ii) G+2 not in N", format!("{probe} > {}", nat.last_element()), !nat.contains(&probe));

    let half = g().scale(&frac(1, 2));
    let tail = GrossAP::new(probe.clone(), BigInt::from(2), half.clone()).expect("valid tail");
    let tail_ok = *tail.count() == half
        && tail.last_element() == e2.last_element()
        && *tail.first() > nat.last_element();
    r.claim("(iii) elements of E2 outside N", tail.count(), tail_ok);
    let inside = e2.count() - tail.count();
    r.claim("elements of E2 inside N", &inside, inside == *evens().count());
    r
}

fn room_range(first: &GrossNumber, count: &GrossNumber) -> String {
    if *count == GrossNumber::one() {
        format!("room {first}")
    } else {
        let last = &(first + count) - &GrossNumber::one();
        format!("rooms {first}..{last}")
    }
}

/// `m` newcomers at a hotel with `G` rooms, everyone moving up `m` rooms.
pub fn hilbert_accommodate(m: &GrossNumber) -> Result<ParadoxReport> {
    if !m.is_gross_integer() {
        return Err(Error::NotAGrossInteger(m.to_string()));
    }
    if !m.is_positive() {
        return Err(Error::NonPositiveCount(m.to_string()));
    }
    let rooms = g();
    if *m > rooms {
        return Err(Error::TooManyNewcomers(m.to_string()));
    }
    let mut r = ParadoxReport::new(
        "hilbert",
        "moving every guest up frees the first rooms, but the guests of the last rooms have to leave",
    );
    let one = GrossNumber::one();
    let freed = GrossAP::new(one.clone(), BigInt::one(), m.clone())?;
    let evicted_first = &(&rooms - m) + &one;
    let evicted = GrossAP::new(evicted_first.clone(), BigInt::one(), m.clone())?;
    let remaining = &rooms - m;

    r.claim("rooms", &rooms, true);
    r.claim("newcomers", m, true);
    r.claim("freed", room_range(freed.first(), freed.count()), freed.last_element() == *m);
    r.claim(
        "evicted",
        room_range(&evicted_first, m),
        evicted.last_element() == rooms && &evicted.last_element() + m > rooms,
    );
    r.claim("guests kept", &remaining, &remaining + m == rooms);
    r.claim(
        "conservation",
        format!("G = ({remaining}) + ({m})"),
        &remaining + evicted.count() == rooms,
    );
    r.claim("occupied after", &(m + &remaining), m + &remaining == rooms);
    Ok(r)
}

/// A lamp kept in `initial` for 1/2 minute, toggled and kept for 1/4 minute,
/// and so on for `switches` intervals in total. The reported state is the
/// one during the last interval, so an even count ends in the other state.
pub fn thomson_lamp(initial: LampState, switches: &GrossNumber) -> Result<ParadoxReport> {
    if !switches.is_positive() {
        return Err(Error::NonPositiveCount(switches.to_string()));
    }
    let parity = switches.parity()?;
    let final_state = match parity {
        Parity::Even => initial.toggled(),
        Parity::Odd => initial,
    };
    let elapsed = geometric(&frac(1, 2), switches)?;
    let mut r = ParadoxReport::new(
        "thomson",
        "the number of switches is explicit, so its parity fixes the final state; the time stays below one minute",
    );
    r.claim("switches", switches, true);
    r.claim("parity of switches", parity, true);
    r.claim(
        "final state",
        format!("{initial} -> {final_state}"),
        (parity == Parity::Odd) == (final_state == initial),
    );
    let one = GrossNumber::one();
    let shortfall = &one - &elapsed;
    let closed_form = &one - &crate::grossnum::exp_gross(&frac(1, 2), switches)?;
    r.claim("elapsed", &elapsed, elapsed == closed_form);
    r.claim("elapsed < 1", format!("1 - elapsed = {shortfall}"), elapsed < one);
    if switches.classify() == NumberClass::Infinite {
        r.claim(
            "1 - elapsed is infinitesimal",
            shortfall.classify(),
            shortfall.classify() == NumberClass::Infinitesimal,
        );
    }
    Ok(r)
}

/// Rectangle with `|AB| = 1`, `|BC| = 2`, its two triangles covered by
/// segments of infinitesimal width `h`.
pub fn torricelli(h: &GrossNumber) -> Result<ParadoxReport> {
    let bad_width = || Error::NotInfinitesimalWidth(h.to_string());
    let t = match h.terms() {
        [t] => t,
        _ => return Err(bad_width()),
    };
    if !t.base().is_one() || !t.coeff().is_positive() || !t.gpow().is_negative() {
        return Err(bad_width());
    }
    let segments = GrossNumber::one().div_exact(h)?;
    if !segments.is_gross_integer() {
        return Err(Error::CountNotGrossInteger(segments.to_string()));
    }
    let one = GrossNumber::one();
    let two = GrossNumber::from(2);
    let h2 = h * h;
    // corner triangle with legs h and 2h
    let corner = (h * &h.scale(&int(2))).scale(&frac(1, 2));

    // horizontal segment i: 2h - 2h^2 i + h^2
    let horizontal_first = &(&(&two * h) - &h2.scale(&int(2))) + &h2;
    let s_abc = ap_sum(&horizontal_first, &h2.scale(&int(-2)), &segments)?;

    // vertical segment i: rectangle 2h by (1 - h i), plus a corner
    let width = h.scale(&int(2));
    let rect_first = &width * &(&one - h);
    let rect_step = -(&width * h);
    let s_cda = &ap_sum(&rect_first, &rect_step, &segments)? + &(&segments * &corner);

    let mut r = ParadoxReport::new(
        "torricelli",
        "horizontal and vertical segments have the same areas once their triangular ends are counted",
    );
    r.claim("width h", h, true);
    r.claim("segments", &segments, &segments * h == one);
    r.claim("corner triangle area", &corner, corner == h2);
    r.claim("S_ABC", &s_abc, s_abc == one);
    r.claim("S_CDA", &s_cda, s_cda == one);
    r.claim("S_ABC = S_CDA", format!("{s_abc} = {s_cda}"), s_abc == s_cda);
    Ok(r)
}

pub const PARADOX_NAMES: [&str; 5] = ["galileo", "multiplication", "hilbert", "thomson", "torricelli"];

/// Default `h = G^-1` for [`torricelli`].
pub fn default_width() -> GrossNumber {
    GrossNumber::monomial(Rational::one(), int(-1))
}
