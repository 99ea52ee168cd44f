//! Canonical text form, e.g. `2*G + 1`, `(1/2)*G^2 - 3`, `1 - (1/2)^G`.
//!
//! The output is accepted back by the expression parser and evaluates to
//! the same number.

use std::fmt::{self, Display, Write};

use num_traits::{One, Signed};

use super::rational::{fmt_rational, is_integer};
use super::{GrossNumber, GrossTerm};

fn write_magnitude(out: &mut String, t: &GrossTerm) {
    let coeff = t.coeff().abs();
    let mut factors: Vec<String> = Vec::with_capacity(3);
    if !t.base().is_one() {
        factors.push(if is_integer(t.base()) {
            format!("{}^G", t.base().numer())
        } else {
            format!("({})^G", fmt_rational(t.base()))
        });
    }
    let p = t.gpow();
    if p.is_one() {
        factors.push("G".into());
    } else if is_integer(p) {
        if !num_traits::Zero::is_zero(p) {
            factors.push(format!("G^{}", p.numer()));
        }
    } else {
        factors.push(format!("G^({})", fmt_rational(p)));
    }
    if factors.is_empty() {
        out.push_str(&fmt_rational(&coeff));
        return;
    }
    if !coeff.is_one() {
        if is_integer(&coeff) {
            write!(out, "{}*", coeff.numer()).unwrap();
        } else {
            write!(out, "({})*", fmt_rational(&coeff)).unwrap();
        }
    }
    out.push_str(&factors.join("*"));
}

impl Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, t) in self.terms().iter().enumerate() {
            let neg = t.coeff().is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            write_magnitude(&mut out, t);
        }
        f.write_str(&out)
    }
}
