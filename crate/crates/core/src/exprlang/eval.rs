use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::Error;
use crate::grossnum::{exp_gross, GrossNumber, Rational};
use crate::paradoxes::{
    default_width, galileo_report, hilbert_accommodate, multiplication_report, thomson_lamp,
    torricelli, LampState,
};
use crate::series;
use crate::setalgebra::{
    ap_nat, couples_count, evens, integers_set, naturals, odds, squares_count, GrossSet, RootCount,
};

use super::lexer::CmpOp;
use super::parser::{BinOp, Expr};
use super::value::Value;
use super::LangError;

/// Largest substitution value accepted by `evalat` for numbers with an
/// exponential factor such as `2^G`.
const MAX_EXP_SUBSTITUTION: u64 = 1 << 20;

pub const BUILTINS: &[&str] = &[
    "ap", "nat", "evens", "odds", "ints", "card", "last", "at", "member", "intersect", "scale",
    "addf", "remf", "unionf", "couples", "squares", "tri", "geo", "x2", "grandi", "grandirr",
    "ramanujan", "tsum", "apsum", "parity", "class", "evalat", "root", "galileo",
    "multiplication", "hotel", "lamp", "torricelli",
];

type Res<T> = Result<T, LangError>;

fn type_err(builtin: &str, position: usize, expected: &str, found: &Value) -> LangError {
    LangError::Type {
        builtin: builtin.into(),
        position,
        expected: expected.into(),
        found: found.type_name().into(),
    }
}

fn number(builtin: &str, position: usize, v: Value) -> Res<GrossNumber> {
    match v {
        Value::Number(n) => Ok(n),
        other => Err(type_err(builtin, position, "a number", &other)),
    }
}

fn integer(builtin: &str, position: usize, v: Value) -> Res<BigInt> {
    match &v {
        Value::Number(n) => n.as_integer().ok_or_else(|| type_err(builtin, position, "a finite integer", &v)),
        _ => Err(type_err(builtin, position, "a finite integer", &v)),
    }
}

fn rational(builtin: &str, position: usize, v: Value) -> Res<Rational> {
    match &v {
        Value::Number(n) => n.as_rational().ok_or_else(|| type_err(builtin, position, "a finite rational", &v)),
        _ => Err(type_err(builtin, position, "a finite rational", &v)),
    }
}

fn set(builtin: &str, position: usize, v: Value) -> Res<GrossSet> {
    match v {
        Value::Set(s) => Ok(s),
        other => Err(type_err(builtin, position, "a set", &other)),
    }
}

fn arity(builtin: &str, args: &[Expr], min: usize, max: usize) -> Res<()> {
    if (min..=max).contains(&args.len()) {
        return Ok(());
    }
    let expected = match (min, max) {
        (a, b) if a == b => a.to_string(),
        (a, usize::MAX) => format!("at least {a}"),
        (a, b) => format!("{a} to {b}"),
    };
    Err(LangError::Arity { builtin: builtin.into(), expected, got: args.len() })
}

/// Integers given either one by one or as set literals.
fn finite_elems(builtin: &str, args: &[Expr], first_pos: usize) -> Res<Vec<BigInt>> {
    let mut out = Vec::new();
    for (i, a) in args.iter().enumerate() {
        let pos = first_pos + i;
        match eval(a)? {
            Value::Set(GrossSet::Adjusted(s)) if s.base().is_none() && s.removed().is_empty() => {
                out.extend(s.added().iter().cloned());
            }
            other => out.push(integer(builtin, pos, other)?),
        }
    }
    Ok(out)
}

fn power(base: GrossNumber, exp: GrossNumber) -> Res<GrossNumber> {
    let too_large = || Error::ExponentTooLarge(exp.to_string());
    match exp.as_rational() {
        Some(r) if r.is_integer() => {
            let k = r.to_integer().to_i64().ok_or_else(too_large)?;
            Ok(base.pow_int(k)?)
        }
        Some(r) => {
            let p = r.numer().to_i64().ok_or_else(too_large)?;
            let q = r.denom().to_u32().ok_or_else(too_large)?;
            Ok(base.pow_int(p)?.nth_root(q)?)
        }
        None => {
            let b = base.as_rational().ok_or_else(|| {
                type_err("^", 1, "a positive rational when the exponent involves G", &Value::Number(base.clone()))
            })?;
            Ok(exp_gross(&b, &exp)?)
        }
    }
}

fn binary(op: BinOp, l: &Expr, r: &Expr) -> Res<Value> {
    let sym = match op {
        BinOp::Add => "+",
        BinOp::Sub => "-",
        BinOp::Mul => "*",
        BinOp::Div => "/",
        BinOp::Pow => "^",
    };
    let a = number(sym, 1, eval(l)?)?;
    let b = number(sym, 2, eval(r)?)?;
    let n = match op {
        BinOp::Add => &a + &b,
        BinOp::Sub => &a - &b,
        BinOp::Mul => &a * &b,
        BinOp::Div => a.div_exact(&b)?,
        BinOp::Pow => power(a, b)?,
    };
    Ok(Value::Number(n))
}

fn compare(op: CmpOp, l: &Expr, r: &Expr) -> Res<Value> {
    let (a, b) = (eval(l)?, eval(r)?);
    let sym = op.symbol();
    // `=` also compares non-numeric values structurally
    let numeric = matches!(a, Value::Number(_)) || matches!(b, Value::Number(_));
    if op == CmpOp::Eq && !numeric {
        return Ok(Value::Bool(a == b));
    }
    let a = number(sym, 1, a)?;
    let b = number(sym, 2, b)?;
    let ord = a.compare(&b);
    let holds = match op {
        CmpOp::Lt => ord.is_lt(),
        CmpOp::Le => ord.is_le(),
        CmpOp::Eq => ord.is_eq(),
        CmpOp::Ge => ord.is_ge(),
        CmpOp::Gt => ord.is_gt(),
    };
    Ok(Value::Bool(holds))
}

/// Evaluate an expression. Pure: nothing is remembered between calls.
pub fn eval(e: &Expr) -> Res<Value> {
    match e {
        Expr::Literal(r) => Ok(Value::Number(GrossNumber::from_rational(r.clone()))),
        Expr::Grossone => Ok(Value::Number(GrossNumber::grossone())),
        Expr::Neg(inner) => Ok(Value::Number(-&number("-", 1, eval(inner)?)?)),
        Expr::Binary(op, l, r) => binary(*op, l, r),
        Expr::Compare(op, l, r) => compare(*op, l, r),
        Expr::SetLit(items) => {
            let elems = finite_elems("{}", items, 1)?;
            Ok(Value::Set(GrossSet::empty().union_finite(&elems)))
        }
        Expr::Symbol { name, offset } => Err(LangError::UnknownName { name: name.clone(), offset: *offset }),
        Expr::Call { name, args, offset } => call(name, args, *offset),
    }
}

fn call(name: &str, args: &[Expr], offset: usize) -> Res<Value> {
    let arg = |i: usize| eval(&args[i]);
    let num = |i: usize| -> Res<GrossNumber> { number(name, i + 1, arg(i)?) };
    let set_at = |i: usize| -> Res<GrossSet> { set(name, i + 1, arg(i)?) };
    let n = |v: GrossNumber| Ok(Value::Number(v));
    let s = |v: GrossSet| Ok(Value::Set(v));

    match name {
        "ap" => {
            arity(name, args, 2, 2)?;
            let k = integer(name, 1, arg(0)?)?;
            let m = integer(name, 2, arg(1)?)?;
            s(ap_nat(k, m)?.into())
        }
        "nat" | "evens" | "odds" | "ints" => {
            arity(name, args, 0, 0)?;
            let ap = match name {
                "nat" => naturals(),
                "evens" => evens(),
                "odds" => odds(),
                _ => integers_set(),
            };
            s(ap.into())
        }
        "card" => {
            arity(name, args, 1, 1)?;
            n(set_at(0)?.cardinality())
        }
        "last" => {
            arity(name, args, 1, 1)?;
            let v = set_at(0)?;
            match v.last() {
                Some(x) => n(x),
                None => Err(type_err(name, 1, "a non-empty set", &Value::Set(v))),
            }
        }
        "at" => {
            arity(name, args, 2, 2)?;
            let v = set_at(0)?;
            let i = num(1)?;
            match v.as_ap() {
                Some(ap) => n(ap.element_at(&i)?),
                None => Err(type_err(name, 1, "a progression", &Value::Set(v))),
            }
        }
        "member" => {
            arity(name, args, 2, 2)?;
            let v = set_at(0)?;
            let x = num(1)?;
            let found = match (x.as_integer(), v.as_ap()) {
                (Some(i), _) => v.member(&i),
                (None, Some(ap)) => ap.contains(&x),
                (None, None) => match &v {
                    GrossSet::Adjusted(a) => a.base().is_some_and(|b| b.contains(&x)),
                    GrossSet::Ap(ap) => ap.contains(&x),
                },
            };
            Ok(Value::Bool(found))
        }
        "intersect" => {
            arity(name, args, 2, 2)?;
            let (a, b) = (set_at(0)?, set_at(1)?);
            let ap_of = |v: &GrossSet, pos: usize| {
                v.as_ap().cloned().ok_or_else(|| type_err(name, pos, "a progression", &Value::Set(v.clone())))
            };
            let (a, b) = (ap_of(&a, 1)?, ap_of(&b, 2)?);
            s(a.intersect(&b)?.map_or_else(GrossSet::empty, GrossSet::from))
        }
        "scale" => {
            arity(name, args, 2, 2)?;
            let v = set_at(0)?;
            let m = integer(name, 2, arg(1)?)?;
            match v.as_ap() {
                Some(ap) => s(ap.scale(&m)?.into()),
                None => Err(type_err(name, 1, "a progression", &Value::Set(v))),
            }
        }
        "addf" | "remf" | "unionf" => {
            arity(name, args, 1, usize::MAX)?;
            let v = set_at(0)?;
            let elems = finite_elems(name, &args[1..], 2)?;
            s(match name {
                "addf" => v.add_finite(&elems)?,
                "remf" => v.remove_finite(&elems)?,
                _ => v.union_finite(&elems),
            })
        }
        "couples" => {
            arity(name, args, 2, 2)?;
            n(couples_count(&set_at(0)?, &set_at(1)?))
        }
        "squares" => {
            arity(name, args, 0, 0)?;
            Ok(Value::RootCount(squares_count()))
        }
        "tri" => {
            arity(name, args, 1, 1)?;
            n(series::triangular(&num(0)?)?)
        }
        "geo" => {
            arity(name, args, 2, 2)?;
            let q = rational(name, 1, arg(0)?)?;
            n(series::geometric(&q, &num(1)?)?)
        }
        "x2" => {
            arity(name, args, 1, 1)?;
            n(series::powers_of_two_sum(&num(0)?)?)
        }
        "grandi" => {
            arity(name, args, 1, 1)?;
            n(GrossNumber::from(i64::from(series::grandi(&num(0)?)?.value)))
        }
        "grandirr" => {
            arity(name, args, 1, 1)?;
            n(series::grandi_rearranged(&num(0)?)?)
        }
        "ramanujan" => {
            arity(name, args, 0, 1)?;
            let audit = match args.len() {
                0 => series::ramanujan_audit(),
                _ => series::ramanujan_audit_at(&num(0)?)?,
            };
            Ok(Value::Audit(audit))
        }
        "tsum" => {
            arity(name, args, 1, 1)?;
            n(series::infinitesimal_sum(&num(0)?)?)
        }
        "apsum" => {
            arity(name, args, 3, 3)?;
            n(series::ap_sum(&num(0)?, &num(1)?, &num(2)?)?)
        }
        "parity" => {
            arity(name, args, 1, 1)?;
            Ok(Value::Parity(num(0)?.parity()?))
        }
        "class" => {
            arity(name, args, 1, 1)?;
            Ok(Value::Class(num(0)?.classify()))
        }
        "evalat" => {
            arity(name, args, 2, 2)?;
            let x = num(0)?;
            let tv = arg(1)?;
            let t = match &tv {
                Value::Number(t) => t.as_integer().filter(|t| t.is_positive()).and_then(|t| t.to_u64()),
                _ => None,
            }
            .ok_or_else(|| type_err(name, 2, "a positive integer", &tv))?;
            if t > MAX_EXP_SUBSTITUTION && x.terms().iter().any(|term| !term.base().is_one()) {
                return Err(Error::ExponentTooLarge(t.to_string()).into());
            }
            n(GrossNumber::from_rational(x.eval_at(t)?))
        }
        "root" => {
            arity(name, args, 2, 2)?;
            let x = num(0)?;
            let dv = arg(1)?;
            let d = match &dv {
                Value::Number(d) => d.as_integer().and_then(|d| d.to_u32()).filter(|d| *d > 0),
                _ => None,
            }
            .ok_or_else(|| type_err(name, 2, "a positive integer", &dv))?;
            Ok(Value::RootCount(RootCount::new(x, d)?))
        }
        "galileo" => {
            arity(name, args, 0, 0)?;
            Ok(Value::Report(galileo_report()))
        }
        "multiplication" => {
            arity(name, args, 0, 0)?;
            Ok(Value::Report(multiplication_report()))
        }
        "hotel" => {
            arity(name, args, 0, 1)?;
            let m = if args.is_empty() { GrossNumber::one() } else { num(0)? };
            Ok(Value::Report(hilbert_accommodate(&m)?))
        }
        "lamp" => {
            arity(name, args, 1, 2)?;
            let initial = match &args[0] {
                Expr::Symbol { name: s, .. } if s == "on" => LampState::On,
                Expr::Symbol { name: s, .. } if s == "off" => LampState::Off,
                Expr::Symbol { name: s, offset } => {
                    return Err(LangError::UnknownName { name: s.clone(), offset: *offset })
                }
                other => return Err(type_err(name, 1, "on or off", &eval(other)?)),
            };
            let k = if args.len() == 2 { num(1)? } else { GrossNumber::grossone() };
            Ok(Value::Report(thomson_lamp(initial, &k)?))
        }
        "torricelli" => {
            arity(name, args, 0, 1)?;
            let h = if args.is_empty() { default_width() } else { num(0)? };
            Ok(Value::Report(torricelli(&h)?))
        }
        _ => Err(LangError::UnknownName { name: name.into(), offset }),
    }
}
