//! A small expression language over gross-numbers, sets, series and the
//! paradox reports.
//!
//! ```
//! use grossone::exprlang::eval_str;
//! assert_eq!(eval_str("card(intersect(ap(4,5), ap(3,11)))").unwrap().to_string(), "(1/55)*G");
//! assert_eq!(eval_str("G^-1 * G").unwrap().to_string(), "1");
//! ```
//!
//! `G` (or `①`) is grossone. Operators are `+ - * / ^` and the comparisons
//! `< <= = >= >`; `{a, b}` is a finite set. Each line stands alone: there
//! are no variables.

mod eval;
mod lexer;
mod parser;
mod value;

use std::str::FromStr;

use thiserror::Error as ThisError;

use crate::error::Error;
use crate::grossnum::GrossNumber;

pub use eval::{eval, BUILTINS};
pub use lexer::{tokenize, CmpOp, Token, TokenKind};
pub use parser::{parse, BinOp, Expr};
pub use value::{print_value, Value};

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum LangError {
    #[error("LexError at offset {offset}: unexpected character {ch:?}")]
    Lex { offset: usize, ch: char },
    #[error("ParseError at offset {offset}: expected {expected}, found {found}")]
    Parse { offset: usize, expected: String, found: String },
    #[error("TypeError in {builtin}: argument {position} must be {expected}, got {found}")]
    Type { builtin: String, position: usize, expected: String, found: String },
    #[error("ArityError in {builtin}: expected {expected} arguments, got {got}")]
    Arity { builtin: String, expected: String, got: usize },
    #[error("UnknownName at offset {offset}: {name:?}")]
    UnknownName { name: String, offset: usize },
    #[error(transparent)]
    Eval(#[from] Error),
}

impl LangError {
    pub fn kind(&self) -> &'static str {
        match self {
            LangError::Lex { .. } => "LexError",
            LangError::Parse { .. } => "ParseError",
            LangError::Type { .. } => "TypeError",
            LangError::Arity { .. } => "ArityError",
            LangError::UnknownName { .. } => "UnknownName",
            LangError::Eval(e) => e.kind(),
        }
    }

    /// Lexing and parsing failures, as opposed to evaluation failures.
    pub fn is_syntax(&self) -> bool {
        matches!(self, LangError::Lex { .. } | LangError::Parse { .. })
    }
}

pub fn parse_str(src: &str) -> Result<Expr, LangError> {
    parse(&tokenize(src)?)
}

/// Tokenize, parse and evaluate.
pub fn eval_str(src: &str) -> Result<Value, LangError> {
    eval(&parse_str(src)?)
}

/// Reads any expression that evaluates to a number, in particular the
/// canonical text produced by `Display`.
impl FromStr for GrossNumber {
    type Err = LangError;

    fn from_str(s: &str) -> Result<Self, LangError> {
        match eval_str(s)? {
            Value::Number(n) => Ok(n),
            other => Err(LangError::Type {
                builtin: "number".into(),
                position: 1,
                expected: "a number".into(),
                found: other.type_name().into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> String {
        match eval_str(s) {
            Ok(v) => print_value(&v),
            Err(e) => panic!("{s}: {e}"),
        }
    }

    fn fails(s: &str) -> LangError {
        eval_str(s).expect_err(s)
    }

    #[test]
    fn identities() {
        for (src, want) in [("0*G", "0"), ("G-G", "0"), ("G/G", "1"), ("G^0", "1"), ("G^-1 * G", "1")] {
            assert_eq!(ev(src), want, "{src}");
        }
    }

    #[test]
    fn sets() {
        assert_eq!(ev("card(ap(2,2))"), "(1/2)*G");
        assert_eq!(ev("card(remf(ap(1,3),{7}))"), "(1/3)*G - 1");
        assert_eq!(ev("card(addf(intersect(ap(4,5),ap(3,11)),{3,4,5}))"), "(1/55)*G + 3");
        assert_eq!(ev("card(addf(intersect(ap(4,5),ap(3,11)),3,4,5))"), "(1/55)*G + 3");
        assert_eq!(ev("card(ints())"), "2*G + 1");
        assert_eq!(ev("couples(nat(),nat())"), "G^2");
        assert_eq!(ev("intersect(ap(4,5),ap(3,11))"), "AP(first=14, step=55, count=(1/55)*G)");
        assert_eq!(ev("intersect(ap(1,2),ap(2,2))"), "{}");
        assert_eq!(ev("member(scale(nat(),2), G+2)"), "true");
        assert_eq!(ev("member(nat(), G+2)"), "false");
        assert_eq!(ev("last(scale(nat(),2))"), "2*G");
        assert_eq!(ev("at(evens(), G/2)"), "G");
        assert_eq!(ev("card({1,2,2})"), "2");
        assert_eq!(ev("squares()"), "floor(G^(1/2))");
        assert_eq!(ev("root(4*G^2, 2)"), "2*G");
    }

    #[test]
    fn series() {
        assert_eq!(ev("x2(G)"), "2^G - 1");
        assert_eq!(ev("x2(3*G)"), "8^G - 1");
        assert_eq!(ev("grandi(G)"), "0");
        assert_eq!(ev("grandi(G-1)"), "1");
        assert_eq!(ev("grandirr(2*G)"), "0");
        assert_eq!(ev("tri(G)"), "(1/2)*G^2 + (1/2)*G");
        assert_eq!(ev("geo(1/2, G)"), "1 - (1/2)^G");
        assert_eq!(ev("tsum(4*G^3)"), "4*G");
        assert_eq!(
            ev("ramanujan()"),
            "lhs = -(3/2)*G^2 - (3/2)*G; rhs = -(3/2)*G^2 - (3/2)*G; consistent = true"
        );
        assert_eq!(ev("parity(G-1)"), "odd");
        assert_eq!(ev("class(1 - geo(1/2, G))"), "infinitesimal");
        assert_eq!(ev("evalat(x2(G), 10)"), "1023");
    }

    #[test]
    fn powers_and_comparisons() {
        assert_eq!(ev("(1/2)^G"), "(1/2)^G");
        assert_eq!(ev("2^(G+3)"), "8*2^G");
        assert_eq!(ev("G^(1/2) < G"), "true");
        assert_eq!(ev("(G^2)^(1/2)"), "G");
        assert_eq!(ev("(4/9)^(1/2)"), "2/3");
        assert_eq!(ev("2^G > G^100"), "true");
        assert_eq!(ev("parity(G) = parity(2)"), "true");
        assert_eq!(ev("-G^2"), "-G^2");
    }

    #[test]
    fn reports() {
        assert!(ev("hotel()").contains("room G"));
        assert!(ev("lamp(on, G)").contains("on -> off"));
        assert!(ev("lamp(off)").contains("off -> on"));
        assert!(ev("torricelli(2*G^-1)").contains("RESOLVED"));
        assert!(ev("galileo()").contains("floor(G^(1/2))"));
    }

    #[test]
    fn errors() {
        assert_eq!(fails("(G+1)/(G-1)").kind(), "NotExactlyDivisible");
        assert_eq!(fails("1/0").kind(), "DivisionByZero");
        assert_eq!(fails("0^0").kind(), "ZeroToZero");
        assert_eq!(fails("G^G").kind(), "TypeError");
        assert_eq!(fails("(-2)^G").kind(), "NonPositiveBase");
        assert_eq!(fails("card(G)").kind(), "TypeError");
        assert_eq!(fails("card()").kind(), "ArityError");
        assert_eq!(fails("zeno()").kind(), "UnknownName");
        assert_eq!(fails("lamp(dim, G)").kind(), "UnknownName");
        assert_eq!(fails("on").kind(), "UnknownName");
        assert_eq!(fails("hotel(G+1)").kind(), "TooManyNewcomers");
        assert_eq!(fails("3^(4000000000*G)").kind(), "ExponentTooLarge");
        assert_eq!(fails("(G+1)^100000").kind(), "ExponentTooLarge");
        assert_eq!(fails("2^(1/2)").kind(), "CoefficientNotPerfectPower");
        assert!(fails("tri(G,").is_syntax());
        assert!(fails("@").is_syntax());
        let msg = fails("card(3)").to_string();
        assert_eq!(msg, "TypeError in card: argument 1 must be a set, got number");
    }

    #[test]
    fn from_str() {
        let n: GrossNumber = "-(3/2)*G^2 - (3/2)*G".parse().unwrap();
        assert_eq!(n.to_string(), "-(3/2)*G^2 - (3/2)*G");
        assert!("nat()".parse::<GrossNumber>().is_err());
        let lamp: GrossNumber = "1 - (1/2)^G".parse().unwrap();
        assert_eq!(lamp, "1-(1/2)^①".parse().unwrap());
    }

    #[test]
    fn json_shapes() {
        let v = eval_str("card(ints())").unwrap().to_json();
        assert_eq!(v, serde_json::json!({"type": "number", "value": "2*G + 1"}));
        let v = eval_str("parity(G)").unwrap().to_json();
        assert_eq!(v["value"], "even");
        let v = eval_str("hotel()").unwrap().to_json();
        assert_eq!(v["type"], "report");
        assert_eq!(v["resolved"], true);
        let v = eval_str("ramanujan()").unwrap().to_json();
        assert_eq!(v["consistent"], true);
    }
}
