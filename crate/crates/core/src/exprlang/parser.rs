use std::fmt;

use crate::grossnum::Rational;

use super::lexer::{CmpOp, Token, TokenKind};
use super::LangError;

/// Nesting limit so hostile input cannot exhaust the stack.
const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(Rational),
    Grossone,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call { name: String, args: Vec<Expr>, offset: usize },
    Compare(CmpOp, Box<Expr>, Box<Expr>),
    /// `{a, b, ...}`: a finite set of integers.
    SetLit(Vec<Expr>),
    /// A bare name such as `on`, only meaningful as a builtin argument.
    Symbol { name: String, offset: usize },
}

/// Fully parenthesized rendering, handy for checking precedence.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(r) => write!(f, "{r}"),
            Expr::Grossone => f.write_str("G"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Compare(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Call { name, args, .. } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::SetLit(items) => {
                f.write_str("{")?;
                for (i, a) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str("}")
            }
            Expr::Symbol { name, .. } => f.write_str(name),
        }
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    depth: usize,
}

fn describe(t: &Token) -> String {
    match t.kind {
        TokenKind::End => "end of input".into(),
        _ => format!("'{}'", t.lexeme),
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    fn bump(&mut self) -> &'a Token {
        let t = self.peek();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> LangError {
        let t = self.peek();
        LangError::Parse { offset: t.offset, expected: expected.into(), found: describe(t) }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<(), LangError> {
        if self.peek().kind == kind {
            self.bump();
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn enter(&mut self) -> Result<(), LangError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("less deeply nested expression"));
        }
        Ok(())
    }

    fn comparison(&mut self) -> Result<Expr, LangError> {
        let lhs = self.additive()?;
        if let TokenKind::Cmp(op) = self.peek().kind {
            self.bump();
            let rhs = self.additive()?;
            return Ok(Expr::Compare(op, Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Plus => BinOp::Add,
                TokenKind::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.multiplicative()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Star => BinOp::Mul,
                TokenKind::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, LangError> {
        self.enter()?;
        let e = if self.peek().kind == TokenKind::Minus {
            self.bump();
            Expr::Neg(Box::new(self.unary()?))
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(e)
    }

    // The exponent is parsed as a unary so that `G^-1` and `2^3^2` work.
    fn power(&mut self) -> Result<Expr, LangError> {
        let base = self.atom()?;
        if self.peek().kind == TokenKind::Caret {
            self.bump();
            let exp = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn list(&mut self, close: TokenKind, what: &str) -> Result<Vec<Expr>, LangError> {
        let mut items = Vec::new();
        if self.peek().kind == close {
            self.bump();
            return Ok(items);
        }
        loop {
            items.push(self.comparison()?);
            match self.peek().kind {
                TokenKind::Comma => {
                    self.bump();
                }
                ref k if *k == close => {
                    self.bump();
                    return Ok(items);
                }
                _ => return Err(self.error(what)),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, LangError> {
        let t = self.peek();
        match &t.kind {
            TokenKind::Int(n) => {
                self.bump();
                Ok(Expr::Literal(Rational::from_integer(n.clone())))
            }
            TokenKind::G => {
                self.bump();
                Ok(Expr::Grossone)
            }
            TokenKind::LParen => {
                self.bump();
                self.enter()?;
                let e = self.comparison()?;
                self.depth -= 1;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(e)
            }
            TokenKind::LBrace => {
                self.bump();
                self.enter()?;
                let items = self.list(TokenKind::RBrace, "',' or '}'")?;
                self.depth -= 1;
                Ok(Expr::SetLit(items))
            }
            TokenKind::Ident(name) => {
                self.bump();
                if self.peek().kind != TokenKind::LParen {
                    return Ok(Expr::Symbol { name: name.clone(), offset: t.offset });
                }
                self.bump();
                self.enter()?;
                let args = self.list(TokenKind::RParen, "',' or ')'")?;
                self.depth -= 1;
                Ok(Expr::Call { name: name.clone(), args, offset: t.offset })
            }
            _ => Err(self.error("expression")),
        }
    }
}

/// Parse a full token stream (as produced by `tokenize`) into one expression.
pub fn parse(tokens: &[Token]) -> Result<Expr, LangError> {
    assert!(
        tokens.last().is_some_and(|t| t.kind == TokenKind::End),
        "token stream must end with End"
    );
    let mut p = Parser { toks: tokens, pos: 0, depth: 0 };
    let e = p.comparison()?;
    if p.peek().kind != TokenKind::End {
        return Err(p.error("end of input"));
    }
    Ok(e)
}
