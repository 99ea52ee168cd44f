use std::fmt;

use num_bigint::BigInt;

use super::LangError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Int(BigInt),
    Slash,
    G,
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Cmp(CmpOp),
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Int(n) => write!(f, "Int({n})"),
            TokenKind::Ident(s) => write!(f, "Ident({s})"),
            TokenKind::Cmp(op) => write!(f, "Cmp({})", op.symbol()),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset into the source.
    pub offset: usize,
}

/// Split `input` into tokens, ending with [`TokenKind::End`].
pub fn tokenize(input: &str) -> Result<Vec<Token>, LangError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let kind = if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            TokenKind::Int(input[start..end].parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            match &input[start..end] {
                "G" => TokenKind::G,
                word => TokenKind::Ident(word.to_string()),
            }
        } else {
            chars.next();
            let next_is_eq = chars.peek().is_some_and(|&(_, d)| d == '=');
            match c {
                '①' => TokenKind::G,
                '/' => TokenKind::Slash,
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '{' => TokenKind::LBrace,
                '}' => TokenKind::RBrace,
                ',' => TokenKind::Comma,
                '=' => TokenKind::Cmp(CmpOp::Eq),
                '<' | '>' if next_is_eq => {
                    chars.next();
                    TokenKind::Cmp(if c == '<' { CmpOp::Le } else { CmpOp::Ge })
                }
                '<' => TokenKind::Cmp(CmpOp::Lt),
                '>' => TokenKind::Cmp(CmpOp::Gt),
                other => return Err(LangError::Lex { offset: start, ch: other }),
            }
        };
        let end = chars.peek().map_or(input.len(), |&(i, _)| i);
        out.push(Token { kind, lexeme: input[start..end].to_string(), offset: start });
    }
    out.push(Token { kind: TokenKind::End, lexeme: String::new(), offset: input.len() });
    Ok(out)
}
