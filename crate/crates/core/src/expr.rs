//! Infix arithmetic expressions: lexer, recursive-descent parser, printer and
//! evaluator.
//!
//! Precedence, loosest first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?
//! atom    := number | ident | ident '(' args ')' | '(' expr ')'
//! ```
//!
//! Unary minus binds looser than `^`, so `-3^2` is `-(3^2)`, and `^` is
//! right-associative.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("unknown function '{name}' at byte {pos}")]
    UnknownFunction { pos: usize, name: String },
    #[error("function '{name}' at byte {pos} takes 1 argument, got {found}")]
    Arity {
        pos: usize,
        name: String,
        found: usize,
    },
    #[error("unbound variable '{name}' at byte {pos}")]
    Unbound { pos: usize, name: String },
    #[error("domain error at byte {pos}: {message}")]
    Domain { pos: usize, message: String },
}

impl ExprError {
    pub fn pos(&self) -> usize {
        match self {
            ExprError::Syntax { pos, .. }
            | ExprError::UnknownFunction { pos, .. }
            | ExprError::Arity { pos, .. }
            | ExprError::Unbound { pos, .. }
            | ExprError::Domain { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    pub pos: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Token<'_>>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match b {
            b'+' => Some(TokenKind::Plus),
            b'-' => Some(TokenKind::Minus),
            b'*' => Some(TokenKind::Star),
            b'/' => Some(TokenKind::Slash),
            b'^' => Some(TokenKind::Caret),
            b'(' => Some(TokenKind::LParen),
            b')' => Some(TokenKind::RParen),
            b',' => Some(TokenKind::Comma),
            _ => None,
        };
        let kind = if let Some(kind) = single {
            i += 1;
            kind
        } else if b.is_ascii_digit() || b == b'.' {
            i = scan_number(bytes, i).ok_or_else(|| ExprError::Syntax {
                pos: start,
                expected: "number".into(),
                found: format!("'{}'", &src[start..start + 1]),
            })?;
            TokenKind::Number
        } else if b.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            TokenKind::Ident
        } else {
            let ch = src[i..].chars().next().unwrap();
            return Err(ExprError::Syntax {
                pos: i,
                expected: "token".into(),
                found: format!("'{ch}'"),
            });
        };
        out.push(Token {
            kind,
            text: &src[start..i],
            pos: start,
        });
    }
    Ok(out)
}

/// digits ['.' digits] [('e'|'E') ['+'|'-'] digits]; at least one mantissa digit.
fn scan_number(b: &[u8], mut i: usize) -> Option<usize> {
    let digits = |i: &mut usize| {
        let s = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        *i - s
    };
    let mut n = digits(&mut i);
    if i < b.len() && b[i] == b'.' {
        i += 1;
        n += digits(&mut i);
    }
    if n == 0 {
        return None;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mut j = i + 1;
        if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
            j += 1;
        }
        if digits(&mut j) > 0 {
            i = j;
        }
    }
    Some(i)
}

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

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::Sin,
        Builtin::Cos,
        Builtin::Tan,
        Builtin::Exp,
        Builtin::Ln,
        Builtin::Sqrt,
        Builtin::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Sin => "sin",
            Builtin::Cos => "cos",
            Builtin::Tan => "tan",
            Builtin::Exp => "exp",
            Builtin::Ln => "ln",
            Builtin::Sqrt => "sqrt",
            Builtin::Abs => "abs",
        }
    }

    pub fn lookup(name: &str) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// `literal` keeps the source text so exact consumers can reparse it.
    Number { value: f64, literal: String },
    Var(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Builtin, Box<Expr>),
}

/// Expression node with the byte offset it was parsed from.
///
/// Equality ignores positions.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn number(value: f64) -> Expr {
        Expr {
            kind: ExprKind::Number {
                value,
                literal: value.to_string(),
            },
            pos: 0,
        }
    }

    pub fn var(name: &str) -> Expr {
        Expr {
            kind: ExprKind::Var(name.to_string()),
            pos: 0,
        }
    }

    pub fn neg(child: Expr) -> Expr {
        Expr {
            kind: ExprKind::Neg(Box::new(child)),
            pos: 0,
        }
    }

    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr {
            kind: ExprKind::Binary(op, Box::new(l), Box::new(r)),
            pos: 0,
        }
    }

    pub fn call(f: Builtin, arg: Expr) -> Expr {
        Expr {
            kind: ExprKind::Call(f, Box::new(arg)),
            pos: 0,
        }
    }

    /// Distinct variable names in first-occurrence order.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match &self.kind {
            ExprKind::Number { .. } => {}
            ExprKind::Var(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            ExprKind::Neg(c) | ExprKind::Call(_, c) => c.collect_vars(out),
            ExprKind::Binary(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.precedence(),
            ExprKind::Neg(_) => 3,
            _ => 5,
        }
    }

    pub fn eval<E: Env + ?Sized>(&self, env: &E) -> Result<f64, ExprError> {
        let domain = |message: &str| ExprError::Domain {
            pos: self.pos,
            message: message.to_string(),
        };
        Ok(match &self.kind {
            ExprKind::Number { value, .. } => *value,
            ExprKind::Var(name) => env.lookup(name).ok_or_else(|| ExprError::Unbound {
                pos: self.pos,
                name: name.clone(),
            })?,
            ExprKind::Neg(c) => -c.eval(env)?,
            ExprKind::Binary(op, l, r) => {
                let a = l.eval(env)?;
                let b = r.eval(env)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(domain("division by zero"));
                        }
                        a / b
                    }
                    BinOp::Pow => {
                        if a == 0.0 && b < 0.0 {
                            return Err(domain("zero raised to a negative power"));
                        }
                        let v = a.powf(b);
                        if v.is_nan() && !a.is_nan() && !b.is_nan() {
                            return Err(domain("negative base with non-integer exponent"));
                        }
                        v
                    }
                }
            }
            ExprKind::Call(f, arg) => {
                let x = arg.eval(env)?;
                match f {
                    Builtin::Sin => x.sin(),
                    Builtin::Cos => x.cos(),
                    Builtin::Tan => x.tan(),
                    Builtin::Exp => x.exp(),
                    Builtin::Abs => x.abs(),
                    Builtin::Ln => {
                        if x <= 0.0 {
                            return Err(domain("ln of a non-positive number"));
                        }
                        x.ln()
                    }
                    Builtin::Sqrt => {
                        if x < 0.0 {
                            return Err(domain("sqrt of a negative number"));
                        }
                        x.sqrt()
                    }
                }
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match &self.kind {
            ExprKind::Number { literal, .. } => write!(f, "{literal}"),
            ExprKind::Var(n) => write!(f, "{n}"),
            ExprKind::Neg(c) => {
                write!(f, "-")?;
                child(f, c, 4)
            }
            ExprKind::Call(func, arg) => write!(f, "{}({arg})", func.name()),
            ExprKind::Binary(op, l, r) => {
                let p = op.precedence();
                let (lmin, rmin) = match op {
                    BinOp::Pow => (5, 3),
                    _ => (p, p + 1),
                };
                child(f, l, lmin)?;
                write!(f, " {} ", op.symbol())?;
                child(f, r, rmin)
            }
        }
    }
}

/// Variable bindings for evaluation.
pub trait Env {
    fn lookup(&self, name: &str) -> Option<f64>;
}

impl Env for HashMap<String, f64> {
    fn lookup(&self, name: &str) -> Option<f64> {
        self.get(name).copied()
    }
}

impl Env for HashMap<&str, f64> {
    fn lookup(&self, name: &str) -> Option<f64> {
        self.get(name).copied()
    }
}

impl Env for [(&str, f64)] {
    fn lookup(&self, name: &str) -> Option<f64> {
        self.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }
}

impl<const N: usize> Env for [(&str, f64); N] {
    fn lookup(&self, name: &str) -> Option<f64> {
        self.as_slice().lookup(name)
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let tokens = match tokenize(src) {
        Ok(tokens) => tokens,
        Err(lex) => {
            // a grammar error before the bad character is the earlier problem
            return match parse(&src[..lex.pos()]) {
                Err(e) if e.pos() < lex.pos() => Err(e),
                _ => Err(lex),
            };
        }
    };
    let mut p = Parser {
        tokens,
        idx: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.unexpected(t.pos, "operator or end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.idx)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn unexpected(&self, pos: usize, expected: &str) -> ExprError {
        let found = self
            .tokens
            .iter()
            .find(|t| t.pos == pos)
            .map_or_else(|| "end of input".to_string(), |t| format!("'{}'", t.text));
        ExprError::Syntax {
            pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token<'a>, ExprError> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.next().unwrap()),
            _ => Err(self.unexpected(self.here(), what)),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(op) = match self.peek_kind() {
            Some(TokenKind::Plus) => Some(BinOp::Add),
            Some(TokenKind::Minus) => Some(BinOp::Sub),
            _ => None,
        } {
            let pos = self.next().unwrap().pos;
            let rhs = self.term()?;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(op) = match self.peek_kind() {
            Some(TokenKind::Star) => Some(BinOp::Mul),
            Some(TokenKind::Slash) => Some(BinOp::Div),
            _ => None,
        } {
            let pos = self.next().unwrap().pos;
            let rhs = self.unary()?;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek_kind() == Some(TokenKind::Minus) {
            let pos = self.next().unwrap().pos;
            let child = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(child)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek_kind() == Some(TokenKind::Caret) {
            let pos = self.next().unwrap().pos;
            let exp = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Binary(BinOp::Pow, Box::new(base), Box::new(exp)),
                pos,
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected(self.end, "expression"));
        };
        match tok.kind {
            TokenKind::Number => {
                self.next();
                let value: f64 = tok.text.parse().map_err(|_| ExprError::Syntax {
                    pos: tok.pos,
                    expected: "number".into(),
                    found: format!("'{}'", tok.text),
                })?;
                Ok(Expr {
                    kind: ExprKind::Number {
                        value,
                        literal: tok.text.to_string(),
                    },
                    pos: tok.pos,
                })
            }
            TokenKind::Ident => {
                self.next();
                if self.peek_kind() != Some(TokenKind::LParen) {
                    return Ok(Expr {
                        kind: ExprKind::Var(tok.text.to_string()),
                        pos: tok.pos,
                    });
                }
                let func = Builtin::lookup(tok.text).ok_or_else(|| ExprError::UnknownFunction {
                    pos: tok.pos,
                    name: tok.text.to_string(),
                })?;
                self.next();
                let mut args = Vec::new();
                if self.peek_kind() != Some(TokenKind::RParen) {
                    args.push(self.expr()?);
                    while self.peek_kind() == Some(TokenKind::Comma) {
                        self.next();
                        args.push(self.expr()?);
                    }
                }
                self.expect(TokenKind::RParen, "',' or ')'")?;
                if args.len() != 1 {
                    return Err(ExprError::Arity {
                        pos: tok.pos,
                        name: tok.text.to_string(),
                        found: args.len(),
                    });
                }
                Ok(Expr {
                    kind: ExprKind::Call(func, Box::new(args.pop().unwrap())),
                    pos: tok.pos,
                })
            }
            TokenKind::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected(tok.pos, "expression")),
        }
    }
}
