//! Recursive-descent parser and canonical renderer for polynomial text.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | implicit) factor)*
//! factor := base ('^' nat)?
//! base   := nat | nat '/' nat | var | '(' expr ')' | '-' factor
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Implicit
//! multiplication is accepted before a variable or an opening parenthesis:
//! `2x`, `x(x+1)`, `xy^3`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::rational::Rational;
use crate::polyalg::unipoly::UniPoly;

pub const MAX_EXPONENT: u32 = 10_000;

/// Variable names the grammar recognises.
pub const VARIABLES: [char; 5] = ['x', 'y', 'u', 'v', 'z'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Literal(Rational),
    Var(char),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Neg(Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Distinct variables in order of first appearance.
    pub fn variables(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<char>) {
        match self {
            PolyExpr::Literal(_) => {}
            PolyExpr::Var(c) => {
                if !out.contains(c) {
                    out.push(*c);
                }
            }
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.collect_vars(out),
        }
    }

    /// Expands into a bivariate polynomial with `secondary` and `main` as the
    /// two variables. The expression must not use any other variable.
    pub fn expand(&self, secondary: char, main: char) -> BiPoly {
        match self {
            PolyExpr::Literal(r) => BiPoly::constant(r.clone()),
            PolyExpr::Var(c) if *c == main => BiPoly::main_var(),
            PolyExpr::Var(c) => {
                debug_assert_eq!(*c, secondary, "variable outside the expansion ring");
                BiPoly::secondary_var()
            }
            PolyExpr::Add(a, b) => &a.expand(secondary, main) + &b.expand(secondary, main),
            PolyExpr::Sub(a, b) => &a.expand(secondary, main) - &b.expand(secondary, main),
            PolyExpr::Mul(a, b) => &a.expand(secondary, main) * &b.expand(secondary, main),
            PolyExpr::Neg(a) => -&a.expand(secondary, main),
            PolyExpr::Pow(a, e) => a.expand(secondary, main).pow(*e),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Nat(BigInt, String),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = String::from(c);
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    digits.push(chars[i].1);
                    i += 1;
                }
                let n: BigInt = digits.parse().expect("ascii digits");
                Tok::Nat(n, digits)
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_alphabetic() => Tok::Var(c),
            c => {
                return Err(Error::Syntax { position: pos, message: format!("unexpected character '{c}'") })
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    allowed: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos(), message: message.into() })
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Tok::Var(_) | Tok::LParen => {
                    acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Tok::Nat(..) => return self.error("number cannot follow a factor without '*'"),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PolyExpr> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let position = self.pos();
        match self.bump() {
            (Tok::Nat(n, digits), _) => {
                if n > BigInt::from(MAX_EXPONENT) {
                    return Err(Error::ExponentOverflow { exponent: digits, position });
                }
                let e: u32 = digits.parse().expect("bounded exponent");
                Ok(PolyExpr::Pow(Box::new(base), e))
            }
            _ => Err(Error::Syntax { position, message: "exponent must be a nonnegative integer literal".into() }),
        }
    }

    fn base(&mut self) -> Result<PolyExpr> {
        let position = self.pos();
        match self.bump() {
            (Tok::Nat(n, _), _) => {
                if *self.peek() != Tok::Slash {
                    return Ok(PolyExpr::Literal(Rational::from_integer(n)));
                }
                self.bump();
                let dpos = self.pos();
                match self.bump() {
                    (Tok::Nat(d, _), _) if !d.is_zero() => Ok(PolyExpr::Literal(Rational::new(n, d))),
                    (Tok::Nat(..), _) => Err(Error::Syntax { position: dpos, message: "zero denominator".into() }),
                    _ => Err(Error::Syntax { position: dpos, message: "expected denominator literal".into() }),
                }
            }
            (Tok::Var(c), _) => {
                if !self.allowed.contains(&c) {
                    return Err(Error::UnknownVariable { variable: c, position });
                }
                Ok(PolyExpr::Var(c))
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            (Tok::Minus, _) => Ok(PolyExpr::Neg(Box::new(self.factor()?))),
            (Tok::End, _) => Err(Error::Syntax { position, message: "unexpected end of input".into() }),
            (t, _) => Err(Error::Syntax { position, message: format!("unexpected token {t:?}") }),
        }
    }
}

/// Parses text into an expression tree over the `allowed` variables.
pub fn parse_expr(text: &str, allowed: &[char]) -> Result<PolyExpr> {
    let mut p = Parser { toks: tokenize(text)?, at: 0, allowed };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("trailing input");
    }
    if e.variables().len() > 2 {
        return Err(Error::Syntax { position: 0, message: "at most two distinct variables are supported".into() });
    }
    Ok(e)
}

/// Parses a polynomial in the single variable `var`.
pub fn parse_univariate(text: &str, var: char) -> Result<UniPoly> {
    let e = parse_expr(text, &[var])?;
    Ok(e.expand(var, '\0').coeff(0))
}

/// Parses a polynomial in `secondary` and `main`, returned as a polynomial in
/// `main` with coefficients in `secondary`.
pub fn parse_bivariate(text: &str, secondary: char, main: char) -> Result<BiPoly> {
    let e = parse_expr(text, &[secondary, main])?;
    Ok(e.expand(secondary, main))
}

/// Parses `lhs = rhs` (or a bare expression) as `lhs - rhs`.
pub fn parse_equation(text: &str, secondary: char, main: char) -> Result<BiPoly> {
    match text.split_once('=') {
        None => parse_bivariate(text, secondary, main),
        Some((lhs, rhs)) => {
            let offset = lhs.len() + 1;
            let l = parse_bivariate(lhs, secondary, main)?;
            let r = parse_bivariate(rhs, secondary, main).map_err(|e| shift_position(e, offset))?;
            Ok(&l - &r)
        }
    }
}

fn shift_position(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { position, message } => Error::Syntax { position: position + offset, message },
        Error::UnknownVariable { variable, position } => {
            Error::UnknownVariable { variable, position: position + offset }
        }
        Error::ExponentOverflow { exponent, position } => {
            Error::ExponentOverflow { exponent, position: position + offset }
        }
        other => other,
    }
}

fn render_monomial(out: &mut String, coeff: &Rational, vars: &[(char, usize)], first: bool) {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let vars: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(c, e)| if *e == 1 { c.to_string() } else { format!("{c}^{e}") })
        .collect();
    let coeff_text = if mag.is_integer() { mag.numer().to_string() } else { format!("{}/{}", mag.numer(), mag.denom()) };
    if vars.is_empty() {
        out.push_str(&coeff_text);
    } else if mag.is_one() {
        out.push_str(&vars.join("*"));
    } else {
        out.push_str(&coeff_text);
        out.push('*');
        out.push_str(&vars.join("*"));
    }
}

/// Canonical descending-degree text, e.g. `x^3 - 16*x + 16`.
pub fn render_poly(p: &UniPoly, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        render_monomial(&mut out, c, &[(var, i)], first);
    }
    out
}

/// Renders terms by descending total degree, then descending `main` degree.
pub fn render_bipoly(p: &BiPoly, secondary: char, main: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(usize, usize, &Rational)> = p.terms().collect();
    terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.1)));
    let mut out = String::new();
    for (i, j, c) in terms {
        let first = out.is_empty();
        render_monomial(&mut out, c, &[(secondary, i), (main, j)], first);
    }
    out
}
