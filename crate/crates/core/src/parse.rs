//! Expression parser for ring elements, shared by the CLI and the tests.
//!
//! Grammar (whitespace insensitive, juxtaposition multiplies):
//!
//! ```text
//! Expr    := ['-'] Term (('+' | '-') Term)*
//! Term    := Factor (['*'] Factor)*
//! Factor  := Primary ['^' SignedInt]
//! Primary := Var | 't' | Int | '(' Expr ')'
//! Var     := ('W' | 'V' | 'Y' | 'A') '[' SignedInt ',' SignedInt ']'
//! ```
//!
//! The same syntax serves all three rings; conversion validates the variables
//! against the ring (`W`/`V` in the hat ring, `Y`/`A` in the `Y`-rings, no `t`
//! in the classical ring) and node indices against the Cartan datum. Negative
//! powers apply to invertible factors only: any `Y`/`A` monomial, the
//! coefficient units `t^k`, and nothing else.

use thiserror::Error;

use crate::cartan::CartanData;
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial, YMonomial};
use crate::rings::{HatElement, YClassicalElement, YElement};
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

/// Which concrete ring an expression is converted into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Hat,
    Y,
    Classical,
}

impl Ring {
    pub fn name(&self) -> &'static str {
        match self {
            Ring::Hat => "hat",
            Ring::Y => "y",
            Ring::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    Int(i64),
    T,
    Var { name: char, node: i64, k: i64, pos: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64, usize),
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == b => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => err(
                self.pos,
                format!("expected {:?}, found {:?}", b as char, got as char),
            ),
            None => err(self.pos, format!("expected {:?}, found end of input", b as char)),
        }
    }

    fn parse_expr(&mut self) -> Result<Ast, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            Ast::Neg(Box::new(self.parse_term()?))
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = Ast::Add(Box::new(acc), Box::new(self.parse_term()?));
                }
                Some(b'-') => {
                    self.bump();
                    acc = Ast::Sub(Box::new(acc), Box::new(self.parse_term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(
            self.peek(),
            Some(b'(') | Some(b't') | Some(b'W') | Some(b'V') | Some(b'Y') | Some(b'A'))
            || matches!(self.peek(), Some(b) if b.is_ascii_digit())
    }

    fn parse_term(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.bump();
                acc = Ast::Mul(Box::new(acc), Box::new(self.parse_factor()?));
            } else if self.starts_factor() {
                acc = Ast::Mul(Box::new(acc), Box::new(self.parse_factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.parse_primary()?;
        if self.peek() == Some(b'^') {
            let pos = self.pos;
            self.bump();
            let e = self.parse_signed_int()?;
            return Ok(Ast::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn parse_primary(&mut self) -> Result<Ast, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b't') => {
                self.bump();
                Ok(Ast::T)
            }
            Some(c @ (b'W' | b'V' | b'Y' | b'A')) => {
                let pos = self.pos;
                self.bump();
                self.expect(b'[')?;
                let node = self.parse_signed_int()?;
                self.expect(b',')?;
                let k = self.parse_signed_int()?;
                self.expect(b']')?;
                Ok(Ast::Var { name: c as char, node, k, pos })
            }
            Some(b) if b.is_ascii_digit() => Ok(Ast::Int(self.parse_int()?)),
            Some(b) => err(self.pos, format!("unexpected character {:?}", b as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }

    fn parse_signed_int(&mut self) -> Result<i64, ParseError> {
        if self.peek() == Some(b'-') {
            self.bump();
            return Ok(-self.parse_int()?);
        }
        self.parse_int()
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {}
            Some(b) => return err(self.pos, format!("expected a number, found {:?}", b as char)),
            None => return err(self.pos, "expected a number, found end of input"),
        }
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).expect("ascii digits");
        text.parse::<i64>()
            .map_err(|_| ParseError { pos: start, message: format!("number {text} overflows") })
    }
}

fn parse_ast(input: &str) -> Result<Ast, ParseError> {
    let mut p = Parser::new(input);
    let ast = p.parse_expr()?;
    if let Some(b) = p.peek() {
        return err(p.pos, format!("unexpected trailing {:?}", b as char));
    }
    Ok(ast)
}

fn eval<M, C>(
    cd: &CartanData,
    ring: Ring,
    ast: &Ast,
    var: &dyn Fn(char, usize, i64, usize) -> Result<M, ParseError>,
    invert: &dyn Fn(&M) -> Option<M>,
) -> Result<Element<M, C>, ParseError>
where
    M: Monomial,
    C: Scalar,
{
    match ast {
        Ast::Int(n) => Ok(Element::scalar(C::from_int(*n))),
        Ast::T => {
            if ring == Ring::Classical {
                err(0, "t is not available in the classical ring")
            } else {
                Ok(Element::scalar(C::t_power(1)))
            }
        }
        Ast::Var { name, node, k, pos } => {
            if *node < 1 || *node > cd.n() as i64 {
                return err(
                    *pos,
                    format!("node {} out of range 1..={}", node, cd.n()),
                );
            }
            Ok(Element::from_monomial(var(*name, *node as usize, *k, *pos)?))
        }
        Ast::Neg(a) => Ok(eval(cd, ring, a, var, invert)?.neg()),
        Ast::Add(a, b) => Ok(eval(cd, ring, a, var, invert)?.add(&eval(cd, ring, b, var, invert)?)),
        Ast::Sub(a, b) => Ok(eval(cd, ring, a, var, invert)?.sub(&eval(cd, ring, b, var, invert)?)),
        Ast::Mul(a, b) => Ok(eval(cd, ring, a, var, invert)?.mul(&eval(cd, ring, b, var, invert)?)),
        Ast::Pow(a, e, pos) => {
            let base = eval(cd, ring, a, var, invert)?;
            if *e >= 0 {
                let e32 = u32::try_from(*e)
                    .map_err(|_| ParseError { pos: *pos, message: format!("power {e} too large") })?;
                return Ok(base.pow(e32));
            }
            // Negative powers: only single invertible terms.
            let mut terms = base.iter();
            let Some((m, c)) = terms.next() else {
                return err(*pos, "cannot raise 0 to a negative power");
            };
            if terms.next().is_some() {
                return err(*pos, "cannot raise a sum to a negative power");
            }
            let Some(c_inv) = c.inverse() else {
                return err(*pos, "coefficient is not invertible");
            };
            let Some(m_inv) = invert(m) else {
                return err(*pos, "monomial is not invertible in this ring");
            };
            let mut out = Element::one();
            for _ in 0..e.unsigned_abs() {
                out = out.mul(&Element::term(m_inv.clone(), c_inv.clone()));
            }
            Ok(out)
        }
    }
}

fn hat_var(name: char, node: usize, k: i64, pos: usize) -> Result<HatMonomial, ParseError> {
    match name {
        'W' => Ok(HatMonomial::w_gen(node, k)),
        'V' => Ok(HatMonomial::v_gen(node, k)),
        _ => err(pos, format!("variable {name} is not available in the hat ring (use W, V)")),
    }
}

fn y_var(cd: &CartanData) -> impl Fn(char, usize, i64, usize) -> Result<YMonomial, ParseError> + '_ {
    move |name, node, k, pos| match name {
        'Y' => Ok(YMonomial::y_gen(node, k)),
        'A' => Ok(cd.a_inverse_monomial(node, k).inverse()),
        _ => err(pos, format!("variable {name} is not available in the Y rings (use Y, A)")),
    }
}

/// Parses an expression into the hat ring.
pub fn parse_hat(cd: &CartanData, input: &str) -> Result<HatElement, ParseError> {
    let ast = parse_ast(input)?;
    eval(cd, Ring::Hat, &ast, &hat_var, &|m: &HatMonomial| {
        m.is_unit().then(HatMonomial::unit)
    })
}

/// Parses an expression into the deformed `Y`-ring.
pub fn parse_y(cd: &CartanData, input: &str) -> Result<YElement, ParseError> {
    let ast = parse_ast(input)?;
    eval(cd, Ring::Y, &ast, &y_var(cd), &|m: &YMonomial| Some(m.inverse()))
}

/// Parses an expression into the classical `Y`-ring (`t` is rejected).
pub fn parse_classical(cd: &CartanData, input: &str) -> Result<YClassicalElement, ParseError> {
    let ast = parse_ast(input)?;
    eval(cd, Ring::Classical, &ast, &y_var(cd), &|m: &YMonomial| Some(m.inverse()))
}
