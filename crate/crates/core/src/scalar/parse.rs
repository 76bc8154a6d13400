//! Text grammar for scalar expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | decimal | 'z' | 'omega' | 'i' | '(' expr ')'
//! ```
//!
//! Expressions are kept as a small tree so the same text can be evaluated
//! either symbolically or with `z` bound to a point.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use thiserror::Error;

use super::{FieldTag, RatFunc, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("cannot combine {0} and {1} in one expression")]
    MixedFields(FieldTag, FieldTag),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Decimal(f64),
    Z,
    Omega,
    I,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let mut cur = Cursor::new(src);
        let e = cur.expr()?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn mentions_z(&self) -> bool {
        match self {
            Expr::Z => true,
            Expr::Int(_) | Expr::Decimal(_) | Expr::Omega | Expr::I => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_z(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.mentions_z() || b.mentions_z()
            }
        }
    }

    /// Evaluates with `z` either symbolic (`None`) or bound to a value.
    ///
    /// The result lives in the smallest field that holds every leaf:
    /// rationals, then `Q(z)`, `Q(ω)` or floats. `z` cannot be mixed with
    /// `ω` or floats while symbolic.
    pub fn eval(&self, z: Option<&Scalar>) -> Result<Scalar, ExprError> {
        Ok(match self {
            Expr::Int(n) => Scalar::Rational(BigRational::from_integer(n.clone())),
            Expr::Decimal(x) => Scalar::float(*x),
            Expr::Z => z.cloned().unwrap_or_else(Scalar::z),
            Expr::Omega => Scalar::omega(),
            Expr::I => Scalar::Float(Complex64::new(0.0, 1.0)),
            Expr::Neg(a) => -&a.eval(z)?,
            Expr::Pow(a, k) => a.eval(z)?.pow(*k)?,
            Expr::Add(a, b) => {
                let (x, y) = unify(a.eval(z)?, b.eval(z)?)?;
                &x + &y
            }
            Expr::Sub(a, b) => {
                let (x, y) = unify(a.eval(z)?, b.eval(z)?)?;
                &x - &y
            }
            Expr::Mul(a, b) => {
                let (x, y) = unify(a.eval(z)?, b.eval(z)?)?;
                &x * &y
            }
            Expr::Div(a, b) => {
                let (x, y) = unify(a.eval(z)?, b.eval(z)?)?;
                x.try_div(&y)?
            }
        })
    }
}

fn rank(tag: FieldTag) -> u8 {
    match tag {
        FieldTag::Rational => 0,
        FieldTag::RatFunc | FieldTag::Omega => 1,
        FieldTag::Float => 2,
    }
}

/// Promotes two operands into a common field.
pub fn unify(x: Scalar, y: Scalar) -> Result<(Scalar, Scalar), ExprError> {
    let (tx, ty) = (x.tag(), y.tag());
    if tx == ty {
        return Ok((x, y));
    }
    let target = if rank(tx) >= rank(ty) { tx } else { ty };
    let lift = |s: Scalar| s.promote(target).map_err(|_| ExprError::MixedFields(tx, ty));
    Ok((lift(x)?, lift(y)?))
}

/// Parses and evaluates a scalar with `z` left symbolic. Constant
/// expressions come back as rationals, not constant fractions.
pub fn parse_scalar(src: &str) -> Result<Scalar, ExprError> {
    let value = Expr::parse(src)?.eval(None)?;
    Ok(lower_constant(value))
}

/// A constant rational function becomes a plain rational.
pub fn lower_constant(value: Scalar) -> Scalar {
    match &value {
        Scalar::RatFunc(r) => r.as_constant().map(Scalar::Rational).unwrap_or(value),
        _ => value,
    }
}

/// Parses an element of `Q(z)`.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc, ExprError> {
    match Expr::parse(src)?.eval(None)? {
        Scalar::RatFunc(r) => Ok(r),
        Scalar::Rational(c) => Ok(RatFunc::constant(c)),
        other => Err(ExprError::MixedFields(FieldTag::RatFunc, other.tag())),
    }
}

impl std::str::FromStr for RatFunc {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ratfunc(s)
    }
}

/// Evaluates `expr` with `z` bound to `point`, landing in `point`'s field.
pub fn eval_at(expr: &Expr, point: &Scalar) -> Result<Scalar, ExprError> {
    let v = expr.eval(Some(point))?;
    let (v, _) = unify(v, point.clone())?;
    Ok(v)
}

/// A byte cursor over the source text, shared with the family-spec parser.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    /// Consumes `c` (after whitespace) if it is next.
    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// Reads an identifier `[A-Za-z_][A-Za-z0-9_]*`, if one is next.
    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let first = rest.chars().next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        Some(&rest[..len])
    }

    /// Peeks at the identifier without consuming it.
    pub fn peek_ident(&mut self) -> Option<&'a str> {
        let save = self.pos;
        let id = self.ident();
        self.pos = save;
        id
    }

    pub fn unsigned_int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = rest[..len].parse().map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_primary(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '(' => true,
            Some(_) => matches!(self.peek_ident(), Some("z" | "omega" | "i")),
            None => false,
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_primary() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            let negative = self.eat('-');
            let k = self.unsigned_int()?;
            let k = i64::try_from(k).map_err(|_| self.error("exponent out of range"))?;
            return Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(_) => {
                let at = self.pos;
                match self.ident() {
                    Some("z") => Ok(Expr::Z),
                    Some("omega") => Ok(Expr::Omega),
                    Some("i") => Ok(Expr::I),
                    Some(other) => Err(ParseError {
                        pos: at,
                        message: format!("unknown symbol '{other}'"),
                    }),
                    None => Err(self.error("expected a number, 'z', 'omega' or '('")),
                }
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let rest = &self.src[self.pos..];
        let bytes = rest.as_bytes();
        let mut len = 0;
        let mut decimal = false;
        while len < bytes.len() && (bytes[len].is_ascii_digit() || bytes[len] == b'.') {
            decimal |= bytes[len] == b'.';
            len += 1;
        }
        // exponent part, only when followed by digits
        if len < bytes.len() && (bytes[len] == b'e' || bytes[len] == b'E') {
            let mut j = len + 1;
            if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                j += 1;
            }
            if j < bytes.len() && bytes[j].is_ascii_digit() {
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                len = j;
                decimal = true;
            }
        }
        let text = &rest[..len];
        let at = self.pos;
        self.pos += len;
        let bad = |message: &str| ParseError {
            pos: at,
            message: format!("{message} '{text}'"),
        };
        if decimal {
            text.parse::<f64>().map(Expr::Decimal).map_err(|_| bad("bad decimal"))
        } else {
            text.parse::<BigInt>().map(Expr::Int).map_err(|_| bad("bad integer"))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Decimal(x) => write!(f, "{x:?}"),
            Expr::Z => f.write_str("z"),
            Expr::Omega => f.write_str("omega"),
            Expr::I => f.write_str("i"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Div(a, b) => write!(f, "({a}/{b})"),
            Expr::Pow(a, k) => write!(f, "({a}^{k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Poly;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn parses_family_parameter_expressions() {
        assert_eq!(parse_ratfunc("-z/(z+1)").unwrap(), rf(&[0, -1], &[1, 1]));
        assert_eq!(
            parse_ratfunc("z(z^2+z+1)/(z+1)^2").unwrap(),
            rf(&[0, 1, 1, 1], &[1, 2, 1])
        );
        assert_eq!(parse_ratfunc("z^-2").unwrap(), rf(&[1], &[0, 0, 1]));
        assert_eq!(parse_ratfunc("-z^2").unwrap(), rf(&[0, 0, -1], &[1]));
    }

    #[test]
    fn constants_lower_to_rationals() {
        assert_eq!(parse_scalar("5/7").unwrap(), Scalar::ratio(5, 7));
        assert_eq!(parse_scalar("z/z").unwrap(), Scalar::from(1));
        assert_eq!(parse_scalar("0.25").unwrap(), Scalar::float(0.25));
        assert_eq!(parse_scalar("1e-3").unwrap(), Scalar::float(1e-3));
        assert_eq!(parse_scalar("omega^3").unwrap(), Scalar::one(FieldTag::Omega));
    }

    #[test]
    fn mixing_symbolic_z_with_omega_fails() {
        assert!(matches!(parse_scalar("z + omega"), Err(ExprError::MixedFields(..))));
    }

    #[test]
    fn errors_carry_positions() {
        let ExprError::Parse(e) = parse_scalar("z + q").unwrap_err() else {
            panic!("expected a parse error")
        };
        assert_eq!(e.pos, 4);
        let ExprError::Parse(e) = parse_scalar("(z + 1").unwrap_err() else {
            panic!("expected a parse error")
        };
        assert_eq!(e.pos, 6);
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert!(matches!(
            parse_scalar("1/(z - z)"),
            Err(ExprError::Scalar(ScalarError::DivisionByZero))
        ));
    }

    #[test]
    fn bound_evaluation_substitutes() {
        let e = Expr::parse("-z/(z+1)").unwrap();
        assert_eq!(eval_at(&e, &Scalar::from(2)).unwrap(), Scalar::ratio(-2, 3));
        assert_eq!(eval_at(&Expr::parse("3").unwrap(), &Scalar::omega()).unwrap().tag(), FieldTag::Omega);
    }

    #[test]
    fn printed_scalars_parse_back() {
        for s in [
            Scalar::RatFunc(rf(&[0, 0, 0, 0, 1], &[1, 2, 1])),
            Scalar::omega().inv().unwrap(),
            Scalar::ratio(-3, 8),
            Scalar::Float(Complex64::new(0.1, -2.5)),
        ] {
            let back = parse_scalar(&s.to_string()).unwrap();
            assert_eq!(back, s, "{s}");
        }
    }
}
