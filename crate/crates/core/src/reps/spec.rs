//! Text grammar naming a representation, as used on the command line.
//!
//! ```text
//! spec  := 'burau' '(' expr ')' | 'burau_diag' '(' expr ')'
//!        | 'mu' '(' expr ')' | 'mu_pascal' '(' expr ')'
//!        | 'xi' '(' expr [';' 'n' '=' int] ')'
//!        | 'thm1_i' '(' expr ';' 'f' '=' expr ')'
//!        | 'thm1_ii' '(' expr ';' 'e' '=' expr ')'
//!        | 'standard_s3'
//!        | 'tensor' '(' spec ',' spec ')' | 'direct_sum' '(' spec ',' spec ')'
//!        | 'dual' '(' spec ')' | 'tensor_onedim' '(' spec ';' 'c' '=' expr ')'
//!        | 'specialize' '(' spec ';' 'z' '=' expr ')'
//! ```
//!
//! The first argument of a family is its parameter `z`: a symbolic
//! expression in `z`, a rational constant, `omega`, or a decimal (float).
//! Secondary parameters (`f`, `e`) may be written in terms of `z` and are
//! evaluated at the chosen parameter, so `thm1_i(2; f=-z/(z+1))` means
//! `f = -2/3`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::parse::{eval_at, lower_constant, Cursor, ExprError, ParseError};
use crate::scalar::Scalar;

use super::{families, RepError, Representation};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("at position {pos}: {source}")]
    Value { pos: usize, source: ExprError },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Xi { z: Scalar, n: usize },
    Thm1I { z: Scalar, f: Scalar },
    Thm1II { z: Scalar, e: Scalar },
    Burau(Scalar),
    BurauDiag(Scalar),
    Mu(Scalar),
    MuPascal(Scalar),
    StandardS3,
    Tensor(Box<FamilySpec>, Box<FamilySpec>),
    DirectSum(Box<FamilySpec>, Box<FamilySpec>),
    Dual(Box<FamilySpec>),
    TensorOneDim(Box<FamilySpec>, Scalar),
    Specialize(Box<FamilySpec>, Scalar),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Representation, RepError> {
        match self {
            FamilySpec::Xi { z, n } => families::xi(z, *n),
            FamilySpec::Thm1I { z, f } => families::theorem1_i(z, f),
            FamilySpec::Thm1II { z, e } => families::theorem1_ii(z, e),
            FamilySpec::Burau(z) => families::burau3(z),
            FamilySpec::BurauDiag(z) => families::burau3_diag(z),
            FamilySpec::Mu(z) => families::mu(z),
            FamilySpec::MuPascal(z) => families::mu_pascal(z),
            FamilySpec::StandardS3 => families::standard_s3(),
            FamilySpec::Tensor(a, b) => a.build()?.tensor(&b.build()?),
            FamilySpec::DirectSum(a, b) => a.build()?.direct_sum(&b.build()?),
            FamilySpec::Dual(a) => a.build()?.dual(),
            FamilySpec::TensorOneDim(a, c) => a.build()?.tensor_onedim(c),
            FamilySpec::Specialize(a, point) => a.build()?.specialize(point),
        }
    }
}

fn value(cur: &mut Cursor<'_>) -> Result<Scalar, SpecError> {
    cur.skip_ws();
    let pos = cur.pos();
    let expr = cur.expr()?;
    let v = expr.eval(None).map_err(|source| SpecError::Value { pos, source })?;
    Ok(lower_constant(v))
}

/// A secondary parameter, evaluated with `z` bound to the family parameter.
fn bound_value(cur: &mut Cursor<'_>, key: &str, z: &Scalar) -> Result<Scalar, SpecError> {
    cur.expect(';')?;
    cur.skip_ws();
    let at = cur.pos();
    match cur.ident() {
        Some(k) if k == key => {}
        _ => {
            return Err(ParseError {
                pos: at,
                message: format!("expected '{key}='"),
            }
            .into())
        }
    }
    cur.expect('=')?;
    cur.skip_ws();
    let pos = cur.pos();
    let expr = cur.expr()?;
    let v = eval_at(&expr, z).map_err(|source| SpecError::Value { pos, source })?;
    Ok(if z.tag() == v.tag() { v } else { lower_constant(v) })
}

fn parse_spec(cur: &mut Cursor<'_>) -> Result<FamilySpec, SpecError> {
    cur.skip_ws();
    let at = cur.pos();
    let Some(name) = cur.ident() else {
        return Err(cur.error("expected a family name").into());
    };
    if name == "standard_s3" {
        if cur.eat('(') {
            cur.expect(')')?;
        }
        return Ok(FamilySpec::StandardS3);
    }
    cur.expect('(')?;
    let spec = match name {
        "burau" => FamilySpec::Burau(value(cur)?),
        "burau_diag" => FamilySpec::BurauDiag(value(cur)?),
        "mu" => FamilySpec::Mu(value(cur)?),
        "mu_pascal" => FamilySpec::MuPascal(value(cur)?),
        "xi" => {
            let z = value(cur)?;
            let mut n = 3;
            if cur.eat(';') {
                cur.skip_ws();
                let at = cur.pos();
                if cur.ident() != Some("n") {
                    return Err(ParseError { pos: at, message: "expected 'n='".into() }.into());
                }
                cur.expect('=')?;
                cur.skip_ws();
                let at = cur.pos();
                n = usize::try_from(cur.unsigned_int()?)
                    .ok()
                    .filter(|&n| n >= 2)
                    .ok_or_else(|| ParseError { pos: at, message: "braid index must be >= 2".into() })?;
            }
            FamilySpec::Xi { z, n }
        }
        "thm1_i" => {
            let z = value(cur)?;
            let f = bound_value(cur, "f", &z)?;
            FamilySpec::Thm1I { z, f }
        }
        "thm1_ii" => {
            let z = value(cur)?;
            let e = bound_value(cur, "e", &z)?;
            FamilySpec::Thm1II { z, e }
        }
        "tensor" | "direct_sum" => {
            let a = Box::new(parse_spec(cur)?);
            cur.expect(',')?;
            let b = Box::new(parse_spec(cur)?);
            if name == "tensor" {
                FamilySpec::Tensor(a, b)
            } else {
                FamilySpec::DirectSum(a, b)
            }
        }
        "dual" => FamilySpec::Dual(Box::new(parse_spec(cur)?)),
        "tensor_onedim" | "specialize" => {
            let inner = Box::new(parse_spec(cur)?);
            cur.expect(';')?;
            let key = if name == "specialize" { "z" } else { "c" };
            cur.skip_ws();
            let at = cur.pos();
            if cur.ident() != Some(key) {
                return Err(ParseError { pos: at, message: format!("expected '{key}='") }.into());
            }
            cur.expect('=')?;
            let v = value(cur)?;
            if name == "specialize" {
                FamilySpec::Specialize(inner, v)
            } else {
                FamilySpec::TensorOneDim(inner, v)
            }
        }
        other => {
            return Err(ParseError {
                pos: at,
                message: format!("unknown family '{other}'"),
            }
            .into())
        }
    };
    cur.expect(')')?;
    Ok(spec)
}

impl FromStr for FamilySpec {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let spec = parse_spec(&mut cur)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input").into());
        }
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Xi { z, n: 3 } => write!(f, "xi({z})"),
            FamilySpec::Xi { z, n } => write!(f, "xi({z}; n={n})"),
            FamilySpec::Thm1I { z, f: fv } => write!(f, "thm1_i({z}; f={fv})"),
            FamilySpec::Thm1II { z, e } => write!(f, "thm1_ii({z}; e={e})"),
            FamilySpec::Burau(z) => write!(f, "burau({z})"),
            FamilySpec::BurauDiag(z) => write!(f, "burau_diag({z})"),
            FamilySpec::Mu(z) => write!(f, "mu({z})"),
            FamilySpec::MuPascal(z) => write!(f, "mu_pascal({z})"),
            FamilySpec::StandardS3 => f.write_str("standard_s3"),
            FamilySpec::Tensor(a, b) => write!(f, "tensor({a}, {b})"),
            FamilySpec::DirectSum(a, b) => write!(f, "direct_sum({a}, {b})"),
            FamilySpec::Dual(a) => write!(f, "dual({a})"),
            FamilySpec::TensorOneDim(a, c) => write!(f, "tensor_onedim({a}; c={c})"),
            FamilySpec::Specialize(a, z) => write!(f, "specialize({a}; z={z})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldTag;

    fn parse(s: &str) -> FamilySpec {
        s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn parameter_fields_follow_the_argument() {
        assert_eq!(parse("burau(z)"), FamilySpec::Burau(Scalar::z()));
        assert_eq!(parse("burau(5/7)"), FamilySpec::Burau(Scalar::ratio(5, 7)));
        assert_eq!(parse("mu(omega)"), FamilySpec::Mu(Scalar::omega()));
        assert_eq!(parse("burau(0.5)"), FamilySpec::Burau(Scalar::float(0.5)));
    }

    #[test]
    fn secondary_parameters_are_bound_to_z() {
        let FamilySpec::Thm1I { f, .. } = parse("thm1_i(2; f=-z/(z+1))") else {
            panic!()
        };
        assert_eq!(f, Scalar::ratio(-2, 3));
        let FamilySpec::Thm1I { f, .. } = parse("thm1_i(z; f=-z/(z+1))") else {
            panic!()
        };
        assert_eq!(f.tag(), FieldTag::RatFunc);
        let FamilySpec::Thm1II { e, .. } = parse("thm1_ii(z; e=0)") else {
            panic!()
        };
        assert_eq!(e, Scalar::zero(FieldTag::RatFunc));
        let FamilySpec::Thm1I { f, .. } = parse("thm1_i(omega; f=1)") else {
            panic!()
        };
        assert_eq!(f, Scalar::one(FieldTag::Omega));
    }

    #[test]
    fn nested_specs() {
        let s = parse("tensor(burau(z), burau(z))");
        assert_eq!(s.build().unwrap().dim(), 4);
        let s = parse("specialize(mu(z); z=1)");
        assert_eq!(s.build().unwrap().field(), FieldTag::Rational);
        assert_eq!(parse("xi(-z; n=4)").build().unwrap().braid_index(), 4);
    }

    #[test]
    fn print_parse_round_trip_for_every_family() {
        for text in [
            "burau(z)",
            "burau(5/7)",
            "burau_diag(z)",
            "mu(z)",
            "mu_pascal(2)",
            "xi(-z)",
            "xi(3; n=5)",
            "thm1_i(z; f=-z/(z+1))",
            "thm1_i(omega; f=1)",
            "thm1_ii(2; e=0)",
            "thm1_ii(z; e=z^2 - 1/2)",
            "standard_s3",
            "tensor(burau(z), burau(z))",
            "direct_sum(xi(-z), mu(z))",
            "dual(burau(0.25))",
            "tensor_onedim(burau(z); c=-1)",
            "specialize(mu(z); z=omega)",
        ] {
            let spec = parse(text);
            let printed = spec.to_string();
            assert_eq!(parse(&printed), spec, "{text} -> {printed}");
        }
    }

    #[test]
    fn errors_report_positions() {
        let err = "burau(z".parse::<FamilySpec>().unwrap_err();
        assert!(matches!(err, SpecError::Parse(ParseError { pos: 7, .. })), "{err:?}");
        let err = "nonsense(z)".parse::<FamilySpec>().unwrap_err();
        assert!(matches!(err, SpecError::Parse(ParseError { pos: 0, .. })));
        let err = "thm1_i(z; g=1)".parse::<FamilySpec>().unwrap_err();
        assert!(matches!(err, SpecError::Parse(ParseError { pos: 10, .. })), "{err:?}");
    }

    #[test]
    fn constructor_errors_surface_on_build() {
        assert!(parse("burau(0)").build().is_err());
    }
}
