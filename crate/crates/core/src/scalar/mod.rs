//! Exact scalar fields and a complex floating-point adapter.
//!
//! Four fields share one tagged value type, [`Scalar`]:
//!
//! * `Q` — arbitrary-precision rationals,
//! * `Q(z)` — reduced rational functions in the formal parameter `z`,
//! * `Q(ω)` — the cyclotomic field of a primitive cube root of unity,
//! * `C` — IEEE double-precision complex numbers.
//!
//! Arithmetic never mixes tags. The `try_*` methods report a mismatch as an
//! error; the operator impls on `&Scalar` treat it as a broken invariant and
//! panic, which is what the matrix layer relies on after checking tags once.

mod omega;
pub mod parse;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use omega::Omega;
pub use poly::{poly_gcd, Poly};
pub use ratfunc::RatFunc;

pub const DEFAULT_FLOAT_EPSILON: f64 = 1e-9;

static FLOAT_EPSILON: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Tolerance used by every float-tag comparison.
pub fn float_epsilon() -> f64 {
    f64::from_bits(FLOAT_EPSILON.load(Ordering::Relaxed))
}

/// Overrides the float tolerance process-wide (the CLI `--epsilon` flag).
pub fn set_float_epsilon(eps: f64) {
    FLOAT_EPSILON.store(eps.to_bits(), Ordering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero polynomial")]
    ZeroPolynomialDenominator,
    #[error("scalar field mismatch: {0} vs {1}")]
    TagMismatch(FieldTag, FieldTag),
    #[error("pole at specialization point")]
    Pole,
    #[error("cannot convert a {from} value into {to}")]
    Promotion { from: FieldTag, to: FieldTag },
    #[error("exponent too large")]
    ExponentTooLarge,
}

/// Which field a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Rational,
    RatFunc,
    Omega,
    Float,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Rational => "Q",
            FieldTag::RatFunc => "Q(z)",
            FieldTag::Omega => "Q(omega)",
            FieldTag::Float => "C(float)",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    RatFunc(RatFunc),
    Omega(Omega),
    Float(Complex64),
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.tag(), b.tag())
}

fn float_eq(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= float_epsilon() * (1.0 + a.norm().max(b.norm()))
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::RatFunc(_) => FieldTag::RatFunc,
            Scalar::Omega(_) => FieldTag::Omega,
            Scalar::Float(_) => FieldTag::Float,
        }
    }

    pub fn zero(tag: FieldTag) -> Self {
        Scalar::from_rational(BigRational::zero(), tag)
    }

    pub fn one(tag: FieldTag) -> Self {
        Scalar::from_rational(BigRational::one(), tag)
    }

    pub fn from_int(n: i64, tag: FieldTag) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)), tag)
    }

    pub fn from_rational(r: BigRational, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => Scalar::Rational(r),
            FieldTag::RatFunc => Scalar::RatFunc(RatFunc::constant(r)),
            FieldTag::Omega => Scalar::Omega(Omega::from_rational(r)),
            FieldTag::Float => Scalar::Float(Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)),
        }
    }

    /// `p/q` as an exact rational.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The symbolic parameter `z`.
    pub fn z() -> Self {
        Scalar::RatFunc(RatFunc::z())
    }

    pub fn omega() -> Self {
        Scalar::Omega(Omega::omega())
    }

    pub fn float(re: f64) -> Self {
        Scalar::Float(Complex64::new(re, 0.0))
    }

    /// Exact for exact tags; `|x| <= epsilon` for floats.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::RatFunc(r) => r.is_zero(),
            Scalar::Omega(w) => w.is_zero(),
            Scalar::Float(c) => c.norm() <= float_epsilon(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.tag())
    }

    pub fn is_exact(&self) -> bool {
        self.tag() != FieldTag::Float
    }

    /// The value as a rational if it is one (including constant fractions).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::RatFunc(r) => r.as_constant(),
            Scalar::Omega(w) => w.b.is_zero().then(|| w.a.clone()),
            Scalar::Float(_) => None,
        }
    }

    /// Complex value of a constant; `None` for a non-constant fraction.
    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            Scalar::Rational(r) => Some(Complex64::new(r.to_f64()?, 0.0)),
            Scalar::RatFunc(r) => Some(Complex64::new(r.as_constant()?.to_f64()?, 0.0)),
            Scalar::Omega(w) => Some(w.to_complex()),
            Scalar::Float(c) => Some(*c),
        }
    }

    /// Moves a value into a larger field: `Q` embeds everywhere, and `Q(ω)`
    /// embeds into `C`. Constant fractions may also be lowered to `Q` first.
    pub fn promote(&self, to: FieldTag) -> Result<Scalar, ScalarError> {
        if self.tag() == to {
            return Ok(self.clone());
        }
        let fail = || ScalarError::Promotion { from: self.tag(), to };
        match (self, to) {
            (Scalar::Omega(w), FieldTag::Float) => Ok(Scalar::Float(w.to_complex())),
            (Scalar::Float(_), _) => Err(fail()),
            (Scalar::Omega(w), _) if !w.b.is_zero() => Err(fail()),
            _ => Ok(Scalar::from_rational(self.as_rational().ok_or_else(fail)?, to)),
        }
    }

    fn check_tags(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        if self.tag() == rhs.tag() {
            Ok(())
        } else {
            Err(ScalarError::TagMismatch(self.tag(), rhs.tag()))
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_tags(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_tags(rhs)?;
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_tags(rhs)?;
        Ok(self * rhs)
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_tags(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    /// Exact equality (tolerance-based for floats); mismatched tags are an error.
    pub fn try_eq(&self, rhs: &Scalar) -> Result<bool, ScalarError> {
        self.check_tags(rhs)?;
        Ok(self == rhs)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::RatFunc(r) => r.inv().map(Scalar::RatFunc),
            Scalar::Omega(w) => w.inv().map(Scalar::Omega),
            Scalar::Float(c) if self.is_zero() => {
                let _ = c;
                Err(ScalarError::DivisionByZero)
            }
            Scalar::Float(c) => Ok(Scalar::Float(c.inv())),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        if let Scalar::RatFunc(r) = self {
            return r.pow(k).map(Scalar::RatFunc);
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut sq = base;
        let mut acc = Scalar::one(self.tag());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Magnitude used for float pivoting; exact values report 0 or 1.
    pub fn magnitude(&self) -> f64 {
        match self {
            Scalar::Float(c) => c.norm(),
            other if other.is_zero() => 0.0,
            _ => 1.0,
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Scalar::Rational(r) => poly::fmt_rational(r, true),
            Scalar::RatFunc(r) => r.to_latex(),
            Scalar::Omega(w) => w.to_latex(),
            Scalar::Float(_) => self.to_string(),
        }
    }
}

/// Substitutes `point` for `z` in `r`.
///
/// The point may be rational, in `Q(ω)`, a float, or another rational
/// function (composition). The result carries the point's tag.
pub fn evaluate(r: &RatFunc, point: &Scalar) -> Result<Scalar, ScalarError> {
    match point {
        Scalar::Rational(x) => r.eval_rational(x).map(Scalar::Rational),
        Scalar::Float(x) => {
            let horner = |p: &Poly| {
                p.coeffs().iter().rev().fold((Complex64::zero(), 0.0), |(acc, scale), c| {
                    let c = c.to_f64().unwrap_or(f64::NAN);
                    (acc * x + c, scale * x.norm() + c.abs())
                })
            };
            let (n, _) = horner(r.numer());
            let (d, scale) = horner(r.denom());
            if d.norm() <= float_epsilon() * (1.0 + scale) {
                return Err(ScalarError::Pole);
            }
            Ok(Scalar::Float(n / d))
        }
        _ => {
            let tag = point.tag();
            let horner = |p: &Poly| {
                p.coeffs().iter().rev().fold(Scalar::zero(tag), |acc, c| {
                    &(&acc * point) + &Scalar::from_rational(c.clone(), tag)
                })
            };
            let d = horner(r.denom());
            if d.is_zero() {
                return Err(ScalarError::Pole);
            }
            Ok(&horner(r.numer()) * &d.inv()?)
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => a == b,
            (Scalar::Omega(a), Scalar::Omega(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => float_eq(*a, *b),
            _ => false,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a + b),
            (Scalar::Omega(a), Scalar::Omega(b)) => Scalar::Omega(a + b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a - b),
            (Scalar::Omega(a), Scalar::Omega(b)) => Scalar::Omega(a - b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a * b),
            (Scalar::Omega(a), Scalar::Omega(b)) => Scalar::Omega(a * b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::RatFunc(a) => Scalar::RatFunc(-a),
            Scalar::Omega(a) => Scalar::Omega(-a),
            Scalar::Float(a) => Scalar::Float(-a),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&poly::fmt_rational(r, false)),
            Scalar::RatFunc(r) => r.fmt(f),
            Scalar::Omega(w) => w.fmt(f),
            Scalar::Float(c) if c.im == 0.0 => write!(f, "{:?}", c.re),
            Scalar::Float(c) => {
                let sign = if c.im.is_sign_negative() { '-' } else { '+' };
                write!(f, "{:?} {sign} {:?}*i", c.re, c.im.abs())
            }
        }
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Self {
        Scalar::RatFunc(r)
    }
}

impl From<Omega> for Scalar {
    fn from(w: Omega) -> Self {
        Scalar::Omega(w)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n, FieldTag::Rational)
    }
}

/// Scalars serialize through the text grammar.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Accepts a text-grammar string, a JSON number (float tag), or the
/// `{"num": [...], "den": [...]}` rational-function object.
impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
            Frac(RatFunc),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => parse::parse_scalar(&s).map_err(D::Error::custom),
            Raw::Number(x) => Ok(Scalar::float(x)),
            Raw::Frac(r) => Ok(Scalar::RatFunc(r)),
        }
    }
}
