//! The rational-function field Q(z).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{fmt_rational, poly_gcd, Poly};
use super::ScalarError;

/// A reduced fraction `num / den` of polynomials in `z`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, zero is `0/1`. Two
/// canonical forms are equal exactly when the fractions are equal, so the
/// derived `PartialEq` is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroPolynomialDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero denominator").recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        RatFunc::from_poly(Poly::z())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value if this fraction does not depend on `z`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| ScalarError::ExponentTooLarge)?;
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Substitutes a rational point. Fails on a pole of the reduced form.
    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            return self.num.to_latex();
        }
        // pull a lone leading minus sign out of the fraction
        let lead_negative = self.num.leading().is_some_and(Signed::is_negative);
        let (sign, num) = if lead_negative && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
            ("-", -&self.num)
        } else {
            ("", self.num.clone())
        };
        format!("{sign}\\frac{{{}}}{{{}}}", num.to_latex(), self.den.to_latex())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// JSON form: ascending coefficient lists of `"p/q"` strings.
#[derive(Serialize, Deserialize)]
struct RatFuncJson {
    num: Vec<String>,
    den: Vec<String>,
}

fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| fmt_rational(c, false)).collect()
}

fn parse_coeffs(items: &[String]) -> Result<Poly, String> {
    items
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigRational>()
                .map_err(|e| format!("bad coefficient {s:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Poly::from_coeffs)
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFuncJson {
            num: coeff_strings(&self.num),
            den: coeff_strings(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RatFuncJson::deserialize(deserializer)?;
        let num = parse_coeffs(&raw.num).map_err(D::Error::custom)?;
        let den = parse_coeffs(&raw.den).map_err(D::Error::custom)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}
