//! The quadratic field Q(ω), ω a primitive cube root of unity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::fmt_rational;
use super::ScalarError;

/// `a + b·ω` with `ω² = −ω − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Omega {
    pub a: BigRational,
    pub b: BigRational,
}

impl Omega {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Omega { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Omega::new(a, BigRational::zero())
    }

    /// The generator ω itself.
    #[allow(clippy::self_named_constructors)]
    pub fn omega() -> Self {
        Omega::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Omega::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Omega::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field norm `(a + bω)(a + bω²) = a² − ab + b²`, zero only at zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Galois conjugate `a + bω² = (a − b) − bω`.
    pub fn conj(&self) -> Self {
        Omega::new(&self.a - &self.b, -&self.b)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm().recip();
        let c = self.conj();
        Ok(Omega::new(c.a * &n, c.b * &n))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Omega::new(&self.a * c, &self.b * c)
    }

    /// Embedding with ω = −1/2 + i·√3/2.
    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        Complex64::new(a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        let sym = if latex { "\\omega" } else { "omega" };
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&fmt_rational(&self.a, latex));
        }
        if !self.b.is_zero() {
            let mag = self.b.abs();
            if out.is_empty() {
                if self.b.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if self.b.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&fmt_rational(&mag, latex));
                out.push_str(if latex { " " } else { "*" });
            }
            out.push_str(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Omega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &Omega {
    type Output = Omega;
    fn add(self, rhs: &Omega) -> Omega {
        Omega::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Omega {
    type Output = Omega;
    fn sub(self, rhs: &Omega) -> Omega {
        Omega::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Omega {
    type Output = Omega;
    fn mul(self, rhs: &Omega) -> Omega {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd·ω², and ω² = −1 − ω
        let bd = &self.b * &rhs.b;
        Omega::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl Neg for &Omega {
    type Output = Omega;
    fn neg(self) -> Omega {
        Omega::new(-&self.a, -&self.b)
    }
}
