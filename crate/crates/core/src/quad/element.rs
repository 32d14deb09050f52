use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// `x + y·√d` with rational coordinates.
///
/// The arithmetic operators panic when the radicands differ; the `try_*`
/// methods report [`Error::MixedRadicand`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    d: i64,
    x: Rational,
    y: Rational,
}

impl QuadElement {
    pub fn new(d: i64, x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        QuadElement {
            d,
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn rational(d: i64, x: impl Into<Rational>) -> Self {
        QuadElement::new(d, x, Rational::zero())
    }

    /// `(x + y√d) / 2`, the shape of half-integral elements.
    pub fn halves(d: i64, x: i64, y: i64) -> Self {
        QuadElement::new(d, Rational::new(x, 2), Rational::new(y, 2))
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn conj(&self) -> Self {
        QuadElement {
            d: self.d,
            x: self.x.clone(),
            y: -&self.y,
        }
    }

    pub fn trace(&self) -> Rational {
        &self.x + &self.x
    }

    pub fn norm(&self) -> Rational {
        &self.x * &self.x - Rational::from(self.d) * &self.y * &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Sign of the element as a real number.
    pub fn signum(&self) -> i32 {
        let (sx, sy) = (self.x.signum(), self.y.signum());
        if sx == sy || sy == 0 {
            return sx;
        }
        if sx == 0 {
            return sy;
        }
        let xx = &self.x * &self.x;
        let dyy = Rational::from(self.d) * &self.y * &self.y;
        match xx.cmp(&dyy) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => 0,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MixedRadicand(self.d, other.d))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElement {
            d: self.d,
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElement {
            d: self.d,
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = Rational::from(self.d);
        Ok(QuadElement {
            d: self.d,
            x: &self.x * &other.x + d * &self.y * &other.y,
            y: &self.x * &other.y + &self.y * &other.x,
        })
    }

    /// `None` when dividing by zero.
    pub fn try_div(&self, other: &Self) -> Result<Option<Self>> {
        self.check(other)?;
        let n = other.norm();
        if n.is_zero() {
            return Ok(None);
        }
        let inv = QuadElement {
            d: other.d,
            x: &other.x / &n,
            y: -(&other.y / &n),
        };
        self.try_mul(&inv).map(Some)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadElement {
            d: self.d,
            x: &self.x * k,
            y: &self.y * k,
        }
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let sign = if self.y.is_negative() { '-' } else { '+' };
        let coeff = self.y.abs();
        let sqrt = if coeff == Rational::one() {
            format!("√{}", self.d)
        } else {
            format!("{}·√{}", coeff, self.d)
        };
        if self.x.is_zero() {
            if self.y.is_negative() {
                write!(f, "-{sqrt}")
            } else {
                write!(f, "{sqrt}")
            }
        } else {
            write!(f, "{} {} {}", self.x, sign, sqrt)
        }
    }
}

impl fmt::Debug for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})√{}", self.x, self.y, self.d)
    }
}

macro_rules! op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QuadElement> for &QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: &QuadElement) -> QuadElement {
                self.$try(rhs).expect("radicand mismatch")
            }
        }
        impl $tr<QuadElement> for QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: QuadElement) -> QuadElement {
                (&self).$m(&rhs)
            }
        }
    };
}
op!(Add, add, try_add);
op!(Sub, sub, try_sub);
op!(Mul, mul, try_mul);

impl Div<&QuadElement> for &QuadElement {
    type Output = QuadElement;
    fn div(self, rhs: &QuadElement) -> QuadElement {
        self.try_div(rhs)
            .expect("radicand mismatch")
            .expect("division by zero")
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement {
            d: self.d,
            x: -&self.x,
            y: -&self.y,
        }
    }
}
