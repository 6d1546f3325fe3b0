use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::from_poly(Polynomial::zero()));
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.div_exact(&g)?;
        let den = denominator.div_exact(&g)?;
        let lc = den.leading().recip();
        Ok(RationalFunction {
            numerator: num.scale(&lc),
            denominator: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(self.numerator.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.numerator.eval_f64(x) / self.denominator.eval_f64(x)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            &self.numerator * &o.denominator + &o.numerator * &self.denominator,
            &self.denominator * &o.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            &self.numerator * &o.denominator - &o.numerator * &self.denominator,
            &self.denominator * &o.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.numerator * &o.numerator,
            &self.denominator * &o.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(
            &self.numerator * &o.denominator,
            &self.denominator * &o.numerator,
        )
    }

    /// `self(x - c)`.
    pub fn shift(&self, c: i64) -> Self {
        Self::new(self.numerator.shift(c), self.denominator.shift(c))
            .expect("shift keeps the denominator nonzero")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::add(self, o)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::sub(self, o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::mul(self, o)
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, o: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::div(self, o)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}
