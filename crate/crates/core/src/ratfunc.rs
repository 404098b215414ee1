//! Rational functions in one variable, kept in canonical form.
//!
//! A [`RatFunc`] is a quotient of two [`UniPoly`]s with the same variable,
//! reduced so that numerator and denominator are coprime and the denominator
//! is monic. Equality is then structural.
//!
//! [`RatFunc::certify_integer_poly`] performs the substitution
//! `alpha = b + 1` and certifies that the result is a polynomial in `b`
//! with integer coefficients, returning it as an [`IntPoly`]. Values that
//! fail either check carry an error witness.

use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, UniPoly, Var};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VariableMismatch(num.var().symbol(), den.var().symbol()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den }.reduce())
    }

    fn reduce(self) -> Self {
        let RatFunc { num, den } = self;
        if num.is_zero() {
            return RatFunc {
                num: UniPoly::zero(den.var()),
                den: UniPoly::one(den.var()),
            };
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, r1) = num.divrem(&g).expect("gcd divides");
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g).expect("gcd divides");
        debug_assert!(r2.is_zero());
        let lead = den.leading().expect("nonzero denominator").clone();
        RatFunc {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        }
    }

    pub fn zero(var: Var) -> Self {
        RatFunc {
            num: UniPoly::zero(var),
            den: UniPoly::one(var),
        }
    }

    pub fn one(var: Var) -> Self {
        RatFunc {
            num: UniPoly::one(var),
            den: UniPoly::one(var),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        RatFunc {
            num: p,
            den: UniPoly::one(var),
        }
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        RatFunc::from_poly(UniPoly::constant(var, c))
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is one.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        if self.den.degree() == Some(0) && self.den.leading().is_some_and(|c| c.is_one()) {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .reduce()
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .reduce()
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .reduce()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Evaluates at a point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitutes `alpha = b + 1` into numerator and denominator.
    ///
    /// The shift is an automorphism of the polynomial ring, so the result
    /// is still in canonical form.
    pub fn shift_to_b(&self) -> RatFunc {
        assert_eq!(self.var(), Var::Alpha);
        RatFunc {
            num: self.num.alpha_to_b(),
            den: self.den.alpha_to_b(),
        }
    }

    /// Certifies that this rational function in alpha is, after the
    /// substitution `alpha = b + 1`, a polynomial in `b` with integer
    /// coefficients.
    ///
    /// `context` labels the value being certified in error reports.
    pub fn certify_integer_poly(&self, context: &str) -> Result<IntPoly> {
        let shifted = self.shift_to_b();
        let (q, r) = shifted.num.divrem(&shifted.den)?;
        if !r.is_zero() {
            return Err(Error::NonPolynomial {
                context: context.to_string(),
                witness: shifted.to_string(),
            });
        }
        match q.to_int_coeffs() {
            Some(coeffs) => Ok(IntPoly::new(coeffs)),
            None => Err(Error::NonIntegral {
                context: context.to_string(),
                witness: q.to_string(),
            }),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.leading().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
