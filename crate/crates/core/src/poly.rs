//! Dense univariate polynomials with exact coefficients.
//!
//! * [`UniPoly`]: rational coefficients, lowest degree first, tagged with
//!   the formal variable ([`Var::Alpha`] or [`Var::B`], related by
//!   `alpha = b + 1`);
//! * [`IntPoly`]: integer coefficients in the variable `b`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Var {
    Alpha,
    B,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Alpha => "a",
            Var::B => "b",
        }
    }

    /// Tag used in serialized form.
    pub fn tag(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::B => "b",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        UniPoly::constant(var, BigRational::one())
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        UniPoly::new(var, vec![c])
    }

    pub fn monomial(var: Var, c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg];
        coeffs.push(c);
        UniPoly::new(var, coeffs)
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        UniPoly::new(
            var,
            coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect(),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &UniPoly) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var.symbol(), other.var.symbol()));
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.check_var(other).expect("mixed variables");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::new(self.var, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        self.check_var(other).expect("mixed variables");
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_var(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut q = UniPoly::zero(self.var);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / &dl;
            let t = UniPoly::monomial(self.var, f, rd - dd);
            q = q.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Ok((q, rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// `p(x + delta)` written in the variable `to`.
    pub fn compose_shift(&self, delta: i64, to: Var) -> UniPoly {
        let shift = UniPoly::from_ints(to, &[delta, 1]);
        let mut acc = UniPoly::zero(to);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&UniPoly::constant(to, c.clone()));
        }
        acc
    }

    /// Rewrites a polynomial in alpha as one in b via `alpha = b + 1`.
    pub fn alpha_to_b(&self) -> UniPoly {
        assert_eq!(self.var, Var::Alpha);
        self.compose_shift(1, Var::B)
    }

    /// Integer coefficient vector, if every coefficient is an integer.
    pub fn to_int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

fn fmt_terms<C>(f: &mut fmt::Formatter<'_>, coeffs: &[C], sym: &str) -> fmt::Result
where
    C: fmt::Display + Clone + Signed,
{
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        }
        match i {
            0 => write!(f, "{}", mag)?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "{}", sym)?;
                } else {
                    write!(f, "{}^{}", sym, i)?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, self.var.symbol())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Polynomial in `b` with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The polynomial `b + 1`.
    pub fn one_plus_b() -> Self {
        IntPoly::from_ints(&[1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.0.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; fails if the quotient is not an integer polynomial.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.to_unipoly(Var::B);
        let den = d.to_unipoly(Var::B);
        let (q, r) = num.divrem(&den)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("{} by {}", self, d)));
        }
        match q.to_int_coeffs() {
            Some(c) => Ok(IntPoly::new(c)),
            None => Err(Error::InexactDivision(format!("{} by {}", self, d))),
        }
    }

    pub fn to_unipoly(&self, var: Var) -> UniPoly {
        UniPoly::new(
            var,
            self.0.iter().map(|c| BigRational::from(c.clone())).collect(),
        )
    }

    /// Coefficients as `i128`, lowest degree first.
    pub fn to_i128_coeffs(&self) -> Result<Vec<i128>> {
        self.0
            .iter()
            .map(|c| {
                i128::try_from(c).map_err(|_| Error::Overflow(format!("coefficient {c}")))
            })
            .collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.0, "b")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_trim() {
        let p = UniPoly::from_ints(Var::Alpha, &[1, 2, 1]);
        let d = UniPoly::from_ints(Var::Alpha, &[1, 1]);
        let (quot, rem) = p.divrem(&d).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, d);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(UniPoly::zero(Var::B).degree(), None);
    }

    #[test]
    fn gcd_is_monic() {
        // (a^2 - 1) and (a + 1)^2 share exactly (a + 1).
        let a = UniPoly::from_ints(Var::Alpha, &[-1, 0, 1]);
        let b = UniPoly::from_ints(Var::Alpha, &[1, 2, 1]);
        let g = UniPoly::gcd(&a, &b);
        assert_eq!(g, UniPoly::from_ints(Var::Alpha, &[1, 1]));
        let g2 = UniPoly::gcd(&a.scale(&q(7)), &b.scale(&q(-3)));
        assert_eq!(g2, g);
    }

    #[test]
    fn shift_alpha_to_b() {
        // a^2 becomes (b+1)^2 = b^2 + 2b + 1.
        let p = UniPoly::monomial(Var::Alpha, q(1), 2);
        assert_eq!(p.alpha_to_b(), UniPoly::from_ints(Var::B, &[1, 2, 1]));
        // 2a^2(1 + a) = 2a^2 + 2a^3 becomes 2b^3 + 8b^2 + 10b + 4.
        let p = UniPoly::from_ints(Var::Alpha, &[0, 0, 2, 2]);
        assert_eq!(p.alpha_to_b(), UniPoly::from_ints(Var::B, &[4, 10, 8, 2]));
    }

    #[test]
    fn shift_is_a_ring_morphism() {
        let p = UniPoly::from_ints(Var::Alpha, &[3, -1, 2]);
        let r = UniPoly::from_ints(Var::Alpha, &[0, 5, 0, 1]);
        assert_eq!(p.mul(&r).alpha_to_b(), p.alpha_to_b().mul(&r.alpha_to_b()));
        assert_eq!(p.add(&r).alpha_to_b(), p.alpha_to_b().add(&r.alpha_to_b()));
    }

    #[test]
    fn int_poly_basics() {
        let p = IntPoly::from_ints(&[0, 1]); // b
        assert_eq!(p.to_string(), "b");
        let s = IntPoly::from_ints(&[1, 3, 3, 1]);
        let d = s.div_exact(&IntPoly::one_plus_b()).unwrap();
        assert_eq!(d, IntPoly::from_ints(&[1, 2, 1]));
        assert!(s.div_exact(&IntPoly::from_ints(&[1, 1, 1])).is_err());
        assert_eq!(s.eval(&BigInt::from(1)), BigInt::from(8));
        assert_eq!(IntPoly::from_ints(&[2, -1]).to_string(), "-b + 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_ints(&[0, 3, 1]).to_string(), "b^2 + 3*b");
    }

    #[test]
    fn i128_conversion() {
        let p = IntPoly::from_ints(&[-4, 10]);
        assert_eq!(p.to_i128_coeffs().unwrap(), vec![-4, 10]);
    }
}
