//! Univariate polynomials in `q` with exact coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring for [`Poly`]. Implemented for `BigInt` and `BigRational`.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + fmt::Debug
{
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Coeff for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// A polynomial in `q`; index `i` of the coefficient vector holds the
/// coefficient of `q^i`. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Integer q-polynomial, the coefficient type of every public expansion.
pub type QPoly = Poly<BigInt>;

/// Rational q-polynomial; only used inside basis conversions.
pub(crate) type RatPoly = Poly<BigRational>;

/// Direction of the substitutions `q -> q - 1` and `q -> q + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QShift {
    /// `q -> q - 1`
    Down,
    /// `q -> q + 1`
    Up,
}

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluate at `q = x` by Horner's rule.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    /// Exact substitution `q -> q -/+ 1`.
    pub fn shift(&self, dir: QShift) -> Self {
        let step = match dir {
            QShift::Down => -T::one(),
            QShift::Up => T::one(),
        };
        let lin = Self::from_coeffs(vec![step, T::one()]);
        // Horner in the substituted variable.
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl QPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// `None` if some coefficient has a nontrivial denominator.
    pub(crate) fn to_integer(&self) -> Option<QPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(QPoly::from_coeffs(out))
    }
}

impl<T: Coeff> AddAssign<&Poly<T>> for Poly<T> {
    fn add_assign(&mut self, rhs: &Poly<T>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<T: Coeff> SubAssign<&Poly<T>> for Poly<T> {
    fn sub_assign(&mut self, rhs: &Poly<T>) {
        *self += &-rhs;
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &a.mul_ref(b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Coeff> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<T: Coeff> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl<T: Coeff + fmt::Display + Signed> fmt::Display for Poly<T> {
    /// Highest power first, e.g. `q^2 + 2q - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{abs}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn qint(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

/// The q-factorial `[1]_q [2]_q ... [n]_q`; `[0]_q! = 1`.
pub fn qfact(n: usize) -> QPoly {
    (1..=n).map(qint).product()
}

/// Substitute `q -> q - 1` or `q -> q + 1`.
pub fn qpoly_shift(p: &QPoly, dir: QShift) -> QPoly {
    p.shift(dir)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn qint_small_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), qp(&[1]));
        assert_eq!(qint(3), qp(&[1, 1, 1]));
    }

    #[test]
    fn qfact_small_values() {
        assert_eq!(qfact(0), qp(&[1]));
        assert_eq!(qfact(2), qp(&[1, 1]));
        // (1+q)(1+q+q^2) expanded by hand
        assert_eq!(qfact(3), qp(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_one_specializations() {
        let one = BigInt::one();
        for n in 0..=20usize {
            assert_eq!(qint(n).eval(&one), BigInt::from(n));
        }
        let mut fact = BigInt::one();
        for n in 0..=10usize {
            if n > 0 {
                fact *= n;
            }
            assert_eq!(qfact(n).eval(&one), fact);
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(qpoly_shift(&qp(&[0, 0, 1]), QShift::Down), qp(&[1, -2, 1]));
        assert_eq!(qpoly_shift(&qp(&[1, 1]), QShift::Up), qp(&[2, 1]));
        assert!(qpoly_shift(&QPoly::zero(), QShift::Up).is_zero());
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = qp(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(&p - &p, QPoly::zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(qp(&[1, -2, 1]).to_string(), "q^2 - 2q + 1");
        assert_eq!(qp(&[0, 3]).to_string(), "3q");
        assert_eq!(qp(&[-1]).to_string(), "-1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn rational_roundtrip() {
        let p = qp(&[3, 0, -4]);
        assert_eq!(p.to_rational().to_integer(), Some(p));
        let half = RatPoly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_integer(), None);
    }
}
