//! The ring of symmetric functions with coefficients in `Z[q]`.
//!
//! A [`SymFunc`] is stored in the power-sum basis with rational
//! q-polynomial coefficients: products are concatenations of index
//! partitions and `omega` is a sign. Expansions in the m, e, h, p and s
//! bases are exact and integral for everything the library produces; a
//! fractional coefficient at a public boundary is reported as
//! [`Error::Integrality`].

mod expansion;
mod series;
mod transition;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Partition, QPoly, RatPoly};
use crate::error::{Error, Result};
use crate::limits;

pub use expansion::{Expansion, PositivityReport};
pub use series::SFSeries;
pub use transition::{computed_to_m, install_to_m, kostka_matrix, transition_to_m, IntMatrix};

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M = 0,
    E = 1,
    H = 2,
    P = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// A symmetric function with q-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    /// power-sum coordinates; zero coefficients never stored
    terms: BTreeMap<Partition, RatPoly>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::scalar(&QPoly::one())
    }

    /// A degree-zero element.
    pub fn scalar(c: &QPoly) -> Self {
        let mut out = SymFunc::zero();
        out.add_term(Partition::empty(), c.to_rational());
        out
    }

    /// `p_lambda`.
    pub fn p(lambda: &Partition) -> Self {
        let mut out = SymFunc::zero();
        out.add_term(lambda.clone(), RatPoly::one());
        out
    }

    /// `h_n = sum_{lambda |- n} p_lambda / z_lambda`; `h_0 = 1`.
    pub fn h(n: usize) -> Self {
        Self::h_or_e(n, false)
    }

    /// `e_n = sum_{lambda |- n} eps_lambda p_lambda / z_lambda`.
    pub fn e(n: usize) -> Self {
        Self::h_or_e(n, true)
    }

    /// `h_j`, taken to be zero for negative `j`.
    pub fn h_signed(j: i64) -> Self {
        usize::try_from(j).map_or_else(|_| Self::zero(), Self::h)
    }

    fn h_or_e(n: usize, signed: bool) -> Self {
        let mut out = SymFunc::zero();
        for lam in crate::algebra::partitions_unchecked(n) {
            let mut c = BigRational::new(BigInt::one(), lam.z());
            if signed && (n - lam.len()) % 2 == 1 {
                c = -c;
            }
            out.add_term(lam, RatPoly::constant(c));
        }
        out
    }

    /// The basis element `b_lambda`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Result<Self> {
        match basis {
            Basis::P => Ok(Self::p(lambda)),
            Basis::H => Ok(lambda.parts().iter().map(|&k| Self::h(k)).product()),
            Basis::E => Ok(lambda.parts().iter().map(|&k| Self::e(k)).product()),
            Basis::M | Basis::S => {
                let t = transition::tables(lambda.size())?;
                let row = &t.to_p(basis)[t.index[lambda]];
                let mut out = SymFunc::zero();
                for (mu, c) in t.parts.iter().zip(row) {
                    out.add_term(mu.clone(), RatPoly::constant(c.clone()));
                }
                Ok(out)
            }
        }
    }

    /// Shorthand for `h_{lambda_1} h_{lambda_2} ...`.
    pub fn h_of(parts: &[usize]) -> Self {
        parts.iter().map(|&k| Self::h(k)).product()
    }

    /// Shorthand for `e_{lambda_1} e_{lambda_2} ...`.
    pub fn e_of(parts: &[usize]) -> Self {
        parts.iter().map(|&k| Self::e(k)).product()
    }

    pub(crate) fn add_term(&mut self, lam: Partition, c: RatPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sizes of the partitions in the support.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    /// True when zero or supported in degree `d` only.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|l| l.size() == d)
    }

    /// Multiply every coefficient by a q-polynomial.
    pub fn scale(&self, c: &QPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let c = c.to_rational();
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, v)| (l.clone(), v * &c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&QPoly::from_i64s(&[c]))
    }

    /// Product with the resource guard on the resulting degree.
    pub fn checked_mul(&self, other: &SymFunc) -> Result<Self> {
        let top = self.degrees().last().copied().unwrap_or(0)
            + other.degrees().last().copied().unwrap_or(0);
        limits::check_degree(top)?;
        Ok(self * other)
    }

    /// The involution exchanging `h_n` and `e_n`.
    pub fn omega(&self) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, v)| {
                    let v = if (l.size() - l.len()) % 2 == 1 {
                        -v
                    } else {
                        v.clone()
                    };
                    (l.clone(), v)
                })
                .collect(),
        }
    }

    /// Specialize `q` to an integer value.
    pub fn eval_q(&self, value: i64) -> Self {
        let x = BigRational::from_integer(value.into());
        let mut out = SymFunc::zero();
        for (l, v) in &self.terms {
            out.add_term(l.clone(), RatPoly::constant(v.eval(&x)));
        }
        out
    }

    /// Exact expansion in `basis`.
    pub fn to_basis(&self, basis: Basis) -> Result<Expansion> {
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &RatPoly)>> = BTreeMap::new();
        for (l, v) in &self.terms {
            by_degree.entry(l.size()).or_default().push((l, v));
        }
        let mut out = BTreeMap::new();
        for (d, terms) in by_degree {
            let t = transition::tables(d)?;
            let mat = t.p_to(basis);
            let mut acc = vec![RatPoly::zero(); t.parts.len()];
            for (l, v) in terms {
                for (slot, c) in acc.iter_mut().zip(&mat[t.index[l]]) {
                    if !c.is_zero() {
                        *slot += &v.scale(c);
                    }
                }
            }
            for (lam, c) in t.parts.iter().zip(acc) {
                if c.is_zero() {
                    continue;
                }
                let c = c.to_integer().ok_or_else(|| Error::Integrality {
                    basis: basis.letter(),
                    partition: lam.to_string(),
                })?;
                out.insert(lam.clone(), c);
            }
        }
        Ok(Expansion::from_terms(basis, out))
    }

    /// Rebuild a symmetric function from an expansion.
    pub fn from_expansion(exp: &Expansion) -> Result<Self> {
        let mut out = SymFunc::zero();
        for (lam, c) in exp.terms() {
            out += &SymFunc::basis_element(exp.basis(), lam)?.scale(c);
        }
        Ok(out)
    }

    /// Coefficientwise nonnegativity in `basis`.
    pub fn is_positive_in(&self, basis: Basis) -> Result<PositivityReport> {
        Ok(self.to_basis(basis)?.positivity())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v:?}) p{l}")?;
        }
        Ok(())
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, v) in &rhs.terms {
            self.add_term(l.clone(), v.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, v) in &rhs.terms {
            self.add_term(l.clone(), -v);
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), -v)).collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SymFunc {
            type Output = SymFunc;
            fn $f(self, rhs: SymFunc) -> SymFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> Self {
        iter.fold(SymFunc::zero(), |mut acc, f| {
            acc += &f;
            acc
        })
    }
}

impl std::iter::Product for SymFunc {
    fn product<I: Iterator<Item = SymFunc>>(iter: I) -> Self {
        iter.fold(SymFunc::one(), |acc, f| &acc * &f)
    }
}
