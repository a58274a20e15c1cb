use std::ops::Mul;

use super::SymFunc;
use crate::error::{Error, Result};

/// A power series in `z` truncated after `z^order`, whose coefficient of
/// `z^k` is homogeneous of degree `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SFSeries {
    coeffs: Vec<SymFunc>,
}

impl SFSeries {
    /// Checks homogeneity; `coeffs[k]` is the coefficient of `z^k`.
    pub fn new(coeffs: Vec<SymFunc>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse(
                "a series needs at least a constant term".into(),
            ));
        }
        if let Some(k) = (0..coeffs.len()).find(|&k| !coeffs[k].is_homogeneous_of(k)) {
            return Err(Error::Parse(format!(
                "coefficient of z^{k} is not homogeneous of degree {k}"
            )));
        }
        Ok(SFSeries { coeffs })
    }

    /// Builds from a coefficient function, `f(k)` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> SymFunc) -> Result<Self> {
        Self::new((0..=order).map(f).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![SymFunc::zero(); order + 1];
        coeffs[0] = SymFunc::one();
        SFSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &SymFunc {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[SymFunc] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        SFSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn omega(&self) -> Self {
        SFSeries {
            coeffs: self.coeffs.iter().map(SymFunc::omega).collect(),
        }
    }

    /// Truncated product; the result has the smaller of the two orders.
    pub fn mul(&self, other: &SFSeries) -> SFSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k)
                    .map(|i| &self.coeffs[i] * &other.coeffs[k - i])
                    .sum()
            })
            .collect();
        SFSeries { coeffs }
    }

    /// Inverse of a series with constant term 1, by the recursion
    /// `B_k = -sum_{i=1..k} A_i B_{k-i}`.
    pub fn inverse(&self) -> Result<SFSeries> {
        if self.coeffs[0] != SymFunc::one() {
            return Err(Error::NotInvertible);
        }
        let mut inv: Vec<SymFunc> = vec![SymFunc::one()];
        for k in 1..=self.order() {
            let s: SymFunc = (1..=k).map(|i| &self.coeffs[i] * &inv[k - i]).sum();
            inv.push(-s);
        }
        Ok(SFSeries { coeffs: inv })
    }
}

impl Mul for &SFSeries {
    type Output = SFSeries;
    fn mul(self, rhs: &SFSeries) -> SFSeries {
        SFSeries::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{qint, QPoly};

    fn q() -> QPoly {
        QPoly::q()
    }

    #[test]
    fn geometric_inverse() {
        let mut c = vec![SymFunc::zero(); 5];
        c[0] = SymFunc::one();
        c[2] = -SymFunc::e(2).scale(&q());
        let a = SFSeries::new(c).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(inv.coeff(0), &SymFunc::one());
        assert!(inv.coeff(1).is_zero());
        assert_eq!(inv.coeff(2), &SymFunc::e(2).scale(&q()));
        assert!(inv.coeff(3).is_zero());
        assert_eq!(inv.coeff(4), &SymFunc::e_of(&[2, 2]).scale(&q().pow(2)));
        assert_eq!(&a * &inv, SFSeries::one(4));
    }

    #[test]
    fn not_invertible() {
        let a = SFSeries::new(vec![SymFunc::scalar(&QPoly::from_i64s(&[2]))]).unwrap();
        assert_eq!(a.inverse(), Err(Error::NotInvertible));
        let z = SFSeries::new(vec![SymFunc::zero(), SymFunc::h(1)]).unwrap();
        assert_eq!(z.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert!(SFSeries::new(vec![SymFunc::one(), SymFunc::h(2)]).is_err());
    }

    #[test]
    fn stanley_local_h_cubic_term() {
        let order = 3;
        let num = SFSeries::from_fn(order, SymFunc::h).unwrap();
        let den = SFSeries::from_fn(order, |n| match n {
            0 => SymFunc::one(),
            1 => SymFunc::zero(),
            _ => -SymFunc::h(n).scale(&(&q() * &qint(n - 1))),
        })
        .unwrap();
        let f = &num * &den.inverse().unwrap();
        let expect =
            SymFunc::h(3).scale(&QPoly::from_i64s(&[1, 1, 1])) + SymFunc::h_of(&[2, 1]).scale(&q());
        assert_eq!(f.coeff(3), &expect);
    }
}
