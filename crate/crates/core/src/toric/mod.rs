//! Face and h-vectors of fans, the barycentric subdivision of the
//! permutohedral fan, and the generating functions `F_1`, `F_2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{compositions_of, qint, qpoly_shift, Partition, QPoly, QShift};
use crate::error::{Error, Result};
use crate::limits;
use crate::symring::{Basis, Expansion, SFSeries, SymFunc};

/// Cone counts `f_0, f_1, ...` by dimension; `f_0 = 1` counts the origin.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FVector(Vec<BigInt>);

impl FVector {
    pub fn new(counts: Vec<BigInt>) -> Result<Self> {
        if counts.first() != Some(&BigInt::from(1)) {
            return Err(Error::Parse("an f-vector starts with f_0 = 1".into()));
        }
        if counts.iter().any(|c| c < &BigInt::from(0)) {
            return Err(Error::Parse("f-vector entries are nonnegative".into()));
        }
        Ok(FVector(counts))
    }

    pub fn from_u64s(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.0
    }

    /// Dimension of the fan.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }
}

/// `h_0, ..., h_d` from `sum_i f_i (q-1)^{d-i} = sum_i h_i q^{d-i}`.
pub fn h_vector(f: &FVector) -> Vec<BigInt> {
    let d = f.dim();
    let q_minus_one = QPoly::from_i64s(&[-1, 1]);
    let poly: QPoly = f
        .counts()
        .iter()
        .enumerate()
        .map(|(i, c)| q_minus_one.pow((d - i) as u32).scale(c))
        .sum();
    (0..=d).map(|i| poly.coeff(d - i)).collect()
}

/// f-vector of the barycentric subdivision of the fan of type `A_{n-1}`:
/// `f_d` counts chains `S_1 < ... < S_d` of nonempty proper subsets of
/// `[n]`.
pub fn barycentric_f_vector(n: usize) -> Result<FVector> {
    if n == 0 {
        return Err(Error::Parse("barycentric fan needs n >= 1".into()));
    }
    limits::check_n("n", n)?;
    let full = (1usize << n) - 1;
    let proper: Vec<usize> = (1..full).collect();
    // chains[s] = number of chains of the current length ending at s
    let mut chains: Vec<BigInt> = (0..=full)
        .map(|s| BigInt::from(u8::from(s != 0 && s != full)))
        .collect();
    let mut f = vec![BigInt::from(1)];
    loop {
        let total: BigInt = chains.iter().sum();
        if total == BigInt::from(0) {
            break;
        }
        f.push(total);
        let mut next = vec![BigInt::from(0); full + 1];
        for &t in &proper {
            // proper subsets s of t
            let mut s = (t - 1) & t;
            while s != 0 {
                next[t] += &chains[s];
                s = (s - 1) & t;
            }
        }
        chains = next;
    }
    FVector::new(f)
}

/// `ch(C_{Sigma_1}) = sum_{mu composition of n} q^{n - l(mu)} h_mu`.
pub fn frob_c_sigma1(n: usize) -> Result<SymFunc> {
    composition_sum(n, SymFunc::h_of)
}

fn composition_sum(n: usize, basis: fn(&[usize]) -> SymFunc) -> Result<SymFunc> {
    Ok(compositions_of(n)?
        .iter()
        .map(|mu| basis(mu.parts()).scale(&QPoly::monomial(1.into(), n - mu.len())))
        .sum())
}

/// `LLT(P_n; x, q+1) = sum_mu q^{n - l(mu)} e_mu` when `shifted`; otherwise
/// every e-coefficient is pushed through `q -> q - 1`.
pub fn llt_path(n: usize, shifted: bool) -> Result<SymFunc> {
    let at_q_plus_one = composition_sum(n, SymFunc::e_of)?;
    if shifted {
        return Ok(at_q_plus_one);
    }
    let ex = at_q_plus_one.to_basis(Basis::E)?;
    let terms: BTreeMap<Partition, QPoly> = ex
        .terms()
        .iter()
        .map(|(lam, c)| (lam.clone(), qpoly_shift(c, QShift::Down)))
        .collect();
    SymFunc::from_expansion(&Expansion::from_terms(Basis::E, terms))
}

/// `1 - sum_{n>=2} q [n-1]_q h_n z^n`.
fn f_denominator(order: usize) -> SFSeries {
    SFSeries::from_fn(order, |k| match k {
        0 => SymFunc::one(),
        1 => SymFunc::zero(),
        _ => -SymFunc::h(k).scale(&(&qint(k - 1) * &QPoly::q())),
    })
    .expect("homogeneous coefficients")
}

/// `F_1 = (sum_n h_n z^n) / (1 - sum_{n>=2} q [n-1]_q h_n z^n)`.
pub fn f1_series(order: usize) -> Result<SFSeries> {
    limits::check_degree(order)?;
    let num = SFSeries::from_fn(order, SymFunc::h)?;
    Ok(&num * &f_denominator(order).inverse()?)
}

/// `F_2 = 1 / (1 - sum_{n>=2} q [n-1]_q h_n z^n)`.
pub fn f2_series(order: usize) -> Result<SFSeries> {
    limits::check_degree(order)?;
    f_denominator(order).inverse()
}
