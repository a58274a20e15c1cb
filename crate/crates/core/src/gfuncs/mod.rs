//! The symmetric functions `g_k(m; x, q)`: definition, tree formula,
//! extension past `n`, recursion and generating function.

mod path;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{qint, QPoly};
use crate::error::{Error, Result};
use crate::hessenberg::{
    csf_rho, cycle_class_weights, embed, enum_inc_trees, hess_minus_tau, omega_rho_product, wt,
    HessFunc,
};
use crate::symring::{Basis, Expansion, SFSeries, SymFunc};

pub use path::{derangement_poly, g_path, g_path_monomial_check, path_denominator};

/// `g_0, ..., g_K` for a fixed Hessenberg function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GVector {
    m: HessFunc,
    entries: Vec<SymFunc>,
}

impl GVector {
    /// `g_0, ..., g_{n-1}` from the definition.
    pub fn new(m: &HessFunc) -> Result<Self> {
        Ok(GVector {
            m: m.clone(),
            entries: g_def_all(m)?.to_vec(),
        })
    }

    /// `g_0, ..., g_upto`, using the extended definition past `n - 1`.
    pub fn extended(m: &HessFunc, upto: usize) -> Result<Self> {
        let entries = (0..=upto)
            .map(|k| g_extended(m, k))
            .collect::<Result<_>>()?;
        Ok(GVector {
            m: m.clone(),
            entries,
        })
    }

    pub fn hess(&self) -> &HessFunc {
        &self.m
    }

    pub fn entries(&self) -> &[SymFunc] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> Option<&SymFunc> {
        self.entries.get(k)
    }

    /// e-expansions of every entry; fails if any is not integral.
    pub fn e_expansions(&self) -> Result<Vec<Expansion>> {
        self.entries.iter().map(|g| g.to_basis(Basis::E)).collect()
    }
}

/// All of `g_0, ..., g_{n-1}` in one pass over `S_{n,m}`. Memoized.
fn g_def_all(m: &HessFunc) -> Result<Arc<Vec<SymFunc>>> {
    static MEMO: OnceLock<RwLock<HashMap<HessFunc, Arc<Vec<SymFunc>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().expect("g cache").get(m) {
        return Ok(v.clone());
    }
    let n = m.n();
    let classes = cycle_class_weights(m)?;
    let mut out = vec![SymFunc::zero(); n];
    for ((first, rest), w) in &classes {
        let tail = omega_rho_product(rest).scale(w);
        // |tau_1| >= n - k, i.e. k >= n - first
        for (k, slot) in out.iter_mut().enumerate().skip(n - first) {
            let j = first + k - n;
            let term = &SymFunc::h(j) * &tail;
            if j % 2 == 1 {
                *slot -= &term;
            } else {
                *slot += &term;
            }
        }
    }
    let out = Arc::new(out);
    memo.write()
        .expect("g cache")
        .insert(m.clone(), out.clone());
    Ok(out)
}

fn check_k(m: &HessFunc, k: usize) -> Result<()> {
    if k >= m.n() {
        return Err(Error::KOutOfRange { k, n: m.n() });
    }
    Ok(())
}

/// `g_k(m)` for `0 <= k < n` by its defining sum over `S_{n,m}`.
pub fn g_def(m: &HessFunc, k: usize) -> Result<SymFunc> {
    check_k(m, k)?;
    Ok(g_def_all(m)?[k].clone())
}

/// `g_k(m)` through increasing trees:
/// `sum_tau (-1)^{|tau|-n+k} q^{wt(tau)} h_{|tau|-n+k} csf_q(m \ tau)`.
pub fn g_tree(m: &HessFunc, k: usize) -> Result<SymFunc> {
    check_k(m, k)?;
    let n = m.n();
    let mut out = SymFunc::zero();
    for d in (n - k)..=n {
        let j = d + k - n;
        let hj = SymFunc::h(j);
        for t in enum_inc_trees(m, d)? {
            let w = wt(m, &embed(t.word(), n));
            let rest = csf_rho(&hess_minus_tau(m, t.word()))?;
            let term = (&hj * &rest).scale(&QPoly::monomial(1.into(), w));
            if j % 2 == 1 {
                out -= &term;
            } else {
                out += &term;
            }
        }
    }
    Ok(out)
}

/// `sum_{k=0}^{n-1} [n-k]_q e_{n-k} g_k(m)`, which recovers `csf_q(G_m)`.
pub fn csf_from_g(m: &HessFunc) -> Result<SymFunc> {
    let n = m.n();
    let g = g_def_all(m)?;
    Ok((0..n)
        .map(|k| (&SymFunc::e(n - k) * &g[k]).scale(&qint(n - k)))
        .sum())
}

/// `m^{n'}`: a path on `n' + 1` vertices glued to vertex 1 of `G_m`.
pub fn hess_extend(m: &HessFunc, n_prime: usize) -> HessFunc {
    let values = (1..=n_prime)
        .map(|i| i + 1)
        .chain(m.values().iter().map(|&v| v + n_prime))
        .collect();
    HessFunc::new(values).expect("extension of a Hessenberg function")
}

/// `g_k(m)` for any `k >= 0`, through the smallest extension `m^{n'}` with
/// `n + n' > k`.
pub fn g_extended(m: &HessFunc, k: usize) -> Result<SymFunc> {
    let n_prime = (k + 1).saturating_sub(m.n());
    g_extended_with(m, k, n_prime)
}

/// `g_k(m^{n'})`; requires `n + n' > k`.
pub fn g_extended_with(m: &HessFunc, k: usize, n_prime: usize) -> Result<SymFunc> {
    let ext = hess_extend(m, n_prime);
    g_def(&ext, k)
}

/// Checks `g_n(m) = q sum_{i=1}^n [i-1]_q e_i g_{n-i}(m)`.
pub fn g_recursion_check(m: &HessFunc) -> Result<bool> {
    let n = m.n();
    let lhs = g_extended(m, n)?;
    let g = g_def_all(m)?;
    let rhs: SymFunc = (1..=n)
        .map(|i| (&SymFunc::e(i) * &g[n - i]).scale(&(&qint(i - 1) * &QPoly::q())))
        .sum();
    Ok(lhs == rhs)
}

/// The closed form
/// `sum_{i<n} g_i z^i (1 - q sum_{k=2}^{n-i-1} [k-1]_q e_k z^k) / (1 - q sum_{k>=2} [k-1]_q e_k z^k)`
/// truncated after `z^order`.
pub fn g_series(m: &HessFunc, order: usize) -> Result<SFSeries> {
    let n = m.n();
    let g = g_def_all(m)?;
    let inv = path_denominator(order).inverse()?;
    let mut numer = vec![SymFunc::zero(); order + 1];
    for (i, gi) in g.iter().enumerate() {
        if i > order {
            break;
        }
        numer[i] += gi;
        for k in 2..(n - i) {
            if i + k > order {
                break;
            }
            let c = &qint(k - 1) * &QPoly::q();
            numer[i + k] -= &(&SymFunc::e(k) * gi).scale(&c);
        }
    }
    Ok(&SFSeries::new(numer)? * &inv)
}

/// Compares the closed form against `g_extended` for `k <= order`;
/// returns the first `k` where they differ.
pub fn g_series_mismatch(m: &HessFunc, order: usize) -> Result<Option<usize>> {
    let series = g_series(m, order)?;
    for k in 0..=order {
        if series.coeff(k) != &g_extended(m, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
