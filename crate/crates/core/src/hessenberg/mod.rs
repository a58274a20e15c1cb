//! Hessenberg functions and the chromatic quasisymmetric function of their
//! indifference graphs.

mod csf;
mod perm;
mod rho;
mod tree;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use csf::{csf_coloring, csf_monomial_coefficient, csf_rho, csf_stanley_p};
pub use perm::{cycle_class_weights, enum_snm, wt, CycleDecomp};
pub use rho::{omega_rho_check, omega_rho_product, rho};
pub use tree::{embed, enum_inc_trees, hess_minus_tau, IncTree};

/// A Hessenberg function `m: [n] -> [n]`: weakly increasing with
/// `m(i) >= i`. Values are 1-based; `n = 0` is the empty function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HessFunc {
    values: Vec<usize>,
}

impl HessFunc {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let reject = |reason: String| {
            Err(Error::InvalidHessenberg {
                values: values.clone(),
                reason,
            })
        };
        for (i, &v) in values.iter().enumerate() {
            if v < i + 1 {
                return reject(format!("m({}) = {v} < {}", i + 1, i + 1));
            }
            if v > n {
                return reject(format!("m({}) = {v} > n = {n}", i + 1));
            }
            if i > 0 && v < values[i - 1] {
                return reject(format!("m({}) > m({})", i, i + 1));
            }
        }
        Ok(HessFunc { values })
    }

    /// `m(i) = min(i + 1, n)`, the path graph `P_n`.
    pub fn path(n: usize) -> Self {
        HessFunc {
            values: (1..=n).map(|i| (i + 1).min(n)).collect(),
        }
    }

    /// `m(i) = n`, the complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        HessFunc { values: vec![n; n] }
    }

    /// Every Hessenberg function on `[n]` (there are Catalan(n) of them),
    /// in lexicographic order of the value sequence.
    pub fn all(n: usize) -> Vec<HessFunc> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessFunc>) {
            let i = cur.len() + 1;
            if i > n {
                out.push(HessFunc {
                    values: cur.clone(),
                });
                return;
            }
            let lo = cur.last().copied().unwrap_or(1).max(i);
            for v in lo..=n {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `m(i)` for `1 <= i <= n`.
    pub fn m(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Edges `{i, j}` with `i < j <= m(i)`, as ordered pairs `(i, j)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| ((i + 1)..=self.m(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        i < j && j <= self.m(i)
    }
}

/// Edge set of the indifference graph `G_m`.
pub fn indifference_graph(m: &HessFunc) -> Vec<(usize, usize)> {
    m.edges()
}

impl fmt::Display for HessFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for HessFunc {
    type Err = Error;
    /// Comma-separated values, e.g. `2,4,4,5,6,6`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad Hessenberg value {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HessFunc::new(values)
    }
}
