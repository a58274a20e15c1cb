//! The `e_k`-coefficient `c_k(m; q)` of `g_k`, the sets `S_1` and `S_2`,
//! and the injection `Delta: S_1 -> S_2`.

mod table;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{qint, Partition, QPoly};
use crate::error::{Error, Result};
use crate::hessenberg::{csf_rho, cycle_class_weights, enum_inc_trees, HessFunc};
use crate::limits;
use crate::symring::Basis;

pub use table::{parse_table_row, render_row, DeltaRow, DeltaTable, REFERENCE_ROWS};

/// A pair `(w, z)` from `S_2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CycWordPair {
    pub w: Vec<usize>,
    pub z: Vec<usize>,
}

impl CycWordPair {
    /// Why `(w, z)` fails to lie in `S_2`, if it does.
    pub fn s2_violation(&self, m: &HessFunc) -> Option<String> {
        let n = m.n();
        let mut all: Vec<usize> = self.w.iter().chain(&self.z).copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Some("w and z together are not a permutation of [n]".into());
        }
        if self.w.first() != Some(&1) {
            return Some("w does not start with 1".into());
        }
        if let Some(p) = self.w.windows(2).find(|p| p[1] > m.m(p[0])) {
            return Some(format!("{} > m({}) inside w", p[1], p[0]));
        }
        if let Some(p) = self.z.windows(2).find(|p| p[1] > m.m(p[0])) {
            return Some(format!("{} > m({}) inside z", p[1], p[0]));
        }
        match (self.z.first(), self.z.last()) {
            (Some(&first), Some(&last)) if first > m.m(last) => {
                Some(format!("{first} > m({last}) closing z"))
            }
            (None, _) => Some("z is empty".into()),
            _ => None,
        }
    }
}

fn check_k(m: &HessFunc, k: usize) -> Result<()> {
    if k == 0 || k >= m.n() {
        return Err(Error::KOutOfRange { k, n: m.n() });
    }
    Ok(())
}

/// `c_k(m; q) = [k]_q sum_{sigma = tau_1 tau_2, |tau_2| = k} q^{wt}
/// - sum_{n-cycles} q^{wt}`, the `e_k`-coefficient of `g_k(m)`.
pub fn ck_poly(m: &HessFunc, k: usize) -> Result<QPoly> {
    check_k(m, k)?;
    let n = m.n();
    let classes = cycle_class_weights(m)?;
    let two = classes
        .get(&(n - k, Partition::single(k)))
        .cloned()
        .unwrap_or_else(QPoly::zero);
    let one = classes
        .get(&(n, Partition::empty()))
        .cloned()
        .unwrap_or_else(QPoly::zero);
    Ok(&(&qint(k) * &two) - &one)
}

/// `S_1`: words `(1, w_2, ..., w_n)` with `w_{j+1} <= m(w_j)`, in
/// lexicographic order.
pub fn enum_s1(m: &HessFunc) -> Result<Vec<Vec<usize>>> {
    Ok(enum_inc_trees(m, m.n())?
        .into_iter()
        .map(|t| t.word().to_vec())
        .collect())
}

/// `S_2` for the given `k`, in lexicographic order of `(w, z)`.
pub fn enum_s2(m: &HessFunc, k: usize) -> Result<Vec<CycWordPair>> {
    check_k(m, k)?;
    let n = m.n();
    let mut out = Vec::new();
    for t in enum_inc_trees(m, n - k)? {
        let w = t.word().to_vec();
        let mut used = vec![false; n + 1];
        for &v in &w {
            used[v] = true;
        }
        let mut z = Vec::with_capacity(k);
        extend_cycle(m, k, &mut z, &mut used, &mut |z: &[usize]| {
            out.push(CycWordPair {
                w: w.clone(),
                z: z.to_vec(),
            });
        });
    }
    Ok(out)
}

fn extend_cycle(
    m: &HessFunc,
    k: usize,
    z: &mut Vec<usize>,
    used: &mut [bool],
    f: &mut impl FnMut(&[usize]),
) {
    if z.len() == k {
        if z[0] <= m.m(z[k - 1]) {
            f(z);
        }
        return;
    }
    let hi = z.last().map_or(m.n(), |&v| m.m(v));
    for v in 1..=hi {
        if !used[v] {
            used[v] = true;
            z.push(v);
            extend_cycle(m, k, z, used, f);
            z.pop();
            used[v] = false;
        }
    }
}

/// `L^j`: rotate left `j` times.
fn rotate_left(a: &[usize], j: usize) -> Vec<usize> {
    let mut v = a.to_vec();
    if !v.is_empty() {
        v.rotate_left(j % a.len());
    }
    v
}

/// `Delta(w)` together with the shift `j` used.
pub fn delta_with_shift(m: &HessFunc, k: usize, w: &[usize]) -> Result<(CycWordPair, usize)> {
    check_k(m, k)?;
    let n = m.n();
    let not_defined = |reason: String| Error::DeltaNotWellDefined {
        word: w.to_vec(),
        reason,
    };
    let valid_s1 = w.len() == n
        && w.first() == Some(&1)
        && w.iter().copied().collect::<BTreeSet<_>>() == (1..=n).collect()
        && w.windows(2).all(|p| p[1] <= m.m(p[0]));
    if !valid_s1 {
        return Err(not_defined("input is not in S_1".into()));
    }
    // 1-based: w_{n-j-k+1} <= m(w_{n-j})
    let at = |i: usize| w[i - 1];
    let j = (0..=n - k)
        .find(|&j| at(n - j - k + 1) <= m.m(at(n - j)))
        .expect("j = n - k always qualifies");
    let mut first: Vec<usize> = w[..n - j - k].to_vec();
    first.extend_from_slice(&w[n - j..]);
    let pair = CycWordPair {
        w: first,
        z: rotate_left(&w[n - j - k..n - j], j),
    };
    if let Some(reason) = pair.s2_violation(m) {
        return Err(not_defined(reason));
    }
    Ok((pair, j))
}

/// `Delta(w)`, checked for membership in `S_2`.
pub fn delta_map(m: &HessFunc, k: usize, w: &[usize]) -> Result<CycWordPair> {
    delta_with_shift(m, k, w).map(|(p, _)| p)
}

/// Outcome of applying `Delta` to all of `S_1`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaReport {
    pub injective: bool,
    pub s1_count: usize,
    pub s2_count: usize,
    /// `c_k(m; 1)` from the cycle sums.
    pub ck_at_one: BigInt,
    /// `|S_2| - |S_1| == c_k(m; 1)`.
    pub counts_agree: bool,
    pub table: DeltaTable,
}

pub fn check_delta_injective(m: &HessFunc, k: usize) -> Result<DeltaReport> {
    limits::check_n("n", m.n())?;
    let table = DeltaTable::build(m, k)?;
    if let Some(e) = table.first_violation() {
        return Err(e);
    }
    let s1_count = table.rows.len();
    let s2: BTreeSet<CycWordPair> = enum_s2(m, k)?.into_iter().collect();
    let images: BTreeSet<&CycWordPair> =
        table.rows.iter().filter_map(|r| r.delta.as_ref()).collect();
    let injective = images.len() == s1_count && images.iter().all(|p| s2.contains(*p));
    let ck_at_one = ck_poly(m, k)?.eval(&BigInt::from(1));
    let diff = BigInt::from(s2.len()) - BigInt::from(s1_count);
    Ok(DeltaReport {
        injective,
        s1_count,
        s2_count: s2.len(),
        counts_agree: diff == ck_at_one,
        ck_at_one,
        table,
    })
}

/// The `e_{a,b}` coefficient of `csf_q(G_m)` (with `a >= b >= 1`,
/// `a + b = n`) and its prediction `[a]_q c_b + [b]_q c_a` (a single
/// `[a]_q c_a` when `a = b`).
pub fn eab_coefficient(m: &HessFunc, a: usize, b: usize) -> Result<(QPoly, QPoly)> {
    let n = m.n();
    if b == 0 || a < b || a + b != n {
        return Err(Error::KOutOfRange { k: b, n });
    }
    let lam = Partition::new(vec![a, b])?;
    let actual = csf_rho(m)?.to_basis(Basis::E)?.coeff(&lam);
    let predicted = if a == b {
        &qint(a) * &ck_poly(m, a)?
    } else {
        &(&qint(a) * &ck_poly(m, b)?) + &(&qint(b) * &ck_poly(m, a)?)
    };
    Ok((actual, predicted))
}
