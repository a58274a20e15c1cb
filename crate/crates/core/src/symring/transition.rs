//! Per-degree transition matrices between the power-sum basis and the
//! m, e, h, p, s bases.
//!
//! Every basis is first written in the monomial basis by a counting
//! argument:
//!
//! * `p_lambda`: ways to drop the parts of `lambda` into labelled bins with
//!   bin sums `mu`;
//! * `h_lambda`: nonnegative integer matrices with row sums `lambda` and
//!   column sums `mu`;
//! * `e_lambda`: the same count restricted to 0/1 matrices;
//! * `s_lambda`: Kostka numbers, semistandard tableaux of shape `lambda`
//!   and content `mu`.
//!
//! Conversions to and from the internal power-sum coordinates are exact
//! rational inverses of these integer matrices. Rows and columns follow
//! [`partitions_of`](crate::algebra::partitions_of) (lexicographic
//! descending). Tables are built lazily, once per degree and basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{partitions_unchecked, Partition};
use crate::error::{Error, Result};
use crate::limits;

use super::Basis;

pub type IntMatrix = Vec<Vec<BigInt>>;
pub(crate) type RatMatrix = Vec<Vec<BigRational>>;

pub(crate) struct DegreeTables {
    pub(crate) parts: Vec<Partition>,
    pub(crate) index: HashMap<Partition, usize>,
    to_m: [OnceLock<IntMatrix>; 5],
    m_to_p: OnceLock<RatMatrix>,
    p_to: [OnceLock<RatMatrix>; 5],
    to_p: [OnceLock<RatMatrix>; 5],
}

fn registry() -> &'static RwLock<HashMap<usize, Arc<DegreeTables>>> {
    static REG: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

pub(crate) fn tables(degree: usize) -> Result<Arc<DegreeTables>> {
    limits::check_degree(degree)?;
    if let Some(t) = registry().read().expect("registry poisoned").get(&degree) {
        return Ok(t.clone());
    }
    let parts = partitions_unchecked(degree);
    let index = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let fresh = Arc::new(DegreeTables {
        parts,
        index,
        to_m: Default::default(),
        m_to_p: OnceLock::new(),
        p_to: Default::default(),
        to_p: Default::default(),
    });
    let mut reg = registry().write().expect("registry poisoned");
    Ok(reg.entry(degree).or_insert(fresh).clone())
}

impl DegreeTables {
    pub(crate) fn to_m(&self, basis: Basis) -> &IntMatrix {
        self.to_m[basis as usize].get_or_init(|| {
            let n = self.parts.len();
            let mut mat = vec![vec![BigInt::zero(); n]; n];
            for (i, lam) in self.parts.iter().enumerate() {
                for (j, mu) in self.parts.iter().enumerate() {
                    mat[i][j] = BigInt::from(count_to_m(basis, lam, mu));
                }
            }
            mat
        })
    }

    fn m_to_p(&self) -> &RatMatrix {
        self.m_to_p
            .get_or_init(|| invert(&to_rational(self.to_m(Basis::P))))
    }

    /// Rows: coefficients of `p_lambda` in the target basis.
    pub(crate) fn p_to(&self, basis: Basis) -> &RatMatrix {
        self.p_to[basis as usize].get_or_init(|| {
            let l = to_rational(self.to_m(Basis::P));
            if basis == Basis::P {
                return identity(l.len());
            }
            let inv = invert(&to_rational(self.to_m(basis)));
            mat_mul(&l, &inv)
        })
    }

    /// Rows: `b_lambda` in power-sum coordinates.
    pub(crate) fn to_p(&self, basis: Basis) -> &RatMatrix {
        self.to_p[basis as usize].get_or_init(|| {
            if basis == Basis::P {
                return identity(self.parts.len());
            }
            mat_mul(&to_rational(self.to_m(basis)), self.m_to_p())
        })
    }
}

/// The integer matrix writing `basis` in the monomial basis at `degree`.
pub fn transition_to_m(degree: usize, basis: Basis) -> Result<IntMatrix> {
    Ok(tables(degree)?.to_m(basis).clone())
}

/// Monomial transition matrices computed so far in this process, by degree
/// and basis.
pub fn computed_to_m() -> Vec<(usize, Basis, IntMatrix)> {
    let reg = registry().read().expect("registry poisoned");
    let mut out: Vec<_> = reg
        .iter()
        .flat_map(|(&d, t)| {
            Basis::ALL
                .iter()
                .filter_map(move |&b| t.to_m[b as usize].get().map(|m| (d, b, m.clone())))
        })
        .collect();
    out.sort_by_key(|(d, b, _)| (*d, *b as usize));
    out
}

/// Kostka matrix `K[lambda][mu]` over partitions of `n`.
pub fn kostka_matrix(n: usize) -> Result<IntMatrix> {
    transition_to_m(n, Basis::S)
}

/// Preload a monomial transition matrix (e.g. from a disk cache). The
/// matrix is checked for shape and for the cheap structural facts every
/// genuine table satisfies; anything else is rejected and the table is
/// recomputed on demand instead. Returns `Ok(false)` if the table had
/// already been computed.
pub fn install_to_m(degree: usize, basis: Basis, matrix: IntMatrix) -> Result<bool> {
    let t = tables(degree)?;
    let n = t.parts.len();
    let bad = |why: &str| Err(Error::Parse(format!("transition matrix rejected: {why}")));
    if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
        return bad("wrong shape");
    }
    // Every to-m matrix has a positive entry on the diagonal for p, h and s,
    // and at the conjugate position for e.
    for (i, lam) in t.parts.iter().enumerate() {
        let j = match basis {
            Basis::E => t.index[&lam.conjugate()],
            _ => i,
        };
        if matrix[i][j] <= BigInt::zero() || matrix[i].iter().any(|c| c < &BigInt::zero()) {
            return bad("entries inconsistent with a transition table");
        }
    }
    Ok(t.to_m[basis as usize].set(matrix).is_ok())
}

fn count_to_m(basis: Basis, lam: &Partition, mu: &Partition) -> u64 {
    match basis {
        Basis::M => u64::from(lam == mu),
        Basis::P => count_bin_assignments(lam.parts(), mu.parts()),
        Basis::H => count_matrices(lam.parts(), mu.parts(), None),
        Basis::E => count_matrices(lam.parts(), mu.parts(), Some(1)),
        Basis::S => kostka_number(lam, mu),
    }
}

/// Number of maps from the parts of `lam` to the bins of `mu` such that the
/// parts landing in bin `j` sum to `mu_j`.
fn count_bin_assignments(lam: &[usize], mu: &[usize]) -> u64 {
    fn rec(parts: &[usize], bins: &mut Vec<usize>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(bins.iter().all(|&b| b == 0));
        };
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= first {
                bins[j] -= first;
                total += rec(rest, bins);
                bins[j] += first;
            }
        }
        total
    }
    if lam.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return 0;
    }
    rec(lam, &mut mu.to_vec())
}

/// Matrices with nonnegative entries (at most `cap` when given) with the
/// prescribed row and column sums.
fn count_matrices(rows: &[usize], cols: &[usize], cap: Option<usize>) -> u64 {
    fn fill_row(
        need: usize,
        j: usize,
        cols: &mut Vec<usize>,
        cap: Option<usize>,
        rest_rows: &[usize],
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        if j == cols.len() {
            return if need == 0 {
                by_rows(rest_rows, cols, cap, memo)
            } else {
                0
            };
        }
        let hi = need.min(cols[j]).min(cap.unwrap_or(usize::MAX));
        let mut total = 0;
        for a in 0..=hi {
            cols[j] -= a;
            total += fill_row(need - a, j + 1, cols, cap, rest_rows, memo);
            cols[j] += a;
        }
        total
    }
    fn by_rows(
        rows: &[usize],
        cols: &[usize],
        cap: Option<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        let Some((&first, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        // The count only depends on the multiset of remaining column sums.
        let mut key_cols: Vec<usize> = cols.iter().copied().filter(|&c| c > 0).collect();
        key_cols.sort_unstable();
        let key = (rows.len(), key_cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = fill_row(first, 0, &mut key_cols, cap, rest, memo);
        memo.insert(key, v);
        v
    }
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    by_rows(rows, cols, cap, &mut HashMap::new())
}

/// Kostka number by peeling off the horizontal strip holding the largest
/// entry, which enumerates semistandard tableaux one strip at a time.
fn kostka_number(shape: &Partition, content: &Partition) -> u64 {
    fn rec(
        shape: Vec<usize>,
        content: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.is_empty());
        };
        let key = (shape.clone(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for inner in horizontal_strips(&shape, last) {
            total += rec(inner, rest, memo);
        }
        memo.insert(key, total);
        total
    }
    if shape.size() != content.size() {
        return 0;
    }
    rec(shape.parts().to_vec(), content.parts(), &mut HashMap::new())
}

/// All `nu` with `shape / nu` a horizontal strip of size `k`.
pub(crate) fn horizontal_strips(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(shape: &[usize], i: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() {
            if k == 0 {
                let mut nu = cur.clone();
                while nu.last() == Some(&0) {
                    nu.pop();
                }
                out.push(nu);
            }
            return;
        }
        // Row i may shrink down to the length of row i+1.
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        for take in 0..=(shape[i] - floor).min(k) {
            cur.push(shape[i] - take);
            rec(shape, i + 1, k - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 0, k, &mut Vec::new(), &mut out);
    out
}

fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![BigRational::zero(); n];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Exact Gauss-Jordan inverse. Transition matrices are always invertible.
fn invert(a: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrix is singular");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        if !p.is_one() {
            for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
                *x /= &p;
            }
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..n {
                if !m[col][c].is_zero() {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
                if !inv[col][c].is_zero() {
                    let d = &f * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
    }
    inv
}
