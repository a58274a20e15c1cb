//! Three routes to the chromatic (quasi)symmetric function of `G_m`:
//! proper colorings graded by ascents, the rho-expansion over `S_{n,m}`,
//! and the classical power-sum expansion at `q = 1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::algebra::{partitions_of, Composition, Partition, QPoly};
use crate::error::Result;
use crate::limits;
use crate::symring::{Basis, Expansion, SymFunc};

use super::perm::{cycle_class_weights, for_each_snm, CycleDecomp};
use super::rho::omega_rho_product;
use super::HessFunc;

/// Coefficient of `x_1^{a_1} x_2^{a_2} ...` in `csf_q(G_m)`: the sum of
/// `q^{asc}` over proper colorings with `a_i` vertices of color `i`, where
/// `asc` counts edges `i < j` with `color(i) < color(j)`.
pub fn csf_monomial_coefficient(m: &HessFunc, exponents: &Composition) -> Result<QPoly> {
    limits::check_n("n", m.n())?;
    let n = m.n();
    if exponents.size() != n {
        return Ok(QPoly::zero());
    }
    let mut remaining = exponents.parts().to_vec();
    let mut colors = vec![0usize; n + 1];
    let mut counts = vec![0i64; n * n + 1];
    fn rec(
        v: usize,
        m: &HessFunc,
        remaining: &mut [usize],
        colors: &mut [usize],
        asc: usize,
        counts: &mut [i64],
    ) {
        if v > m.n() {
            counts[asc] += 1;
            return;
        }
        for c in 0..remaining.len() {
            if remaining[c] == 0 {
                continue;
            }
            // neighbors of v among earlier vertices: u < v <= m(u)
            let mut ok = true;
            let mut new_asc = 0;
            for (u, &cu) in colors.iter().enumerate().take(v).skip(1) {
                if v <= m.m(u) {
                    if cu == c {
                        ok = false;
                        break;
                    }
                    if cu < c {
                        new_asc += 1;
                    }
                }
            }
            if !ok {
                continue;
            }
            remaining[c] -= 1;
            colors[v] = c;
            rec(v + 1, m, remaining, colors, asc + new_asc, counts);
            remaining[c] += 1;
        }
    }
    rec(1, m, &mut remaining, &mut colors, 0, &mut counts);
    Ok(QPoly::from_i64s(&counts))
}

/// `csf_q(G_m)` from its monomial expansion, computed by enumerating
/// proper colorings. This is the slow reference route.
pub fn csf_coloring(m: &HessFunc) -> Result<SymFunc> {
    limits::check_n("n", m.n())?;
    let mut terms = BTreeMap::new();
    for lam in partitions_of(m.n())? {
        let c = csf_monomial_coefficient(m, &Composition::new(lam.parts().to_vec())?)?;
        terms.insert(lam, c);
    }
    SymFunc::from_expansion(&Expansion::from_terms(Basis::M, terms))
}

/// `csf_q(G_m) = sum_{sigma in S_{n,m}} q^{wt(sigma^c)} omega(prod rho_{|tau_i|})`.
/// Memoized per Hessenberg function.
pub fn csf_rho(m: &HessFunc) -> Result<SymFunc> {
    static MEMO: OnceLock<RwLock<HashMap<HessFunc, SymFunc>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().expect("csf cache").get(m) {
        return Ok(v.clone());
    }
    let mut by_type: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for ((first, rest), w) in cycle_class_weights(m)? {
        let lam = rest.union(&Partition::single(first));
        *by_type.entry(lam).or_insert_with(QPoly::zero) += &w;
    }
    let value: SymFunc = by_type
        .iter()
        .map(|(lam, w)| omega_rho_product(lam).scale(w))
        .sum();
    memo.write()
        .expect("csf cache")
        .insert(m.clone(), value.clone());
    Ok(value)
}

/// Stanley's `csf(G_m) = sum_{sigma in S_{n,m}} omega(p_{lambda(sigma)})`;
/// no `q`.
pub fn csf_stanley_p(m: &HessFunc) -> Result<SymFunc> {
    limits::check_n("n", m.n())?;
    let mut by_type: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_snm(m, |p| {
        *by_type
            .entry(CycleDecomp::from_perm(p.to_vec()).cycle_type())
            .or_insert(0) += 1;
    });
    Ok(by_type
        .iter()
        .map(|(lam, &c)| SymFunc::p(lam).omega().scale_int(c))
        .sum())
}
