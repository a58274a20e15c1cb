use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::algebra::{qint, Partition};
use crate::symring::SymFunc;

fn cache<K, V>() -> RwLock<HashMap<K, V>> {
    RwLock::new(HashMap::new())
}

/// The q-deformed power sum defined by `[n]_q h_n = sum_{i=0}^{n-1} h_i
/// rho_{n-i}`. Memoized.
pub fn rho(n: usize) -> SymFunc {
    static MEMO: OnceLock<RwLock<HashMap<usize, SymFunc>>> = OnceLock::new();
    let memo = MEMO.get_or_init(cache);
    if let Some(v) = memo.read().expect("rho cache").get(&n) {
        return v.clone();
    }
    let value = if n == 0 {
        SymFunc::zero()
    } else {
        let mut r = SymFunc::h(n).scale(&qint(n));
        for i in 1..n {
            r -= &(&SymFunc::h(i) * &rho(n - i));
        }
        r
    };
    memo.write().expect("rho cache").insert(n, value.clone());
    value
}

/// `omega(rho_{l_1} rho_{l_2} ...)`; the empty partition gives 1. Memoized.
pub fn omega_rho_product(lambda: &Partition) -> SymFunc {
    static MEMO: OnceLock<RwLock<HashMap<Partition, SymFunc>>> = OnceLock::new();
    let memo = MEMO.get_or_init(cache);
    if let Some(v) = memo.read().expect("rho cache").get(lambda) {
        return v.clone();
    }
    let value = lambda
        .parts()
        .iter()
        .map(|&k| rho(k))
        .product::<SymFunc>()
        .omega();
    memo.write()
        .expect("rho cache")
        .insert(lambda.clone(), value.clone());
    value
}

/// Checks `omega(rho_n) = sum_{i=1}^n (-1)^{n-i} [i]_q e_i h_{n-i}`.
pub fn omega_rho_check(n: usize) -> bool {
    let rhs: SymFunc = (1..=n)
        .map(|i| {
            let t = (&SymFunc::e(i) * &SymFunc::h(n - i)).scale(&qint(i));
            if (n - i) % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum();
    rho(n).omega() == rhs
}
