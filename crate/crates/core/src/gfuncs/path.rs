use std::collections::HashMap;

use crate::algebra::{partitions_of, qint, Partition, QPoly};
use crate::error::Result;
use crate::limits;
use crate::symring::{Basis, Expansion, SFSeries, SymFunc};

/// `1 - q sum_{k>=2} [k-1]_q e_k z^k`, truncated after `z^order`.
pub fn path_denominator(order: usize) -> SFSeries {
    SFSeries::from_fn(order, |k| match k {
        0 => SymFunc::one(),
        1 => SymFunc::zero(),
        _ => -SymFunc::e(k).scale(&(&qint(k - 1) * &QPoly::q())),
    })
    .expect("homogeneous coefficients")
}

/// `g_k` of a single vertex (equivalently of any path `P_n` with `n > k`):
/// the `z^k` coefficient of `1 / (1 - q sum_{j>=2} [j-1]_q e_j z^j)`.
pub fn g_path(k: usize) -> Result<SymFunc> {
    limits::check_degree(k)?;
    let inv = path_denominator(k).inverse()?;
    Ok(inv.coeff(k).clone())
}

/// `c_lambda(q)`: excedances over the derangements of the word
/// `1^{lambda_1} 2^{lambda_2} ...`.
pub fn derangement_poly(lambda: &Partition) -> Result<QPoly> {
    limits::check_degree(lambda.size())?;
    let word: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(letter, &mult)| std::iter::repeat_n(letter, mult))
        .collect();
    let mut memo = HashMap::new();
    Ok(count(&word, 0, &mut lambda.parts().to_vec(), &mut memo))
}

// Fill position `pos` onward using the remaining letter counts.
fn count(
    word: &[usize],
    pos: usize,
    remaining: &mut Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), QPoly>,
) -> QPoly {
    if pos == word.len() {
        return QPoly::one();
    }
    let key = (pos, remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = QPoly::zero();
    for letter in 0..remaining.len() {
        if letter == word[pos] || remaining[letter] == 0 {
            continue;
        }
        remaining[letter] -= 1;
        let sub = count(word, pos + 1, remaining, memo);
        remaining[letter] += 1;
        if letter > word[pos] {
            total += &sub.shift_degree(1);
        } else {
            total += &sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Checks `g_path(k) = sum_{lambda |- k} c_lambda(q) m_lambda`.
pub fn g_path_monomial_check(k: usize) -> Result<bool> {
    let terms = partitions_of(k)?
        .into_iter()
        .map(|lam| derangement_poly(&lam).map(|c| (lam, c)))
        .collect::<Result<_>>()?;
    let rhs = SymFunc::from_expansion(&Expansion::from_terms(Basis::M, terms))?;
    Ok(g_path(k)? == rhs)
}
