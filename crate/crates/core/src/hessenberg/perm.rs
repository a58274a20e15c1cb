use std::collections::BTreeMap;

use crate::algebra::{Partition, QPoly};
use crate::error::Result;
use crate::limits;

use super::HessFunc;

/// A permutation together with its canonical cycle decomposition: each
/// cycle starts at its minimum and cycles are sorted by their minima. The
/// cycle word is the concatenation of the cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomp {
    perm: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomp {
    /// `perm` is one-line notation on `[n]` (1-based values).
    pub fn from_perm(perm: Vec<usize>) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = perm[start - 1];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = perm[x - 1];
            }
            cycles.push(cyc);
        }
        CycleDecomp { perm, cycles }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// The cycle word with the parentheses erased.
    pub fn word(&self) -> Vec<usize> {
        self.cycles.concat()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts(self.cycles.iter().map(Vec::len).collect())
    }

    /// Length of the cycle through 1.
    pub fn first_cycle_len(&self) -> usize {
        self.cycles.first().map_or(0, Vec::len)
    }

    /// Rebuild the one-line permutation from the cycles.
    pub fn to_perm(&self) -> Vec<usize> {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut perm = vec![0; n];
        for c in &self.cycles {
            for (i, &x) in c.iter().enumerate() {
                perm[x - 1] = c[(i + 1) % c.len()];
            }
        }
        perm
    }
}

/// Number of pairs `a < b <= m(a)` where `b` occurs before `a` in `word`.
pub fn wt(m: &HessFunc, word: &[usize]) -> usize {
    let mut count = 0;
    for (p, &b) in word.iter().enumerate() {
        for &a in &word[p + 1..] {
            if a < b && b <= m.m(a) {
                count += 1;
            }
        }
    }
    count
}

/// Visit every `sigma` in `S_{n,m}` (i.e. `sigma(i) <= m(i)`) in
/// lexicographic order of the one-line notation.
pub(crate) fn for_each_snm(m: &HessFunc, mut f: impl FnMut(&[usize])) {
    fn rec(m: &HessFunc, perm: &mut Vec<usize>, used: &mut [bool], f: &mut impl FnMut(&[usize])) {
        let i = perm.len() + 1;
        if i > m.n() {
            f(perm);
            return;
        }
        for v in 1..=m.m(i) {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                rec(m, perm, used, f);
                perm.pop();
                used[v] = false;
            }
        }
    }
    rec(
        m,
        &mut Vec::with_capacity(m.n()),
        &mut vec![false; m.n() + 1],
        &mut f,
    );
}

/// All permutations `sigma` with `sigma(i) <= m(i)`.
pub fn enum_snm(m: &HessFunc) -> Result<Vec<CycleDecomp>> {
    limits::check_n("n", m.n())?;
    let mut out = Vec::new();
    for_each_snm(m, |p| out.push(CycleDecomp::from_perm(p.to_vec())));
    Ok(out)
}

/// `S_{n,m}` grouped by (length of the cycle through 1, cycle type of the
/// remaining cycles), each class carrying `sum q^{wt(sigma^c)}`.
pub fn cycle_class_weights(m: &HessFunc) -> Result<BTreeMap<(usize, Partition), QPoly>> {
    limits::check_n("n", m.n())?;
    let mut counts: BTreeMap<(usize, Partition), Vec<u64>> = BTreeMap::new();
    for_each_snm(m, |p| {
        let d = CycleDecomp::from_perm(p.to_vec());
        let rest = Partition::from_parts(d.cycles.iter().skip(1).map(Vec::len).collect());
        let w = wt(m, &d.word());
        let slot = counts.entry((d.first_cycle_len(), rest)).or_default();
        if slot.len() <= w {
            slot.resize(w + 1, 0);
        }
        slot[w] += 1;
    });
    Ok(counts
        .into_iter()
        .map(|(k, v)| {
            let c: Vec<i64> = v.into_iter().map(|x| x as i64).collect();
            (k, QPoly::from_i64s(&c))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[usize]) -> HessFunc {
        HessFunc::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cycle_word_example() {
        // (154)(2639)(78) -> 154263978
        let mut perm = vec![0; 9];
        for c in [[1, 5, 4].as_slice(), &[2, 6, 3, 9], &[7, 8]] {
            for (i, &x) in c.iter().enumerate() {
                perm[x - 1] = c[(i + 1) % c.len()];
            }
        }
        let d = CycleDecomp::from_perm(perm.clone());
        assert_eq!(d.word(), vec![1, 5, 4, 2, 6, 3, 9, 7, 8]);
        assert_eq!(d.cycle_type(), Partition::new(vec![4, 3, 2]).unwrap());
        assert_eq!(d.to_perm(), perm);
    }

    #[test]
    fn snm_examples() {
        assert_eq!(enum_snm(&hf(&[1, 2, 3, 4])).unwrap().len(), 1);
        assert_eq!(enum_snm(&HessFunc::complete(4)).unwrap().len(), 24);
        let perms: Vec<Vec<usize>> = enum_snm(&hf(&[2, 3, 3]))
            .unwrap()
            .iter()
            .map(|d| d.perm().to_vec())
            .collect();
        // id, (23), (12), (123)
        assert_eq!(
            perms,
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![2, 3, 1]]
        );
    }

    #[test]
    fn snm_matches_filter_of_all_permutations() {
        fn all_perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in all_perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n);
                    out.push(q);
                }
            }
            out
        }
        for n in 0..=5 {
            for m in HessFunc::all(n) {
                let mut brute: Vec<Vec<usize>> = all_perms(n)
                    .into_iter()
                    .filter(|p| p.iter().enumerate().all(|(i, &v)| v <= m.m(i + 1)))
                    .collect();
                brute.sort();
                let got: Vec<Vec<usize>> = enum_snm(&m)
                    .unwrap()
                    .iter()
                    .map(|d| d.perm().to_vec())
                    .collect();
                assert_eq!(got, brute, "m = {m}");
            }
        }
    }

    #[test]
    fn wt_examples() {
        for m in HessFunc::all(4) {
            assert_eq!(wt(&m, &[1, 2, 3, 4]), 0);
        }
        assert_eq!(wt(&hf(&[3, 3, 3]), &[1, 3, 2]), 1);
    }

    #[test]
    fn six_cycle_weights_of_the_running_example() {
        let m = hf(&[2, 4, 4, 5, 6, 6]);
        let classes = cycle_class_weights(&m).unwrap();
        let six = &classes[&(6, Partition::empty())];
        assert_eq!(six, &QPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn guard() {
        assert!(enum_snm(&HessFunc::complete(9)).is_err());
    }
}
