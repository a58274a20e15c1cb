use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::limits;

use super::HessFunc;

/// An increasing tree of `G_m` rooted at 1, stored alongside its word under
/// Stanley's bijection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncTree {
    word: Vec<usize>,
    /// `(parent, child)` pairs sorted by child.
    edges: Vec<(usize, usize)>,
}

impl IncTree {
    /// Build the tree of an injective word with `word[0] = 1` and
    /// `word[i+1] <= m(word[i])`. The parent of `word[j]` is `word[i]` for
    /// the largest `i < j` with `word[i] < word[j]`.
    pub fn from_word(m: &HessFunc, word: &[usize]) -> Result<Self> {
        let bad = |why: &str| Err(Error::MalformedTree(format!("{word:?}: {why}")));
        if word.first() != Some(&1) {
            return bad("word must start at 1");
        }
        let mut seen = BTreeSet::new();
        for &v in word {
            if v == 0 || v > m.n() || !seen.insert(v) {
                return bad("not an injective word on [n]");
            }
        }
        if word.windows(2).any(|w| w[1] > m.m(w[0])) {
            return bad("consecutive letters violate the Hessenberg bound");
        }
        let mut edges: Vec<(usize, usize)> = (1..word.len())
            .map(|j| {
                let i = (0..j)
                    .rev()
                    .find(|&i| word[i] < word[j])
                    .expect("root is 1");
                (word[i], word[j])
            })
            .collect();
        edges.sort_by_key(|&(_, c)| c);
        Ok(IncTree {
            word: word.to_vec(),
            edges,
        })
    }

    /// Inverse of the bijection: validates the edge list as an increasing
    /// tree of `G_m` rooted at 1 and recovers its word by a preorder walk
    /// that visits children in decreasing order.
    pub fn from_edges(m: &HessFunc, edges: &[(usize, usize)]) -> Result<Self> {
        let bad = |why: String| Err(Error::MalformedTree(why));
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut children: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in edges {
            let (p, c) = if a < b { (a, b) } else { (b, a) };
            if p == c || c > m.n() || p == 0 {
                return bad(format!("edge {a}-{b} is not an edge on [n]"));
            }
            if !m.is_edge(p, c) {
                return bad(format!("edge {a}-{b} is not in G_m"));
            }
            if parent.insert(c, p).is_some() {
                return bad(format!("vertex {c} has two smaller neighbours"));
            }
            children.entry(p).or_default().push(c);
        }
        if parent.contains_key(&1) {
            return bad("vertex 1 must be the root".into());
        }
        let mut word = Vec::with_capacity(edges.len() + 1);
        let mut stack = vec![1];
        while let Some(v) = stack.pop() {
            word.push(v);
            if let Some(cs) = children.get_mut(&v) {
                // push ascending so the largest child is popped first
                cs.sort_unstable();
                stack.extend(cs.iter().copied());
            }
        }
        if word.len() != edges.len() + 1 {
            return bad(format!("edges {edges:?} do not form a tree rooted at 1"));
        }
        let tree = IncTree::from_word(m, &word)?;
        debug_assert_eq!(tree.edges.len(), edges.len());
        Ok(tree)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// All increasing trees of `G_m` on `d` vertices rooted at 1, ordered
/// lexicographically by word.
pub fn enum_inc_trees(m: &HessFunc, d: usize) -> Result<Vec<IncTree>> {
    limits::check_n("n", m.n())?;
    if d == 0 || d > m.n() {
        return Ok(Vec::new());
    }
    fn rec(
        m: &HessFunc,
        d: usize,
        word: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if word.len() == d {
            out.push(word.clone());
            return;
        }
        let last = *word.last().expect("nonempty");
        for v in 1..=m.m(last) {
            if !used[v] {
                used[v] = true;
                word.push(v);
                rec(m, d, word, used, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; m.n() + 1];
    used[1] = true;
    let mut words = Vec::new();
    rec(m, d, &mut vec![1], &mut used, &mut words);
    words.iter().map(|w| IncTree::from_word(m, w)).collect()
}

/// The one-line word of the permutation in `(S_n)^{J_k}` whose restriction
/// to `[n-k]` is `tau`: the missing values follow in increasing order.
pub fn embed(tau: &[usize], n: usize) -> Vec<usize> {
    let mut out = tau.to_vec();
    let used: BTreeSet<usize> = tau.iter().copied().collect();
    out.extend((1..=n).filter(|v| !used.contains(v)));
    out
}

/// `m \ tau`: the Hessenberg function of `G_m` with the vertices of `tau`
/// removed, relabelled by the order of the remaining vertices.
pub fn hess_minus_tau(m: &HessFunc, tau: &[usize]) -> HessFunc {
    let used: BTreeSet<usize> = tau.iter().copied().collect();
    let rest: Vec<usize> = (1..=m.n()).filter(|v| !used.contains(v)).collect();
    let values = rest
        .iter()
        .map(|&j| rest.iter().take_while(|&&x| x <= m.m(j)).count())
        .collect();
    HessFunc::new(values).expect("vertex deletion preserves the Hessenberg property")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[usize]) -> HessFunc {
        HessFunc::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        let m = hf(&[2, 4, 4, 5, 6, 6]);
        let one = enum_inc_trees(&m, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].edges().is_empty());
        for n in 1..=6 {
            for d in 1..=n {
                let trees = enum_inc_trees(&HessFunc::path(n), d).unwrap();
                assert_eq!(trees.len(), 1);
                assert_eq!(trees[0].word(), (1..=d).collect::<Vec<_>>());
                let path: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
                assert_eq!(trees[0].edges(), path);
            }
        }
    }

    #[test]
    fn round_trip() {
        for n in 1..=6 {
            for m in HessFunc::all(n) {
                for d in 1..=n {
                    for t in enum_inc_trees(&m, d).unwrap() {
                        let back = IncTree::from_edges(&m, t.edges()).unwrap();
                        assert_eq!(back, t, "m = {m}");
                        for &(p, c) in t.edges() {
                            assert!(p < c && m.is_edge(p, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tree_count_matches_brute_force_forest_count() {
        // Count increasing trees directly: each vertex other than 1 chooses
        // a smaller neighbour inside the chosen vertex set, and the result
        // must be connected to 1.
        fn count_trees(m: &HessFunc, d: usize) -> usize {
            let n = m.n();
            let mut total = 0;
            for mask in 0u32..(1 << n) {
                if mask & 1 == 0 || mask.count_ones() as usize != d {
                    continue;
                }
                let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let mut ways = 1;
                for &v in &vs[1..] {
                    ways *= vs.iter().filter(|&&u| u < v && m.is_edge(u, v)).count();
                }
                total += ways;
            }
            total
        }
        for n in 1..=6 {
            for m in HessFunc::all(n) {
                for d in 1..=n {
                    assert_eq!(
                        enum_inc_trees(&m, d).unwrap().len(),
                        count_trees(&m, d),
                        "m = {m}, d = {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn malformed_trees() {
        let m = hf(&[2, 4, 4, 5, 6, 6]);
        assert!(matches!(
            IncTree::from_edges(&m, &[(1, 3)]),
            Err(Error::MalformedTree(_))
        ));
        assert!(IncTree::from_edges(&m, &[(2, 3)]).is_err());
        assert!(IncTree::from_edges(&m, &[(1, 2), (2, 4), (3, 4)]).is_err());
        assert!(IncTree::from_edges(&m, &[(1, 2), (2, 3), (2, 4)]).is_ok());
        assert!(IncTree::from_word(&m, &[2, 3]).is_err());
        assert!(IncTree::from_word(&m, &[1, 3]).is_err());
    }

    #[test]
    fn embedding() {
        assert_eq!(embed(&[1, 3], 5), vec![1, 3, 2, 4, 5]);
        assert_eq!(embed(&[1, 2, 3], 3), vec![1, 2, 3]);
    }

    #[test]
    fn deletion() {
        let m = hf(&[2, 4, 4, 5, 6, 6]);
        assert_eq!(hess_minus_tau(&m, &[1]), hf(&[3, 3, 4, 5, 5]));
        assert_eq!(hess_minus_tau(&m, &[1, 2, 3, 4, 5, 6]).n(), 0);
    }

    #[test]
    fn deletion_matches_induced_subgraph() {
        for n in 1..=6 {
            for m in HessFunc::all(n) {
                for d in 1..=n {
                    for t in enum_inc_trees(&m, d).unwrap() {
                        let del = hess_minus_tau(&m, t.word());
                        let rest: Vec<usize> = embed(t.word(), n)[d..].to_vec();
                        for a in 0..rest.len() {
                            for b in a + 1..rest.len() {
                                assert_eq!(del.is_edge(a + 1, b + 1), m.is_edge(rest[a], rest[b]));
                            }
                        }
                    }
                }
            }
        }
    }
}
