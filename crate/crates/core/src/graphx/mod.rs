//! `g_k` for an arbitrary graph with a distinguished vertex, through
//! signed sums over edge subsets (no `q`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::HessFunc;
use crate::limits;
use crate::symring::{Basis, Expansion, SymFunc};

/// Largest edge count accepted by the subset sums.
pub const MAX_EDGES: usize = 20;

/// A simple graph on `[n]` with a root. Parallel edges are merged on
/// construction; loops are rejected.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    root: usize,
}

impl RootedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a rooted graph needs at least one vertex".into(),
            ));
        }
        if root == 0 || root > n {
            return Err(Error::InvalidGraph(format!(
                "root {root} is not a vertex of [{n}]"
            )));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} leaves [{n}]")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(RootedGraph {
            n,
            edges: set,
            root,
        })
    }

    /// `G_m` rooted at 1.
    pub fn from_hess(m: &HessFunc) -> Result<Self> {
        RootedGraph::new(m.n(), &m.edges(), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        RootedGraph::new(self.n, &self.edges(), root)
    }

    pub fn is_connected(&self) -> bool {
        let mask = (1u64 << self.edges.len()) - 1;
        self.split_mask(mask).1.is_empty()
    }

    /// `G \ e`.
    pub fn delete(&self, e: (usize, usize)) -> Result<Self> {
        let e = (e.0.min(e.1), e.0.max(e.1));
        if !self.edges.contains(&e) {
            return Err(Error::InvalidGraph(format!(
                "{}-{} is not an edge",
                e.0, e.1
            )));
        }
        let rest: Vec<_> = self.edges.iter().copied().filter(|&f| f != e).collect();
        RootedGraph::new(self.n, &rest, self.root)
    }

    /// `G / e` for an edge at the root: the other endpoint is merged into
    /// the root, vertices above it shift down by one, parallel edges merge.
    pub fn contract(&self, e: (usize, usize)) -> Result<Self> {
        let other = self.other_endpoint(e)?;
        let relabel = |x: usize| {
            let x = if x == other { self.root } else { x };
            if x > other {
                x - 1
            } else {
                x
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b)
            .collect();
        RootedGraph::new(self.n - 1, &edges, relabel(self.root))
    }

    fn other_endpoint(&self, e: (usize, usize)) -> Result<usize> {
        let (u, v) = e;
        let not_incident = Error::EdgeNotIncident {
            u,
            v,
            root: self.root,
        };
        if !self.has_edge(u, v) {
            return Err(not_incident);
        }
        if u == self.root {
            Ok(v)
        } else if v == self.root {
            Ok(u)
        } else {
            Err(not_incident)
        }
    }

    /// Component sizes of the spanning subgraph with edges picked by
    /// `mask` (bit `i` = i-th edge in sorted order): the root's component
    /// size and the partition of the others.
    fn split_mask(&self, mask: u64) -> (usize, Partition) {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 1..=self.n {
            *sizes.entry(find(&mut parent, v)).or_insert(0) += 1;
        }
        let root_rep = find(&mut parent, self.root);
        let lambda0 = sizes.remove(&root_rep).expect("root has a component");
        (
            lambda0,
            Partition::from_parts(sizes.into_values().collect()),
        )
    }

    /// `(lambda_0(S), lambda(S))` for the spanning subgraph `([n], S)`.
    pub fn lambda_split(&self, subset: &[(usize, usize)]) -> Result<(usize, Partition)> {
        let mut mask = 0u64;
        for &(a, b) in subset {
            let key = (a.min(b), a.max(b));
            let pos = self
                .edges
                .iter()
                .position(|&e| e == key)
                .ok_or_else(|| Error::InvalidGraph(format!("{a}-{b} is not an edge")))?;
            mask |= 1 << pos;
        }
        Ok(self.split_mask(mask))
    }

    /// `sum_{S} (-1)^{|S|}` grouped by `(lambda_0(S), lambda(S))`.
    fn subset_classes(&self) -> Result<BTreeMap<(usize, Partition), i64>> {
        limits::check_n("n", self.n)?;
        if self.edges.len() > MAX_EDGES {
            return Err(Error::ResourceGuard {
                what: "edges",
                value: self.edges.len(),
                max: MAX_EDGES,
            });
        }
        type Classes = BTreeMap<(usize, Partition), i64>;
        let mut out = (0u64..(1 << self.edges.len()))
            .into_par_iter()
            .fold(Classes::new, |mut acc, mask| {
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                *acc.entry(self.split_mask(mask)).or_insert(0) += sign;
                acc
            })
            .reduce(Classes::new, |mut a, b| {
                for (key, c) in b {
                    *a.entry(key).or_insert(0) += c;
                }
                a
            });
        out.retain(|_, c| *c != 0);
        Ok(out)
    }
}

impl fmt::Display for RootedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}; {}; root={}", self.n, es.join(","), self.root)
    }
}

impl FromStr for RootedGraph {
    type Err = Error;
    /// `n; u-v,u-v,...; root=v0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("graph {s:?}: {why}"));
        let fields: Vec<&str> = s.split(';').map(str::trim).collect();
        let [n, edges, root] = fields[..] else {
            return Err(bad("expected three ';'-separated fields"));
        };
        let n: usize = n.parse().map_err(|_| bad("bad vertex count"))?;
        let root: usize = root
            .strip_prefix("root=")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| bad("expected root=v0"))?;
        let mut list = Vec::new();
        for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| bad("edges look like u-v"))?;
            let a = a.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
            let b = b.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
            list.push((a, b));
        }
        RootedGraph::new(n, &list, root)
    }
}

fn signed(c: i64, f: SymFunc) -> SymFunc {
    f.scale_int(c)
}

/// `g_0, ..., g_{n-1}` of `(G, v_0)`:
/// `g_k = sum_S (-1)^{|S|-n+k+1} h_{lambda_0(S)-n+k} p_{lambda(S)}`.
pub fn g_general_all(g: &RootedGraph) -> Result<Vec<SymFunc>> {
    let n = g.n as i64;
    let classes = g.subset_classes()?;
    Ok((0..g.n as i64)
        .map(|k| {
            let sign = if (k + 1 - n).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            classes
                .iter()
                .map(|((l0, lam), &c)| {
                    signed(
                        sign * c,
                        &SymFunc::h_signed(*l0 as i64 - n + k) * &SymFunc::p(lam),
                    )
                })
                .sum()
        })
        .collect())
}

pub fn g_general(g: &RootedGraph, k: usize) -> Result<SymFunc> {
    if k >= g.n {
        return Err(Error::KOutOfRange { k, n: g.n });
    }
    Ok(g_general_all(g)?.swap_remove(k))
}

/// The `k = n` instance of the defining sum:
/// `sum_S (-1)^{|S|+1} h_{lambda_0(S)} p_{lambda(S)}`.
pub fn g_pseudo_n(g: &RootedGraph) -> Result<SymFunc> {
    Ok(g.subset_classes()?
        .iter()
        .map(|((l0, lam), &c)| signed(-c, &SymFunc::h(*l0) * &SymFunc::p(lam)))
        .sum())
}

/// Checks `g_pseudo_n + sum_{k<n} e_{n-k} g_k = 0`.
pub fn gn_pseudo_check(g: &RootedGraph) -> Result<bool> {
    let gs = g_general_all(g)?;
    let n = g.n;
    let total: SymFunc = gs
        .iter()
        .enumerate()
        .map(|(k, gk)| &SymFunc::e(n - k) * gk)
        .sum();
    Ok((&total + &g_pseudo_n(g)?).is_zero())
}

/// `sum_{k<n} (n-k) e_{n-k} g_k`, which recovers `csf(G)`.
pub fn csf_general_from_g(g: &RootedGraph) -> Result<SymFunc> {
    let n = g.n;
    Ok(g_general_all(g)?
        .iter()
        .enumerate()
        .map(|(k, gk)| (&SymFunc::e(n - k) * gk).scale_int((n - k) as i64))
        .sum())
}

/// Stanley's `csf(G) = sum_S (-1)^{|S|} p_{components of ([n], S)}`.
pub fn csf_stanley(g: &RootedGraph) -> Result<SymFunc> {
    Ok(g.subset_classes()?
        .iter()
        .map(|((l0, lam), &c)| signed(c, SymFunc::p(&lam.union(&Partition::single(*l0)))))
        .sum())
}

/// `csf(G)` from proper colorings: the `m_lambda` coefficient counts
/// colorings with `lambda_i` vertices of color `i`.
pub fn csf_coloring_general(g: &RootedGraph) -> Result<SymFunc> {
    limits::check_n("n", g.n)?;
    let mut terms = BTreeMap::new();
    for lam in partitions_of(g.n)? {
        let mut remaining = lam.parts().to_vec();
        let mut colors = vec![usize::MAX; g.n + 1];
        let c = count_colorings(g, 1, &mut remaining, &mut colors);
        terms.insert(lam, crate::algebra::QPoly::from_i64s(&[c]));
    }
    SymFunc::from_expansion(&Expansion::from_terms(Basis::M, terms))
}

fn count_colorings(
    g: &RootedGraph,
    v: usize,
    remaining: &mut [usize],
    colors: &mut [usize],
) -> i64 {
    if v > g.n {
        return 1;
    }
    let mut total = 0;
    for c in 0..remaining.len() {
        if remaining[c] == 0 || (1..v).any(|u| colors[u] == c && g.has_edge(u, v)) {
            continue;
        }
        remaining[c] -= 1;
        colors[v] = c;
        total += count_colorings(g, v + 1, remaining, colors);
        colors[v] = usize::MAX;
        remaining[c] += 1;
    }
    total
}

/// Checks deletion-contraction at an edge `e` through the root:
/// `g_k(G) = g_k(G \ e) + g_k(G / e)` for `k < n - 1`, and
/// `g_{n-1}(G) = g_{n-1}(G \ e) - sum_{k<n-1} e_{n-1-k} g_k(G / e)`.
pub fn deletion_contraction_check(g: &RootedGraph, e: (usize, usize)) -> Result<bool> {
    g.other_endpoint(e)?;
    let n = g.n;
    let whole = g_general_all(g)?;
    let del = g_general_all(&g.delete(e)?)?;
    let con = g_general_all(&g.contract(e)?)?;
    for k in 0..n - 1 {
        if whole[k] != &del[k] + &con[k] {
            return Ok(false);
        }
    }
    let tail: SymFunc = con
        .iter()
        .enumerate()
        .map(|(k, gk)| &SymFunc::e(n - 1 - k) * gk)
        .sum();
    Ok(whole[n - 1] == &del[n - 1] - &tail)
}

/// Every connected graph on `[n]` (labelled), rooted at 1.
pub fn connected_graphs(n: usize) -> Result<Vec<RootedGraph>> {
    limits::check_n("n", n)?;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| ((a + 1)..=n).map(move |b| (a, b)))
        .collect();
    if pairs.len() > MAX_EDGES {
        return Err(Error::ResourceGuard {
            what: "edges",
            value: pairs.len(),
            max: MAX_EDGES,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let es: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = RootedGraph::new(n, &es, 1)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}
