use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use proptest::prelude::*;

use hessloc::algebra::{partitions_of, qpoly_shift, Partition, QPoly, QShift};
use hessloc::symring::{Basis, Expansion, SymFunc};

/// A polynomial in a fixed number of commuting variables, keyed by
/// exponent vector.
#[derive(Clone, Debug, PartialEq)]
struct Poly {
    vars: usize,
    terms: HashMap<Vec<usize>, i64>,
}

impl Poly {
    fn constant(vars: usize, c: i64) -> Self {
        let mut terms = HashMap::new();
        if c != 0 {
            terms.insert(vec![0; vars], c);
        }
        Poly { vars, terms }
    }

    fn add_monomial(&mut self, exp: Vec<usize>, c: i64) {
        let slot = self.terms.entry(exp.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::constant(self.vars, 0);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exp = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_monomial(exp, ca * cb);
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &Poly, c: i64) {
        for (e, v) in &other.terms {
            self.add_monomial(e.clone(), v * c);
        }
    }

    fn coeff(&self, exp: &[usize]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }
}

fn padded(lam: &Partition, vars: usize) -> Vec<usize> {
    let mut v = lam.parts().to_vec();
    v.resize(vars, 0);
    v
}

// every weakly increasing index sequence of length k from [vars]
fn multisets(vars: usize, k: usize, strict: bool) -> Vec<Vec<usize>> {
    fn rec(
        vars: usize,
        k: usize,
        start: usize,
        strict: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..vars {
            cur.push(i);
            rec(vars, k, if strict { i + 1 } else { i }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, k, 0, strict, &mut Vec::new(), &mut out);
    out
}

fn from_index_lists(vars: usize, lists: Vec<Vec<usize>>) -> Poly {
    let mut p = Poly::constant(vars, 0);
    for l in lists {
        let mut exp = vec![0; vars];
        for i in l {
            exp[i] += 1;
        }
        p.add_monomial(exp, 1);
    }
    p
}

fn poly_e(vars: usize, k: usize) -> Poly {
    from_index_lists(vars, multisets(vars, k, true))
}

fn poly_h(vars: usize, k: usize) -> Poly {
    from_index_lists(vars, multisets(vars, k, false))
}

fn poly_p(vars: usize, k: usize) -> Poly {
    from_index_lists(vars, (0..vars).map(|i| vec![i; k]).collect())
}

fn poly_m(vars: usize, lam: &Partition) -> Poly {
    let mut p = Poly::constant(vars, 0);
    if lam.len() > vars {
        return p;
    }
    let mut exp = padded(lam, vars);
    exp.sort_unstable();
    // distinct permutations of the exponent vector
    loop {
        p.add_monomial(exp.clone(), 1);
        let Some(i) = (1..vars).rev().find(|&i| exp[i - 1] < exp[i]) else {
            break;
        };
        let j = (i..vars).rev().find(|&j| exp[j] > exp[i - 1]).unwrap();
        exp.swap(i - 1, j);
        exp[i..].reverse();
    }
    p
}

// semistandard tableaux of shape lam with entries in [vars]
fn poly_s(vars: usize, lam: &Partition) -> Poly {
    let shape = lam.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut p = Poly::constant(vars, 0);
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        vars: usize,
        filling: &mut HashMap<(usize, usize), usize>,
        p: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut exp = vec![0; vars];
            for v in filling.values() {
                exp[*v] += 1;
            }
            p.add_monomial(exp, 1);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars {
            filling.insert((r, c), v);
            rec(idx + 1, cells, vars, filling, p);
        }
        filling.remove(&(r, c));
    }
    rec(0, &cells, vars, &mut filling, &mut p);
    p
}

fn poly_basis(basis: Basis, lam: &Partition, vars: usize) -> Poly {
    let product = |f: fn(usize, usize) -> Poly| {
        lam.parts()
            .iter()
            .fold(Poly::constant(vars, 1), |acc, &k| acc.mul(&f(vars, k)))
    };
    match basis {
        Basis::M => poly_m(vars, lam),
        Basis::E => product(poly_e),
        Basis::H => product(poly_h),
        Basis::P => product(poly_p),
        Basis::S => poly_s(vars, lam),
    }
}

fn m_view_constant(f: &SymFunc) -> BTreeMap<Partition, i64> {
    f.to_basis(Basis::M)
        .unwrap()
        .terms()
        .iter()
        .map(|(l, c)| {
            assert!(c.degree().unwrap_or(0) == 0, "expected a q-free value");
            (l.clone(), i64::try_from(c.coeff(0)).unwrap())
        })
        .collect()
}

fn poly_m_view(p: &Poly, d: usize) -> BTreeMap<Partition, i64> {
    partitions_of(d)
        .unwrap()
        .into_iter()
        .filter(|l| l.len() <= p.vars)
        .map(|l| {
            let c = p.coeff(&padded(&l, p.vars));
            (l, c)
        })
        .filter(|(_, c)| *c != 0)
        .collect()
}

#[test]
fn basis_elements_match_polynomial_expansion() {
    for d in 0..=6 {
        for lam in partitions_of(d).unwrap() {
            for basis in Basis::ALL {
                let sf = SymFunc::basis_element(basis, &lam).unwrap();
                let poly = poly_basis(basis, &lam, d);
                assert_eq!(m_view_constant(&sf), poly_m_view(&poly, d), "{basis}_{lam}");
            }
        }
    }
}

#[test]
fn worked_examples() {
    let two_vars = poly_basis(Basis::E, &Partition::new(vec![1, 1]).unwrap(), 2);
    assert_eq!(two_vars.coeff(&[2, 0]), 1);
    assert_eq!(two_vars.coeff(&[1, 1]), 2);
    let e1e2 = &SymFunc::e(1) * &SymFunc::e(2);
    let ones = Partition::new(vec![1, 1, 1]).unwrap();
    assert_eq!(
        e1e2.to_basis(Basis::M).unwrap().coeff(&ones),
        QPoly::from_i64s(&[3])
    );
    assert_eq!(
        poly_basis(Basis::S, &Partition::new(vec![2, 1]).unwrap(), 3).coeff(&[1, 1, 1]),
        2
    );
}

fn arb_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| QPoly::from_i64s(&c))
}

/// Random integer combination in `basis` of degree-`d` elements.
fn arb_symfunc(basis: Basis, max_degree: usize) -> impl Strategy<Value = SymFunc> {
    (0..=max_degree)
        .prop_flat_map(move |d| {
            let count = partitions_of(d).unwrap().len();
            prop::collection::vec((0..count, arb_qpoly()), 0..5).prop_map(move |terms| (d, terms))
        })
        .prop_map(move |(d, terms)| {
            let parts = partitions_of(d).unwrap();
            terms
                .into_iter()
                .map(|(i, c)| SymFunc::basis_element(basis, &parts[i]).unwrap().scale(&c))
                .sum()
        })
}

fn any_integral_basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(vec![Basis::M, Basis::E, Basis::H, Basis::S])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // Integer combinations of p_lambda are integral in all five bases.
    #[test]
    fn round_trip_all_bases(f in arb_symfunc(Basis::P, 6)) {
        for basis in Basis::ALL {
            let ex = f.to_basis(basis).unwrap();
            prop_assert_eq!(&SymFunc::from_expansion(&ex).unwrap(), &f, "{}", basis);
        }
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn round_trip_integral_bases(src in any_integral_basis(), f in arb_symfunc(Basis::S, 6)) {
        let g = SymFunc::from_expansion(&f.to_basis(src).unwrap()).unwrap();
        for basis in [Basis::M, Basis::E, Basis::H, Basis::S] {
            let ex = g.to_basis(basis).unwrap();
            prop_assert_eq!(&SymFunc::from_expansion(&ex).unwrap(), &f);
        }
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn json_round_trip(basis in any_integral_basis(), f in arb_symfunc(Basis::H, 5)) {
        let ex = f.to_basis(basis).unwrap();
        let back = Expansion::from_json(&ex.to_json()).unwrap();
        prop_assert_eq!(back, ex);
    }

    #[test]
    fn qpoly_ring_laws(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn qpoly_shift_round_trip(p in prop::collection::vec(-50i64..=50, 0..8)) {
        let p = QPoly::from_i64s(&p);
        prop_assert_eq!(qpoly_shift(&qpoly_shift(&p, QShift::Down), QShift::Up), p.clone());
        prop_assert_eq!(qpoly_shift(&qpoly_shift(&p, QShift::Up), QShift::Down), p);
    }
}

fn arb_int_combo() -> impl Strategy<Value = (usize, Basis, Vec<(usize, i64)>)> {
    (
        1usize..=5,
        prop::sample::select(vec![Basis::E, Basis::H, Basis::P]),
    )
        .prop_flat_map(|(d, b)| {
            let count = partitions_of(d).unwrap().len();
            (
                Just(d),
                Just(b),
                prop::collection::vec((0..count, -3i64..=3), 1..4),
            )
        })
}

fn build(d: usize, basis: Basis, terms: &[(usize, i64)], vars: usize) -> (SymFunc, Poly) {
    let parts = partitions_of(d).unwrap();
    let mut sf = SymFunc::zero();
    let mut poly = Poly::constant(vars, 0);
    for &(i, c) in terms {
        sf += &SymFunc::basis_element(basis, &parts[i])
            .unwrap()
            .scale_int(c);
        poly.add_scaled(&poly_basis(basis, &parts[i], vars), c);
    }
    (sf, poly)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_matches_polynomial_product(a in arb_int_combo(), b in arb_int_combo()) {
        let vars = a.0 + b.0;
        let (f, fp) = build(a.0, a.1, &a.2, vars);
        let (g, gp) = build(b.0, b.1, &b.2, vars);
        // coefficient of x^mu in fp * gp, summed over splits mu = alpha + beta
        let mut expected = BTreeMap::new();
        for mu in partitions_of(vars).unwrap() {
            let target = padded(&mu, vars);
            let mut c = 0i64;
            for (alpha, ca) in &fp.terms {
                if alpha.iter().zip(&target).all(|(x, t)| x <= t) {
                    let beta: Vec<usize> = target.iter().zip(alpha).map(|(t, x)| t - x).collect();
                    c += ca * gp.coeff(&beta);
                }
            }
            if c != 0 {
                expected.insert(mu, c);
            }
        }
        prop_assert_eq!(m_view_constant(&(&f * &g)), expected);
    }
}

#[test]
fn q_polynomial_identities() {
    for n in 0..=20usize {
        assert_eq!(
            hessloc::algebra::qint(n).eval(&BigInt::from(1)),
            BigInt::from(n)
        );
    }
    let mut fact = BigInt::from(1);
    for n in 0..=10usize {
        if n > 0 {
            fact *= n;
        }
        assert_eq!(hessloc::algebra::qfact(n).eval(&BigInt::from(1)), fact);
    }
}
