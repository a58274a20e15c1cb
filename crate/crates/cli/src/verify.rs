//! Exhaustive identity suites behind `hessloc verify`.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use hessloc::algebra::{qfact, Partition};
use hessloc::gfuncs::{
    csf_from_g, g_def, g_path, g_path_monomial_check, g_recursion_check, g_series_mismatch, g_tree,
};
use hessloc::graphx::{
    connected_graphs, csf_coloring_general, csf_general_from_g, csf_stanley,
    deletion_contraction_check, gn_pseudo_check,
};
use hessloc::hessenberg::{csf_coloring, csf_rho, csf_stanley_p, omega_rho_check, rho, HessFunc};
use hessloc::positivity::{check_delta_injective, eab_coefficient, DeltaTable, REFERENCE_ROWS};
use hessloc::symring::{Basis, SymFunc};
use hessloc::toric::{
    barycentric_f_vector, f1_series, f2_series, frob_c_sigma1, h_vector, llt_path, FVector,
};
use hessloc::{limits, Error};

use crate::commands::json_line;
use crate::config::{Format, RunConfig};
use crate::{CliError, Output, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rho,
    Csf,
    G,
    Positivity,
    Graphs,
    Toric,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Rho => "rho",
            Suite::Csf => "csf",
            Suite::G => "g",
            Suite::Positivity => "positivity",
            Suite::Graphs => "graphs",
            Suite::Toric => "toric",
            Suite::All => "all",
        }
    }
}

#[derive(Serialize)]
struct Check {
    suite: &'static str,
    identity: String,
    range: String,
    cases: usize,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
}

/// Counts cases and keeps the first failure.
#[derive(Default)]
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

type Step = Result<Tally, Error>;

struct Report {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Report {
    fn run(
        &mut self,
        identity: &str,
        range: String,
        body: impl FnOnce() -> Step,
    ) -> Result<(), Error> {
        let t = body()?;
        self.checks.push(Check {
            suite: self.suite,
            identity: identity.into(),
            range,
            cases: t.cases,
            verdict: if t.failure.is_none() { "pass" } else { "fail" },
            failure: t.failure,
        });
        Ok(())
    }
}

fn hess_upto(n: usize) -> impl Iterator<Item = HessFunc> {
    (1..=n).flat_map(HessFunc::all)
}

pub fn run(config: &RunConfig, suite: Suite, max_n: usize) -> Result<Output, CliError> {
    if max_n > limits::max_n() {
        return Err(CliError {
            status: Status::Guard,
            message: format!("--max-n {max_n} exceeds the guard {}", limits::max_n()),
        });
    }
    let suites = match suite {
        Suite::All => vec![
            Suite::Rho,
            Suite::Csf,
            Suite::G,
            Suite::Positivity,
            Suite::Graphs,
            Suite::Toric,
        ],
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut r = Report {
            suite: s.name(),
            checks: Vec::new(),
        };
        match s {
            Suite::Rho => rho_suite(&mut r, max_n)?,
            Suite::Csf => csf_suite(&mut r, max_n)?,
            Suite::G => g_suite(&mut r, max_n)?,
            Suite::Positivity => positivity_suite(&mut r, max_n)?,
            Suite::Graphs => graphs_suite(&mut r, max_n)?,
            Suite::Toric => toric_suite(&mut r, max_n)?,
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(r.checks);
    }
    let failed = checks.iter().filter(|c| c.failure.is_some()).count();
    let stdout = match config.format {
        Format::Json => json_line(&json!({
            "suite": suite.name(),
            "max_n": max_n,
            "passed": failed == 0,
            "checks": checks,
        })),
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for c in &checks {
                let verdict = if c.failure.is_none() { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{verdict}  {:<10} {}  [{}; cases: {}]\n",
                    c.suite, c.identity, c.range, c.cases
                ));
                if let Some(f) = &c.failure {
                    out.push_str(&format!("      first failure: {f}\n"));
                }
            }
            out.push_str(&format!(
                "{} of {} checks passed\n",
                checks.len() - failed,
                checks.len()
            ));
            out
        }
    };
    Ok(Output {
        stdout,
        status: if failed == 0 {
            Status::Ok
        } else {
            Status::Failed
        },
    })
}

fn rho_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    let range = format!("1 <= n <= {max_n}");
    r.run(
        "omega(rho_n) = sum_i (-1)^(n-i) [i]_q e_i h_(n-i)",
        range.clone(),
        || {
            let mut t = Tally::default();
            for n in 1..=max_n {
                t.case(omega_rho_check(n), || format!("n = {n}"));
            }
            Ok(t)
        },
    )?;
    r.run("rho_n at q = 1 equals p_n", range, || {
        let mut t = Tally::default();
        for n in 1..=max_n {
            let p = SymFunc::p(&Partition::single(n));
            t.case(rho(n).eval_q(1) == p, || format!("n = {n}"));
        }
        Ok(t)
    })
}

fn csf_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    let range = format!("all m with n <= {max_n}");
    r.run("csf by colorings = csf from rho", range.clone(), || {
        let mut t = Tally::default();
        for m in hess_upto(max_n) {
            t.case(csf_coloring(&m)? == csf_rho(&m)?, || format!("m = {m}"));
        }
        Ok(t)
    })?;
    r.run("power-sum formula = csf at q = 1", range, || {
        let mut t = Tally::default();
        for m in hess_upto(max_n) {
            t.case(csf_stanley_p(&m)? == csf_rho(&m)?.eval_q(1), || {
                format!("m = {m}")
            });
        }
        Ok(t)
    })?;
    r.run(
        "csf(K_n) = [n]_q! e_n",
        format!("1 <= n <= {max_n}"),
        || {
            let mut t = Tally::default();
            for n in 1..=max_n {
                let want = SymFunc::e(n).scale(&qfact(n));
                t.case(csf_rho(&HessFunc::complete(n))? == want, || {
                    format!("n = {n}")
                });
            }
            Ok(t)
        },
    )
}

fn g_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    let range = format!("all m with n <= {max_n}, 0 <= k < n");
    r.run(
        "g_k by definition = g_k by increasing trees",
        range.clone(),
        || {
            let mut t = Tally::default();
            for m in hess_upto(max_n) {
                for k in 0..m.n() {
                    t.case(g_def(&m, k)? == g_tree(&m, k)?, || {
                        format!("m = {m}, k = {k}")
                    });
                }
            }
            Ok(t)
        },
    )?;
    r.run(
        "sum_k [n-k]_q e_(n-k) g_k = csf",
        format!("all m with n <= {max_n}"),
        || {
            let mut t = Tally::default();
            for m in hess_upto(max_n) {
                t.case(csf_from_g(&m)? == csf_rho(&m)?, || format!("m = {m}"));
            }
            Ok(t)
        },
    )?;
    r.run("g_k is Schur positive", range, || {
        let mut t = Tally::default();
        for m in hess_upto(max_n) {
            for k in 0..m.n() {
                let rep = g_def(&m, k)?.is_positive_in(Basis::S)?;
                t.case(rep.positive, || format!("m = {m}, k = {k}"));
            }
        }
        Ok(t)
    })?;
    let rec_n = max_n.saturating_sub(1);
    r.run(
        "g_n = q sum_i [i-1]_q e_i g_(n-i)",
        format!("all m with n <= {rec_n}"),
        || {
            let mut t = Tally::default();
            for m in hess_upto(rec_n) {
                t.case(g_recursion_check(&m)?, || format!("m = {m}"));
            }
            Ok(t)
        },
    )?;
    let ser_n = max_n.saturating_sub(2);
    r.run(
        "generating function closed form = g_extended up to z^(n+2)",
        format!("all m with n <= {ser_n}"),
        || {
            // size order, so the first failure is a minimal counterexample
            let mut t = Tally::default();
            for m in hess_upto(ser_n) {
                let miss = g_series_mismatch(&m, m.n() + 2)?;
                t.case(miss.is_none(), || {
                    format!(
                        "m = {m}, first differing power z^{}",
                        miss.unwrap_or_default()
                    )
                });
            }
            Ok(t)
        },
    )?;
    r.run(
        "g_k(path) = sum_(lambda |- k) c_lambda(q) m_lambda",
        format!("0 <= k <= {max_n}"),
        || {
            let mut t = Tally::default();
            for k in 0..=max_n {
                t.case(g_path_monomial_check(k)?, || format!("k = {k}"));
            }
            Ok(t)
        },
    )
}

fn positivity_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    r.run(
        "Delta well defined and injective, |S_2| - |S_1| = c_k(m; 1) >= 0",
        format!("all m with 2 <= n <= {max_n}, 1 <= k < n"),
        || {
            let mut t = Tally::default();
            for m in hess_upto(max_n) {
                for k in 1..m.n() {
                    match check_delta_injective(&m, k) {
                        Ok(rep) => {
                            let ok = rep.injective
                                && rep.counts_agree
                                && rep.ck_at_one >= BigInt::from(0);
                            t.case(ok, || format!("m = {m}, k = {k}"));
                        }
                        Err(e @ Error::DeltaNotWellDefined { .. }) => {
                            t.case(false, || format!("m = {m}, k = {k}: {e}"))
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(t)
        },
    )?;
    r.run(
        "e_(a,b) coefficient = [a]c_b + [b]c_a, nonnegative at q = 1",
        format!("all m with 2 <= n <= {max_n}, a + b = n"),
        || {
            let mut t = Tally::default();
            for m in hess_upto(max_n).filter(|m| m.n() >= 2) {
                let n = m.n();
                for b in 1..=n / 2 {
                    let (actual, predicted) = eab_coefficient(&m, n - b, b)?;
                    let ok =
                        actual == predicted && actual.eval(&BigInt::from(1)) >= BigInt::from(0);
                    t.case(ok, || format!("m = {m}, (a, b) = ({}, {b})", n - b));
                }
            }
            Ok(t)
        },
    )?;
    r.run(
        "Delta table for m = (3,5,5,5,6,6), k = 3 matches the reference rows",
        "fixed".into(),
        || {
            let table = DeltaTable::build(&HessFunc::new(vec![3, 5, 5, 5, 6, 6])?, 3)?;
            let mut t = Tally::default();
            let cmp = table.compare_rows(REFERENCE_ROWS);
            t.case(cmp.is_ok(), || cmp.unwrap_err());
            Ok(t)
        },
    )
}

fn graphs_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    let range = format!("connected graphs, n <= {max_n}, every root");
    let graphs: Vec<_> = (1..=max_n)
        .map(connected_graphs)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    r.run(
        "subset formula = coloring count",
        format!("connected graphs, n <= {max_n}"),
        || {
            let mut t = Tally::default();
            for g in &graphs {
                t.case(csf_stanley(g)? == csf_coloring_general(g)?, || {
                    g.to_string()
                });
            }
            Ok(t)
        },
    )?;
    let rooted: Vec<_> = graphs
        .iter()
        .flat_map(|g| (1..=g.n()).map(move |v| g.with_root(v)))
        .collect::<Result<Vec<_>, _>>()?;
    r.run("pseudo g_n identity", range.clone(), || {
        let mut t = Tally::default();
        for g in &rooted {
            t.case(gn_pseudo_check(g)?, || g.to_string());
        }
        Ok(t)
    })?;
    r.run("csf recovered from the g_k", range.clone(), || {
        let mut t = Tally::default();
        for g in &rooted {
            t.case(csf_general_from_g(g)? == csf_stanley(g)?, || g.to_string());
        }
        Ok(t)
    })?;
    r.run("deletion-contraction at every root edge", range, || {
        let mut t = Tally::default();
        for g in &rooted {
            let root = g.root();
            for e in g
                .edges()
                .into_iter()
                .filter(|&(a, b)| a == root || b == root)
            {
                t.case(deletion_contraction_check(g, e)?, || {
                    format!("{g} at {}-{}", e.0, e.1)
                });
            }
        }
        Ok(t)
    })
}

fn toric_suite(r: &mut Report, max_n: usize) -> Result<(), Error> {
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    r.run(
        "barycentric fan n = 3: f = (1,6,6), h = (1,4,1); h(1,3,3) = (1,1,1)",
        "fixed".into(),
        || {
            let mut t = Tally::default();
            let f3 = barycentric_f_vector(3)?;
            t.case(f3.counts() == ints(&[1, 6, 6]), || {
                format!("f = {:?}", f3.counts())
            });
            t.case(h_vector(&f3) == ints(&[1, 4, 1]), || {
                "h-vector of the barycentric fan".into()
            });
            let h = h_vector(&FVector::from_u64s(&[1, 3, 3])?);
            t.case(h == ints(&[1, 1, 1]), || format!("h = {h:?}"));
            Ok(t)
        },
    )?;
    let range = format!("1 <= n <= {max_n}");
    r.run(
        "f_d = q^(n-1-d) part of the m_(1^n) coefficient of ch C(Sigma_1)",
        range.clone(),
        || {
            let mut t = Tally::default();
            for n in 1..=max_n {
                let f = barycentric_f_vector(n)?;
                let ones = Partition::new(vec![1; n])?;
                let c = frob_c_sigma1(n)?.to_basis(Basis::M)?.coeff(&ones);
                let ok = f
                    .counts()
                    .iter()
                    .enumerate()
                    .all(|(d, fd)| &c.coeff(n - 1 - d) == fd);
                t.case(ok, || format!("n = {n}"));
            }
            Ok(t)
        },
    )?;
    r.run(
        "ch C(Sigma_1) = omega LLT(P_n; x, q+1)",
        range.clone(),
        || {
            let mut t = Tally::default();
            for n in 1..=max_n {
                t.case(frob_c_sigma1(n)? == llt_path(n, true)?.omega(), || {
                    format!("n = {n}")
                });
            }
            Ok(t)
        },
    )?;
    r.run(
        "omega(F_2 coefficient of z^k) = g_k(path)",
        format!("0 <= k <= {max_n}"),
        || {
            let mut t = Tally::default();
            let f2 = f2_series(max_n)?;
            for k in 0..=max_n {
                t.case(f2.coeff(k).omega() == g_path(k)?, || format!("k = {k}"));
            }
            Ok(t)
        },
    )?;
    r.run("omega(F_1 coefficient of z^n) = csf(P_n)", range, || {
        let mut t = Tally::default();
        let f1 = f1_series(max_n)?;
        for n in 1..=max_n {
            t.case(f1.coeff(n).omega() == csf_rho(&HessFunc::path(n))?, || {
                format!("n = {n}")
            });
        }
        Ok(t)
    })
}
