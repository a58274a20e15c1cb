use hessloc::gfuncs::{g_def, g_extended, g_tree};
use hessloc::hessenberg::{csf_coloring, csf_rho, HessFunc};
use hessloc::positivity::DeltaTable;
use hessloc::symring::{Basis, Expansion, SymFunc};
use hessloc::toric::{frob_c_sigma1, llt_path};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::{CliError, CsfMethod, GkMethod, Output, Status};

fn parse_hess(s: &str) -> Result<HessFunc, CliError> {
    s.parse().map_err(CliError::from)
}

fn parse_basis(s: &str) -> Result<Basis, CliError> {
    s.parse().map_err(CliError::from)
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn ok(stdout: String) -> Output {
    Output {
        stdout,
        status: Status::Ok,
    }
}

/// One expansion in the configured format; `meta` is merged into the JSON
/// object next to `"expansion"`.
fn render_expansion(config: &RunConfig, ex: &Expansion, meta: Value) -> String {
    match config.format {
        Format::Text => format!("{}\n", ex.render_text()),
        Format::Latex => format!("{}\n", ex.render_latex()),
        Format::Json => {
            let mut obj = meta;
            obj["expansion"] = ex.to_json();
            json_line(&obj)
        }
    }
}

pub fn csf(
    config: &RunConfig,
    hess: &str,
    basis: &str,
    method: CsfMethod,
) -> Result<Output, CliError> {
    let m = parse_hess(hess)?;
    let basis = parse_basis(basis)?;
    let (f, name) = match method {
        CsfMethod::Rho => (csf_rho(&m)?, "rho"),
        CsfMethod::Coloring => (csf_coloring(&m)?, "coloring"),
    };
    let meta = json!({ "command": "csf", "hess": m.values(), "method": name });
    Ok(ok(render_expansion(config, &f.to_basis(basis)?, meta)))
}

pub fn gk(
    config: &RunConfig,
    hess: &str,
    k: usize,
    method: GkMethod,
    basis: &str,
) -> Result<Output, CliError> {
    let m = parse_hess(hess)?;
    let basis = parse_basis(basis)?;
    let (g, name): (SymFunc, _) = match method {
        GkMethod::Def => (g_def(&m, k)?, "def"),
        GkMethod::Tree => (g_tree(&m, k)?, "tree"),
        GkMethod::Extended => (g_extended(&m, k)?, "extended"),
    };
    let meta = json!({ "command": "gk", "hess": m.values(), "k": k, "method": name });
    Ok(ok(render_expansion(config, &g.to_basis(basis)?, meta)))
}

fn latex_table(t: &DeltaTable) -> String {
    let seq = |v: &[usize]| {
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("({})", s.join(","))
    };
    let mut out = String::from("\\begin{tabular}{lll}\n$w$ & $\\Delta(w)$ & \\\\\n\\hline\n");
    for row in &t.rows {
        let delta = match &row.delta {
            Some(p) => format!("$({}, {})$", seq(&p.w), seq(&p.z)),
            None => "undefined".into(),
        };
        let note = row
            .annotation
            .as_deref()
            .map(|a| format!("${a}$"))
            .unwrap_or_default();
        out.push_str(&format!("${}$ & {delta} & {note} \\\\\n", seq(&row.w)));
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn delta_table(config: &RunConfig, hess: &str, k: usize) -> Result<Output, CliError> {
    let m = parse_hess(hess)?;
    if k == 0 || k >= m.n() {
        return Err(CliError::usage(format!(
            "delta-table needs 1 <= k < n = {}",
            m.n()
        )));
    }
    let table = DeltaTable::build(&m, k)?;
    let stdout = match config.format {
        Format::Text => table.render_text(),
        Format::Json => json_line(&table.to_json()),
        Format::Latex => latex_table(&table),
    };
    let status = match table.first_violation() {
        Some(e) => {
            eprintln!("error: {e}");
            Status::Failed
        }
        None => Status::Ok,
    };
    Ok(Output { stdout, status })
}

pub fn llt_face(config: &RunConfig, n: usize) -> Result<Output, CliError> {
    if n == 0 {
        return Err(CliError::usage("llt-face needs n >= 1"));
    }
    let lhs = frob_c_sigma1(n)?.to_basis(Basis::H)?;
    let rhs = llt_path(n, true)?.omega().to_basis(Basis::H)?;
    let agree = lhs == rhs;
    let stdout = match config.format {
        Format::Json => json_line(&json!({
            "command": "llt-face",
            "n": n,
            "frobenius": lhs.to_json(),
            "omega_llt": rhs.to_json(),
            "match": agree,
        })),
        Format::Text | Format::Latex => {
            let render = |e: &Expansion| match config.format {
                Format::Latex => e.render_latex(),
                _ => e.render_text(),
            };
            format!(
                "ch C(Sigma_1), n = {n}: {}\nomega LLT(P_{n}; x, q+1): {}\nverdict: {}\n",
                render(&lhs),
                render(&rhs),
                if agree { "match" } else { "MISMATCH" }
            )
        }
    };
    Ok(Output {
        stdout,
        status: if agree { Status::Ok } else { Status::Failed },
    })
}
