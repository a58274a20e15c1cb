use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::HessFunc;

use super::{delta_with_shift, enum_s1, CycWordPair};

/// The twelve rows of Delta for m = (3,5,5,5,6,6), k = 3, in their
/// customary printed order (not the order [`DeltaTable::build`] emits).
pub const REFERENCE_ROWS: &str = include_str!("../../data/delta_m355566_k3.txt");

/// One row: `w`, `Delta(w)`, the shift `j`, and the inequalities that
/// failed for the smaller shifts.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeltaRow {
    pub w: Vec<usize>,
    pub delta: Option<CycWordPair>,
    pub j: usize,
    pub annotation: Option<String>,
    /// Set when `Delta(w)` falls outside `S_2`.
    pub violation: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeltaTable {
    pub m: Vec<usize>,
    pub k: usize,
    pub rows: Vec<DeltaRow>,
}

fn seq(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}

/// Text form of a row: `w  Delta(w)  [annotation]`.
pub fn render_row(row: &DeltaRow) -> String {
    let mut out = seq(&row.w);
    match &row.delta {
        Some(p) => out.push_str(&format!("  ({}, {})", seq(&p.w), seq(&p.z))),
        None => out.push_str("  undefined"),
    }
    if let Some(a) = &row.annotation {
        out.push_str("  ");
        out.push_str(a);
    }
    if let Some(v) = &row.violation {
        out.push_str(&format!("  NOT IN S_2: {v}"));
    }
    out
}

/// Reads the leading `(a, b, ...)` of a rendered row.
pub fn parse_table_row(line: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("bad table row {line:?}"));
    let body = line.trim_start().strip_prefix('(').ok_or_else(bad)?;
    let end = body.find(')').ok_or_else(bad)?;
    body[..end]
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

impl DeltaTable {
    /// Compare against reference rows given in any order. Each reference
    /// line must equal the rendering of the row with the same `w`, and
    /// the row sets must coincide.
    pub fn compare_rows(&self, reference: &str) -> std::result::Result<(), String> {
        let lines: Vec<&str> = reference.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != self.rows.len() {
            return Err(format!(
                "{} reference rows, {} computed",
                lines.len(),
                self.rows.len()
            ));
        }
        for line in lines {
            let w = parse_table_row(line).map_err(|e| e.to_string())?;
            let row = self
                .row(&w)
                .ok_or_else(|| format!("no computed row for {}", seq(&w)))?;
            let got = render_row(row);
            if got != line {
                return Err(format!(
                    "row {}: expected {line:?}, computed {got:?}",
                    seq(&w)
                ));
            }
        }
        Ok(())
    }

    /// Applies `Delta` to every word of `S_1` (lexicographic order). Rows
    /// whose image leaves `S_2` are kept and flagged.
    pub fn build(m: &HessFunc, k: usize) -> Result<Self> {
        let n = m.n();
        let mut rows = Vec::new();
        for w in enum_s1(m)? {
            let row = match delta_with_shift(m, k, &w) {
                Ok((pair, j)) => {
                    let notes: Vec<String> = (0..j)
                        .map(|s| format!("{} > m({})", w[n - s - k], w[n - s - 1]))
                        .collect();
                    DeltaRow {
                        w,
                        delta: Some(pair),
                        j,
                        annotation: (!notes.is_empty()).then(|| notes.join(", ")),
                        violation: None,
                    }
                }
                Err(Error::DeltaNotWellDefined { reason, .. }) => DeltaRow {
                    w,
                    delta: None,
                    j: 0,
                    annotation: None,
                    violation: Some(reason),
                },
                Err(e) => return Err(e),
            };
            rows.push(row);
        }
        Ok(DeltaTable {
            m: m.values().to_vec(),
            k,
            rows,
        })
    }

    /// The first row whose image is not in `S_2`, as an error.
    pub fn first_violation(&self) -> Option<Error> {
        self.rows.iter().find_map(|r| {
            r.violation.as_ref().map(|v| Error::DeltaNotWellDefined {
                word: r.w.clone(),
                reason: v.clone(),
            })
        })
    }

    pub fn row(&self, w: &[usize]) -> Option<&DeltaRow> {
        self.rows.iter().find(|r| r.w == w)
    }

    pub fn render_text(&self) -> String {
        let m: Vec<String> = self.m.iter().map(ToString::to_string).collect();
        let mut out = format!("Delta for m = ({}), k = {}\n", m.join(","), self.k);
        for r in &self.rows {
            out.push_str(&render_row(r));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serializes")
    }
}
