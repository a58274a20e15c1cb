use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::Basis;
use crate::algebra::{Partition, QPoly};
use crate::error::{Error, Result};

/// An integral expansion `sum_lambda c_lambda(q) b_lambda` in one basis.
///
/// Terms iterate in increasing lexicographic order of the index partition,
/// the order used by the text, LaTeX and JSON renderings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expansion {
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

/// Outcome of a coefficientwise positivity test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositivityReport {
    pub positive: bool,
    /// Every index whose coefficient has a negative q-coefficient.
    pub offenders: Vec<(Partition, QPoly)>,
}

impl Expansion {
    pub fn from_terms(basis: Basis, mut terms: BTreeMap<Partition, QPoly>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Expansion { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients evaluated at `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.eval(&BigInt::one())))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    pub fn positivity(&self) -> PositivityReport {
        let offenders: Vec<_> = self
            .terms
            .iter()
            .filter(|(_, c)| !c.is_nonnegative())
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        PositivityReport {
            positive: offenders.is_empty(),
            offenders,
        }
    }

    fn index(lambda: &Partition) -> String {
        let parts: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
        if parts.len() == 1 {
            parts[0].clone()
        } else {
            format!("{{{}}}", parts.join(","))
        }
    }

    /// Plain text, e.g. `(q^2 + q) e_2 + q e_{1,1}`.
    pub fn render_text(&self) -> String {
        self.render(
            |c| c.to_string(),
            |b, l| format!("{b}_{}", Self::index(l)),
            " ",
        )
    }

    /// LaTeX, e.g. `(q^{2}+q)e_{2} + qe_{1,1}`.
    pub fn render_latex(&self) -> String {
        self.render(
            latex_poly,
            |b, l| {
                let idx: Vec<String> = l.parts().iter().map(ToString::to_string).collect();
                format!("{b}_{{{}}}", idx.join(","))
            },
            "",
        )
    }

    fn render(
        &self,
        poly: impl Fn(&QPoly) -> String,
        elem: impl Fn(Basis, &Partition) -> String,
        sep: &str,
    ) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if lam.is_empty() {
                // the constant term carries no basis element
                out.push_str(&poly(c));
                continue;
            }
            let nonzero = c.coeffs().iter().filter(|x| !x.is_zero()).count();
            let e = elem(self.basis, lam);
            if c.is_one() {
                out.push_str(&e);
            } else if c == &-QPoly::one() {
                out.push('-');
                out.push_str(&e);
            } else if nonzero == 1 {
                out.push_str(&format!("{}{sep}{e}", poly(c)));
            } else {
                out.push_str(&format!("({}){sep}{e}", poly(c)));
            }
        }
        out
    }

    /// Canonical JSON: `{"basis": "e", "terms": [{"partition": [3,2],
    /// "coeff": [0,1,3,1]}]}` with `coeff[i]` the coefficient of `q^i`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let coeff: Vec<Value> = c.coeffs().iter().map(bigint_to_json).collect();
                json!({ "partition": l.parts(), "coeff": coeff })
            })
            .collect();
        json!({ "basis": self.basis.letter().to_string(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("symmetric function JSON: {why}"));
        let basis: Basis = v
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing basis"))?
            .parse()?;
        let mut terms = BTreeMap::new();
        for t in v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?
        {
            let lam: Partition = serde_json::from_value(
                t.get("partition")
                    .cloned()
                    .ok_or_else(|| bad("missing partition"))?,
            )
            .map_err(|e| bad(&e.to_string()))?;
            let coeff = t
                .get("coeff")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing coeff"))?
                .iter()
                .map(|c| match c {
                    Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad("coeff")),
                    _ => Err(bad("coefficient is not an integer")),
                })
                .collect::<Result<Vec<_>>>()?;
            if terms.insert(lam, QPoly::from_coeffs(coeff)).is_some() {
                return Err(bad("duplicate partition"));
            }
        }
        Ok(Expansion::from_terms(basis, terms))
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

fn bigint_to_json(c: &BigInt) -> Value {
    Value::Number(
        c.to_string()
            .parse()
            .expect("integer literal is valid JSON"),
    )
}

fn latex_poly(c: &QPoly) -> String {
    let s = c.to_string().replace(' ', "");
    // q^12 -> q^{12}
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}
