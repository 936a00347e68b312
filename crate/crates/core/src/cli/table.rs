//! Family tables as emitted by `compute` and `export`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::format;
use crate::bernoulli::{carlitz_beta, gen_beta, gen_beta_poly};
use crate::triangles::{eulerian_classical, Tables};
use crate::{Error, PolyLambda, PolyXOverLambda, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    Beta,
    GenBeta,
    GenBetaPoly,
    Stirling1,
    Stirling2,
    Stirling2Poly,
    RStirling2,
    Eulerian,
    EulerianDeg,
}

impl FamilyName {
    pub const ALL: [FamilyName; 9] = [
        FamilyName::Beta,
        FamilyName::GenBeta,
        FamilyName::GenBetaPoly,
        FamilyName::Stirling1,
        FamilyName::Stirling2,
        FamilyName::Stirling2Poly,
        FamilyName::RStirling2,
        FamilyName::Eulerian,
        FamilyName::EulerianDeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyName::Beta => "beta",
            FamilyName::GenBeta => "gen-beta",
            FamilyName::GenBetaPoly => "gen-beta-poly",
            FamilyName::Stirling1 => "stirling1",
            FamilyName::Stirling2 => "stirling2",
            FamilyName::Stirling2Poly => "stirling2-poly",
            FamilyName::RStirling2 => "r-stirling2",
            FamilyName::Eulerian => "eulerian",
            FamilyName::EulerianDeg => "eulerian-deg",
        }
    }

    pub fn is_triangle(self) -> bool {
        !matches!(self, FamilyName::Beta | FamilyName::GenBeta | FamilyName::GenBetaPoly)
    }

    pub fn is_x_polynomial(self) -> bool {
        matches!(self, FamilyName::GenBetaPoly | FamilyName::Stirling2Poly)
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family: {s}"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Lambda(PolyLambda),
    X(PolyXOverLambda),
}

impl Value {
    fn specialize(&self, at: &Rational) -> Value {
        let point = |c: &PolyLambda| PolyLambda::constant(c.eval(at));
        match self {
            Value::Lambda(p) => Value::Lambda(point(p)),
            Value::X(q) => Value::X(q.map_coeffs(point)),
        }
    }

    /// λ-polynomial shown in `lambda_coeffs`: the value itself, or its constant term in `x`.
    fn lambda_part(&self) -> PolyLambda {
        match self {
            Value::Lambda(p) => p.clone(),
            Value::X(q) => q.constant_term(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub n: usize,
    pub k: Option<usize>,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRequest {
    pub family: FamilyName,
    pub max_n: usize,
    pub p: Option<i64>,
    pub r: Option<usize>,
    pub lambda: Option<Rational>,
}

impl TableRequest {
    pub fn validate(&self) -> Result<()> {
        let needs_p = matches!(self.family, FamilyName::GenBeta | FamilyName::GenBetaPoly);
        match (needs_p, self.p) {
            (true, None) => return Err(param(format!("{} requires --p", self.family))),
            (true, Some(p)) if p < -1 => return Err(param(format!("p must be at least -1, got {p}"))),
            (false, Some(_)) => return Err(param(format!("{} does not take --p", self.family))),
            _ => {}
        }
        match (self.family == FamilyName::RStirling2, self.r) {
            (true, None) => Err(param("r-stirling2 requires --r".into())),
            (true, Some(0)) => Err(param("r must be at least 1".into())),
            (false, Some(_)) => Err(param(format!("{} does not take --r", self.family))),
            _ => Ok(()),
        }
    }

    pub fn rows(&self) -> Result<Vec<Row>> {
        self.validate()?;
        let tables = Tables::new(self.max_n);
        let mut rows = Vec::new();
        for n in 0..=self.max_n {
            if !self.family.is_triangle() {
                let value = match self.family {
                    FamilyName::Beta => Value::Lambda(carlitz_beta(&tables, n)?),
                    FamilyName::GenBeta => Value::Lambda(gen_beta(&tables, n, self.p.unwrap_or(0))?),
                    _ => Value::X(gen_beta_poly(&tables, n, self.p.unwrap_or(0))?),
                };
                rows.push(Row { n, k: None, value });
                continue;
            }
            for k in 0..=n {
                let value = match self.family {
                    FamilyName::Stirling1 => Value::Lambda(tables.stirling1(n, k)?),
                    FamilyName::Stirling2 => Value::Lambda(tables.stirling2(n, k)?),
                    FamilyName::Stirling2Poly => Value::X(tables.stirling2_poly(n, k)?),
                    FamilyName::RStirling2 => Value::Lambda(tables.r_stirling2(n, k, self.r.unwrap_or(1))?),
                    FamilyName::Eulerian => {
                        Value::Lambda(PolyLambda::constant(Rational::from_integer(eulerian_classical(n, k)?)))
                    }
                    _ => Value::Lambda(tables.eulerian_degenerate(n, k)?),
                };
                rows.push(Row { n, k: Some(k), value });
            }
        }
        if let Some(at) = &self.lambda {
            for row in &mut rows {
                row.value = row.value.specialize(at);
            }
        }
        Ok(rows)
    }

    pub fn export(&self) -> Result<Export> {
        let mut parameters = BTreeMap::new();
        if let Some(p) = self.p {
            parameters.insert("p".to_string(), p.to_string());
        }
        if let Some(r) = self.r {
            parameters.insert("r".to_string(), r.to_string());
        }
        let lambda = self.lambda.as_ref().map_or("symbolic".to_string(), format::rational);
        parameters.insert("lambda".to_string(), lambda);
        let entries = self.rows()?.iter().map(Entry::from_row).collect();
        Ok(Export { family: self.family, max_n: self.max_n, parameters, entries })
    }
}

fn param(msg: String) -> Error {
    Error::ParameterOutOfRange(msg)
}

/// Serialized table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Export {
    pub family: FamilyName,
    pub max_n: usize,
    pub parameters: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Ascending in `x`; each element is an ascending λ-coefficient list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_coeffs: Option<Vec<Vec<String>>>,
    pub lambda_coeffs: Vec<String>,
}

impl Entry {
    fn from_row(row: &Row) -> Entry {
        let x_coeffs = match &row.value {
            Value::X(q) => Some(q.coeffs().iter().map(format::lambda_coeffs).collect()),
            Value::Lambda(_) => None,
        };
        Entry { n: row.n, k: row.k, x_coeffs, lambda_coeffs: format::lambda_coeffs(&row.value.lambda_part()) }
    }
}

impl Export {
    /// Pretty JSON with a trailing newline; identical input gives identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("export is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Export> {
        serde_json::from_str(s).map_err(|e| Error::ParameterOutOfRange(format!("invalid export: {e}")))
    }
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::new();
    for row in rows {
        let value = match &row.value {
            Value::Lambda(p) => format::csv_lambda(p),
            Value::X(q) => format::csv_x(q),
        };
        match row.k {
            Some(k) => out.push_str(&format!("{}, {}, {}\n", row.n, k, value)),
            None => out.push_str(&format!("{}, {}\n", row.n, value)),
        }
    }
    out
}

pub fn render_pretty(rows: &[Row]) -> String {
    let mut out = String::new();
    for row in rows {
        let value = match &row.value {
            Value::Lambda(p) => format::pretty_lambda(p),
            Value::X(q) => format::pretty_x(q),
        };
        match row.k {
            Some(k) => out.push_str(&format!("n={} k={}: {}\n", row.n, k, value)),
            None => out.push_str(&format!("n={}: {}\n", row.n, value)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(family: FamilyName, max_n: usize) -> TableRequest {
        TableRequest { family, max_n, p: None, r: None, lambda: None }
    }

    #[test]
    fn stirling2_entry() {
        let export = request(FamilyName::Stirling2, 2).export().unwrap();
        let e = export.entries.iter().find(|e| e.n == 2 && e.k == Some(1)).unwrap();
        assert_eq!(e.lambda_coeffs, vec!["1/1", "-1/1"]);
    }

    #[test]
    fn beta_csv() {
        assert_eq!(render_csv(&request(FamilyName::Beta, 0).rows().unwrap()), "0, 1/1\n");
    }

    #[test]
    fn gen_beta_poly_entry() {
        let req = TableRequest { p: Some(1), ..request(FamilyName::GenBetaPoly, 1) };
        let export = req.export().unwrap();
        let e = &export.entries[1];
        assert_eq!(e.x_coeffs.as_ref().unwrap().len(), 2);
        assert_eq!(e.lambda_coeffs, vec!["-1/3", "1/3"]);
    }

    #[test]
    fn parameters_checked() {
        assert!(request(FamilyName::GenBeta, 2).rows().is_err());
        assert!(request(FamilyName::RStirling2, 2).rows().is_err());
        let bad = TableRequest { p: Some(-2), ..request(FamilyName::GenBeta, 2) };
        assert!(bad.rows().is_err());
        let stray = TableRequest { p: Some(1), ..request(FamilyName::Beta, 2) };
        assert!(stray.rows().is_err());
    }

    #[test]
    fn json_round_trip() {
        let json = TableRequest { p: Some(2), ..request(FamilyName::GenBetaPoly, 3) }.export().unwrap().to_json();
        assert_eq!(Export::from_json(&json).unwrap().to_json(), json);
    }
}
