//! JSON text format for polynomials, parametrized curves and matrices.

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, Result};
use crate::exact::Cyclotomic;

use super::linalg::Matrix;
use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exps: Vec<u16>,
    pub coeff: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDocument {
    pub schema_version: u32,
    pub nvars: usize,
    pub var_names: Vec<String>,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub schema_version: u32,
    pub label: String,
    pub components: Vec<PolyDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, each a 16-element coefficient list.
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub schema_version: u32,
    pub label: String,
    pub matrices: Vec<MatrixRecord>,
}

pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

impl PolyDocument {
    pub fn from_polynomial(f: &Polynomial, var_names: &[&str]) -> Self {
        let n = f.nvars();
        let names = if var_names.len() == n {
            var_names.iter().map(ToString::to_string).collect()
        } else {
            default_names(n)
        };
        PolyDocument {
            schema_version: SCHEMA_VERSION,
            nvars: n,
            var_names: names,
            terms: f
                .terms()
                .map(|(m, c)| TermRecord { exps: m.exps(n).to_vec(), coeff: c.to_strings() })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(ParseError::SchemaVersion(self.schema_version).into());
        }
        if self.nvars > MAX_VARS || self.var_names.len() != self.nvars {
            return Err(ParseError::Document(format!("bad variable list for nvars = {}", self.nvars)).into());
        }
        let mut f = Polynomial::zero(self.nvars);
        for t in &self.terms {
            if t.exps.len() != self.nvars {
                return Err(ParseError::Document(format!("exponent vector {:?} has wrong length", t.exps)).into());
            }
            f.add_term(Monomial::from_exps(&t.exps), Cyclotomic::from_strings(&t.coeff)?);
        }
        Ok(f)
    }
}

pub fn polynomial_to_json(f: &Polynomial, var_names: &[&str]) -> String {
    let doc = PolyDocument::from_polynomial(f, var_names);
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

pub fn polynomial_from_json(s: &str) -> Result<(Polynomial, Vec<String>)> {
    let doc: PolyDocument =
        serde_json::from_str(s).map_err(|e| ParseError::Document(e.to_string()))?;
    Ok((doc.to_polynomial()?, doc.var_names))
}

pub fn curve_to_json(label: &str, components: &[Polynomial], var_names: &[&str]) -> String {
    let doc = CurveDocument {
        schema_version: SCHEMA_VERSION,
        label: label.to_string(),
        components: components.iter().map(|c| PolyDocument::from_polynomial(c, var_names)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

pub fn curve_from_json(s: &str) -> Result<(String, Vec<Polynomial>)> {
    let doc: CurveDocument =
        serde_json::from_str(s).map_err(|e| ParseError::Document(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(ParseError::SchemaVersion(doc.schema_version).into());
    }
    let comps = doc.components.iter().map(PolyDocument::to_polynomial).collect::<Result<Vec<_>>>()?;
    Ok((doc.label, comps))
}

pub fn matrices_to_json(label: &str, mats: &[(String, Matrix)]) -> String {
    let doc = MatrixDocument {
        schema_version: SCHEMA_VERSION,
        label: label.to_string(),
        matrices: mats
            .iter()
            .map(|(name, m)| MatrixRecord {
                name: name.clone(),
                rows: m.rows(),
                cols: m.cols(),
                entries: m.entries().iter().map(Cyclotomic::to_strings).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

pub fn matrices_from_json(s: &str) -> Result<(String, Vec<(String, Matrix)>)> {
    let doc: MatrixDocument =
        serde_json::from_str(s).map_err(|e| ParseError::Document(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(ParseError::SchemaVersion(doc.schema_version).into());
    }
    let mut out = Vec::new();
    for rec in doc.matrices {
        if rec.entries.len() != rec.rows * rec.cols {
            return Err(ParseError::Document(format!("matrix {} has wrong entry count", rec.name)).into());
        }
        let vals = rec.entries.iter().map(|e| Cyclotomic::from_strings(e)).collect::<Result<Vec<_>>>()?;
        out.push((rec.name, Matrix::from_fn(rec.rows, rec.cols, |i, j| vals[i * rec.cols + j].clone())));
    }
    Ok((doc.label, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::epsilon;

    #[test]
    fn polynomial_round_trip_is_bit_exact() {
        let mut f = Polynomial::from_int_terms(3, &[(&[2, 0, 0], 3), (&[0, 1, 1], -7)]);
        f.add_term(Monomial::from_exps(&[0, 0, 2]), epsilon() * Cyclotomic::from_frac(2, 3));
        let s = polynomial_to_json(&f, &["x", "y", "z"]);
        let (g, names) = polynomial_from_json(&s).unwrap();
        assert_eq!(g, f);
        assert_eq!(names, vec!["x", "y", "z"]);
        assert_eq!(polynomial_to_json(&g, &["x", "y", "z"]), s);
    }

    #[test]
    fn rejects_wrong_schema() {
        let f = Polynomial::one(1);
        let s = polynomial_to_json(&f, &[]).replace("\"schema_version\": 1", "\"schema_version\": 9");
        assert!(polynomial_from_json(&s).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::diagonal(&[epsilon(), Cyclotomic::from_frac(-1, 5)]);
        let s = matrices_to_json("demo", &[("S".into(), m.clone())]);
        let (label, mats) = matrices_from_json(&s).unwrap();
        assert_eq!(label, "demo");
        assert_eq!(mats[0].1, m);
    }
}
