//! JSON documents for algebras, representations, cochains, operators,
//! deformations, r-matrices and reports.
//!
//! Rationals are strings `"p/q"` or `"p"`. Basis indices in keys such as
//! `"i,j"` are 0-based, matching the indices in failure reports.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cochain::{Carrier, Cochain};
use crate::combin::sort_with_sign;
use crate::deformation::TruncatedDeformation;
use crate::error::{Error, Result};
use crate::exactnum::{format_scalar, parse_scalar, Matrix, Scalar, Vector};
use crate::report::Failure;
use crate::rmatrix::Multivector;
use crate::structures::{HomLieAlgebra, Representation};

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn parse_vector(v: &[String]) -> Result<Vector> {
    v.iter().map(|s| parse_scalar(s)).collect()
}

pub fn format_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

/// Rows of rational strings; every row must have the same length.
pub fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .map(|r| parse_vector(r))
        .collect::<Result<Vec<_>>>()?;
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(doc_err("matrix rows have different lengths"));
    }
    Matrix::from_rows(parsed, cols)
}

pub fn format_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| format_vector(m.row(r))).collect()
}

fn parse_key(key: &str) -> Result<Vec<usize>> {
    if key.trim().is_empty() {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| doc_err(format!("bad index tuple {key:?}")))
        })
        .collect()
}

fn format_key(tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub brackets: BTreeMap<String, Vec<String>>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<HomLieAlgebra> {
        let n = self.dim;
        let labels = match &self.basis {
            Some(b) if b.len() != n => {
                return Err(doc_err(format!(
                    "{} basis names for dimension {n}",
                    b.len()
                )))
            }
            Some(b) => b.clone(),
            None => (1..=n).map(|i| format!("e{i}")).collect(),
        };
        let alpha = parse_matrix(&self.alpha)?;
        let mut brackets = Vec::new();
        for (key, val) in &self.brackets {
            let t = parse_key(key)?;
            if t.len() != 2 {
                return Err(doc_err(format!("bracket key {key:?} must be \"i,j\"")));
            }
            brackets.push(((t[0], t[1]), parse_vector(val)?));
        }
        HomLieAlgebra::new(labels, alpha, brackets)
    }

    pub fn from_algebra(g: &HomLieAlgebra) -> Self {
        AlgebraDoc {
            dim: g.dim(),
            basis: Some(g.labels().to_vec()),
            alpha: format_matrix(g.alpha()),
            brackets: g
                .upper_brackets()
                .into_iter()
                .map(|((i, j), v)| (format_key(&[i, j]), format_vector(&v)))
                .collect(),
        }
    }
}

/// An algebra given inline or as a path relative to the referring document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDoc {
    pub algebra: AlgebraRef,
    pub beta: Vec<Vec<String>>,
    pub rho: Vec<Vec<Vec<String>>>,
}

impl RepresentationDoc {
    /// Paths in `algebra` are resolved against `base_dir`.
    pub fn to_representation(&self, base_dir: Option<&Path>) -> Result<Representation> {
        let g = match &self.algebra {
            AlgebraRef::Inline(doc) => doc.to_algebra()?,
            AlgebraRef::Path(p) => {
                let path = base_dir.map_or_else(|| PathBuf::from(p), |d| d.join(p));
                read_json::<AlgebraDoc>(&path)?.to_algebra()?
            }
        };
        let beta = parse_matrix(&self.beta)?;
        let rho = self
            .rho
            .iter()
            .map(|m| parse_matrix(m))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(g, beta, rho)
    }

    pub fn from_representation(rep: &Representation) -> Self {
        RepresentationDoc {
            algebra: AlgebraRef::Inline(AlgebraDoc::from_algebra(rep.algebra())),
            beta: format_matrix(rep.beta()),
            rho: rep.rho().iter().map(format_matrix).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub arity: usize,
    /// `"g"` for cochains on the algebra, `"V"` for cochains on the module.
    pub source: String,
    #[serde(default)]
    pub coeffs: BTreeMap<String, Vec<String>>,
}

impl CochainDoc {
    pub fn carrier(&self) -> Result<Carrier> {
        match self.source.as_str() {
            "g" => Ok(Carrier::Algebra),
            "V" => Ok(Carrier::Module),
            other => Err(doc_err(format!(
                "cochain source must be \"g\" or \"V\", got {other:?}"
            ))),
        }
    }

    /// Keys may list indices in any order; values are adjusted by the sign
    /// of the sorting permutation and repeated keys accumulate.
    pub fn to_cochain(&self, rep: &Representation) -> Result<Cochain> {
        let (n, m) = (rep.algebra().dim(), rep.dim());
        let (s, t) = match self.carrier()? {
            Carrier::Algebra => (n, m),
            Carrier::Module => (m, n),
        };
        let mut table: HashMap<Vec<usize>, Vector> = HashMap::new();
        for (key, val) in &self.coeffs {
            let mut tuple = parse_key(key)?;
            if tuple.len() != self.arity || tuple.iter().any(|&i| i >= s) {
                return Err(doc_err(format!(
                    "cochain key {key:?} does not fit arity {} over dimension {s}",
                    self.arity
                )));
            }
            let sign = sort_with_sign(&mut tuple)
                .ok_or_else(|| doc_err(format!("repeated index in key {key:?}")))?;
            let v = parse_vector(val)?;
            if v.len() != t {
                return Err(Error::Dimension(format!(
                    "value at {key:?} has {} coordinates, expected {t}",
                    v.len()
                )));
            }
            let entry = table
                .entry(tuple)
                .or_insert_with(|| vec![Scalar::zero(); t]);
            for (e, x) in entry.iter_mut().zip(v) {
                if sign > 0 {
                    *e += x;
                } else {
                    *e -= x;
                }
            }
        }
        Ok(Cochain::from_fn(self.arity, s, t, |tuple| {
            table
                .get(tuple)
                .cloned()
                .unwrap_or_else(|| vec![Scalar::zero(); t])
        }))
    }

    /// Nonzero values only.
    pub fn from_cochain(c: &Cochain, source: Carrier) -> Self {
        let tuples = crate::combin::combinations(c.source_dim(), c.arity());
        let coeffs = tuples
            .iter()
            .zip(c.coeffs())
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(t, v)| (format_key(t), format_vector(v)))
            .collect();
        let source = match source {
            Carrier::Algebra => "g",
            Carrier::Module => "V",
        };
        CochainDoc {
            arity: c.arity(),
            source: source.to_string(),
            coeffs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearOpDoc {
    pub matrix: Vec<Vec<String>>,
}

impl LinearOpDoc {
    pub fn to_matrix(&self) -> Result<Matrix> {
        parse_matrix(&self.matrix)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        LinearOpDoc {
            matrix: format_matrix(m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationDoc {
    pub base: LinearOpDoc,
    #[serde(default)]
    pub terms: Vec<LinearOpDoc>,
    pub order: usize,
}

impl DeformationDoc {
    pub fn to_deformation(&self) -> Result<TruncatedDeformation> {
        if self.order != self.terms.len() {
            return Err(doc_err(format!(
                "order {} but {} terms",
                self.order,
                self.terms.len()
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(LinearOpDoc::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedDeformation::new(self.base.to_matrix()?, terms))
    }

    pub fn from_deformation(d: &TruncatedDeformation) -> Self {
        DeformationDoc {
            base: LinearOpDoc::from_matrix(&d.base),
            terms: d.terms.iter().map(LinearOpDoc::from_matrix).collect(),
            order: d.order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDoc {
    pub wedge: BTreeMap<String, String>,
}

impl RMatrixDoc {
    pub fn to_multivector(&self, dim: usize) -> Result<Multivector> {
        let mut entries = Vec::new();
        for (key, val) in &self.wedge {
            let t = parse_key(key)?;
            if t.len() != 2 {
                return Err(doc_err(format!("wedge key {key:?} must be \"i,j\"")));
            }
            entries.push(((t[0], t[1]), parse_scalar(val)?));
        }
        Multivector::two(dim, entries)
    }

    pub fn from_multivector(r: &Multivector) -> Self {
        RMatrixDoc {
            wedge: r
                .entries()
                .into_iter()
                .map(|(t, c)| (format_key(&t), format_scalar(&c)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub condition: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl From<&Failure> for FailureDoc {
    fn from(f: &Failure) -> Self {
        FailureDoc {
            condition: f.condition.clone(),
            indices: f.indices.clone(),
            lhs: format_vector(&f.lhs),
            rhs: format_vector(&f.rhs),
        }
    }
}

/// Machine-readable outcome of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub verb: String,
    pub verdict: bool,
    pub failures: Vec<FailureDoc>,
    pub data: serde_json::Value,
}

impl ReportDoc {
    pub fn new(verb: &str, verdict: bool, failures: &[Failure], data: serde_json::Value) -> Self {
        ReportDoc {
            verb: verb.to_string(),
            verdict,
            failures: failures.iter().map(FailureDoc::from).collect(),
            data,
        }
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| doc_err(format!("{}: {e}", path.display())))
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents always serialize")
}
