//! Document types for the CLI interchange formats.
//!
//! Every scalar travels as an exact rational: an integer literal or a
//! `"p/q"` string. Component indices in documents are 1-based; the
//! conversion methods shift to the crate's 0-based convention and
//! validate ranges, so a round trip through a document never changes a
//! structure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forms::{FormsError, PolyBivector};
use crate::lie::{LieError, StructureConstants};
use crate::matrix::Mat;
use crate::pencil::{PencilError, SkewPencil};
use crate::poly::{default_vars, MultiPoly, Vars};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("matrix `{0}` does not match dim {1}")]
    BadShape(&'static str, usize),
    #[error("`{0}` is not an exact rational")]
    BadRational(String),
    #[error("component index {0} out of range 1..={1}")]
    IndexRange(usize, usize),
    #[error("component index tuple must have exactly {0} entries")]
    BadArity(usize),
    #[error("document needs `vars` or `n_vars`")]
    NoVars,
    #[error("`vars` has {0} names but `n_vars` is {1}")]
    VarsLen(usize, usize),
    #[error("degree {0} not supported here, expected 2")]
    BadDegree(usize),
    #[error("polynomial `{text}`: {msg}")]
    BadPoly { text: String, msg: String },
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// An exact rational as it appears in a document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rat {
    Int(i64),
    Text(String),
}

impl Rat {
    pub fn to_scalar(&self) -> Result<Scalar, DocError> {
        match self {
            Rat::Int(n) => Ok(Scalar::int(*n)),
            Rat::Text(s) => s
                .parse()
                .map_err(|_| DocError::BadRational(s.clone())),
        }
    }
}

fn parse_matrix(name: &'static str, dim: usize, rows: &[Vec<Rat>]) -> Result<Mat, DocError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(DocError::BadShape(name, dim));
    }
    let mut out = Vec::with_capacity(dim);
    for r in rows {
        let row: Result<Vec<Scalar>, DocError> = r.iter().map(Rat::to_scalar).collect();
        out.push(row?);
    }
    Ok(Mat::from_rows(out))
}

/// A constant pencil: `{"dim": n, "A": [[..]], "B": [[..]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PencilDoc {
    pub dim: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Rat>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Rat>>,
}

impl PencilDoc {
    pub fn to_pencil(&self) -> Result<SkewPencil, DocError> {
        let a = parse_matrix("A", self.dim, &self.a)?;
        let b = parse_matrix("B", self.dim, &self.b)?;
        Ok(SkewPencil::new(a, b)?)
    }

    pub fn from_pencil(p: &SkewPencil) -> Self {
        let dump = |m: &Mat| {
            m.row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(|s| Rat::Text(s.to_string())).collect())
                .collect()
        };
        PencilDoc {
            dim: p.dim(),
            a: dump(p.a()),
            b: dump(p.b()),
        }
    }
}

/// One bivector component `P^{ij}`, indices 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub idx: Vec<usize>,
    pub poly: String,
}

fn resolve_vars(n_vars: Option<usize>, names: &Option<Vec<String>>) -> Result<Vars, DocError> {
    match (n_vars, names) {
        (_, Some(names)) => {
            if let Some(n) = n_vars {
                if names.len() != n {
                    return Err(DocError::VarsLen(names.len(), n));
                }
            }
            Ok(names.clone().into())
        }
        (Some(n), None) => Ok(default_vars(n)),
        (None, None) => Err(DocError::NoVars),
    }
}

fn build_bivector(vars: &Vars, comps: &[ComponentDoc]) -> Result<PolyBivector, DocError> {
    let n = vars.len();
    let mut parts = Vec::with_capacity(comps.len());
    for c in comps {
        if c.idx.len() != 2 {
            return Err(DocError::BadArity(2));
        }
        for &i in &c.idx {
            if i == 0 || i > n {
                return Err(DocError::IndexRange(i, n));
            }
        }
        let poly = MultiPoly::parse(&c.poly, vars.clone()).map_err(|e| DocError::BadPoly {
            text: c.poly.clone(),
            msg: e.to_string(),
        })?;
        parts.push((c.idx[0] - 1, c.idx[1] - 1, poly));
    }
    Ok(PolyBivector::new(vars.clone(), &parts)?)
}

/// A polynomial bivector field:
/// `{"n_vars": n, "degree": 2, "components": [{"idx": [i,j], "poly": ".."}]}`,
/// with `"vars"` optionally naming the coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BivectorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_vars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub components: Vec<ComponentDoc>,
}

impl BivectorDoc {
    pub fn to_bivector(&self) -> Result<PolyBivector, DocError> {
        if let Some(d) = self.degree {
            if d != 2 {
                return Err(DocError::BadDegree(d));
            }
        }
        let vars = resolve_vars(self.n_vars, &self.vars)?;
        build_bivector(&vars, &self.components)
    }
}

/// Two bivector fields over one coordinate system, for commands that
/// take the pair as a single file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_vars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub first: Vec<ComponentDoc>,
    pub second: Vec<ComponentDoc>,
}

impl PairDoc {
    pub fn to_pair(&self) -> Result<(PolyBivector, PolyBivector), DocError> {
        let vars = resolve_vars(self.n_vars, &self.vars)?;
        Ok((
            build_bivector(&vars, &self.first)?,
            build_bivector(&vars, &self.second)?,
        ))
    }
}

/// Structure constants of a Lie algebra:
/// `{"dim": n, "brackets": [[i, j, k, c], ..], "labels": [..]}` with
/// 1-based `i < j` and rational `c` giving `[x_i, x_j] = sum_k c x_k`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScDoc {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, usize, Rat)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl ScDoc {
    pub fn to_structure_constants(&self) -> Result<StructureConstants, DocError> {
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (i, j, k, c) in &self.brackets {
            for &ix in [i, j, k].into_iter() {
                if ix == 0 || ix > n {
                    return Err(DocError::IndexRange(ix, n));
                }
            }
            entries.push((i - 1, j - 1, k - 1, c.to_scalar()?));
        }
        Ok(StructureConstants::new(n, self.labels.clone(), &entries)?)
    }
}

/// Parses a Casimir list document (a JSON array of polynomial strings)
/// against the coordinates of the algebra it accompanies.
pub fn parse_casimirs(texts: &[String], vars: &Vars) -> Result<Vec<MultiPoly>, DocError> {
    texts
        .iter()
        .map(|t| {
            MultiPoly::parse(t, vars.clone()).map_err(|e| DocError::BadPoly {
                text: t.clone(),
                msg: e.to_string(),
            })
        })
        .collect()
}
