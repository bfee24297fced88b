//! JSON instance files: an algebra with an optional operator, representation and module operator.
//!
//! Basis indices are 1-based on disk and 0-based in memory. Matrices are row-major arrays of
//! rational strings; column `i` of an operator is the image of `e_i`.

use serde::{Deserialize, Serialize};

use crate::algebra::{JjAlgebra, ProductEntry};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::rep::{RbRepresentation, Representation};
use crate::rota_baxter::RbOperator;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    k: usize,
    c: Rational,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    i: usize,
    j: usize,
    result: Vec<RawTerm>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    #[serde(default)]
    products: Vec<RawProduct>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    dim: usize,
    action: Vec<Vec<Vec<Rational>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    algebra: RawAlgebra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rb_operator: Option<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    representation: Option<RawRep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t_operator: Option<Vec<Vec<Rational>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub algebra: JjAlgebra,
    pub weight: Option<Rational>,
    pub rb_operator: Option<Matrix>,
    pub representation: Option<Representation>,
    pub t_operator: Option<Matrix>,
}

fn one_based(idx: usize, what: &str) -> Result<usize> {
    idx.checked_sub(1).ok_or_else(|| Error::Parse(format!("{what} index must be at least 1")))
}

fn square(rows: Vec<Vec<Rational>>, n: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("{what} must be {n}x{n}")));
    }
    Matrix::from_rows(rows)
}

fn raw_matrix(m: &Matrix) -> Vec<Vec<Rational>> {
    m.to_rows()
}

impl InstanceFile {
    pub fn from_algebra(algebra: JjAlgebra) -> Self {
        InstanceFile { algebra, weight: None, rb_operator: None, representation: None, t_operator: None }
    }

    pub fn from_rb(rb: &RbOperator) -> Self {
        InstanceFile {
            weight: Some(rb.weight().clone()),
            rb_operator: Some(rb.op().clone()),
            ..Self::from_algebra(rb.algebra().clone())
        }
    }

    pub fn from_rep(rep: &Representation) -> Self {
        InstanceFile { representation: Some(rep.clone()), ..Self::from_algebra(rep.algebra().clone()) }
    }

    pub fn from_rb_rep(rr: &RbRepresentation) -> Self {
        InstanceFile {
            representation: Some(rr.rep().clone()),
            t_operator: Some(rr.t_op().clone()),
            ..Self::from_rb(rr.rb())
        }
    }

    /// Parses a document. With `strict`, a product listed for both `(i, j)` and `(j, i)` with
    /// different results is rejected instead of symmetrized.
    pub fn parse(text: &str, strict: bool) -> Result<Self> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = raw.algebra.dim;
        let mut products = Vec::with_capacity(raw.algebra.products.len());
        for p in raw.algebra.products {
            let mut result = Vec::with_capacity(p.result.len());
            for t in p.result {
                result.push((one_based(t.k, "result")?, t.c));
            }
            products.push(ProductEntry { i: one_based(p.i, "product")?, j: one_based(p.j, "product")?, result });
        }
        let algebra = JjAlgebra::from_products(n, &products, strict)?;
        let rb_operator = raw.rb_operator.map(|m| square(m, n, "rb_operator")).transpose()?;
        let representation = match raw.representation {
            None => None,
            Some(r) => {
                if r.action.len() != n {
                    return Err(Error::DimensionMismatch(format!("representation needs {n} action matrices")));
                }
                let action =
                    r.action.into_iter().map(|m| square(m, r.dim, "action matrix")).collect::<Result<Vec<_>>>()?;
                Some(Representation::new(algebra.clone(), r.dim, action)?)
            }
        };
        let t_operator = match raw.t_operator {
            None => None,
            Some(m) => {
                let dim = representation
                    .as_ref()
                    .map(|r| r.dim())
                    .ok_or_else(|| Error::MissingSection("representation (required by t_operator)".into()))?;
                Some(square(m, dim, "t_operator")?)
            }
        };
        Ok(InstanceFile { algebra, weight: raw.weight, rb_operator, representation, t_operator })
    }

    /// Canonical text form: pretty JSON with products in lexicographic order and a trailing newline.
    pub fn to_json(&self) -> String {
        let raw = RawInstance {
            algebra: RawAlgebra {
                dim: self.algebra.dim(),
                products: self
                    .algebra
                    .products()
                    .into_iter()
                    .map(|p| RawProduct {
                        i: p.i + 1,
                        j: p.j + 1,
                        result: p.result.into_iter().map(|(k, c)| RawTerm { k: k + 1, c }).collect(),
                    })
                    .collect(),
            },
            weight: self.weight.clone(),
            rb_operator: self.rb_operator.as_ref().map(raw_matrix),
            representation: self
                .representation
                .as_ref()
                .map(|r| RawRep { dim: r.dim(), action: r.action().iter().map(raw_matrix).collect() }),
            t_operator: self.t_operator.as_ref().map(raw_matrix),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn weight(&self) -> Result<&Rational> {
        self.weight.as_ref().ok_or_else(|| Error::MissingSection("weight".into()))
    }

    pub fn rb(&self) -> Result<RbOperator> {
        let op = self.rb_operator.clone().ok_or_else(|| Error::MissingSection("rb_operator".into()))?;
        RbOperator::new(self.algebra.clone(), self.weight()?.clone(), op)
    }

    pub fn representation(&self) -> Result<&Representation> {
        self.representation.as_ref().ok_or_else(|| Error::MissingSection("representation".into()))
    }

    pub fn t_operator(&self) -> Result<&Matrix> {
        self.t_operator.as_ref().ok_or_else(|| Error::MissingSection("t_operator".into()))
    }

    pub fn rb_representation(&self) -> Result<RbRepresentation> {
        RbRepresentation::new(self.representation()?.clone(), self.rb()?, self.t_operator()?.clone())
    }
}
