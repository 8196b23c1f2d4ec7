//! On-disk input formats.

use std::path::Path;

use lonely_core::cfinite::{Poly, RationalClosedForm, Term};
use lonely_core::geometry::Lattice;
use lonely_core::{BigRat, IntMatrix};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"ambient_dimension": 2, "generators": [[2, -3]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub ambient_dimension: usize,
    pub generators: Vec<Vec<i64>>,
}

/// `{"terms": [{"base": "2", "poly": ["1"]}]}`, coefficients constant term
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedFormSpec {
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub base: String,
    pub poly: Vec<String>,
}

pub fn parse_rational(s: &str) -> Result<BigRat, CliError> {
    let t = s.trim();
    let bad = || CliError::Input(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRat::new(num, den))
}

pub fn format_rational(x: &BigRat) -> String {
    x.to_string()
}

impl LatticeSpec {
    pub fn to_lattice(&self) -> Result<Lattice, CliError> {
        let m = self.ambient_dimension;
        if let Some(g) = self.generators.iter().find(|g| g.len() != m) {
            return Err(CliError::Input(format!(
                "generator {g:?} has length {}, expected {m}",
                g.len()
            )));
        }
        Ok(Lattice::new(IntMatrix::from_i64(m, &self.generators)))
    }

    /// The HNF basis of `l`.
    pub fn from_lattice(l: &Lattice) -> Result<Self, CliError> {
        let generators = l
            .basis_vectors()
            .iter()
            .map(|p| {
                p.to_i64()
                    .ok_or_else(|| CliError::Input(format!("basis vector {p} does not fit in 64 bits")))
            })
            .collect::<Result<_, _>>()?;
        Ok(LatticeSpec {
            ambient_dimension: l.ambient_dim(),
            generators,
        })
    }
}

impl ClosedFormSpec {
    pub fn to_closed_form(&self) -> Result<RationalClosedForm, CliError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    base: parse_rational(&t.base)?,
                    poly: Poly::new(t.poly.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(RationalClosedForm::new(terms)?)
    }

    pub fn from_closed_form(cf: &RationalClosedForm) -> Self {
        ClosedFormSpec {
            terms: cf
                .terms()
                .iter()
                .map(|t| TermSpec {
                    base: format_rational(&t.base),
                    poly: t.poly.coeffs().iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: shown, source })
}
