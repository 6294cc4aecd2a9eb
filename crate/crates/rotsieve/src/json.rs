//! JSON encodings of paths, crystal elements, tableaux, polynomials and
//! sieving reports.

use serde::{Deserialize, Serialize};

use rotsieve_core::crystal::TensorCrystalElement;
use rotsieve_core::csp::{CspReport, Verdict};
use rotsieve_core::paths::{LittelmannPath, WeightSequence};
use rotsieve_core::tableaux::RowStrictTableau;
use rotsieve_core::{IntPolynomial, RootSystem, Weight};

fn coords(ws: &[Weight]) -> Vec<Vec<i64>> {
    ws.iter().map(|w| w.coords().to_vec()).collect()
}

fn weights(cs: &[Vec<i64>]) -> Vec<Weight> {
    cs.iter().map(|c| Weight::from_coords(c.clone())).collect()
}

/// `{"type": [[..], ..], "points": [[..], ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    #[serde(rename = "type")]
    pub type_: Vec<Vec<i64>>,
    pub points: Vec<Vec<i64>>,
}

impl PathJson {
    pub fn encode(seq: &WeightSequence<'_>, path: &LittelmannPath) -> Self {
        PathJson { type_: coords(seq.weights()), points: coords(path.points()) }
    }

    pub fn decode<'a>(
        &self,
        rs: &'a RootSystem,
    ) -> rotsieve_core::Result<(WeightSequence<'a>, LittelmannPath)> {
        let seq = WeightSequence::new(rs, weights(&self.type_))?;
        let path = LittelmannPath::new(&seq, weights(&self.points))?;
        Ok((seq, path))
    }
}

/// `{"factors": [[..], ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub factors: Vec<Vec<i64>>,
}

impl ElementJson {
    pub fn encode(b: &TensorCrystalElement) -> Self {
        ElementJson { factors: coords(b.factors()) }
    }

    pub fn decode(&self, seq: &WeightSequence<'_>) -> rotsieve_core::Result<TensorCrystalElement> {
        TensorCrystalElement::new(seq, weights(&self.factors))
    }
}

/// A tableau is its array of rows.
pub fn tableau_json(t: &RowStrictTableau) -> Vec<Vec<u32>> {
    t.rows().to_vec()
}

/// Coefficients in ascending degree; the zero polynomial is `[]`.
pub fn polynomial_json(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReportJson {
    pub r: usize,
    pub ell: usize,
    pub fixed_counts: Vec<usize>,
    pub polynomial: Vec<i64>,
    pub evaluations_ok: Vec<bool>,
    pub sign_diagnostic: i64,
    pub verdict: String,
}

impl From<&CspReport> for CspReportJson {
    fn from(r: &CspReport) -> Self {
        CspReportJson {
            r: r.r,
            ell: r.ell,
            fixed_counts: r.fixed_counts.clone(),
            polynomial: polynomial_json(&r.polynomial),
            evaluations_ok: r.evaluations_ok.clone(),
            sign_diagnostic: r.sign_diagnostic,
            verdict: match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
            .to_string(),
        }
    }
}
