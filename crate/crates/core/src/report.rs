//! Structured outcomes of identity checks.

use crate::C64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

/// Residual of one sampled evaluation of an identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleResidual {
    /// Sampled spectral points as [re, im] pairs.
    pub points: Vec<[f64; 2]>,
    pub residual: f64,
}

impl SampleResidual {
    pub fn new(points: &[C64], residual: f64) -> Self {
        Self {
            points: points.iter().map(|z| [z.re, z.im]).collect(),
            residual,
        }
    }
}

/// Outcome of a single equation check over several samples.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub samples: Vec<SampleResidual>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckOutcome {
    pub fn from_samples(id: &str, samples: Vec<SampleResidual>, tolerance: f64) -> Self {
        let max_residual = samples.iter().map(|s| s.residual).fold(0.0, f64::max);
        let status = if max_residual < tolerance {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            id: id.to_string(),
            samples,
            max_residual,
            tolerance,
            status,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Preserved/broken classification of a generator family against a
/// transfer matrix, with a gray zone flagged as inconclusive.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryClassification {
    /// Generator label, max commutator residual over sampled points.
    pub residuals: Vec<(String, f64)>,
    pub preserved: Vec<String>,
    pub broken: Vec<String>,
    pub inconclusive: Vec<String>,
    pub preserved_tol: f64,
    pub broken_tol: f64,
}

impl SymmetryClassification {
    pub fn classify(residuals: Vec<(String, f64)>, preserved_tol: f64, broken_tol: f64) -> Self {
        let mut preserved = Vec::new();
        let mut broken = Vec::new();
        let mut inconclusive = Vec::new();
        for (label, r) in &residuals {
            if *r < preserved_tol {
                preserved.push(label.clone());
            } else if *r > broken_tol {
                broken.push(label.clone());
            } else {
                inconclusive.push(label.clone());
            }
        }
        Self {
            residuals,
            preserved,
            broken,
            inconclusive,
            preserved_tol,
            broken_tol,
        }
    }
}
