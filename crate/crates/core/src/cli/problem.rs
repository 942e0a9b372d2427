//! The `ivtrnn-problem/1` JSON problem file.
//!
//! ```json
//! {
//!   "schema": "ivtrnn-problem/1",
//!   "criteria": [{ "name": "USF", "weight": 0.25 }, ...],
//!   "alternatives": ["PW", ...],
//!   "scale": { "Low": { "truth": [..4], "indeterminacy": [..4], "falsity": [..4] }, ... },
//!   "matrix": { "PW": { "USF": ["Low", "High"], "PER": { "lower": {..}, "upper": {..} } } },
//!   "options": { "weight_mode": "strict", "display_precision": 4 }
//! }
//! ```
//!
//! A matrix cell is either a `[lowerTerm, upperTerm]` pair resolved through
//! the scale, or an inline IVTrNN literal.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::madm::{DecisionMatrix, LinguisticScale};
use crate::number::{Ivtrnn, Trnn, TrnnLiteral};
use crate::ranking::{WeightMode, WeightVector};
use crate::reference::{reference_dataset, Regime};

pub const SCHEMA: &str = "ivtrnn-problem/1";
pub const DEFAULT_PRECISION: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionSpec {
    pub name: String,
    pub weight: f64,
}

/// Unvalidated IVTrNN as written in files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IvtrnnLiteral {
    pub lower: TrnnLiteral,
    pub upper: TrnnLiteral,
}

impl IvtrnnLiteral {
    pub fn validate(self) -> Result<Ivtrnn> {
        Ok(Ivtrnn::new(Trnn::try_from(self.lower)?, Trnn::try_from(self.upper)?))
    }
}

impl From<Ivtrnn> for IvtrnnLiteral {
    fn from(n: Ivtrnn) -> Self {
        Self { lower: n.lower.into(), upper: n.upper.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellSpec {
    Terms([String; 2]),
    Literal(IvtrnnLiteral),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemOptions {
    #[serde(default)]
    pub weight_mode: WeightMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display_precision: Option<usize>,
}

impl Default for ProblemOptions {
    fn default() -> Self {
        Self { weight_mode: WeightMode::Strict, display_precision: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: String,
    pub criteria: Vec<CriterionSpec>,
    pub alternatives: Vec<String>,
    #[serde(default)]
    pub scale: IndexMap<String, TrnnLiteral>,
    pub matrix: IndexMap<String, IndexMap<String, CellSpec>>,
    #[serde(default)]
    pub options: ProblemOptions,
}

/// Command-line adjustments applied on top of a file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightOverrides {
    pub weights: Option<Vec<f64>>,
    pub allow_unnormalized: bool,
}

impl WeightOverrides {
    pub fn resolve(&self, file_weights: Option<Vec<f64>>, file_mode: WeightMode) -> Result<WeightVector> {
        let weights = self
            .weights
            .clone()
            .or(file_weights)
            .ok_or_else(|| Error::InvalidWeights("no weights given; pass --weights".into()))?;
        let mode = if self.allow_unnormalized { WeightMode::Relaxed } else { file_mode };
        WeightVector::new(weights, mode)
    }
}

/// A validated problem ready for ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    pub scale: LinguisticScale,
    pub matrix: DecisionMatrix,
    pub weights: WeightVector,
    pub precision: usize,
}

fn unique(kind: &str, names: impl IntoIterator<Item = impl AsRef<str>>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n.as_ref().to_owned()) {
            return Err(Error::Invalid(format!("duplicate {kind} {:?}", n.as_ref())));
        }
    }
    Ok(())
}

impl ProblemFile {
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem file serializes")
    }

    pub fn validate(&self, overrides: &WeightOverrides) -> Result<DecisionProblem> {
        if self.schema != SCHEMA {
            return Err(Error::Invalid(format!("unsupported schema {:?}, expected {SCHEMA:?}", self.schema)));
        }
        unique("criterion", self.criteria.iter().map(|c| &c.name))?;
        unique("alternative", &self.alternatives)?;

        let scale = LinguisticScale::new(
            self.scale
                .iter()
                .map(|(name, lit)| {
                    Trnn::try_from(*lit)
                        .map(|n| (name.clone(), n))
                        .map_err(|e| Error::Invalid(format!("scale term {name:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?,
        )?;

        if let Some(extra) = self.matrix.keys().find(|k| !self.alternatives.contains(k)) {
            return Err(Error::Invalid(format!("matrix row {extra:?} is not a declared alternative")));
        }
        let mut cells = Vec::with_capacity(self.alternatives.len());
        for alt in &self.alternatives {
            let row = self.matrix.get(alt).ok_or_else(|| Error::Invalid(format!("matrix has no row for {alt:?}")))?;
            if let Some(extra) = row.keys().find(|k| !self.criteria.iter().any(|c| &c.name == *k)) {
                return Err(Error::Invalid(format!("cell {alt:?}/{extra:?} names an undeclared criterion")));
            }
            let mut out = Vec::with_capacity(self.criteria.len());
            for crit in &self.criteria {
                let cell = row
                    .get(&crit.name)
                    .ok_or_else(|| Error::Invalid(format!("missing cell {alt:?}/{:?}", crit.name)))?;
                let value = match cell {
                    CellSpec::Terms([lo, hi]) => Ivtrnn::new(*scale.get(lo)?, *scale.get(hi)?),
                    CellSpec::Literal(lit) => lit.validate().map_err(|e| Error::Invalid(format!("cell {alt:?}/{:?}: {e}", crit.name)))?,
                };
                out.push(value);
            }
            cells.push(out);
        }
        let matrix = DecisionMatrix::new(self.alternatives.clone(), self.criteria.iter().map(|c| c.name.clone()).collect(), cells)?;

        let weights = overrides.resolve(Some(self.criteria.iter().map(|c| c.weight).collect()), self.options.weight_mode)?;
        if weights.len() != self.criteria.len() {
            return Err(Error::LengthMismatch { expected: self.criteria.len(), actual: weights.len() });
        }
        Ok(DecisionProblem { scale, matrix, weights, precision: self.options.display_precision.unwrap_or(DEFAULT_PRECISION) })
    }

    /// The embedded worked example under the given weight regime.
    pub fn reference(regime: Regime) -> Self {
        let data = reference_dataset();
        let weights = regime.weights();
        let m = &data.matrix;
        Self {
            schema: SCHEMA.into(),
            criteria: m
                .criteria()
                .iter()
                .zip(weights.weights())
                .map(|(name, &weight)| CriterionSpec { name: name.clone(), weight })
                .collect(),
            alternatives: m.alternatives().to_vec(),
            scale: data.scale.terms().map(|(k, v)| (k.to_owned(), TrnnLiteral::from(*v))).collect(),
            matrix: m
                .alternatives()
                .iter()
                .enumerate()
                .map(|(i, alt)| {
                    let row = m
                        .criteria()
                        .iter()
                        .enumerate()
                        .map(|(j, crit)| {
                            let c = m.cell(i, j);
                            (crit.clone(), CellSpec::Terms([c.lower.clone(), c.upper.clone()]))
                        })
                        .collect();
                    (alt.clone(), row)
                })
                .collect(),
            options: ProblemOptions { weight_mode: weights.mode(), display_precision: Some(DEFAULT_PRECISION) },
        }
    }
}

/// A list of numbers to aggregate, with optional weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumbersFile {
    Bare(Vec<IvtrnnLiteral>),
    Weighted {
        numbers: Vec<IvtrnnLiteral>,
        #[serde(default)]
        weights: Option<Vec<f64>>,
        #[serde(default)]
        weight_mode: WeightMode,
    },
}

impl NumbersFile {
    pub fn into_parts(self) -> (Vec<IvtrnnLiteral>, Option<Vec<f64>>, WeightMode) {
        match self {
            NumbersFile::Bare(numbers) => (numbers, None, WeightMode::Strict),
            NumbersFile::Weighted { numbers, weights, weight_mode } => (numbers, weights, weight_mode),
        }
    }
}
