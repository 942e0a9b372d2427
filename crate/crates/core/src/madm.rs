//! Multi-attribute decision making: linguistic scale, interval-linguistic
//! matrix, the IVTrNN decision matrix and the aggregate → score → rank
//! procedure.

use std::cmp::Ordering;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::{InclusionViolation, Ivtrnn, Trnn};
use crate::ranking::{compare_scores, ivtrnwaa, ScoreAccuracy, WeightVector};

/// Named linguistic terms, each mapped to a TrNN evaluation value.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct LinguisticScale {
    terms: IndexMap<String, Trnn>,
}

impl LinguisticScale {
    pub fn new<S: Into<String>>(terms: impl IntoIterator<Item = (S, Trnn)>) -> Result<Self> {
        let mut map = IndexMap::new();
        for (name, value) in terms {
            let name = name.into();
            if map.insert(name.clone(), value).is_some() {
                return Err(Error::Invalid(format!("duplicate scale term {name:?}")));
            }
        }
        Ok(Self { terms: map })
    }

    pub fn get(&self, term: &str) -> Result<&Trnn> {
        self.terms.get(term).ok_or_else(|| Error::UnknownTerm(term.to_owned()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &Trnn)> {
        self.terms.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A `[lower term, upper term]` judgement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermInterval {
    pub lower: String,
    pub upper: String,
}

impl TermInterval {
    pub fn new(lower: impl Into<String>, upper: impl Into<String>) -> Self {
        Self { lower: lower.into(), upper: upper.into() }
    }
}

fn check_unique(kind: &str, names: &[String]) -> Result<()> {
    for (k, name) in names.iter().enumerate() {
        if names[..k].contains(name) {
            return Err(Error::Invalid(format!("duplicate {kind} {name:?}")));
        }
    }
    Ok(())
}

fn check_shape<T>(alternatives: &[String], criteria: &[String], cells: &[Vec<T>]) -> Result<()> {
    if alternatives.is_empty() || criteria.is_empty() {
        return Err(Error::Invalid("a decision problem needs at least one alternative and one criterion".into()));
    }
    check_unique("alternative", alternatives)?;
    check_unique("criterion", criteria)?;
    if cells.len() != alternatives.len() {
        return Err(Error::LengthMismatch { expected: alternatives.len(), actual: cells.len() });
    }
    for row in cells {
        if row.len() != criteria.len() {
            return Err(Error::LengthMismatch { expected: criteria.len(), actual: row.len() });
        }
    }
    Ok(())
}

/// Alternatives × criteria grid of linguistic term intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalLinguisticMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    cells: Vec<Vec<TermInterval>>,
}

impl IntervalLinguisticMatrix {
    pub fn new(alternatives: Vec<String>, criteria: Vec<String>, cells: Vec<Vec<TermInterval>>) -> Result<Self> {
        check_shape(&alternatives, &criteria, &cells)?;
        Ok(Self { alternatives, criteria, cells })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn cell(&self, alternative: usize, criterion: usize) -> &TermInterval {
        &self.cells[alternative][criterion]
    }

    pub fn rows(&self) -> &[Vec<TermInterval>] {
        &self.cells
    }
}

/// Alternatives × criteria grid of IVTrNN evaluations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    cells: Vec<Vec<Ivtrnn>>,
}

/// Advisory inclusion violations found in one cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellWarning {
    pub alternative: String,
    pub criterion: String,
    pub violations: Vec<InclusionViolation>,
}

impl DecisionMatrix {
    pub fn new(alternatives: Vec<String>, criteria: Vec<String>, cells: Vec<Vec<Ivtrnn>>) -> Result<Self> {
        check_shape(&alternatives, &criteria, &cells)?;
        Ok(Self { alternatives, criteria, cells })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn row(&self, alternative: usize) -> &[Ivtrnn] {
        &self.cells[alternative]
    }

    pub fn rows(&self) -> &[Vec<Ivtrnn>] {
        &self.cells
    }

    pub fn inclusion_warnings(&self) -> Vec<CellWarning> {
        let mut out = Vec::new();
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let violations = cell.inclusion_violations();
                if !violations.is_empty() {
                    out.push(CellWarning {
                        alternative: self.alternatives[i].clone(),
                        criterion: self.criteria[j].clone(),
                        violations,
                    });
                }
            }
        }
        out
    }

    /// Rows reordered by `perm` (`out[k] = self[perm[k]]`).
    pub fn with_rows_permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(
            perm.iter().map(|&k| self.alternatives[k].clone()).collect(),
            self.criteria.clone(),
            perm.iter().map(|&k| self.cells[k].clone()).collect(),
        )
    }

    /// Columns reordered by `perm`.
    pub fn with_columns_permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(
            self.alternatives.clone(),
            perm.iter().map(|&k| self.criteria[k].clone()).collect(),
            self.cells.iter().map(|row| perm.iter().map(|&k| row[k]).collect()).collect(),
        )
    }

    /// Appends an alternative.
    pub fn with_row(&self, name: impl Into<String>, row: Vec<Ivtrnn>) -> Result<Self> {
        let mut alternatives = self.alternatives.clone();
        alternatives.push(name.into());
        let mut cells = self.cells.clone();
        cells.push(row);
        Self::new(alternatives, self.criteria.clone(), cells)
    }
}

/// Cell `(L, U)` becomes `⟨lower = scale[L], upper = scale[U]⟩`.
pub fn build_decision_matrix(lm: &IntervalLinguisticMatrix, scale: &LinguisticScale) -> Result<DecisionMatrix> {
    let cells = lm
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| Ok(Ivtrnn::new(*scale.get(&cell.lower)?, *scale.get(&cell.upper)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DecisionMatrix::new(lm.alternatives.clone(), lm.criteria.clone(), cells)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeResult {
    pub name: String,
    pub aggregated: Ivtrnn,
    pub score: f64,
    pub accuracy: f64,
    pub rank: usize,
}

/// Outcome of ranking. `results` follows input order; `ordering` lists names
/// best first. Alternatives that compare equal keep input order and are
/// listed together in `ties`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingReport {
    pub results: Vec<AlternativeResult>,
    pub ordering: Vec<String>,
    pub ties: Vec<Vec<String>>,
}

impl RankingReport {
    /// Ranks precomputed aggregates.
    pub fn from_aggregates(entries: Vec<(String, Ivtrnn)>) -> Self {
        let mut results: Vec<AlternativeResult> = entries
            .into_iter()
            .map(|(name, aggregated)| {
                let sa = ScoreAccuracy::of(&aggregated);
                AlternativeResult { name, aggregated, score: sa.score, accuracy: sa.accuracy, rank: 0 }
            })
            .collect();
        let sa = |r: &AlternativeResult| ScoreAccuracy { score: r.score, accuracy: r.accuracy };
        let mut order: Vec<usize> = (0..results.len()).collect();
        // stable sort keeps input order among ties
        order.sort_by(|&i, &j| compare_scores(sa(&results[j]), sa(&results[i])));

        let mut ties = Vec::new();
        let mut group: Vec<usize> = Vec::new();
        for (pos, &idx) in order.iter().enumerate() {
            results[idx].rank = pos + 1;
            match group.last() {
                Some(&prev) if compare_scores(sa(&results[prev]), sa(&results[idx])) == Ordering::Equal => group.push(idx),
                _ => {
                    if group.len() > 1 {
                        ties.push(group.iter().map(|&k| results[k].name.clone()).collect());
                    }
                    group = vec![idx];
                }
            }
        }
        if group.len() > 1 {
            ties.push(group.iter().map(|&k| results[k].name.clone()).collect());
        }
        let ordering = order.iter().map(|&k| results[k].name.clone()).collect();
        Self { results, ordering, ties }
    }

    /// Highest-ranked alternative.
    pub fn best(&self) -> &AlternativeResult {
        self.results.iter().find(|r| r.rank == 1).expect("non-empty report")
    }

    pub fn get(&self, name: &str) -> Option<&AlternativeResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn is_tied(&self, name: &str) -> bool {
        self.ties.iter().any(|g| g.iter().any(|n| n == name))
    }
}

/// Aggregates each row with IVTrNWAA, scores it and ranks the alternatives.
pub fn rank_alternatives(dm: &DecisionMatrix, w: &WeightVector) -> Result<RankingReport> {
    if w.len() != dm.criteria.len() {
        return Err(Error::LengthMismatch { expected: dm.criteria.len(), actual: w.len() });
    }
    let entries = dm
        .alternatives
        .iter()
        .zip(&dm.cells)
        .map(|(name, row)| Ok((name.clone(), ivtrnwaa(row, w)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankingReport::from_aggregates(entries))
}
