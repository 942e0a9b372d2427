//! Embedded authentication-mechanism dataset (linguistic scale, interval
//! decision matrix, expert weights, published combined numbers and scores)
//! and its reconciliation against recomputed values.

use serde::{Deserialize, Serialize};

use crate::madm::{build_decision_matrix, rank_alternatives, IntervalLinguisticMatrix, LinguisticScale, RankingReport, TermInterval};
use crate::number::{Channel, Ivtrnn, Level, Trnn};
use crate::ranking::{score, WeightMode, WeightVector};
use crate::round_half_even;

/// A recomputed 4-dp block agrees with the published one when they differ by
/// at most one unit in the last printed place.
pub const TABLE_IV_TOLERANCE: f64 = 1e-4;
/// Published scores are printed to 4 dp.
pub const SCORE_MATCH_TOLERANCE: f64 = 5e-4;
/// Looser bound absorbing the garbled and inconsistent published rows.
pub const SCORE_CONSISTENCY_TOLERANCE: f64 = 6e-3;

const FLOAT_SLACK: f64 = 1e-12;

pub const ALTERNATIVES: [&str; 8] = ["PW", "TF", "CT", "FR", "IR", "SM", "MM", "CK"];
pub const CRITERIA: [&str; 5] = ["USF", "PER", "REL", "RBS", "SEC"];
pub const STATED_WEIGHTS: [f64; 5] = [0.2, 0.25, 0.25, 0.1, 0.2];
pub const UNIFORM_WEIGHT: f64 = 0.25;

/// Which weights produce the combined numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// The expert's normalized weights `(0.2, 0.25, 0.25, 0.1, 0.2)`.
    Stated,
    /// `w_j = 0.25` for every criterion (sum 1.25, relaxed mode).
    Uniform025,
}

impl Regime {
    pub fn weights(self) -> WeightVector {
        match self {
            Regime::Stated => WeightVector::strict(STATED_WEIGHTS.to_vec()),
            Regime::Uniform025 => WeightVector::uniform(CRITERIA.len(), UNIFORM_WEIGHT, WeightMode::Relaxed),
        }
        .expect("reference weights are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Stated => "stated",
            Regime::Uniform025 => "uniform025",
        }
    }
}

/// A source entry that could not be transcribed as printed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GarbledEntry {
    pub alternative: String,
    pub level: Level,
    pub channel: Channel,
    pub verbatim: String,
    /// Best-effort 4-tuple used in computations. Not authoritative.
    pub canonical: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PublishedRow {
    pub alternative: String,
    pub combined: Ivtrnn,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceDataset {
    pub scale: LinguisticScale,
    pub matrix: IntervalLinguisticMatrix,
    pub weights: WeightVector,
    /// Combined numbers as published, in alternative order.
    pub combined: Vec<PublishedRow>,
    /// Published scores, best first.
    pub scores: Vec<(String, f64)>,
    pub errata: Vec<GarbledEntry>,
}

impl ReferenceDataset {
    pub fn published_combined(&self, alternative: &str) -> Option<&Ivtrnn> {
        self.combined.iter().find(|r| r.alternative == alternative).map(|r| &r.combined)
    }

    pub fn published_score(&self, alternative: &str) -> Option<f64> {
        self.scores.iter().find(|(a, _)| a == alternative).map(|(_, s)| *s)
    }

    pub fn published_ordering(&self) -> Vec<String> {
        self.scores.iter().map(|(a, _)| a.clone()).collect()
    }
}

fn trnn(t: [f64; 4], i: [f64; 4], f: [f64; 4]) -> Trnn {
    Trnn::from_arrays(t, i, f).expect("reference value")
}

const VL: &str = "Very Low";
const L: &str = "Low";
const H: &str = "High";
const VH: &str = "Very High";

pub fn reference_scale() -> LinguisticScale {
    LinguisticScale::new([
        (VL, trnn([0.0, 0.1, 0.1, 0.2], [0.1, 0.1, 0.1, 0.1], [0.6, 0.7, 0.8, 0.9])),
        (L, trnn([0.2, 0.3, 0.4, 0.5], [0.0, 0.1, 0.2, 0.3], [0.0, 0.1, 0.2, 0.2])),
        (H, trnn([0.4, 0.5, 0.6, 0.7], [0.0, 0.1, 0.2, 0.3], [0.1, 0.1, 0.1, 0.1])),
        (VH, trnn([0.7, 0.7, 0.7, 0.7], [0.0, 0.1, 0.2, 0.3], [0.1, 0.1, 0.1, 0.1])),
    ])
    .expect("reference scale")
}

pub fn reference_matrix() -> IntervalLinguisticMatrix {
    let rows: [[(&str, &str); 5]; 8] = [
        [(L, H), (VL, VH), (L, VH), (L, H), (H, VH)],
        [(VL, H), (VL, VH), (H, VH), (L, VH), (L, H)],
        [(VL, VH), (H, VH), (VL, VH), (VL, VH), (L, H)],
        [(H, VH), (L, VH), (VL, H), (L, H), (H, VH)],
        [(L, VH), (H, VH), (L, H), (L, VH), (H, VH)],
        [(L, VH), (L, VH), (H, VH), (H, VH), (VL, H)],
        [(VL, VH), (VL, H), (VL, VH), (L, H), (H, VH)],
        [(VL, VH), (H, VH), (H, VH), (VL, H), (L, H)],
    ];
    IntervalLinguisticMatrix::new(
        ALTERNATIVES.iter().map(|s| s.to_string()).collect(),
        CRITERIA.iter().map(|s| s.to_string()).collect(),
        rows.iter().map(|r| r.iter().map(|&(lo, hi)| TermInterval::new(lo, hi)).collect()).collect(),
    )
    .expect("reference matrix")
}

type Row = [[f64; 4]; 6];

const P: [f64; 4] = [0.0562; 4];
const UPPER_I: [f64; 4] = [0.0, 0.0562, 0.1337, 0.2220];

// lower T, I, F then upper T, I, F
const COMBINED: [(&str, Row); 8] = [
    ("PW", [[0.2555, 0.3732, 0.4719, 0.5838], [0.0, 0.0562, 0.1125, 0.1687], [0.0, 0.0915, 0.1591, 0.1638], [0.6967, 0.7206, 0.7473, 0.7780], UPPER_I, P]),
    ("TF", [[0.2240, 0.3437, 0.4273, 0.5437], [0.0, 0.0562, 0.0946, 0.1282], [0.0, 0.1488, 0.2173, 0.2305], [0.6880, 0.7134, 0.7436, 0.7780], UPPER_I, P]),
    ("CT", [[0.1676, 0.2893, 0.3533, 0.4736], [0.0, 0.0562, 0.0795, 0.0974], [0.0, 0.2420, 0.3181, 0.3475], [0.7360, 0.7477, 0.7614, 0.7780], UPPER_I, P]),
    ("FR", [[0.2592, 0.3786, 0.4611, 0.5783], [0.0, 0.0562, 0.0914, 0.1213], [0.0, 0.1640, 0.2027, 0.2163], [0.6860, 0.7134, 0.7436, 0.7780], UPPER_I, P]),
    ("IR", [[0.3448, 0.4589, 0.5688, 0.6743], [0.0, 0.0562, 0.1337, 0.2220], IR_LOWER_FALSITY, [0.7360, 0.7477, 0.7614, 0.7780], UPPER_I, P]),
    ("SM", [[0.3072, 0.4238, 0.5228, 0.6337], [0.0, 0.0562, 0.1125, 0.1687], [0.0, 0.0915, 0.1337, 0.1377], [0.7360, 0.7477, 0.7614, 0.7780], UPPER_I, P]),
    ("MM", [[0.1583, 0.2803, 0.3400, 0.4611], [0.0, 0.0562, 0.0768, 0.0922], [0.0, 0.2667, 0.3409, 0.3746], [0.6967, 0.7206, 0.7473, 0.7780], UPPER_I, P]),
    ("CK", [[0.2859, 0.4042, 0.4929, 0.6078], [0.0, 0.0562, 0.0979, 0.1354], [0.0, 0.1350, 0.1705, 0.1797], [0.6967, 0.7206, 0.7473, 0.7780], UPPER_I, P]),
];

// Printed with five components. The stray "0" is read as the first
// component, which is what the aggregation of the IR row yields.
const IR_LOWER_FALSITY_VERBATIM: &str = "(0.0562, 0.0562, 0,0.0946, 0.0946)";
const IR_LOWER_FALSITY: [f64; 4] = [0.0, 0.0562, 0.0946, 0.0946];

const SCORES: [(&str, f64); 8] = [
    ("IR", 0.8232),
    ("SM", 0.8156),
    ("CK", 0.8051),
    ("PW", 0.8016),
    ("FR", 0.7962),
    ("TF", 0.7895),
    ("CT", 0.772),
    ("MM", 0.7593),
];

pub fn reference_dataset() -> ReferenceDataset {
    ReferenceDataset {
        scale: reference_scale(),
        matrix: reference_matrix(),
        weights: Regime::Stated.weights(),
        combined: COMBINED
            .iter()
            .map(|(alt, r)| PublishedRow {
                alternative: alt.to_string(),
                combined: Ivtrnn::new(trnn(r[0], r[1], r[2]), trnn(r[3], r[4], r[5])),
            })
            .collect(),
        scores: SCORES.iter().map(|(a, s)| (a.to_string(), *s)).collect(),
        errata: vec![GarbledEntry {
            alternative: "IR".into(),
            level: Level::Lower,
            channel: Channel::Falsity,
            verbatim: IR_LOWER_FALSITY_VERBATIM.into(),
            canonical: IR_LOWER_FALSITY,
        }],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockComparison {
    pub level: Level,
    pub channel: Channel,
    pub computed: [f64; 4],
    pub published: [f64; 4],
    /// Largest `|computed − published|` before rounding.
    pub max_delta: f64,
    /// Computed block rounded to 4 dp agrees with the published one.
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowComparison {
    pub alternative: String,
    pub computed: Ivtrnn,
    pub blocks: Vec<BlockComparison>,
    /// Decided on the lower-level truth and indeterminacy blocks.
    pub verdict: Verdict,
    pub all_blocks_match: bool,
}

impl RowComparison {
    pub fn block(&self, level: Level, channel: Channel) -> &BlockComparison {
        self.blocks.iter().find(|b| b.level == level && b.channel == channel).expect("all six blocks present")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregationReconciliation {
    pub regime: Regime,
    pub weights: Vec<f64>,
    pub rows: Vec<RowComparison>,
}

impl AggregationReconciliation {
    pub fn row(&self, alternative: &str) -> Option<&RowComparison> {
        self.rows.iter().find(|r| r.alternative == alternative)
    }

    pub fn matching(&self) -> Vec<&str> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Match).map(|r| r.alternative.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreComparison {
    pub alternative: String,
    /// Score of the published combined number.
    pub recomputed: f64,
    pub published: f64,
    pub delta: f64,
    /// `|delta| <= 5e-4`.
    pub verdict: Verdict,
    /// `|delta| <= 6e-3`.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReconciliation {
    /// Best first, by published score.
    pub rows: Vec<ScoreComparison>,
    pub recomputed_ordering: Vec<String>,
    pub published_ordering: Vec<String>,
    pub ordering_agrees: bool,
}

impl ScoreReconciliation {
    pub fn row(&self, alternative: &str) -> Option<&ScoreComparison> {
        self.rows.iter().find(|r| r.alternative == alternative)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reconciliation {
    pub stated: AggregationReconciliation,
    pub uniform025: AggregationReconciliation,
    pub scores: ScoreReconciliation,
    pub errata: Vec<GarbledEntry>,
}

fn compare_blocks(computed: &Ivtrnn, published: &Ivtrnn) -> Vec<BlockComparison> {
    let mut out = Vec::with_capacity(6);
    for level in Level::BOTH {
        for channel in Channel::ALL {
            let c = computed.level(level).channel(channel).components();
            let p = published.level(level).channel(channel).components();
            let max_delta = c.iter().zip(&p).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            let matches = c.iter().zip(&p).all(|(x, y)| (round_half_even(*x, 4) - y).abs() <= TABLE_IV_TOLERANCE + FLOAT_SLACK);
            out.push(BlockComparison { level, channel, computed: c, published: p, max_delta, matches });
        }
    }
    out
}

/// Recomputes the combined numbers from the scale and matrix under `regime`
/// and compares them to the published ones.
pub fn reconcile_aggregation(data: &ReferenceDataset, regime: Regime) -> AggregationReconciliation {
    let weights = regime.weights();
    let dm = build_decision_matrix(&data.matrix, &data.scale).expect("reference matrix resolves");
    let report = rank_alternatives(&dm, &weights).expect("reference weights fit");
    let rows = data
        .combined
        .iter()
        .map(|published| {
            let computed = report.get(&published.alternative).expect("same alternatives").aggregated;
            let blocks = compare_blocks(&computed, &published.combined);
            let key_blocks_match = blocks
                .iter()
                .filter(|b| b.level == Level::Lower && b.channel != Channel::Falsity)
                .all(|b| b.matches);
            RowComparison {
                alternative: published.alternative.clone(),
                computed,
                all_blocks_match: blocks.iter().all(|b| b.matches),
                blocks,
                verdict: Verdict::from_bool(key_blocks_match),
            }
        })
        .collect();
    AggregationReconciliation { regime, weights: weights.weights().to_vec(), rows }
}

/// Scores the published combined numbers and compares them with the
/// published scores.
pub fn reconcile_scores(data: &ReferenceDataset) -> ScoreReconciliation {
    let rows: Vec<ScoreComparison> = data
        .scores
        .iter()
        .map(|(alt, published)| {
            let n = data.published_combined(alt).expect("score row has a combined row");
            let recomputed = score(n);
            let delta = recomputed - published;
            ScoreComparison {
                alternative: alt.clone(),
                recomputed,
                published: *published,
                delta,
                verdict: Verdict::from_bool(delta.abs() <= SCORE_MATCH_TOLERANCE),
                consistent: delta.abs() <= SCORE_CONSISTENCY_TOLERANCE,
            }
        })
        .collect();
    let report = published_ranking(data);
    let published_ordering = data.published_ordering();
    ScoreReconciliation {
        ordering_agrees: report.ordering == published_ordering,
        recomputed_ordering: report.ordering,
        published_ordering,
        rows,
    }
}

/// Ranks the published combined numbers as given.
pub fn published_ranking(data: &ReferenceDataset) -> RankingReport {
    RankingReport::from_aggregates(data.combined.iter().map(|r| (r.alternative.clone(), r.combined)).collect())
}

pub fn reconcile_reference() -> Reconciliation {
    let data = reference_dataset();
    Reconciliation {
        stated: reconcile_aggregation(&data, Regime::Stated),
        uniform025: reconcile_aggregation(&data, Regime::Uniform025),
        scores: reconcile_scores(&data),
        errata: data.errata.clone(),
    }
}
