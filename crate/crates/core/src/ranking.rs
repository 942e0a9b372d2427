//! Score and accuracy functions, the two-stage comparison rule and the
//! weighted arithmetic averaging operator (IVTrNWAA).

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arithmetic::NeutrosophicOps;
use crate::error::{Error, Result};
use crate::number::{Heights, Ivtrnn, Trapezoid, Trnn};

/// Absolute tolerance under which two scores (or accuracies) count as equal.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Tolerance on `|Σw - 1|` for strict weights.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// Every weight in `[0, 1]` and the weights sum to one.
    #[default]
    Strict,
    /// Every weight strictly positive, no constraint on the sum.
    Relaxed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    weights: Vec<f64>,
    mode: WeightMode,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>, mode: WeightMode) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        match mode {
            WeightMode::Strict => {
                if let Some(w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
                    return Err(Error::InvalidWeights(format!("weight {w} outside [0, 1]")));
                }
                let sum: f64 = weights.iter().sum();
                if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
                    return Err(Error::InvalidWeights(format!("weights sum to {sum}, expected 1")));
                }
            }
            WeightMode::Relaxed => {
                if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
                    return Err(Error::InvalidWeights(format!("relaxed weight {w} must be finite and > 0")));
                }
            }
        }
        Ok(Self { weights, mode })
    }

    pub fn strict(weights: Vec<f64>) -> Result<Self> {
        Self::new(weights, WeightMode::Strict)
    }

    pub fn relaxed(weights: Vec<f64>) -> Result<Self> {
        Self::new(weights, WeightMode::Relaxed)
    }

    /// `n` copies of `w`.
    pub fn uniform(n: usize, w: f64, mode: WeightMode) -> Result<Self> {
        Self::new(vec![w; n], mode)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Same weights reordered by `perm` (`out[k] = self[perm[k]]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(perm.iter().map(|&k| self.weights[k]).collect(), self.mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreAccuracy {
    pub score: f64,
    pub accuracy: f64,
}

impl ScoreAccuracy {
    pub fn of(n: &Ivtrnn) -> Self {
        Self { score: score(n), accuracy: accuracy(n) }
    }
}

// The triangular forms replace `b + c` by `2b`; keeping the remaining terms
// in the same order makes the two routes agree bit for bit when b == c.
fn mean(t: &Trapezoid) -> f64 {
    (t.a() + t.d() + (t.b() + t.c())) / 4.0
}

fn mean_triangular(t: &Trapezoid) -> f64 {
    (t.a() + t.d() + 2.0 * t.b()) / 4.0
}

struct ChannelMeans {
    truth: [f64; 2],
    indeterminacy: [f64; 2],
    falsity: [f64; 2],
}

impl ChannelMeans {
    fn with(n: &Ivtrnn, f: fn(&Trapezoid) -> f64) -> Self {
        Self {
            truth: [f(n.lower.truth()), f(n.upper.truth())],
            indeterminacy: [f(n.lower.indeterminacy()), f(n.upper.indeterminacy())],
            falsity: [f(n.lower.falsity()), f(n.upper.falsity())],
        }
    }

    fn score(&self) -> f64 {
        let s = (4.0 + self.truth[0] + self.truth[1]
            - self.indeterminacy[0]
            - self.indeterminacy[1]
            - self.falsity[0]
            - self.falsity[1])
            / 6.0;
        s.clamp(0.0, 1.0)
    }

    fn accuracy(&self) -> f64 {
        let h = (self.truth[0] + self.truth[1] - self.falsity[0] - self.falsity[1]) / 2.0;
        h.clamp(-1.0, 1.0)
    }
}

/// `S = (4 + T̲ + T̄ − I̲ − Ī − F̲ − F̄) / 6`, each term the mean of the
/// corresponding trapezoid. Lies in `[0, 1]`.
pub fn score(n: &Ivtrnn) -> f64 {
    ChannelMeans::with(n, mean).score()
}

/// Score through the `(a + 2b + d) / 4` reduction; only for triangular numbers.
pub fn score_triangular(n: &Ivtrnn) -> Result<f64> {
    if !n.is_triangular() {
        return Err(Error::NotTriangular);
    }
    Ok(ChannelMeans::with(n, mean_triangular).score())
}

/// `H = (T̲ + T̄ − F̲ − F̄) / 2`. Indeterminacy does not enter. Lies in `[-1, 1]`.
pub fn accuracy(n: &Ivtrnn) -> f64 {
    ChannelMeans::with(n, mean).accuracy()
}

pub fn accuracy_triangular(n: &Ivtrnn) -> Result<f64> {
    if !n.is_triangular() {
        return Err(Error::NotTriangular);
    }
    Ok(ChannelMeans::with(n, mean_triangular).accuracy())
}

fn cmp_within(x: f64, y: f64) -> Ordering {
    if (x - y).abs() <= TIE_TOLERANCE {
        Ordering::Equal
    } else if x > y {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Compares already computed `(score, accuracy)` pairs: score first, then
/// accuracy when the scores tie.
pub fn compare_scores(x: ScoreAccuracy, y: ScoreAccuracy) -> Ordering {
    cmp_within(x.score, y.score).then_with(|| cmp_within(x.accuracy, y.accuracy))
}

pub fn compare(x: &Ivtrnn, y: &Ivtrnn) -> Ordering {
    compare_scores(ScoreAccuracy::of(x), ScoreAccuracy::of(y))
}

fn check_inputs(numbers: &[Ivtrnn], w: &WeightVector) -> Result<()> {
    if numbers.is_empty() {
        return Err(Error::LengthMismatch { expected: 1, actual: 0 });
    }
    if numbers.len() != w.len() {
        return Err(Error::LengthMismatch { expected: w.len(), actual: numbers.len() });
    }
    Ok(())
}

fn combined_heights<'a>(levels: impl Iterator<Item = &'a Trnn>) -> Heights {
    levels.fold(Heights::default(), |acc, n| {
        let h = n.heights();
        Heights {
            truth: acc.truth.min(h.truth),
            indeterminacy: acc.indeterminacy.max(h.indeterminacy),
            falsity: acc.falsity.max(h.falsity),
        }
    })
}

fn aggregate_level(levels: &[&Trnn], w: &[f64]) -> Trnn {
    let fold = |pick: fn(&Trnn) -> &Trapezoid, truth: bool| {
        let mut out = [0.0; 4];
        for (k, slot) in out.iter_mut().enumerate() {
            let prod: f64 = levels
                .iter()
                .zip(w)
                .map(|(n, &wj)| {
                    let u = pick(n).components()[k];
                    if truth {
                        (1.0 - u).powf(wj)
                    } else {
                        u.powf(wj)
                    }
                })
                .product();
            *slot = if truth { 1.0 - prod } else { prod };
        }
        // relaxed weights can push a product above 1 only through rounding
        Trapezoid::from_components_unchecked(out.map(|v| v.clamp(0.0, 1.0)))
    };
    Trnn::from_parts_unchecked(
        fold(Trnn::truth, true),
        fold(Trnn::indeterminacy, false),
        fold(Trnn::falsity, false),
        combined_heights(levels.iter().copied()),
    )
}

/// Closed-form IVTrNWAA: truth components `1 − ∏(1 − u_j)^{w_j}`,
/// indeterminacy and falsity components `∏ u_j^{w_j}`, at both levels.
pub fn ivtrnwaa(numbers: &[Ivtrnn], w: &WeightVector) -> Result<Ivtrnn> {
    check_inputs(numbers, w)?;
    let lower: Vec<&Trnn> = numbers.iter().map(|n| &n.lower).collect();
    let upper: Vec<&Trnn> = numbers.iter().map(|n| &n.upper).collect();
    Ok(Ivtrnn::new(aggregate_level(&lower, w.weights()), aggregate_level(&upper, w.weights())))
}

/// `w₁ñ₁ ⊕ w₂ñ₂ ⊕ … ⊕ wₙñₙ` evaluated literally with the scalar-multiple and
/// addition laws. Serves as an independent check on [`ivtrnwaa`].
///
/// A zero weight contributes the ⊕-identity (carrying its number's heights).
pub fn ivtrnwaa_pairwise_oracle(numbers: &[Ivtrnn], w: &WeightVector) -> Result<Ivtrnn> {
    check_inputs(numbers, w)?;
    let mut acc = Ivtrnn::smallest();
    for (n, &wj) in numbers.iter().zip(w.weights()) {
        let term = if wj == 0.0 {
            let zero = |level: &Trnn| {
                let z = Trnn::zero();
                Trnn::with_heights(*z.truth(), *z.indeterminacy(), *z.falsity(), level.heights()).expect("valid heights")
            };
            Ivtrnn::new(zero(&n.lower), zero(&n.upper))
        } else {
            n.scale(wj)?
        };
        acc = acc.oplus(&term);
    }
    Ok(acc)
}
