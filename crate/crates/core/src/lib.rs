//! Interval-valued trapezoidal neutrosophic numbers (IVTrNN).
//!
//! The crate provides the value types and their membership functions
//! ([`number`]), the operational laws ([`arithmetic`]), discrete neutrosophic
//! set laws ([`sets`]), score/accuracy ranking and the weighted arithmetic
//! averaging operator ([`ranking`]), a multi-attribute decision-making
//! pipeline ([`madm`]) with an embedded worked example ([`reference`]), and
//! the problem-file format and commands behind the `ivtrnn` binary ([`cli`]).
//!
//! ```
//! use ivtrnn::{ivtrnwaa, reference::reference_scale, score, Ivtrnn, WeightVector};
//!
//! let scale = reference_scale();
//! let low_high = Ivtrnn::new(*scale.get("Low")?, *scale.get("High")?);
//! let very_high = Ivtrnn::degenerate(*scale.get("Very High")?);
//! let w = WeightVector::strict(vec![0.4, 0.6])?;
//! let combined = ivtrnwaa(&[low_high, very_high], &w)?;
//! assert!(score(&combined) > score(&low_high));
//! # Ok::<(), ivtrnn::Error>(())
//! ```

pub mod arithmetic;
pub mod cli;
pub mod error;
pub mod madm;
pub mod number;
pub mod ranking;
pub mod reference;
pub mod sets;

pub use arithmetic::NeutrosophicOps;
pub use error::{Error, Result};
pub use madm::{build_decision_matrix, rank_alternatives, DecisionMatrix, IntervalLinguisticMatrix, LinguisticScale, RankingReport};
pub use number::{eval_triangular, Channel, Heights, Ivtrnn, Level, Trapezoid, Trnn, UnitInterval};
pub use ranking::{
    accuracy, accuracy_triangular, compare, ivtrnwaa, ivtrnwaa_pairwise_oracle, score, score_triangular, ScoreAccuracy, WeightMode,
    WeightVector,
};

/// Rounds to `places` decimals, ties to even. Used for display only.
pub fn round_half_even(x: f64, places: u32) -> f64 {
    let s = 10f64.powi(places as i32);
    (x * s).round_ties_even() / s
}

/// Largest absolute difference over the 24 coordinates of two IVTrNNs.
pub fn max_abs_diff(x: &Ivtrnn, y: &Ivtrnn) -> f64 {
    let mut m: f64 = 0.0;
    for level in Level::BOTH {
        for channel in Channel::ALL {
            let a = x.level(level).channel(channel).components();
            let b = y.level(level).channel(channel).components();
            for k in 0..4 {
                m = m.max((a[k] - b[k]).abs());
            }
        }
    }
    m
}
