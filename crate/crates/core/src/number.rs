//! Value types: unit intervals, trapezoids, trapezoidal neutrosophic numbers
//! (TrNN) and their interval-valued lower/upper pairs (IVTrNN), together with
//! membership-function evaluation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_unit(what: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange { what, value })
    }
}

/// A closed subinterval `[lo, hi]` of `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        check_unit("interval lower end", lo)?;
        check_unit("interval upper end", hi)?;
        if lo > hi {
            return Err(Error::Invalid(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(v: f64) -> Result<Self> {
        Self::new(v, v)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Endpoints as evaluated, without the `lo <= hi` requirement. Used where
    /// a pair of level values is reported as-is.
    pub(crate) fn unordered(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }
}

impl TryFrom<[f64; 2]> for UnitInterval {
    type Error = Error;

    fn try_from([lo, hi]: [f64; 2]) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<UnitInterval> for [f64; 2] {
    fn from(v: UnitInterval) -> Self {
        [v.lo, v.hi]
    }
}

/// Four ordered abscissae `0 <= a <= b <= c <= d <= 1`.
///
/// The same shape carries the truth `(a, b, c, d)`, indeterminacy
/// `(e, f, g, h)` and falsity `(l, m, n, p)` quadruples of a TrNN.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct Trapezoid([f64; 4]);

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for v in [a, b, c, d] {
            check_unit("trapezoid component", v)?;
        }
        if a > b || b > c || c > d {
            return Err(Error::OutOfOrder(a, b, c, d));
        }
        Ok(Self([a, b, c, d]))
    }

    /// Degenerate trapezoid collapsed onto a single abscissa.
    pub fn point(v: f64) -> Result<Self> {
        Self::new(v, v, v, v)
    }

    /// Wraps components that are known to be ordered and in range, such as
    /// the image of a valid trapezoid under a monotone map of `[0, 1]`.
    pub(crate) fn from_components_unchecked(c: [f64; 4]) -> Self {
        debug_assert!(
            c.iter().all(|v| (0.0..=1.0).contains(v)) && c[0] <= c[1] && c[1] <= c[2] && c[2] <= c[3],
            "invalid trapezoid {c:?}"
        );
        Self(c)
    }

    pub fn a(&self) -> f64 {
        self.0[0]
    }

    pub fn b(&self) -> f64 {
        self.0[1]
    }

    pub fn c(&self) -> f64 {
        self.0[2]
    }

    pub fn d(&self) -> f64 {
        self.0[3]
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    /// True when the plateau collapses to a point (`b == c`).
    pub fn is_triangular(&self) -> bool {
        self.0[1] == self.0[2]
    }

    pub(crate) fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self::from_components_unchecked(self.0.map(f))
    }

    pub(crate) fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        Self::from_components_unchecked(std::array::from_fn(|k| f(self.0[k], other.0[k])))
    }
}

impl TryFrom<[f64; 4]> for Trapezoid {
    type Error = Error;

    fn try_from([a, b, c, d]: [f64; 4]) -> Result<Self> {
        Self::new(a, b, c, d)
    }
}

impl From<Trapezoid> for [f64; 4] {
    fn from(t: Trapezoid) -> Self {
        t.0
    }
}

impl fmt::Display for Trapezoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(4);
        let [a, b, c, d] = self.0.map(|v| crate::round_half_even(v, p as u32));
        write!(f, "({a:.p$}, {b:.p$}, {c:.p$}, {d:.p$})")
    }
}

/// Which membership function of a neutrosophic number to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    Truth,
    Indeterminacy,
    Falsity,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Truth, Channel::Indeterminacy, Channel::Falsity];

    pub fn name(self) -> &'static str {
        match self {
            Channel::Truth => "truth",
            Channel::Indeterminacy => "indeterminacy",
            Channel::Falsity => "falsity",
        }
    }
}

/// Plateau heights of the three membership functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Heights {
    pub truth: f64,
    pub indeterminacy: f64,
    pub falsity: f64,
}

impl Default for Heights {
    fn default() -> Self {
        Self { truth: 1.0, indeterminacy: 0.0, falsity: 0.0 }
    }
}

impl Heights {
    pub fn new(truth: f64, indeterminacy: f64, falsity: f64) -> Result<Self> {
        check_unit("truth height", truth)?;
        check_unit("indeterminacy height", indeterminacy)?;
        check_unit("falsity height", falsity)?;
        Ok(Self { truth, indeterminacy, falsity })
    }

    pub fn get(&self, channel: Channel) -> f64 {
        match channel {
            Channel::Truth => self.truth,
            Channel::Indeterminacy => self.indeterminacy,
            Channel::Falsity => self.falsity,
        }
    }
}

/// Unvalidated wire form of a [`Trnn`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrnnLiteral {
    pub truth: [f64; 4],
    pub indeterminacy: [f64; 4],
    pub falsity: [f64; 4],
    #[serde(default)]
    pub heights: Heights,
}

/// Trapezoidal neutrosophic number: truth, indeterminacy and falsity
/// trapezoids with their plateau heights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TrnnLiteral", into = "TrnnLiteral")]
pub struct Trnn {
    truth: Trapezoid,
    indeterminacy: Trapezoid,
    falsity: Trapezoid,
    heights: Heights,
}

impl Trnn {
    /// Builds a TrNN with the normalized heights `(1, 0, 0)`.
    pub fn new(truth: Trapezoid, indeterminacy: Trapezoid, falsity: Trapezoid) -> Self {
        Self { truth, indeterminacy, falsity, heights: Heights::default() }
    }

    pub fn with_heights(truth: Trapezoid, indeterminacy: Trapezoid, falsity: Trapezoid, heights: Heights) -> Result<Self> {
        let heights = Heights::new(heights.truth, heights.indeterminacy, heights.falsity)?;
        Ok(Self { truth, indeterminacy, falsity, heights })
    }

    /// Convenience constructor from raw quadruples, default heights.
    pub fn from_arrays(truth: [f64; 4], indeterminacy: [f64; 4], falsity: [f64; 4]) -> Result<Self> {
        Ok(Self::new(truth.try_into()?, indeterminacy.try_into()?, falsity.try_into()?))
    }

    pub fn truth(&self) -> &Trapezoid {
        &self.truth
    }

    pub fn indeterminacy(&self) -> &Trapezoid {
        &self.indeterminacy
    }

    pub fn falsity(&self) -> &Trapezoid {
        &self.falsity
    }

    pub fn heights(&self) -> Heights {
        self.heights
    }

    pub fn channel(&self, channel: Channel) -> &Trapezoid {
        match channel {
            Channel::Truth => &self.truth,
            Channel::Indeterminacy => &self.indeterminacy,
            Channel::Falsity => &self.falsity,
        }
    }

    pub(crate) fn from_parts_unchecked(truth: Trapezoid, indeterminacy: Trapezoid, falsity: Trapezoid, heights: Heights) -> Self {
        Self { truth, indeterminacy, falsity, heights }
    }

    /// ⊕-identity `⟨(0,0,0,0), (1,1,1,1), (1,1,1,1)⟩`.
    pub fn zero() -> Self {
        Self::new(Trapezoid([0.0; 4]), Trapezoid([1.0; 4]), Trapezoid([1.0; 4]))
    }

    /// ⊗-identity `⟨(1,1,1,1), (0,0,0,0), (0,0,0,0)⟩`.
    pub fn one() -> Self {
        Self::new(Trapezoid([1.0; 4]), Trapezoid([0.0; 4]), Trapezoid([0.0; 4]))
    }

    /// Membership degree of `x` in the given channel.
    ///
    /// Truth is 0 outside its support, rises linearly to the truth height,
    /// holds it over the plateau and falls back. Indeterminacy and falsity
    /// are 1 outside their support and interpolate linearly between 1 and
    /// their height on the ramps. A degenerate ramp (`a == b`, `c == d`)
    /// takes the plateau value at its knot.
    pub fn membership(&self, x: f64, channel: Channel) -> f64 {
        let [a, b, c, d] = self.channel(channel).components();
        let h = self.heights.get(channel);
        match channel {
            Channel::Truth => {
                if x < a || x > d {
                    0.0
                } else if x < b {
                    (x - a) / (b - a) * h
                } else if x <= c {
                    h
                } else {
                    (d - x) / (d - c) * h
                }
            }
            Channel::Indeterminacy | Channel::Falsity => {
                if x < a || x > d {
                    1.0
                } else if x < b {
                    (b - x + h * (x - a)) / (b - a)
                } else if x <= c {
                    h
                } else {
                    (x - c + h * (d - x)) / (d - c)
                }
            }
        }
    }

    pub fn is_triangular(&self) -> bool {
        Channel::ALL.iter().all(|&ch| self.channel(ch).is_triangular())
    }
}

impl TryFrom<TrnnLiteral> for Trnn {
    type Error = Error;

    fn try_from(lit: TrnnLiteral) -> Result<Self> {
        Self::with_heights(lit.truth.try_into()?, lit.indeterminacy.try_into()?, lit.falsity.try_into()?, lit.heights)
    }
}

impl From<Trnn> for TrnnLiteral {
    fn from(n: Trnn) -> Self {
        Self {
            truth: n.truth.components(),
            indeterminacy: n.indeterminacy.components(),
            falsity: n.falsity.components(),
            heights: n.heights,
        }
    }
}

impl fmt::Display for Trnn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(4);
        write!(f, "⟨{:.p$}, {:.p$}, {:.p$}⟩", self.truth, self.indeterminacy, self.falsity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Lower,
    Upper,
}

impl Level {
    pub const BOTH: [Level; 2] = [Level::Lower, Level::Upper];

    pub fn name(self) -> &'static str {
        match self {
            Level::Lower => "lower",
            Level::Upper => "upper",
        }
    }
}

/// One component where the lower level is not contained in the upper level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionViolation {
    pub channel: Channel,
    pub index: usize,
    pub lower: f64,
    pub upper: f64,
}

impl fmt::Display for InclusionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.channel {
            Channel::Truth => "<=",
            _ => ">=",
        };
        write!(
            f,
            "{} component {}: lower {} {} upper {} does not hold",
            self.channel.name(),
            self.index + 1,
            self.lower,
            rel,
            self.upper
        )
    }
}

/// Interval-valued trapezoidal neutrosophic number: a lower and an upper TrNN.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ivtrnn {
    pub lower: Trnn,
    pub upper: Trnn,
}

impl Ivtrnn {
    pub fn new(lower: Trnn, upper: Trnn) -> Self {
        Self { lower, upper }
    }

    /// Both levels equal to `n`.
    pub fn degenerate(n: Trnn) -> Self {
        Self { lower: n, upper: n }
    }

    pub fn level(&self, level: Level) -> &Trnn {
        match level {
            Level::Lower => &self.lower,
            Level::Upper => &self.upper,
        }
    }

    /// `⟨[(1,1,1,1),(1,1,1,1)], [(0,0,0,0),(0,0,0,0)], [(0,0,0,0),(0,0,0,0)]⟩`.
    pub fn largest() -> Self {
        Self::degenerate(Trnn::one())
    }

    /// `⟨[(0,0,0,0),(0,0,0,0)], [(1,1,1,1),(1,1,1,1)], [(1,1,1,1),(1,1,1,1)]⟩`.
    pub fn smallest() -> Self {
        Self::degenerate(Trnn::zero())
    }

    /// `(lower value, upper value)` of the channel at `x`, not reordered.
    pub fn membership(&self, x: f64, channel: Channel) -> UnitInterval {
        UnitInterval::unordered(self.lower.membership(x, channel), self.upper.membership(x, channel))
    }

    /// True iff `b = c`, `f = g` and `m = n` at both levels.
    pub fn is_triangular(&self) -> bool {
        self.lower.is_triangular() && self.upper.is_triangular()
    }

    /// Componentwise check of `lower ⊆ upper`: truth lower <= upper,
    /// indeterminacy and falsity lower >= upper. Advisory only.
    pub fn inclusion_violations(&self) -> Vec<InclusionViolation> {
        let mut out = Vec::new();
        for channel in Channel::ALL {
            let lo = self.lower.channel(channel).components();
            let hi = self.upper.channel(channel).components();
            for index in 0..4 {
                let ok = match channel {
                    Channel::Truth => lo[index] <= hi[index],
                    _ => lo[index] >= hi[index],
                };
                if !ok {
                    out.push(InclusionViolation { channel, index, lower: lo[index], upper: hi[index] });
                }
            }
        }
        out
    }
}

impl fmt::Display for Ivtrnn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(4);
        write!(f, "[{:.p$}, {:.p$}]", self.lower, self.upper)
    }
}

/// Triangular membership with support `(a, c)` and peak at `m`.
pub fn eval_triangular(x: f64, a: f64, m: f64, c: f64) -> Result<f64> {
    if !(a < m && m < c) {
        return Err(Error::DegenerateSupport { a, m, c });
    }
    Ok(if x <= a || x >= c {
        0.0
    } else if x < m {
        (x - a) / (m - a)
    } else if x == m {
        1.0
    } else {
        (c - x) / (c - m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn low() -> Trnn {
        Trnn::from_arrays([0.2, 0.3, 0.4, 0.5], [0.0, 0.1, 0.2, 0.3], [0.0, 0.1, 0.2, 0.2]).unwrap()
    }

    fn high() -> Trnn {
        Trnn::from_arrays([0.4, 0.5, 0.6, 0.7], [0.0, 0.1, 0.2, 0.3], [0.1, 0.1, 0.1, 0.1]).unwrap()
    }

    #[test]
    fn trapezoid_validation() {
        assert!(Trapezoid::new(0.2, 0.3, 0.4, 0.5).is_ok());
        assert!(Trapezoid::new(0.1, 0.1, 0.1, 0.1).is_ok());
        assert!(matches!(Trapezoid::new(0.5, 0.4, 0.6, 0.7), Err(Error::OutOfOrder(..))));
        assert!(matches!(Trapezoid::new(-0.1, 0.2, 0.3, 0.4), Err(Error::OutOfRange { .. })));
        assert!(matches!(Trapezoid::new(0.1, 0.2, 0.3, 1.2), Err(Error::OutOfRange { .. })));
        assert!(matches!(Trapezoid::new(f64::NAN, 0.2, 0.3, 0.4), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn triangular_membership() {
        assert_eq!(eval_triangular(0.3, 0.1, 0.3, 0.9).unwrap(), 1.0);
        assert_eq!(eval_triangular(0.05, 0.1, 0.3, 0.9).unwrap(), 0.0);
        assert_eq!(eval_triangular(0.1, 0.1, 0.3, 0.9).unwrap(), 0.0);
        assert_eq!(eval_triangular(0.95, 0.1, 0.3, 0.9).unwrap(), 0.0);
        assert!((eval_triangular(0.25, 0.0, 0.5, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((eval_triangular(0.75, 0.0, 0.5, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(eval_triangular(0.2, 0.2, 0.2, 0.5), Err(Error::DegenerateSupport { .. })));
        assert!(matches!(eval_triangular(0.2, 0.1, 0.5, 0.5), Err(Error::DegenerateSupport { .. })));
    }

    #[test]
    fn trnn_membership_examples() {
        let n = low();
        assert_eq!(n.membership(0.35, Channel::Truth), 1.0);
        assert!((n.membership(0.25, Channel::Truth) - 0.5).abs() < 1e-12);
        assert_eq!(n.membership(0.6, Channel::Truth), 0.0);
        assert_eq!(n.membership(0.9, Channel::Indeterminacy), 1.0);
        assert_eq!(n.membership(0.15, Channel::Indeterminacy), 0.0);
        // falsity (0, .1, .2, .2), height 0: ramp from 1 at x=0 to 0 at x=.1
        assert!((n.membership(0.05, Channel::Falsity) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn degenerate_ramps_take_plateau_value() {
        let point = Trnn::from_arrays([0.7; 4], [0.1; 4], [0.1; 4]).unwrap();
        assert_eq!(point.membership(0.7, Channel::Truth), 1.0);
        assert_eq!(point.membership(0.1, Channel::Indeterminacy), 0.0);
        assert_eq!(point.membership(0.7000001, Channel::Truth), 0.0);
        // falsity (0, .1, .2, .2): right ramp collapses at 0.2
        assert_eq!(low().membership(0.2, Channel::Falsity), 0.0);
    }

    #[test]
    fn heights_scale_truth_and_bound_others() {
        let t = Trapezoid::new(0.2, 0.3, 0.4, 0.5).unwrap();
        let n = Trnn::with_heights(t, t, t, Heights::new(0.8, 0.3, 0.2).unwrap()).unwrap();
        assert!((n.membership(0.35, Channel::Truth) - 0.8).abs() < 1e-15);
        assert!((n.membership(0.25, Channel::Truth) - 0.4).abs() < 1e-12);
        assert!((n.membership(0.25, Channel::Indeterminacy) - 0.65).abs() < 1e-12);
        assert!((n.membership(0.45, Channel::Falsity) - 0.6).abs() < 1e-12);
        assert!(Heights::new(1.2, 0.0, 0.0).is_err());
    }

    #[test]
    fn ivtrnn_membership_low_high() {
        let n = Ivtrnn::new(low(), high());
        let v = n.membership(0.45, Channel::Truth);
        // lower on its falling ramp, upper on its rising ramp
        assert!((v.lo() - 0.5).abs() < 1e-12);
        assert!((v.hi() - 0.5).abs() < 1e-12);
        let v = n.membership(0.55, Channel::Truth);
        assert_eq!((v.lo(), v.hi()), (0.0, 1.0));
        let v = n.membership(0.95, Channel::Truth);
        assert_eq!((v.lo(), v.hi()), (0.0, 0.0));
        let d = Ivtrnn::degenerate(low());
        for x in [0.0, 0.1, 0.25, 0.33, 0.45, 0.9] {
            for ch in Channel::ALL {
                let v = d.membership(x, ch);
                assert_eq!(v.lo(), v.hi());
            }
        }
    }

    #[test]
    fn triangular_detection() {
        let vh_point = Trnn::from_arrays([0.7; 4], [0.1; 4], [0.1; 4]).unwrap();
        assert!(Ivtrnn::degenerate(vh_point).is_triangular());
        assert!(!Ivtrnn::degenerate(low()).is_triangular());
        assert!(!Ivtrnn::new(vh_point, low()).is_triangular());
    }

    #[test]
    fn inclusion_advisory_flags_low_high_falsity() {
        let v = Ivtrnn::new(low(), high()).inclusion_violations();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.channel == Channel::Falsity));
        assert!(Ivtrnn::degenerate(low()).inclusion_violations().is_empty());
    }

    #[test]
    fn serde_round_trip_and_rejection() {
        let n = Ivtrnn::new(low(), high());
        let s = serde_json::to_string(&n).unwrap();
        let back: Ivtrnn = serde_json::from_str(&s).unwrap();
        assert_eq!(n, back);
        let bad = r#"{"truth":[0.5,0.4,0.6,0.7],"indeterminacy":[0,0,0,0],"falsity":[0,0,0,0]}"#;
        assert!(serde_json::from_str::<Trnn>(bad).is_err());
        let no_heights = r#"{"truth":[0.5,0.5,0.6,0.7],"indeterminacy":[0,0,0,0],"falsity":[0,0,0,0]}"#;
        assert_eq!(serde_json::from_str::<Trnn>(no_heights).unwrap().heights(), Heights::default());
    }
}
