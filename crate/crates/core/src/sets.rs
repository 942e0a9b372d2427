//! Discrete single-valued (SVNS) and interval-valued (IVNS) neutrosophic sets
//! with the pointwise set laws: addition, multiplication, union,
//! intersection, complement, inclusion and equality.

use serde::{Deserialize, Serialize};

use crate::arithmetic::probabilistic_sum;
use crate::error::{Error, Result};
use crate::number::UnitInterval;

/// Pointwise behaviour shared by SVNS and IVNS membership triples.
pub trait NeutroElement: Copy + PartialEq {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn union(&self, other: &Self) -> Self;
    fn intersection(&self, other: &Self) -> Self;
    fn complement(&self) -> Self;
    /// `T_self <= T_other`, `I_self >= I_other`, `F_self >= F_other`.
    fn included_in(&self, other: &Self) -> bool;
    /// Largest absolute difference over all stored components.
    fn max_abs_diff(&self, other: &Self) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SvnsElement {
    t: f64,
    i: f64,
    f: f64,
}

impl SvnsElement {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        for (what, v) in [("truth", t), ("indeterminacy", i), ("falsity", f)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        Ok(Self { t, i, f })
    }

    pub fn truth(&self) -> f64 {
        self.t
    }

    pub fn indeterminacy(&self) -> f64 {
        self.i
    }

    pub fn falsity(&self) -> f64 {
        self.f
    }

    pub fn triple(&self) -> (f64, f64, f64) {
        (self.t, self.i, self.f)
    }
}

impl NeutroElement for SvnsElement {
    fn add(&self, o: &Self) -> Self {
        Self { t: probabilistic_sum(self.t, o.t), i: self.i * o.i, f: self.f * o.f }
    }

    fn mul(&self, o: &Self) -> Self {
        Self { t: self.t * o.t, i: probabilistic_sum(self.i, o.i), f: probabilistic_sum(self.f, o.f) }
    }

    fn union(&self, o: &Self) -> Self {
        Self { t: self.t.max(o.t), i: self.i.min(o.i), f: self.f.min(o.f) }
    }

    fn intersection(&self, o: &Self) -> Self {
        Self { t: self.t.min(o.t), i: self.i.max(o.i), f: self.f.max(o.f) }
    }

    fn complement(&self) -> Self {
        Self { t: self.f, i: 1.0 - self.i, f: self.t }
    }

    fn included_in(&self, o: &Self) -> bool {
        self.t <= o.t && self.i >= o.i && self.f >= o.f
    }

    fn max_abs_diff(&self, o: &Self) -> f64 {
        (self.t - o.t).abs().max((self.i - o.i).abs()).max((self.f - o.f).abs())
    }
}

/// Interval-valued triple. Laws act on matching endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IvnsElement {
    t: UnitInterval,
    i: UnitInterval,
    f: UnitInterval,
}

fn lift(x: UnitInterval, y: UnitInterval, op: impl Fn(f64, f64) -> f64) -> UnitInterval {
    // every op here is monotone in both arguments, so the ends stay ordered
    UnitInterval::new(op(x.lo(), y.lo()), op(x.hi(), y.hi())).expect("monotone op keeps interval ordered")
}

impl IvnsElement {
    pub fn new(t: UnitInterval, i: UnitInterval, f: UnitInterval) -> Self {
        Self { t, i, f }
    }

    pub fn from_pairs(t: [f64; 2], i: [f64; 2], f: [f64; 2]) -> Result<Self> {
        Ok(Self { t: t.try_into()?, i: i.try_into()?, f: f.try_into()? })
    }

    pub fn truth(&self) -> UnitInterval {
        self.t
    }

    pub fn indeterminacy(&self) -> UnitInterval {
        self.i
    }

    pub fn falsity(&self) -> UnitInterval {
        self.f
    }
}

impl NeutroElement for IvnsElement {
    fn add(&self, o: &Self) -> Self {
        Self { t: lift(self.t, o.t, probabilistic_sum), i: lift(self.i, o.i, |u, v| u * v), f: lift(self.f, o.f, |u, v| u * v) }
    }

    fn mul(&self, o: &Self) -> Self {
        Self { t: lift(self.t, o.t, |u, v| u * v), i: lift(self.i, o.i, probabilistic_sum), f: lift(self.f, o.f, probabilistic_sum) }
    }

    fn union(&self, o: &Self) -> Self {
        Self { t: lift(self.t, o.t, f64::max), i: lift(self.i, o.i, f64::min), f: lift(self.f, o.f, f64::min) }
    }

    fn intersection(&self, o: &Self) -> Self {
        Self { t: lift(self.t, o.t, f64::min), i: lift(self.i, o.i, f64::max), f: lift(self.f, o.f, f64::max) }
    }

    fn complement(&self) -> Self {
        // 1 - [lo, hi] = [1 - hi, 1 - lo]
        let i = UnitInterval::new(1.0 - self.i.hi(), 1.0 - self.i.lo()).expect("complement of a unit interval");
        Self { t: self.f, i, f: self.t }
    }

    fn included_in(&self, o: &Self) -> bool {
        self.t.lo() <= o.t.lo()
            && self.t.hi() <= o.t.hi()
            && self.i.lo() >= o.i.lo()
            && self.i.hi() >= o.i.hi()
            && self.f.lo() >= o.f.lo()
            && self.f.hi() >= o.f.hi()
    }

    fn max_abs_diff(&self, o: &Self) -> f64 {
        [(self.t, o.t), (self.i, o.i), (self.f, o.f)]
            .iter()
            .map(|(x, y)| (x.lo() - y.lo()).abs().max((x.hi() - y.hi()).abs()))
            .fold(0.0, f64::max)
    }
}

/// A neutrosophic set over a finite, ordered universe of named points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteNeutroSet<E> {
    entries: Vec<(String, E)>,
}

pub type SvnsSet = DiscreteNeutroSet<SvnsElement>;
pub type IvnsSet = DiscreteNeutroSet<IvnsElement>;

impl<E: NeutroElement> DiscreteNeutroSet<E> {
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, E)>) -> Result<Self> {
        let entries: Vec<(String, E)> = entries.into_iter().map(|(n, e)| (n.into(), e)).collect();
        for (k, (name, _)) in entries.iter().enumerate() {
            if entries[..k].iter().any(|(other, _)| other == name) {
                return Err(Error::Invalid(format!("duplicate universe point {name:?}")));
            }
        }
        Ok(Self { entries })
    }

    pub fn universe(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&E> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &E)> {
        self.entries.iter().map(|(n, e)| (n.as_str(), e))
    }

    /// Pairs every point of `self` with the same point of `other`; the
    /// universes must hold the same names.
    fn aligned<'a>(&'a self, other: &'a Self) -> Result<Vec<(&'a str, &'a E, &'a E)>> {
        if self.len() != other.len() {
            return Err(Error::UniverseMismatch(format!("{} points vs {}", self.len(), other.len())));
        }
        self.entries
            .iter()
            .map(|(name, a)| {
                other
                    .get(name)
                    .map(|b| (name.as_str(), a, b))
                    .ok_or_else(|| Error::UniverseMismatch(format!("{name:?} missing from right operand")))
            })
            .collect()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&E, &E) -> E) -> Result<Self> {
        let entries = self.aligned(other)?.into_iter().map(|(n, a, b)| (n.to_owned(), op(a, b))).collect();
        Ok(Self { entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, E::add)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, E::mul)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, E::union)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, E::intersection)
    }

    pub fn complement(&self) -> Self {
        Self { entries: self.entries.iter().map(|(n, e)| (n.clone(), e.complement())).collect() }
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        Ok(self.aligned(other)?.into_iter().all(|(_, a, b)| a.included_in(b)))
    }

    /// Largest componentwise deviation between two sets over the same universe.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.aligned(other)?.into_iter().map(|(_, a, b)| a.max_abs_diff(b)).fold(0.0, f64::max))
    }

    /// Mutual inclusion.
    pub fn set_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}

/// The worked example sets over named requirement points.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSets {
    /// SVNS over SECU, MAIN, AVAIL (continuous requirements).
    pub continuous_svns: SvnsSet,
    /// SVNS over BKUP, MIRR (discrete requirements).
    pub discrete_svns: SvnsSet,
    /// IVNS over SECU, AVAIL.
    pub continuous_ivns: IvnsSet,
    /// IVNS over BKUP, MIRR.
    pub discrete_ivns: IvnsSet,
}

pub fn reference_sets() -> ReferenceSets {
    let sv = |t, i, f| SvnsElement::new(t, i, f).expect("reference SVNS value");
    let iv = |t, i, f| IvnsElement::from_pairs(t, i, f).expect("reference IVNS value");
    ReferenceSets {
        continuous_svns: SvnsSet::new([("SECU", sv(0.2, 0.3, 0.4)), ("MAIN", sv(0.3, 0.5, 0.6)), ("AVAIL", sv(0.5, 0.2, 0.3))]).unwrap(),
        discrete_svns: SvnsSet::new([("BKUP", sv(0.7, 0.2, 0.2)), ("MIRR", sv(0.4, 0.2, 0.4))]).unwrap(),
        continuous_ivns: IvnsSet::new([
            ("SECU", iv([0.1, 0.3], [0.3, 0.5], [0.5, 0.8])),
            ("AVAIL", iv([0.1, 0.4], [0.0, 0.2], [0.5, 0.8])),
        ])
        .unwrap(),
        discrete_ivns: IvnsSet::new([
            ("BKUP", iv([0.1, 0.3], [0.0, 0.2], [0.5, 0.7])),
            ("MIRR", iv([0.2, 0.4], [0.0, 0.1], [0.4, 0.8])),
        ])
        .unwrap(),
    }
}
