//! Operational laws ⊕, ⊗, scalar multiple and power for TrNN and IVTrNN.
//!
//! Every law acts componentwise on the twelve trapezoid coordinates. The
//! IVTrNN laws apply the TrNN law at the lower and upper level independently.

use crate::error::{Error, Result};
use crate::number::{Heights, Ivtrnn, Trnn};

/// `u + v - uv`, evaluated as `1 - (1-u)(1-v)` so the result stays in `[0, 1]`.
#[inline]
pub(crate) fn probabilistic_sum(u: f64, v: f64) -> f64 {
    1.0 - (1.0 - u) * (1.0 - v)
}

/// `1 - (1-u)^λ`
#[inline]
pub(crate) fn dual_power(u: f64, lambda: f64) -> f64 {
    1.0 - (1.0 - u).powf(lambda)
}

pub(crate) fn check_lambda(lambda: f64) -> Result<f64> {
    if lambda.is_nan() || lambda <= 0.0 {
        Err(Error::NonPositiveLambda(lambda))
    } else if !lambda.is_finite() {
        Err(Error::NonFiniteLambda(lambda))
    } else {
        Ok(lambda)
    }
}

fn combine_heights(x: Heights, y: Heights) -> Heights {
    Heights {
        truth: x.truth.min(y.truth),
        indeterminacy: x.indeterminacy.max(y.indeterminacy),
        falsity: x.falsity.max(y.falsity),
    }
}

/// The four operational laws.
pub trait NeutrosophicOps: Sized {
    /// `x ⊕ y`
    fn oplus(&self, other: &Self) -> Self;
    /// `x ⊗ y`
    fn otimes(&self, other: &Self) -> Self;
    /// `λx`, `λ > 0`
    fn scale(&self, lambda: f64) -> Result<Self>;
    /// `x^λ`, `λ > 0`
    fn pow(&self, lambda: f64) -> Result<Self>;
}

impl NeutrosophicOps for Trnn {
    fn oplus(&self, other: &Self) -> Self {
        Trnn::from_parts_unchecked(
            self.truth().zip_with(other.truth(), probabilistic_sum),
            self.indeterminacy().zip_with(other.indeterminacy(), |u, v| u * v),
            self.falsity().zip_with(other.falsity(), |u, v| u * v),
            combine_heights(self.heights(), other.heights()),
        )
    }

    fn otimes(&self, other: &Self) -> Self {
        Trnn::from_parts_unchecked(
            self.truth().zip_with(other.truth(), |u, v| u * v),
            self.indeterminacy().zip_with(other.indeterminacy(), probabilistic_sum),
            self.falsity().zip_with(other.falsity(), probabilistic_sum),
            combine_heights(self.heights(), other.heights()),
        )
    }

    fn scale(&self, lambda: f64) -> Result<Self> {
        let lambda = check_lambda(lambda)?;
        Ok(Trnn::from_parts_unchecked(
            self.truth().map(|u| dual_power(u, lambda)),
            self.indeterminacy().map(|u| u.powf(lambda)),
            self.falsity().map(|u| u.powf(lambda)),
            self.heights(),
        ))
    }

    fn pow(&self, lambda: f64) -> Result<Self> {
        let lambda = check_lambda(lambda)?;
        Ok(Trnn::from_parts_unchecked(
            self.truth().map(|u| u.powf(lambda)),
            self.indeterminacy().map(|u| dual_power(u, lambda)),
            self.falsity().map(|u| dual_power(u, lambda)),
            self.heights(),
        ))
    }
}

impl NeutrosophicOps for Ivtrnn {
    fn oplus(&self, other: &Self) -> Self {
        Ivtrnn::new(self.lower.oplus(&other.lower), self.upper.oplus(&other.upper))
    }

    fn otimes(&self, other: &Self) -> Self {
        Ivtrnn::new(self.lower.otimes(&other.lower), self.upper.otimes(&other.upper))
    }

    fn scale(&self, lambda: f64) -> Result<Self> {
        Ok(Ivtrnn::new(self.lower.scale(lambda)?, self.upper.scale(lambda)?))
    }

    fn pow(&self, lambda: f64) -> Result<Self> {
        Ok(Ivtrnn::new(self.lower.pow(lambda)?, self.upper.pow(lambda)?))
    }
}
