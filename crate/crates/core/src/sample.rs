//! Finitely supported weighted samples and their moments up to order four.

use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance on `|sum(weights) - 1|` accepted before renormalization.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// A discrete distribution: values `x_i` with probabilities `p_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedSample {
    values: Vec<f64>,
    weights: Vec<f64>,
    #[serde(skip)]
    equal_weights: bool,
}

impl WeightedSample {
    /// Builds a sample with explicit weights.
    ///
    /// Weights must be nonnegative and sum to one within [`WEIGHT_SUM_TOL`];
    /// they are then renormalized so the sum is as close to one as floating
    /// point allows. If every weight is identical the sample is treated as
    /// equally weighted and each weight is set to exactly `1/n`.
    pub fn new(values: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.len() != weights.len() {
            return Err(Error::InvalidWeights(format!(
                "{} values but {} weights",
                values.len(),
                weights.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sample value"));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidWeights(format!("weight {w} is negative or non-finite")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, not 1")));
        }
        if weights.iter().all(|w| *w == weights[0]) {
            return Self::equal(values);
        }
        let weights = if sum == 1.0 {
            weights
        } else {
            weights.into_iter().map(|w| w / sum).collect()
        };
        Ok(WeightedSample {
            values,
            weights,
            equal_weights: false,
        })
    }

    /// Builds an equally weighted sample, `p_i = 1/n`.
    pub fn equal(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sample value"));
        }
        let p = 1.0 / values.len() as f64;
        Ok(WeightedSample {
            weights: vec![p; values.len()],
            values,
            equal_weights: true,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn is_equally_weighted(&self) -> bool {
        self.equal_weights
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    fn is_constant(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0])
    }

    /// Applies `x -> a x + b` to every value, keeping the weights.
    pub fn affine(&self, a: f64, b: f64) -> Self {
        WeightedSample {
            values: self.values.iter().map(|x| a * x + b).collect(),
            weights: self.weights.clone(),
            equal_weights: self.equal_weights,
        }
    }
}

/// Closed interval `[lower, upper]` containing the support.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportInterval {
    lower: f64,
    upper: f64,
}

impl SupportInterval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() || lower > upper {
            return Err(Error::InvalidInterval { lower, upper });
        }
        Ok(SupportInterval { lower, upper })
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn range(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    /// True when `self` lies inside `other`.
    pub fn within(&self, other: &SupportInterval) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }

    /// Slack allowed when checking that a computed mean lies in the interval.
    pub(crate) fn mean_tolerance(&self) -> f64 {
        1e-12 * self.lower.abs().max(self.upper.abs()).max(1.0)
    }

    /// Distances `(mean - lower, upper - mean)`, both clamped at zero.
    pub(crate) fn mean_offsets(&self, mean: f64) -> Result<(f64, f64)> {
        let tol = self.mean_tolerance();
        if !mean.is_finite() || mean < self.lower - tol || mean > self.upper + tol {
            return Err(Error::MeanOutOfSupport {
                mean,
                lower: self.lower,
                upper: self.upper,
            });
        }
        Ok(((mean - self.lower).max(0.0), (self.upper - mean).max(0.0)))
    }
}

/// Raw and central moments up to order four with derived shape statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentSet {
    pub mean: f64,
    pub raw2: f64,
    pub raw3: f64,
    pub raw4: f64,
    pub mu2: f64,
    pub mu3: f64,
    pub mu4: f64,
    /// `mu3 / mu2^{3/2}`
    pub skewness: Option<f64>,
    /// `mu4 / mu2^2`
    pub kurtosis: Option<f64>,
    /// `range / sqrt(mu2)`
    pub studentized_range: Option<f64>,
    /// Coefficient of dispersion `sqrt(mu2) / mean`.
    pub dispersion: Option<f64>,
}

impl MomentSet {
    /// Builds a moment set from given moments, deriving the ratio statistics.
    ///
    /// Raw moments are not needed by most bounds and are reconstructed from
    /// the mean and central moments.
    pub fn from_central(mean: f64, mu2: f64, mu3: f64, mu4: f64, range: f64) -> Self {
        let m2 = mean * mean;
        let raw2 = mu2 + m2;
        let raw3 = mu3 + 3.0 * mean * mu2 + m2 * mean;
        let raw4 = mu4 + 4.0 * mean * mu3 + 6.0 * m2 * mu2 + m2 * m2;
        Self::assemble(mean, [raw2, raw3, raw4], [mu2, mu3, mu4], range)
    }

    fn assemble(mean: f64, raw: [f64; 3], central: [f64; 3], range: f64) -> Self {
        let [mu2, mu3, mu4] = central;
        let positive = mu2 > 0.0;
        MomentSet {
            mean,
            raw2: raw[0],
            raw3: raw[1],
            raw4: raw[2],
            mu2,
            mu3,
            mu4,
            skewness: positive.then(|| mu3 / (mu2 * mu2.sqrt())),
            kurtosis: positive.then(|| mu4 / (mu2 * mu2)),
            studentized_range: positive.then(|| range / mu2.sqrt()),
            dispersion: (mean != 0.0).then(|| mu2.sqrt() / mean),
        }
    }
}

/// Central moments `(mu2, mu3, mu4)` from raw moments by the binomial identities.
///
/// Kept as a cross-check of the two-pass computation; it loses accuracy when
/// the spread is small relative to the mean.
pub fn central_from_raw(mean: f64, raw2: f64, raw3: f64, raw4: f64) -> (f64, f64, f64) {
    let m2 = mean * mean;
    let mu2 = raw2 - m2;
    let mu3 = raw3 - 3.0 * mean * raw2 + 2.0 * m2 * mean;
    let mu4 = raw4 - 4.0 * mean * raw3 + 6.0 * m2 * raw2 - 3.0 * m2 * m2;
    (mu2, mu3, mu4)
}

/// Moments of `sample`, which must lie inside `interval`.
///
/// Uses two passes: the mean first, then powers of the centered values.
pub fn compute_moments(sample: &WeightedSample, interval: &SupportInterval) -> Result<MomentSet> {
    if let Some(&value) = sample.values.iter().find(|x| !interval.contains(**x)) {
        return Err(Error::ValueOutOfSupport {
            value,
            lower: interval.lower,
            upper: interval.upper,
        });
    }
    let pairs = || sample.values.iter().zip(&sample.weights);

    let mean = if sample.is_constant() {
        sample.values[0]
    } else {
        pairs().map(|(x, p)| p * x).sum()
    };

    let mut raw = [0.0; 3];
    let mut central = [0.0; 3];
    for (&x, &p) in pairs() {
        let x2 = x * x;
        raw[0] += p * x2;
        raw[1] += p * x2 * x;
        raw[2] += p * x2 * x2;
        let d = x - mean;
        let d2 = d * d;
        central[0] += p * d2;
        central[1] += p * d2 * d;
        central[2] += p * d2 * d2;
    }
    Ok(MomentSet::assemble(mean, raw, central, interval.range()))
}

/// Tightest interval containing the sample, `[min x_i, max x_i]`.
pub fn validate_support(sample: &WeightedSample) -> SupportInterval {
    SupportInterval {
        lower: sample.min(),
        upper: sample.max(),
    }
}
