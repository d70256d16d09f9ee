use serde::Serialize;

use super::*;
use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::sample::{compute_moments, MomentSet, SupportInterval, WeightedSample};

/// A formula that could not be evaluated for the given sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Skipped {
    #[serde(rename = "formula_id")]
    pub formula: Formula,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub moments: MomentSet,
    pub bounds: Vec<Bound>,
    pub skipped: Vec<Skipped>,
}

impl SuiteReport {
    pub fn violations(&self) -> impl Iterator<Item = &Bound> {
        self.bounds.iter().filter(|b| b.holds() == Some(false))
    }
}

struct Collector {
    bounds: Vec<Bound>,
    skipped: Vec<Skipped>,
}

impl Collector {
    fn push(&mut self, formula: Formula, result: Result<Vec<Bound>>) {
        match result {
            Ok(bounds) => self.bounds.extend(bounds),
            Err(e) => self.skip(formula, e.to_string()),
        }
    }

    fn skip(&mut self, formula: Formula, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            formula,
            reason: reason.into(),
        });
    }
}

/// Evaluates every applicable inequality against the sample's own moments.
///
/// Bounds that need `n` equally weighted points are only evaluated for
/// equally weighted samples. Formulas whose preconditions fail are reported
/// in [`SuiteReport::skipped`] instead of aborting the run.
pub fn run_suite(sample: &WeightedSample, interval: &SupportInterval) -> Result<SuiteReport> {
    let m = compute_moments(sample, interval)?;
    let min = sample.min();
    let kurt_sum = m.mu4 + 3.0 * m.mu2 * m.mu2;
    let mut out = Collector {
        bounds: Vec::new(),
        skipped: Vec::new(),
    };

    let actuals = [m.mu3.abs(), m.mu4, m.mu2];
    out.bounds.extend(
        classical_bounds(interval)
            .into_iter()
            .zip(actuals)
            .map(|(b, a)| b.against(a)),
    );
    out.push(
        Formula::Age1,
        mean_aware_variance_bound(m.mean, interval).map(|b| vec![b.against(m.mu2)]),
    );
    out.push(
        Formula::Ge3,
        third_moment_interval(m.mean, m.mu2, interval)
            .map(|(lo, hi)| vec![lo.against(m.mu3), hi.against(m.mu3)]),
    );
    out.push(Formula::Ge4, skew_variance_composite_bound(m.mu2, m.mu3, interval).map(|b| vec![b]));
    out.push(
        Formula::Mge1,
        fourth_moment_quadratic_bound(m.mean, m.mu2, interval).map(|(_, b)| vec![b.against(m.mu4)]),
    );
    out.push(
        Formula::Mge6,
        raw_fourth_moment_bound(m.mean, m.raw2, interval).map(|b| vec![b.against(m.raw4)]),
    );
    out.push(
        Formula::Mge7MeanAware,
        kurtosis_sum_bounds(m.mean, interval)
            .map(|(a, b)| vec![a.against(kurt_sum), b.against(kurt_sum)]),
    );
    out.bounds.push(popoviciu_refinement(m.mu2, m.mu4));
    out.push(
        Formula::Mge14,
        fourth_moment_mean_bound(m.mean, interval).map(|b| vec![b.against(m.mu4)]),
    );
    out.bounds.push(variance_kurtosis_product_bound(interval).against(m.mu2 * m.mu4));
    out.push(Formula::Mage6, pearson_check(&m).map(|b| vec![b]));

    out.bounds.extend(third_moment_square_bounds(&m, interval));
    if m.mu2 <= 0.0 {
        out.skip(Formula::SkewKurtosis, Error::ZeroVariance.to_string());
        out.skip(Formula::StudentizedRange, Error::ZeroVariance.to_string());
    }

    out.push(
        Formula::Mge19,
        third_moment_mean_bounds(&m, interval).map(|bounds| {
            bounds
                .into_iter()
                .map(|b| if b.target == Target::MinValue { b.against(min) } else { b })
                .collect()
        }),
    );
    let (lo, hi) = (m.mean - interval.lower(), interval.upper() - m.mean);
    if !(lo > 0.0 && hi > 0.0) {
        out.skip(Formula::Mge24, Error::DegenerateMean.to_string());
    }
    if interval.lower() <= 0.0 {
        out.skip(Formula::Mge21, Error::NonpositiveSupport.to_string());
    }
    if m.mu2 <= 0.0 {
        out.skip(Formula::Mge26, Error::ZeroVariance.to_string());
    }

    let counted = [
        Formula::Ge5,
        Formula::Mge27FromMin,
        Formula::Mage7,
        Formula::Mge10,
        Formula::Mge13,
        Formula::Mge28,
        Formula::Mge32,
        Formula::Mge34,
    ];
    if !sample.is_equally_weighted() {
        for f in counted {
            out.skip(f, "requires equally weighted data");
        }
    } else {
        counted_bounds(sample, interval, &m, &mut out);
    }

    Ok(SuiteReport {
        moments: m,
        bounds: out.bounds,
        skipped: out.skipped,
    })
}

fn counted_bounds(
    sample: &WeightedSample,
    interval: &SupportInterval,
    m: &MomentSet,
    out: &mut Collector,
) {
    let n = sample.len();
    let (min, max) = (sample.min(), sample.max());
    let kurt_sum = m.mu4 + 3.0 * m.mu2 * m.mu2;

    // the point farthest from the mean gives the tightest Samuelson bound
    let far = if (max - m.mean).abs() >= (m.mean - min).abs() { max } else { min };
    out.push(
        Formula::Ge5,
        generalized_samuelson(n, 1, far, m.mean).and_then(|b1| {
            let b2 = generalized_samuelson(n, 2, far, m.mean)?;
            Ok(vec![b1.against(m.mu2), b2.against(m.mu4)])
        }),
    );
    out.push(
        Formula::Mge27FromMin,
        brunk_bounds(n, m.mean, interval).map(|(a, b)| vec![a.against(m.mu2), b.against(m.mu2)]),
    );
    out.push(
        Formula::Mage7,
        brunk_extrema(n, m.mu2, m.mean).map(|(a, b)| vec![a.against(min), b.against(max)]),
    );
    out.push(
        Formula::Mge10,
        kurtosis_sum_odd_bound(n, interval).map(|b| vec![b.against(kurt_sum)]),
    );
    out.push(
        Formula::Mge13,
        fourth_moment_count_bound(n, interval).map(|b| vec![b.against(m.mu4)]),
    );
    out.push(
        Formula::Mge28,
        moment_ratio_bounds(n, m, interval).map(|(a, b)| vec![a, b]),
    );
    out.push(
        Formula::Mge32,
        extrema_bounds(n, m).map(|(a, b)| vec![a.against(min), b.against(max)]),
    );
    let data = crate::sample::validate_support(sample);
    out.push(
        Formula::Mge34,
        dispersion_bound(n, &data).and_then(|b| {
            if m.mu2 <= 0.0 {
                return Err(Error::ZeroVariance);
            }
            let mu2_sq = m.mu2 * m.mu2;
            let mean_sq = m.mean * m.mean;
            // alpha4 / V^4 = m4 xbar^4 / m2^4
            Ok(vec![b.against(m.mu4 * mean_sq * mean_sq / (mu2_sq * mu2_sq))])
        }),
    );
}
