use serde::Serialize;

use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::sample::{MomentSet, SupportInterval};

/// Coefficients of the quadratic upper bound `mu4 <= alpha mu2 + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourthMomentCoefficients {
    pub alpha: f64,
    pub beta: f64,
}

impl FourthMomentCoefficients {
    /// `d = (mean - m)(M - mean)`; `alpha = 3/4 r^2 - 2d`, `beta = d (r^2/4 - d)`.
    pub fn new(mean: f64, interval: &SupportInterval) -> Result<Self> {
        let (lo, hi) = interval.mean_offsets(mean)?;
        let r2 = interval.range() * interval.range();
        let d = lo * hi;
        Ok(FourthMomentCoefficients {
            alpha: 0.75 * r2 - 2.0 * d,
            beta: d * (0.25 * r2 - d),
        })
    }
}

/// `mu4 <= alpha mu2 + beta`, from a quartic that is nonpositive on the
/// support and touches zero at both endpoints.
pub fn fourth_moment_quadratic_bound(
    mean: f64,
    mu2: f64,
    interval: &SupportInterval,
) -> Result<(FourthMomentCoefficients, Bound)> {
    let coeffs = FourthMomentCoefficients::new(mean, interval)?;
    let (lo, hi) = interval.mean_offsets(mean)?;
    let max = lo * hi;
    let tol = 1e-12 * interval.range().powi(2).max(1.0);
    if !(mu2 >= -tol && mu2 <= max + tol) {
        return Err(Error::VarianceInfeasible { variance: mu2, max });
    }
    let value = coeffs.alpha * mu2 + coeffs.beta;
    Ok((coeffs, Bound::upper(Target::Mu4, Formula::Mge1, value)))
}

/// Upper bound on the fourth raw moment from the first two raw moments.
pub fn raw_fourth_moment_bound(mean: f64, raw2: f64, interval: &SupportInterval) -> Result<Bound> {
    interval.mean_offsets(mean)?;
    let tol = 1e-12 * raw2.abs().max(1.0);
    if raw2 < mean * mean - tol {
        return Err(Error::InconsistentMoments);
    }
    let (m, big_m) = (interval.lower(), interval.upper());
    let s = m + big_m;
    let p = m * big_m;
    let r = interval.range();
    let value = (0.75 * s * s - p) * raw2 + 0.25 * s * r * r * mean - 0.25 * p * s * s;
    Ok(Bound::upper(Target::Mu4p, Formula::Mge6, value))
}

/// Mean-aware and mean-free upper bounds on `mu4 + 3 mu2^2`:
/// `r^2 (mean - m)(M - mean)` and `r^4 / 4`.
pub fn kurtosis_sum_bounds(mean: f64, interval: &SupportInterval) -> Result<(Bound, Bound)> {
    let (lo, hi) = interval.mean_offsets(mean)?;
    let r2 = interval.range() * interval.range();
    Ok((
        Bound::upper(Target::SumMu4ThreeMu2Sq, Formula::Mge7MeanAware, r2 * lo * hi),
        Bound::upper(Target::SumMu4ThreeMu2Sq, Formula::Mge7MeanFree, 0.25 * r2 * r2),
    ))
}

/// `4 mu2^2 <= mu4 + 3 mu2^2`, the lower link of the chain refining
/// Popoviciu's inequality (the upper link is the mean-free bound above).
pub fn popoviciu_refinement(mu2: f64, mu4: f64) -> Bound {
    Bound::lower(Target::SumMu4ThreeMu2Sq, Formula::Mge7Refinement, 4.0 * mu2 * mu2)
        .against(mu4 + 3.0 * mu2 * mu2)
}

/// `mu4 <= (xbar - m)(M - xbar)((xbar - m)^2 + (M - xbar)^2 - (xbar - m)(M - xbar))`
pub fn fourth_moment_mean_bound(mean: f64, interval: &SupportInterval) -> Result<Bound> {
    let (lo, hi) = interval.mean_offsets(mean)?;
    let value = lo * hi * (lo * lo + hi * hi - lo * hi);
    Ok(Bound::upper(Target::Mu4, Formula::Mge14, value))
}

/// `mu2 mu4 <= 4 r^6 / 243`.
pub fn variance_kurtosis_product_bound(interval: &SupportInterval) -> Bound {
    let r2 = interval.range() * interval.range();
    Bound::upper(Target::ProductMu2Mu4, Formula::Mage1, 4.0 * r2 * r2 * r2 / 243.0)
}

/// Pearson's skewness-kurtosis inequality in product form,
/// `mu2 mu4 >= mu3^2 + mu2^3`.
pub fn pearson_check(moments: &MomentSet) -> Result<Bound> {
    let MomentSet { mu2, mu3, mu4, .. } = *moments;
    if mu2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok(Bound::lower(Target::ProductMu2Mu4, Formula::Mage6, mu3 * mu3 + mu2 * mu2 * mu2)
        .against(mu2 * mu4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> SupportInterval {
        SupportInterval::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn quadratic_bound_at_midpoint() {
        let (c, b) = fourth_moment_quadratic_bound(0.5, 0.25, &unit()).unwrap();
        assert_eq!((c.alpha, c.beta), (0.25, 0.0));
        assert_eq!(b.value, 1.0 / 16.0);
    }

    #[test]
    fn quadratic_bound_two_thirds() {
        let (c, b) = fourth_moment_quadratic_bound(2.0 / 3.0, 2.0 / 9.0, &unit()).unwrap();
        assert!((c.alpha - 11.0 / 36.0).abs() < 1e-15);
        assert!((c.beta - 1.0 / 162.0).abs() < 1e-15);
        assert!((b.value - 2.0 / 27.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_bound_uniform_three_point() {
        let (_, b) = fourth_moment_quadratic_bound(0.5, 1.0 / 6.0, &unit()).unwrap();
        assert!((b.value - 1.0 / 24.0).abs() < 1e-16);
    }

    #[test]
    fn quadratic_bound_rejects_infeasible_variance() {
        assert!(matches!(
            fourth_moment_quadratic_bound(0.25, 0.2, &unit()),
            Err(Error::VarianceInfeasible { .. })
        ));
        assert!(matches!(
            fourth_moment_quadratic_bound(-0.1, 0.0, &unit()),
            Err(Error::MeanOutOfSupport { .. })
        ));
    }

    #[test]
    fn raw_fourth() {
        let b = raw_fourth_moment_bound(0.5, 0.5, &unit()).unwrap();
        assert_eq!(b.value, 0.5);
        assert_eq!(raw_fourth_moment_bound(0.0, 0.0, &unit()).unwrap().value, 0.0);
        let i = SupportInterval::new(1.0, 3.0).unwrap();
        let b = raw_fourth_moment_bound(2.0, 14.0 / 3.0, &i).unwrap();
        assert!((b.value - 38.0).abs() < 1e-12);
        assert!(b.value >= 98.0 / 3.0);
        assert_eq!(raw_fourth_moment_bound(0.5, 0.1, &unit()), Err(Error::InconsistentMoments));
    }

    #[test]
    fn kurtosis_sum() {
        let (aware, free) = kurtosis_sum_bounds(0.5, &unit()).unwrap();
        assert_eq!((aware.value, free.value), (0.25, 0.25));
        let (aware, free) = kurtosis_sum_bounds(0.25, &unit()).unwrap();
        assert_eq!(aware.value, 3.0 / 16.0);
        assert!(aware.value < free.value);
    }

    #[test]
    fn refinement_chain() {
        let b = popoviciu_refinement(0.25, 0.0625);
        assert_eq!(b.value, 0.25);
        assert_eq!(b.slack, Some(0.0));
    }

    #[test]
    fn mean_bound() {
        let i = unit();
        assert_eq!(fourth_moment_mean_bound(0.25, &i).unwrap().value, 21.0 / 256.0);
        assert_eq!(fourth_moment_mean_bound(0.5, &i).unwrap().value, 1.0 / 16.0);
        assert_eq!(fourth_moment_mean_bound(0.0, &i).unwrap().value, 0.0);
    }

    #[test]
    fn product() {
        assert!((variance_kurtosis_product_bound(&unit()).value - 4.0 / 243.0).abs() < 1e-18);
        let i = SupportInterval::new(0.0, 3.0).unwrap();
        assert!((variance_kurtosis_product_bound(&i).value - 12.0).abs() < 1e-13);
    }

    #[test]
    fn pearson() {
        // two-point {0,1} with P(1) = 1/4
        let m = MomentSet::from_central(0.25, 3.0 / 16.0, 3.0 / 32.0, 21.0 / 256.0, 1.0);
        let b = pearson_check(&m).unwrap();
        assert!(b.slack.unwrap().abs() < 1e-17);
        assert!((m.kurtosis.unwrap() - 7.0 / 3.0).abs() < 1e-15);
        let m = MomentSet::from_central(0.5, 1.0 / 6.0, 0.0, 1.0 / 24.0, 1.0);
        assert!((m.kurtosis.unwrap() - 1.5).abs() < 1e-15);
        assert_eq!(pearson_check(&m).unwrap().holds(), Some(true));
        let m = MomentSet::from_central(0.5, 0.0, 0.0, 0.0, 1.0);
        assert_eq!(pearson_check(&m), Err(Error::ZeroVariance));
    }
}
