use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::sample::{MomentSet, SupportInterval};

/// Bounds involving `mu3^2`:
///
/// * `mu3^2 <= mu2 mu4 - mu2^3 <= r^6 / 108`
/// * `mu3^2 <= r^2 mu2^2 - 4 mu2^3 <= r^6 / 108`
///
/// followed by the skewness-kurtosis ratio bounds when `mu2 > 0`.
pub fn third_moment_square_bounds(moments: &MomentSet, interval: &SupportInterval) -> Vec<Bound> {
    let MomentSet { mu2, mu3, mu4, .. } = *moments;
    let r = interval.range();
    let r2 = r * r;
    let r6 = r2 * r2 * r2;
    // factored forms: mu4 >= mu2^2 and r^2 >= 4 mu2 always hold, so a
    // negative factor is rounding and is clamped to zero
    let pearson_excess = mu2 * (mu4 - mu2 * mu2).max(0.0);
    let range_excess = mu2 * mu2 * (r2 - 4.0 * mu2).max(0.0);
    let mut bounds = vec![
        Bound::upper(Target::Mu3Sq, Formula::Mge16First, pearson_excess).against(mu3 * mu3),
        Bound::upper(Target::PearsonExcess, Formula::Mge16Second, r6 / 108.0)
            .against(pearson_excess),
        Bound::upper(Target::Mu3Sq, Formula::Mge17First, range_excess).against(mu3 * mu3),
        Bound::upper(Target::RangeMomentExcess, Formula::Mge17Second, r6 / 108.0)
            .against(range_excess),
    ];
    if let Ok((ratio, q)) = skewness_kurtosis_bounds(moments, interval) {
        bounds.push(ratio);
        bounds.push(q);
    }
    bounds
}

/// `alpha3^4 / alpha4^3 <= 4/27` and `alpha3^2 + 4 <= q^2`.
pub fn skewness_kurtosis_bounds(
    moments: &MomentSet,
    interval: &SupportInterval,
) -> Result<(Bound, Bound)> {
    let MomentSet { mu2, mu3, mu4, .. } = *moments;
    if mu2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let skew_sq = mu3 * mu3 / (mu2 * mu2 * mu2);
    let kurt = mu4 / (mu2 * mu2);
    let r = interval.range();
    Ok((
        Bound::upper(Target::SkewKurtosisRatio, Formula::SkewKurtosis, 4.0 / 27.0)
            .against(skew_sq * skew_sq / (kurt * kurt * kurt)),
        Bound::lower(Target::StudentizedRangeSq, Formula::StudentizedRange, skew_sq + 4.0)
            .against(r * r / mu2),
    ))
}

/// Bounds on `mu2 mu3`, the third raw moment and `mu3` from the mean,
/// variance and support. Also includes the positive-support bound on `mu3`
/// when `m > 0` and the skewness-based upper bound on the minimum when
/// `mu2 > 0`.
pub fn third_moment_mean_bounds(
    moments: &MomentSet,
    interval: &SupportInterval,
) -> Result<Vec<Bound>> {
    let MomentSet {
        mean,
        raw2,
        raw3,
        mu2,
        mu3,
        ..
    } = *moments;
    let (lo, hi) = interval.mean_offsets(mean)?;
    let (m, big_m) = (interval.lower(), interval.upper());
    let c = 4.0 / 27.0;
    let mut bounds = vec![
        Bound::lower(Target::Mu2Mu3, Formula::Mge19, -c * lo.powi(5)).against(mu2 * mu3),
        Bound::upper(Target::Mu2Mu3, Formula::Mge19, c * hi.powi(5)).against(mu2 * mu3),
        Bound::lower(Target::Mu3p, Formula::Mge20, 0.25 * m * m * (m + 3.0 * mean)).against(raw3),
        Bound::upper(Target::Mu3p, Formula::Mge20, 0.25 * big_m * big_m * (big_m + 3.0 * mean))
            .against(raw3),
        Bound::lower(Target::Mu3, Formula::Mage4, -0.25 * lo.powi(3)).against(mu3),
        Bound::upper(Target::Mu3, Formula::Mage4, 0.25 * hi.powi(3)).against(mu3),
    ];
    if lo > 0.0 && hi > 0.0 {
        // m mean - raw2 = -(mu2 + mean lo), M mean - raw2 = mean hi - mu2
        let below = mu2 + mean * lo;
        let above = mean * hi - mu2;
        bounds.push(Bound::lower(Target::Mu3p, Formula::Mge24, m * raw2 + below * below / lo).against(raw3));
        bounds.push(
            Bound::upper(Target::Mu3p, Formula::Mge24, big_m * raw2 - above * above / hi).against(raw3),
        );
    }
    if let Ok(b) = positive_support_third_moment_bound(moments, interval) {
        bounds.push(b);
    }
    if let Ok(b) = minimum_from_skewness(moments) {
        bounds.push(b);
    }
    Ok(bounds)
}

/// `mu3 >= (mu2 - mean^2) mu2 / mean` for data in `[m, M]` with `m > 0`.
pub fn positive_support_third_moment_bound(
    moments: &MomentSet,
    interval: &SupportInterval,
) -> Result<Bound> {
    if interval.lower() <= 0.0 {
        return Err(Error::NonpositiveSupport);
    }
    let MomentSet { mean, mu2, mu3, .. } = *moments;
    Ok(Bound::lower(Target::Mu3, Formula::Mge21, (mu2 - mean * mean) * mu2 / mean).against(mu3))
}

/// `min x <= mean - (sqrt(mu3^2 + 4 mu2^3) - mu3) / (2 mu2)`.
///
/// The actual minimum is not part of the moments; the caller attaches it.
pub fn minimum_from_skewness(moments: &MomentSet) -> Result<Bound> {
    let MomentSet { mean, mu2, mu3, .. } = *moments;
    if mu2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let disc = (mu3 * mu3 + 4.0 * mu2 * mu2 * mu2).sqrt();
    // rationalized when mu3 > 0 to avoid cancellation
    let offset = if mu3 <= 0.0 {
        (disc - mu3) / (2.0 * mu2)
    } else {
        2.0 * mu2 * mu2 / (disc + mu3)
    };
    Ok(Bound::upper(Target::MinValue, Formula::Mge26, mean - offset))
}
