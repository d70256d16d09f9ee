//! Bounds for `n` equally weighted numbers.

use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::numeric::{root, samuelson_quartic_constant};
use crate::sample::{MomentSet, SupportInterval};

/// Largest `n` accepted by the exhaustive maximization in [`max_quartic_term`].
pub const MAX_COUNT: usize = 1_000_000;

fn require_count(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidCount { n, min })
    } else {
        Ok(())
    }
}

/// Brunk's variance bounds `(n-1)(xbar - m)^2` and `(n-1)(M - xbar)^2`, in
/// that order.
pub fn brunk_bounds(n: usize, xbar: f64, interval: &SupportInterval) -> Result<(Bound, Bound)> {
    require_count(n, 2)?;
    let (lo, hi) = interval.mean_offsets(xbar)?;
    let k = (n - 1) as f64;
    Ok((
        Bound::upper(Target::Mu2, Formula::Mge27FromMin, k * lo * lo),
        Bound::upper(Target::Mu2, Formula::Mge27FromMax, k * hi * hi),
    ))
}

/// Brunk's bounds rewritten for the extremes:
/// `min <= xbar - sqrt(m2 / (n-1))`, `max >= xbar + sqrt(m2 / (n-1))`.
pub fn brunk_extrema(n: usize, m2: f64, xbar: f64) -> Result<(Bound, Bound)> {
    require_count(n, 2)?;
    let d = (m2.max(0.0) / (n - 1) as f64).sqrt();
    Ok((
        Bound::upper(Target::MinValue, Formula::Mage7, xbar - d),
        Bound::lower(Target::MaxValue, Formula::Mage7, xbar + d),
    ))
}

/// `m4 + 3 m2^2 <= (n^2 - 1) / (4 n^2) r^4` for odd `n`.
pub fn kurtosis_sum_odd_bound(n: usize, interval: &SupportInterval) -> Result<Bound> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    require_count(n, 3)?;
    let nf = n as f64;
    let r2 = interval.range() * interval.range();
    let coeff = (nf * nf - 1.0) / (4.0 * nf * nf);
    Ok(Bound::upper(Target::SumMu4ThreeMu2Sq, Formula::Mge10, coeff * r2 * r2))
}

/// `j (n - j) (n^2 - 3 n j + 3 j^2)`: `n^4` times the fourth central moment of
/// `j` copies of 0 and `n - j` copies of 1.
pub fn quartic_term(n: usize, j: usize) -> u128 {
    let (n, j) = (n as u128, j as u128);
    // n^2 - 3nj + 3j^2 > 0 for all real j, so the subtraction is ordered
    j * (n - j) * (n * n + 3 * j * j - 3 * n * j)
}

/// `max_{1 <= j <= n-1} j (n - j) (n^2 - 3 n j + 3 j^2)`, by exhaustive loop.
pub fn max_quartic_term(n: usize) -> Result<u128> {
    require_count(n, 2)?;
    if n > MAX_COUNT {
        return Err(Error::CountTooLarge { n, max: MAX_COUNT });
    }
    Ok((1..n).map(|j| quartic_term(n, j)).max().unwrap_or(0))
}

/// `max_j quartic_term(n, j) / n^4`.
pub fn fourth_moment_count_coefficient(n: usize) -> Result<f64> {
    let max = max_quartic_term(n)? as f64;
    Ok(max / (n as f64).powi(4))
}

/// `m4 <= max_j j (n-j)(n^2 - 3nj + 3j^2) / n^4 * r^4`.
pub fn fourth_moment_count_bound(n: usize, interval: &SupportInterval) -> Result<Bound> {
    let coeff = fourth_moment_count_coefficient(n)?;
    let r2 = interval.range() * interval.range();
    Ok(Bound::upper(Target::Mu4, Formula::Mge13, coeff * r2 * r2))
}

/// Upper bounds on `m2^4 / m4` from the distance of the mean to each
/// endpoint: `(n-1)^3 / (n^2 - 3n + 3) (xbar - m)^4` and the same with
/// `(M - xbar)`.
pub fn moment_ratio_bounds(
    n: usize,
    moments: &MomentSet,
    interval: &SupportInterval,
) -> Result<(Bound, Bound)> {
    require_count(n, 2)?;
    if moments.mu4 <= 0.0 {
        return Err(Error::ZeroFourthMoment);
    }
    let (lo, hi) = interval.mean_offsets(moments.mean)?;
    let c = 1.0 / samuelson_quartic_constant(n);
    let mu2 = moments.mu2;
    let ratio = mu2 * mu2 * mu2 * mu2 / moments.mu4;
    Ok((
        Bound::upper(Target::RatioM2p4OverM4, Formula::Mge28, c * lo.powi(4)).against(ratio),
        Bound::upper(Target::RatioM2p4OverM4, Formula::Mge29, c * hi.powi(4)).against(ratio),
    ))
}

/// Extremes from the second and fourth moments:
/// `min <= xbar - k`, `max >= xbar + k` with
/// `k = ((n^2 - 3n + 3) / (n-1)^3 * m2^4 / m4)^{1/4}`.
pub fn extrema_bounds(n: usize, moments: &MomentSet) -> Result<(Bound, Bound)> {
    require_count(n, 2)?;
    if moments.mu4 <= 0.0 {
        return Err(Error::ZeroFourthMoment);
    }
    let mu2 = moments.mu2;
    let k = root(samuelson_quartic_constant(n) * mu2 * mu2 * mu2 * mu2 / moments.mu4, 4);
    Ok((
        Bound::upper(Target::MinValue, Formula::Mge32, moments.mean - k),
        Bound::lower(Target::MaxValue, Formula::Mge33, moments.mean + k),
    ))
}

/// `(n^2 - 3n + 3) / (n - 1)`, the largest kurtosis `m4 / m2^2` of `n`
/// equally weighted numbers. The extremal bounds from [`extrema_bounds`] are
/// at least as tight as [`brunk_extrema`] exactly when the kurtosis does not
/// exceed this value.
pub fn kurtosis_ceiling(n: usize) -> f64 {
    let nf = n as f64;
    (nf * nf - 3.0 * nf + 3.0) / (nf - 1.0)
}

/// `alpha4 / V^4 >= (n^2 - 3n + 3) / (n-1)^3` for positive data, where
/// `V = sqrt(m2) / xbar`.
pub fn dispersion_bound(n: usize, support: &SupportInterval) -> Result<Bound> {
    if support.lower() <= 0.0 {
        return Err(Error::NonpositiveSupport);
    }
    require_count(n, 2)?;
    Ok(Bound::lower(Target::KurtosisOverV4, Formula::Mge34, samuelson_quartic_constant(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> SupportInterval {
        SupportInterval::new(0.0, 1.0).unwrap()
    }

    fn three_zeros_one() -> MomentSet {
        MomentSet::from_central(0.25, 3.0 / 16.0, 3.0 / 32.0, 21.0 / 256.0, 1.0)
    }

    #[test]
    fn brunk() {
        let (a, b) = brunk_bounds(4, 0.25, &unit()).unwrap();
        assert_eq!(a.value, 3.0 / 16.0);
        assert_eq!(b.value, 27.0 / 16.0);
        let (_, b) = brunk_bounds(4, 1.0, &unit()).unwrap();
        assert_eq!(b.value, 0.0);
        let (lo, hi) = brunk_extrema(4, 3.0 / 16.0, 0.25).unwrap();
        assert_eq!(lo.value, 0.0);
        assert_eq!(hi.value, 0.5);
    }

    #[test]
    fn odd_count() {
        let b = kurtosis_sum_odd_bound(3, &unit()).unwrap();
        assert!((b.value - 2.0 / 9.0).abs() < 1e-16);
        let i = SupportInterval::new(-1.0, 1.0).unwrap();
        let b = kurtosis_sum_odd_bound(9, &i).unwrap();
        assert!((b.value - 80.0 / 324.0 * 16.0).abs() < 1e-14);
        assert_eq!(kurtosis_sum_odd_bound(4, &unit()), Err(Error::EvenN(4)));
        assert!(matches!(kurtosis_sum_odd_bound(1, &unit()), Err(Error::InvalidCount { .. })));
    }

    #[test]
    fn quartic_terms_by_hand() {
        let terms: Vec<_> = (1..4).map(|j| quartic_term(4, j)).collect();
        assert_eq!(terms, [21, 16, 21]);
        let terms: Vec<_> = (1..9).map(|j| quartic_term(9, j)).collect();
        assert_eq!(terms, [456, 546, 486, 420, 420, 486, 546, 456]);
        assert_eq!(max_quartic_term(9).unwrap(), 546);
        assert_eq!(max_quartic_term(3).unwrap(), 6);
    }

    #[test]
    fn count_bound_values() {
        assert_eq!(fourth_moment_count_bound(4, &unit()).unwrap().value, 21.0 / 256.0);
        assert!((fourth_moment_count_bound(9, &unit()).unwrap().value - 546.0 / 6561.0).abs() < 1e-17);
        // n = 3 collapses to 2/27 r^4
        assert!((fourth_moment_count_bound(3, &unit()).unwrap().value - 2.0 / 27.0).abs() < 1e-17);
        assert!(max_quartic_term(1).is_err());
        assert!(max_quartic_term(MAX_COUNT + 1).is_err());
        assert!(max_quartic_term(MAX_COUNT).is_ok());
    }

    #[test]
    fn max_term_dominates_middle_and_first() {
        for n in 2..=100 {
            let max = max_quartic_term(n).unwrap();
            assert!(max >= quartic_term(n, n.div_ceil(2)));
            assert!(max >= quartic_term(n, 1));
        }
    }

    #[test]
    fn ratio_bounds_three_zeros_one() {
        let (lo, hi) = moment_ratio_bounds(4, &three_zeros_one(), &unit()).unwrap();
        assert!((lo.actual.unwrap() - 27.0 / 1792.0).abs() < 1e-17);
        assert!((lo.value - 27.0 / 1792.0).abs() < 1e-17);
        assert!((hi.value - 2187.0 / 1792.0).abs() < 1e-15);
        let zero = MomentSet::from_central(0.5, 0.0, 0.0, 0.0, 1.0);
        assert_eq!(moment_ratio_bounds(4, &zero, &unit()), Err(Error::ZeroFourthMoment));
    }

    #[test]
    fn extrema_three_zeros_one() {
        let (lo, hi) = extrema_bounds(4, &three_zeros_one()).unwrap();
        assert!(lo.value.abs() < 1e-15);
        assert!((hi.value - 0.5).abs() < 1e-15);
        let sym = MomentSet::from_central(0.5, 0.25, 0.0, 0.0625, 1.0);
        let (lo, _) = extrema_bounds(2, &sym).unwrap();
        assert!(lo.value.abs() < 1e-15);
    }

    #[test]
    fn dispersion() {
        let pos = SupportInterval::new(1.0, 2.0).unwrap();
        assert!((dispersion_bound(4, &pos).unwrap().value - 7.0 / 27.0).abs() < 1e-16);
        assert_eq!(dispersion_bound(2, &pos).unwrap().value, 1.0);
        assert_eq!(dispersion_bound(4, &unit()), Err(Error::NonpositiveSupport));
    }
}
