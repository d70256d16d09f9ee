use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::sample::SupportInterval;

/// Mean-free bounds from the range alone:
/// `|mu3| <= r^3 / (6 sqrt 3)`, `mu4 <= r^4 / 12`, `mu2 <= r^2 / 4`.
pub fn classical_bounds(interval: &SupportInterval) -> Vec<Bound> {
    let r = interval.range();
    let r2 = r * r;
    vec![
        Bound::upper(Target::Mu3Abs, Formula::Ge1, r2 * r / (6.0 * 3f64.sqrt())),
        Bound::upper(Target::Mu4, Formula::Ge1, r2 * r2 / 12.0),
        Bound::upper(Target::Mu2, Formula::Ge2, r2 / 4.0),
    ]
}

/// `mu2 <= (M - mean)(mean - m)`.
pub fn mean_aware_variance_bound(mean: f64, interval: &SupportInterval) -> Result<Bound> {
    let (lo, hi) = interval.mean_offsets(mean)?;
    Ok(Bound::upper(Target::Mu2, Formula::Age1, lo * hi))
}

/// Two-sided bound on `mu3` given the mean and variance.
pub fn third_moment_interval(
    mean: f64,
    mu2: f64,
    interval: &SupportInterval,
) -> Result<(Bound, Bound)> {
    let (lo, hi) = interval.mean_offsets(mean)?;
    if mu2 < 0.0 {
        return Err(Error::InconsistentMoments);
    }
    if mu2 == 0.0 {
        return Ok((
            Bound::lower(Target::Mu3, Formula::Ge3, 0.0),
            Bound::upper(Target::Mu3, Formula::Ge3, 0.0),
        ));
    }
    if lo == 0.0 || hi == 0.0 {
        return Err(Error::DegenerateMean);
    }
    let lower = mu2 * (mu2 - lo * lo) / lo;
    let upper = mu2 * (hi * hi - mu2) / hi;
    Ok((
        Bound::lower(Target::Mu3, Formula::Ge3, lower),
        Bound::upper(Target::Mu3, Formula::Ge3, upper),
    ))
}

/// `mu2 + (mu3 / (2 mu2))^2`
pub fn skew_variance_composite(mu2: f64, mu3: f64) -> f64 {
    let t = mu3 / (2.0 * mu2);
    mu2 + t * t
}

/// `mu2 + (mu3 / (2 mu2))^2 <= r^2 / 4`, with the composite attached as actual.
pub fn skew_variance_composite_bound(
    mu2: f64,
    mu3: f64,
    interval: &SupportInterval,
) -> Result<Bound> {
    if mu2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let r = interval.range();
    Ok(Bound::upper(Target::Mu2PlusSkewTerm, Formula::Ge4, r * r / 4.0)
        .against(skew_variance_composite(mu2, mu3)))
}

/// Samuelson's inequality for even central moments of `n` equally weighted
/// numbers: `m_{2r} >= (1 + (n-1)^{2r-1}) / (n (n-1)^{2r-1}) (x_j - xbar)^{2r}`.
pub fn generalized_samuelson(n: usize, r: u32, xj: f64, xbar: f64) -> Result<Bound> {
    if n < 2 {
        return Err(Error::InvalidCount { n, min: 2 });
    }
    if r == 0 {
        return Err(Error::InvalidCount { n: 0, min: 1 });
    }
    let order = 2 * r;
    let nf = n as f64;
    // (1 + k) / (n k) with k = (n-1)^{2r-1}, written as (1 + 1/k) / n.
    let coeff = (1.0 + (nf - 1.0).powi(1 - order as i32)) / nf;
    let target = match r {
        1 => Target::Mu2,
        2 => Target::Mu4,
        _ => Target::EvenMoment(order),
    };
    Ok(Bound::lower(target, Formula::Ge5, coeff * (xj - xbar).powi(order as i32)))
}
