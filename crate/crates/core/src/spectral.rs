//! Eigenvalue, spread and condition-number bounds computed from trace
//! statistics alone.
//!
//! Every bound assumes the spectrum is real. For Hermitian input that holds
//! automatically; for anything else it is the caller's responsibility.

use serde::Serialize;

use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::inequalities::fourth_moment_count_coefficient;
use crate::numeric::{root, samuelson_quartic_constant};
use crate::trace::{CenteredTraces, FunctionalMoments};

/// Wolkowicz-Styan bounds `trA/n -+ sqrt(trB^2 / (n(n-1)))`, returned as
/// (upper bound on `lambda_min`, lower bound on `lambda_max`).
pub fn wolkowicz_styan_bounds(t: &CenteredTraces) -> (Bound, Bound) {
    let mean = t.mean();
    if t.n < 2 {
        return (
            Bound::upper(Target::LambdaMin, Formula::Magen1, mean).degenerate(),
            Bound::lower(Target::LambdaMax, Formula::Magen1, mean).degenerate(),
        );
    }
    let s = ws_offset(t);
    (
        Bound::upper(Target::LambdaMin, Formula::Magen1, mean - s),
        Bound::lower(Target::LambdaMax, Formula::Magen1, mean + s),
    )
}

fn ws_offset(t: &CenteredTraces) -> f64 {
    let n = t.n as f64;
    (t.tr_b2.max(0.0) / (n * (n - 1.0))).sqrt()
}

/// `((n^2 - 3n + 3) / (n^3 (n-1)^3))^{1/4} trB^2 / (trB^4)^{1/4}`.
fn kurtosis_offset(t: &CenteredTraces) -> f64 {
    let n = t.n as f64;
    let c = samuelson_quartic_constant(t.n) / (n * n * n);
    root(c, 4) * t.tr_b2 / root(t.tr_b4, 4)
}

/// Eigenvalue extremes from the second and fourth centered traces, returned
/// as (upper bound on `lambda_min`, lower bound on `lambda_max`).
///
/// A scalar matrix (`trB^4 = 0`) yields `trA/n` for both, flagged degenerate.
pub fn kurtosis_eigen_bounds(t: &CenteredTraces) -> (Bound, Bound) {
    let mean = t.mean();
    if t.n < 2 || t.tr_b4 <= 0.0 {
        return (
            Bound::upper(Target::LambdaMin, Formula::Mgen1, mean).degenerate(),
            Bound::lower(Target::LambdaMax, Formula::Mgen2, mean).degenerate(),
        );
    }
    let k = kurtosis_offset(t);
    (
        Bound::upper(Target::LambdaMin, Formula::Mgen1, mean - k),
        Bound::lower(Target::LambdaMax, Formula::Mgen2, mean + k),
    )
}

/// `c(A) >= 1 + 2s / (trA/n - s)` with `s = sqrt(trB^2 / (n(n-1)))`, for a
/// positive definite matrix.
pub fn wolkowicz_styan_condition_bound(t: &CenteredTraces) -> Result<Bound> {
    let mean = t.mean();
    let s = if t.n < 2 { 0.0 } else { ws_offset(t) };
    let denom = mean - s;
    if denom.is_nan() || denom <= 0.0 {
        return Err(Error::NonpositiveDenominator(denom));
    }
    let b = Bound::lower(Target::ConditionNumber, Formula::Magen2, 1.0 + 2.0 * s / denom);
    Ok(if s == 0.0 { b.degenerate() } else { b })
}

/// `c(A) >= 1 + 2 / (((n-1)^3 / (n(n^2-3n+3)))^{1/4} (trB^4)^{1/4} trA / trB^2 - 1)`
/// for a positive definite matrix.
pub fn kurtosis_condition_bound(t: &CenteredTraces) -> Result<Bound> {
    if t.n < 2 || t.tr_b2 <= 0.0 || t.tr_b4 <= 0.0 {
        if t.tr_a.is_nan() || t.tr_a <= 0.0 {
            return Err(Error::NonpositiveDenominator(t.tr_a));
        }
        return Ok(Bound::lower(Target::ConditionNumber, Formula::Mgen4, 1.0).degenerate());
    }
    let n = t.n as f64;
    let c = 1.0 / (samuelson_quartic_constant(t.n) * n);
    let denom = root(c, 4) * root(t.tr_b4, 4) * t.tr_a / t.tr_b2 - 1.0;
    if denom.is_nan() || denom <= 0.0 {
        return Err(Error::NonpositiveDenominator(denom));
    }
    Ok(Bound::lower(Target::ConditionNumber, Formula::Mgen4, 1.0 + 2.0 / denom))
}

/// Lower bounds on `lambda_max - lambda_min` in fixed order: mgen11, mgen12
/// (odd `n` only), mgen13, magen3, magen4.
pub fn spread_bounds(t: &CenteredTraces) -> Vec<Bound> {
    let n = t.n;
    let nf = n as f64;
    let (b2, b4) = (t.tr_b2.max(0.0), t.tr_b4.max(0.0));
    let spread = |f, v| {
        let b = Bound::lower(Target::Spread, f, v);
        if b4 == 0.0 {
            b.degenerate()
        } else {
            b
        }
    };
    if n < 2 {
        return vec![spread(Formula::Mgen11, 0.0)];
    }
    let sum = nf * b4 + 3.0 * b2 * b2;
    let mut out = vec![spread(Formula::Mgen11, root(4.0 / (nf * nf) * sum, 4))];
    if n % 2 == 1 {
        out.push(spread(Formula::Mgen12, root(4.0 / (nf * nf - 1.0) * sum, 4)));
    }
    // n^3 trB^4 / max_j term = trB^4 / (n * max_j term / n^4)
    if let Ok(coeff) = fourth_moment_count_coefficient(n) {
        out.push(spread(Formula::Mgen13, root(b4 / (nf * coeff), 4)));
    }
    out.push(spread(Formula::Magen3, 3.0 * root(b2 * b4 / (12.0 * nf * nf), 6)));
    out.push(spread(Formula::Magen4, root(12.0 * b4 / nf, 4)));
    out
}

/// Spread bounds for a positive unital functional.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FunctionalSpreadBounds {
    /// mgen5, mgen8, mgen10 in that order.
    pub bounds: Vec<Bound>,
    /// `6 sqrt(3) (phi(B^2) phi(B^4) - phi(B^2)^3)^{1/2}`.
    pub middle_term: f64,
    /// `6 sqrt(3) phi(B^3)`, never larger than `middle_term`.
    pub cubic_term: f64,
    /// The weaker spread bound `(6 sqrt(3) phi(B^3))^{1/3}`.
    pub cubic_bound: Bound,
}

impl FunctionalSpreadBounds {
    pub fn refinement_holds(&self) -> bool {
        self.cubic_term <= self.middle_term + 1e-9 * self.middle_term.abs().max(1.0)
    }
}

pub fn functional_spread_bounds(fm: &FunctionalMoments) -> Result<FunctionalSpreadBounds> {
    let (p2, p3, p4) = (fm.phi_b2.max(0.0), fm.phi_b3, fm.phi_b4.max(0.0));
    let prod = p2 * p4;
    let cube = p2 * p2 * p2;
    let disc = prod - cube;
    if disc < -1e-12 * prod.max(cube).max(1.0) {
        return Err(Error::NegativeDiscriminant(disc));
    }
    let six_root3 = 6.0 * 3f64.sqrt();
    let middle_term = six_root3 * disc.max(0.0).sqrt();
    let cubic_term = six_root3 * p3;
    let spread = |f, v| {
        let b = Bound::lower(Target::Spread, f, v);
        if p4 == 0.0 {
            b.degenerate()
        } else {
            b
        }
    };
    Ok(FunctionalSpreadBounds {
        bounds: vec![
            spread(Formula::Mgen5, root(2.0 * (p4 + 3.0 * p2 * p2).sqrt(), 2)),
            spread(Formula::Mgen8, root(243.0 / 4.0 * prod, 6)),
            spread(Formula::Mgen10, root(middle_term, 3)),
        ],
        middle_term,
        cubic_term,
        cubic_bound: spread(Formula::Mgen10Cubic, root(cubic_term, 3)),
    })
}

/// Traces of a spectrum known to print a different mgen13 value in the
/// literature: `{-1 x2, 0 x5, 1 x2}`.
pub fn erratum_note(n: usize, tr_b2: f64, tr_b4: f64) -> Option<&'static str> {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b;
    if n == 9 && close(tr_b2, 4.0) && close(tr_b4, 4.0) {
        Some(
            "mgen13: the maximizing term for n = 9 is 546 at j = 2, giving 1.5202; \
             the often-quoted 1.5902 corresponds to the j = 1 term 456",
        )
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub traces: CenteredTraces,
    /// The smaller of the two upper bounds on `lambda_min`.
    pub lambda_min_upper: Bound,
    /// The larger of the two lower bounds on `lambda_max`.
    pub lambda_max_lower: Bound,
    /// Wolkowicz-Styan pair followed by the fourth-trace pair.
    pub eigen_bounds: Vec<Bound>,
    pub spread_lowers: Vec<Bound>,
    pub condition_lowers: Vec<Bound>,
    pub diagnostics: Vec<String>,
    pub erratum: Option<&'static str>,
}

/// Runs every trace bound. When the spectrum is supplied, true values are
/// attached and condition bounds are dropped unless it is positive.
pub fn spectral_report(t: &CenteredTraces, spectrum: Option<&[f64]>) -> SpectralReport {
    let (ws_min, ws_max) = wolkowicz_styan_bounds(t);
    let (k_min, k_max) = kurtosis_eigen_bounds(t);
    let mut eigen_bounds = vec![ws_min, ws_max, k_min, k_max];
    let mut spread_lowers = spread_bounds(t);
    let mut condition_lowers = Vec::new();
    let mut diagnostics = Vec::new();
    for (f, r) in [
        (Formula::Magen2, wolkowicz_styan_condition_bound(t)),
        (Formula::Mgen4, kurtosis_condition_bound(t)),
    ] {
        match r {
            Ok(b) => condition_lowers.push(b),
            Err(e) => diagnostics.push(format!("{f}: {e}")),
        }
    }
    let extremes = spectrum.and_then(|s| {
        let min = s.iter().copied().reduce(f64::min)?;
        let max = s.iter().copied().reduce(f64::max)?;
        Some((min, max))
    });
    if let Some((min, max)) = extremes {
        for b in eigen_bounds.iter_mut() {
            *b = match b.target {
                Target::LambdaMin => b.against(min),
                _ => b.against(max),
            };
        }
        for b in spread_lowers.iter_mut() {
            *b = b.against(max - min);
        }
        if min > 0.0 {
            for b in condition_lowers.iter_mut() {
                *b = b.against(max / min);
            }
        } else if !condition_lowers.is_empty() {
            condition_lowers.clear();
            diagnostics.push("condition bounds dropped: matrix is not positive definite".into());
        }
    }
    let lambda_min_upper = if eigen_bounds[2].value < eigen_bounds[0].value {
        eigen_bounds[2]
    } else {
        eigen_bounds[0]
    };
    let lambda_max_lower = if eigen_bounds[3].value > eigen_bounds[1].value {
        eigen_bounds[3]
    } else {
        eigen_bounds[1]
    };
    SpectralReport {
        traces: *t,
        lambda_min_upper,
        lambda_max_lower,
        eigen_bounds,
        spread_lowers,
        condition_lowers,
        diagnostics,
        erratum: erratum_note(t.n, t.tr_b2, t.tr_b4),
    }
}
