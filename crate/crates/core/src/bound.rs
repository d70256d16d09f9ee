//! Computed bounds and the vocabulary used to label them.
//!
//! A [`Bound`] records what quantity it constrains ([`Target`]), in which
//! direction, the numeric value, and the formula that produced it. Once the
//! true value of the quantity is known, [`Bound::against`] attaches it and
//! computes a signed slack that is nonnegative exactly when the bound holds.

use std::fmt;

use serde::{Serialize, Serializer};

/// Relative tolerance used to decide whether a bound is violated.
pub const SOUNDNESS_TOL: f64 = 1e-9;

/// Absolute tolerance (after normalizing by `max(1, r^k)`) for equality.
pub const EQUALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Mu2,
    Mu3,
    Mu3Abs,
    Mu3Sq,
    Mu4,
    Mu3p,
    Mu4p,
    /// Central moment `m_{2r}` for `r >= 3`.
    EvenMoment(u32),
    Mu2Mu3,
    ProductMu2Mu4,
    /// `mu2 * mu4 - mu2^3`
    PearsonExcess,
    /// `r^2 mu2^2 - 4 mu2^3`
    RangeMomentExcess,
    /// `mu2 + (mu3 / (2 mu2))^2`
    Mu2PlusSkewTerm,
    SumMu4ThreeMu2Sq,
    RatioM2p4OverM4,
    SkewKurtosisRatio,
    StudentizedRangeSq,
    MinValue,
    MaxValue,
    Range,
    Spread,
    Span,
    ConditionNumber,
    LambdaMin,
    LambdaMax,
    KurtosisOverV4,
}

impl Target {
    pub fn key(&self) -> String {
        let s = match self {
            Target::Mu2 => "mu2",
            Target::Mu3 => "mu3",
            Target::Mu3Abs => "mu3_abs",
            Target::Mu3Sq => "mu3_sq",
            Target::Mu4 => "mu4",
            Target::Mu3p => "mu3p",
            Target::Mu4p => "mu4p",
            Target::EvenMoment(order) => return format!("m{order}"),
            Target::Mu2Mu3 => "mu2mu3",
            Target::ProductMu2Mu4 => "product_mu2mu4",
            Target::PearsonExcess => "pearson_excess",
            Target::RangeMomentExcess => "range_moment_excess",
            Target::Mu2PlusSkewTerm => "mu2_plus_skew_term",
            Target::SumMu4ThreeMu2Sq => "sum_mu4_3mu2sq",
            Target::RatioM2p4OverM4 => "ratio_m2p4_over_m4",
            Target::SkewKurtosisRatio => "skew_kurtosis_ratio",
            Target::StudentizedRangeSq => "studentized_range_sq",
            Target::MinValue => "min_value",
            Target::MaxValue => "max_value",
            Target::Range => "range",
            Target::Spread => "spread",
            Target::Span => "span",
            Target::ConditionNumber => "condition_number",
            Target::LambdaMin => "lambda_min",
            Target::LambdaMax => "lambda_max",
            Target::KurtosisOverV4 => "kurtosis_over_V4",
        };
        s.to_string()
    }

    /// Homogeneity degree of the target quantity under `x -> a x`.
    ///
    /// Location quantities (extremes, raw moments) report their degree under
    /// pure scaling; they additionally shift under translation.
    pub fn degree(&self) -> i32 {
        match self {
            Target::Mu2 | Target::Mu2PlusSkewTerm => 2,
            Target::Mu3 | Target::Mu3Abs | Target::Mu3p => 3,
            Target::Mu4 | Target::Mu4p | Target::SumMu4ThreeMu2Sq | Target::RatioM2p4OverM4 => 4,
            Target::EvenMoment(order) => *order as i32,
            Target::Mu2Mu3 => 5,
            Target::Mu3Sq
            | Target::ProductMu2Mu4
            | Target::PearsonExcess
            | Target::RangeMomentExcess => 6,
            Target::MinValue
            | Target::MaxValue
            | Target::Range
            | Target::Spread
            | Target::Span
            | Target::LambdaMin
            | Target::LambdaMax => 1,
            Target::SkewKurtosisRatio
            | Target::StudentizedRangeSq
            | Target::ConditionNumber
            | Target::KurtosisOverV4 => 0,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.key())
    }
}

impl Serialize for Target {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        })
    }
}

/// Closed set of formula identifiers.
///
/// Each inequality has a short stable tag. Where one tag covers a chain
/// `a <= b <= c`, the links are suffixed `.1`, `.2`; `.r` marks a companion
/// ratio or refinement and `.min`/`.max` the two sides of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    // moments on an interval
    Ge1,
    Ge2,
    Age1,
    Ge3,
    Ge4,
    Ge5,
    Mge27FromMax,
    Mge27FromMin,
    Mage7,
    Mge1,
    Mge6,
    Mge7MeanAware,
    Mge7MeanFree,
    Mge7Refinement,
    Mge10,
    Mge13,
    Mge14,
    Mage1,
    Mage6,
    Mge16First,
    Mge16Second,
    Mge17First,
    Mge17Second,
    SkewKurtosis,
    StudentizedRange,
    Mge19,
    Mge20,
    Mage4,
    Mge21,
    Mge24,
    Mge26,
    Mge28,
    Mge29,
    Mge32,
    Mge33,
    Mge34,
    // matrices
    Magen1,
    Mgen1,
    Mgen2,
    Magen2,
    Mgen4,
    Mgen11,
    Mgen12,
    Mgen13,
    Magen3,
    Magen4,
    Mgen5,
    Mgen8,
    Mgen10,
    Mgen10Cubic,
    // polynomials
    Pgen3,
    Pgen4,
    Pgen5,
    Pgen6,
    Pgen7,
    Pgen8,
}

impl Formula {
    pub fn tag(&self) -> &'static str {
        match self {
            Formula::Ge1 => "ge1",
            Formula::Ge2 => "ge2",
            Formula::Age1 => "age1",
            Formula::Ge3 => "ge3",
            Formula::Ge4 => "ge4",
            Formula::Ge5 => "ge5",
            Formula::Mge27FromMax => "mge27.max",
            Formula::Mge27FromMin => "mge27.min",
            Formula::Mage7 => "mage7",
            Formula::Mge1 => "mge1",
            Formula::Mge6 => "mge6",
            Formula::Mge7MeanAware => "mge7.1",
            Formula::Mge7MeanFree => "mge7.2",
            Formula::Mge7Refinement => "mge7.r",
            Formula::Mge10 => "mge10",
            Formula::Mge13 => "mge13",
            Formula::Mge14 => "mge14",
            Formula::Mage1 => "mage1",
            Formula::Mage6 => "mage6",
            Formula::Mge16First => "mge16.1",
            Formula::Mge16Second => "mge16.2",
            Formula::Mge17First => "mge17.1",
            Formula::Mge17Second => "mge17.2",
            Formula::SkewKurtosis => "mge16.r",
            Formula::StudentizedRange => "mge17.r",
            Formula::Mge19 => "mge19",
            Formula::Mge20 => "mge20",
            Formula::Mage4 => "mage4",
            Formula::Mge21 => "mge21",
            Formula::Mge24 => "mge24",
            Formula::Mge26 => "mge26",
            Formula::Mge28 => "mge28",
            Formula::Mge29 => "mge29",
            Formula::Mge32 => "mge32",
            Formula::Mge33 => "mge33",
            Formula::Mge34 => "mge34",
            Formula::Magen1 => "magen1",
            Formula::Mgen1 => "mgen1",
            Formula::Mgen2 => "mgen2",
            Formula::Magen2 => "magen2",
            Formula::Mgen4 => "mgen4",
            Formula::Mgen11 => "mgen11",
            Formula::Mgen12 => "mgen12",
            Formula::Mgen13 => "mgen13",
            Formula::Magen3 => "magen3",
            Formula::Magen4 => "magen4",
            Formula::Mgen5 => "mgen5",
            Formula::Mgen8 => "mgen8",
            Formula::Mgen10 => "mgen10",
            Formula::Mgen10Cubic => "mgen10.2",
            Formula::Pgen3 => "pgen3",
            Formula::Pgen4 => "pgen4",
            Formula::Pgen5 => "pgen5",
            Formula::Pgen6 => "pgen6",
            Formula::Pgen7 => "pgen7",
            Formula::Pgen8 => "pgen8",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bound {
    pub target: Target,
    pub direction: Direction,
    pub value: f64,
    #[serde(rename = "formula_id")]
    pub formula: Formula,
    /// True value of the target, when known.
    pub actual: Option<f64>,
    /// `value - actual` for upper bounds, `actual - value` for lower bounds.
    pub slack: Option<f64>,
    /// Set when the inputs sit at a degenerate point (e.g. a scalar matrix)
    /// and the formula was evaluated at its limiting value.
    pub degenerate: bool,
}

impl Bound {
    pub fn upper(target: Target, formula: Formula, value: f64) -> Self {
        Self::new(target, Direction::Upper, formula, value)
    }

    pub fn lower(target: Target, formula: Formula, value: f64) -> Self {
        Self::new(target, Direction::Lower, formula, value)
    }

    fn new(target: Target, direction: Direction, formula: Formula, value: f64) -> Self {
        Bound {
            target,
            direction,
            value,
            formula,
            actual: None,
            slack: None,
            degenerate: false,
        }
    }

    pub fn degenerate(mut self) -> Self {
        self.degenerate = true;
        self
    }

    /// Attaches the true value of the target and computes the slack.
    pub fn against(mut self, actual: f64) -> Self {
        self.actual = Some(actual);
        self.slack = Some(match self.direction {
            Direction::Upper => self.value - actual,
            Direction::Lower => actual - self.value,
        });
        self
    }

    /// `Some(true)` when the bound holds within `1e-9 * max(1, |actual|)`.
    pub fn holds(&self) -> Option<bool> {
        let (slack, actual) = (self.slack?, self.actual?);
        Some(slack >= -SOUNDNESS_TOL * actual.abs().max(1.0))
    }

    /// Whether the bound is attained, normalizing the slack by
    /// `max(1, range^k)` for a target of degree `k`.
    pub fn is_equality(&self, range: f64) -> Option<bool> {
        let slack = self.slack?;
        let scale = range.abs().powi(self.target.degree()).max(1.0);
        Some(slack.abs() <= EQUALITY_TOL * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_sign_follows_direction() {
        let up = Bound::upper(Target::Mu2, Formula::Ge2, 0.25).against(0.2);
        assert!((up.slack.unwrap() - 0.05).abs() < 1e-15);
        assert_eq!(up.holds(), Some(true));

        let lo = Bound::lower(Target::Spread, Formula::Mgen11, 2.0).against(1.5);
        assert_eq!(lo.slack, Some(-0.5));
        assert_eq!(lo.holds(), Some(false));
    }

    #[test]
    fn unchecked_bound_has_no_verdict() {
        let b = Bound::upper(Target::Mu4, Formula::Mge13, 1.0);
        assert_eq!(b.holds(), None);
        assert_eq!(b.is_equality(1.0), None);
    }

    #[test]
    fn serializes_with_tag_strings() {
        let b = Bound::upper(Target::SumMu4ThreeMu2Sq, Formula::Mge7MeanAware, 0.25).against(0.25);
        let v = serde_json::to_value(b).unwrap();
        assert_eq!(v["target"], "sum_mu4_3mu2sq");
        assert_eq!(v["formula_id"], "mge7.1");
        assert_eq!(v["direction"], "upper");
        assert_eq!(v["slack"], 0.0);
    }
}
