use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample must contain at least one value")]
    EmptySample,
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid interval [{lower}, {upper}]")]
    InvalidInterval { lower: f64, upper: f64 },
    #[error("value {value} lies outside the support [{lower}, {upper}]")]
    ValueOutOfSupport { value: f64, lower: f64, upper: f64 },
    #[error("mean {mean} lies outside the support [{lower}, {upper}]")]
    MeanOutOfSupport { mean: f64, lower: f64, upper: f64 },
    #[error("mean sits on a support endpoint while the variance is positive")]
    DegenerateMean,
    #[error("variance is zero")]
    ZeroVariance,
    #[error("variance {variance} exceeds the feasible maximum {max}")]
    VarianceInfeasible { variance: f64, max: f64 },
    #[error("raw moments are inconsistent (second raw moment below squared mean)")]
    InconsistentMoments,
    #[error("count n = {0} is even; this bound is stated for odd n only")]
    EvenN(usize),
    #[error("count n = {n} is too small (need n >= {min})")]
    InvalidCount { n: usize, min: usize },
    #[error("count n = {n} exceeds the supported maximum {max}")]
    CountTooLarge { n: usize, max: usize },
    #[error("fourth central moment is zero (constant data)")]
    ZeroFourthMoment,
    #[error("support must be strictly positive")]
    NonpositiveSupport,
    #[error("trace of B^{power} has non-negligible imaginary part {imag}")]
    NonNegligibleImaginaryTrace { power: u32, imag: f64 },
    #[error("matrix is not Hermitian (deviation {deviation})")]
    NotHermitian { deviation: f64 },
    #[error("matrix dimensions are inconsistent: {0}")]
    Shape(String),
    #[error("invalid density functional: {0}")]
    InvalidFunctional(String),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("bound denominator {0} is not positive; bound inapplicable")]
    NonpositiveDenominator(f64),
    #[error("negative discriminant {0}: functional moments violate Pearson's inequality")]
    NegativeDiscriminant(f64),
    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(f64),
    #[error("degree {degree} is too small (need degree >= {min})")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("roots cannot all be real: {0}")]
    NotRealRootFeasible(String),
}
