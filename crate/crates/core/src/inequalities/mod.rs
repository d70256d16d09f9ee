//! Moment inequalities for distributions supported on an interval.
//!
//! Every operation returns [`Bound`]s. When the inputs determine the bounded
//! quantity (for example [`pearson_check`] receives all moments) the actual
//! value is attached; otherwise [`run_suite`] attaches it from the sample.
//!
//! Bounds stated in terms of a count `n` (Samuelson, Brunk and relatives)
//! assume `n` equally weighted data points.

mod classical;
mod counted;
mod fourth;
mod suite;
mod third;

pub use classical::{
    classical_bounds, generalized_samuelson, mean_aware_variance_bound,
    skew_variance_composite, skew_variance_composite_bound, third_moment_interval,
};
pub use counted::{
    brunk_bounds, brunk_extrema, dispersion_bound, extrema_bounds, fourth_moment_count_bound,
    fourth_moment_count_coefficient, kurtosis_ceiling, kurtosis_sum_odd_bound, max_quartic_term,
    moment_ratio_bounds, quartic_term, MAX_COUNT,
};
pub use fourth::{
    fourth_moment_mean_bound, fourth_moment_quadratic_bound, kurtosis_sum_bounds,
    pearson_check, popoviciu_refinement, raw_fourth_moment_bound,
    variance_kurtosis_product_bound, FourthMomentCoefficients,
};
pub use suite::{run_suite, Skipped, SuiteReport};
pub use third::{
    minimum_from_skewness, positive_support_third_moment_bound, skewness_kurtosis_bounds,
    third_moment_mean_bounds, third_moment_square_bounds,
};
