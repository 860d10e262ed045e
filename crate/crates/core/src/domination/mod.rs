//! Exact domination and independent domination numbers.

pub mod brute;
pub mod forest_dp;
pub mod ratio;

pub use brute::{gamma_brute, i_brute, is_dominating, is_independent, BRUTE_FORCE_CAP};
pub use forest_dp::{gamma_forest_canonical, gamma_forest_dp, i_forest_canonical, i_forest_dp};
pub use ratio::{mediant_within_bound, ratio_bound, ratio_report, RatioReport, Rational};
