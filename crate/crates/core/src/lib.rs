//! Exact symbolic pole bookkeeping for the constant terms of degenerate
//! Eisenstein series on GL(m+n) induced from a character on the maximal
//! parabolic P_{m,n}.
//!
//! The constant term along the Borel is a finite sum over *shuffles*
//! (permutations increasing on the first m and on the last n positions),
//! each weighted by the inverse normalizing factor r(Λ_s, w)⁻¹, a ratio of
//! completed L-functions. This crate computes those ratios exactly two
//! independent ways, expands them as truncated Laurent series in t = s − s₀
//! over a fraction field generated by abstract zeta constants, groups
//! shuffles into orbits sharing the same permuted character tuple, sums the
//! factors over each orbit, and classifies the pole behaviour at every
//! critical point s = (m+n)/2 − α.
//!
//! All arithmetic is exact (rational / symbolic); there is no floating
//! point anywhere in the crate.

pub mod error;
pub mod factors;
pub mod lambda;
pub mod orbits;
pub mod poly;
pub mod rat;
pub mod report;
pub mod series;
pub mod shuffle;
pub mod symbols;
pub mod verify;
pub mod zeta;

pub use error::EisenError;
pub use factors::{
    b_alpha, pole_order_at, r_inverse_root_product, r_inverse_telescoped, w_alpha_set,
    w_alpha_zero_set, CriticalPoint, LFactor, ZetaProduct,
};
pub use lambda::{apply_weyl, AffineExponent, CharTag, LambdaTuple};
pub use orbits::{
    brute_force_orbit, change_intervals, classify, classify_at_s, closed_form_check,
    constant_term_report, orbit_reports, orbit_sum, ChangeInterval, Classification, OrbitReport,
    Verdict,
};
pub use poly::{Monomial, SymbolFraction, SymbolPolynomial};
pub use rat::Rat;
pub use series::{Certainty, LaurentSeries, PoleOrder};
pub use shuffle::{enumerate_shuffles, enumerate_shuffles_capped, Shuffle, DEFAULT_ENUMERATION_CAP};
pub use symbols::ZetaSymbol;
pub use zeta::{canonical_argument, laurent_expand, order_at, FactorChar};

/// Default truncation degree for orbit-sum work at a critical point with
/// maximal pole order `b_alpha`: enough terms to certify "pole order ≤ 1"
/// and holomorphy after cancellation of order-`b_alpha` poles.
pub fn default_truncation(b_alpha: u32) -> i64 {
    (b_alpha.max(2) + 1) as i64
}
