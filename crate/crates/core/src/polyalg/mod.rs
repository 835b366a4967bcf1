//! Exact polynomial and rational arithmetic for web matrices.

pub mod counts;
pub mod diamond;
mod poly;
pub mod series;

pub use counts::{binomial, fubini, n_count, s_count, stirling, StirlingKind};
pub use diamond::{black_diamond, diamond_power};
pub use poly::Poly;
pub use series::{inner_sum_identity, l_series, mixing_transform};

/// Exact rational; entries of web-mixing matrices.
pub type Rat = num_rational::BigRational;
