//! Exact symbolic computation of degenerate Bernoulli numbers and
//! polynomials, degenerate Stirling numbers and degenerate-type Eulerian
//! numbers, with every quantity computed along independent routes.
//!
//! All arithmetic is exact. Numbers that depend on the degeneracy parameter
//! λ are elements of ℚ[λ]; polynomial families in `x` live in ℚ[λ][x]. The
//! polynomial and series types are generic over a [`Coeff`] ring, and the
//! aliases below fix the rings used throughout.

pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exactcore;
pub mod series;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use exactcore::{lambda, Coeff, LambdaRing, Poly, RatFun, Rational};
pub use series::TruncatedSeries;

/// ℚ[λ].
pub type PolyLambda = Poly<Rational>;
/// ℚ(λ), canonical fraction of two [`PolyLambda`].
pub type RationalFunctionLambda = RatFun;
/// ℚ[λ][x].
pub type PolyXOverLambda = Poly<PolyLambda>;
/// ℚ[λ][x][y], with `y` the outer indeterminate.
pub type PolyXYOverLambda = Poly<PolyXOverLambda>;
/// Truncated exponential generating function over ℚ[λ].
pub type LambdaSeries = TruncatedSeries<PolyLambda>;
/// Truncated exponential generating function over ℚ[λ][x].
pub type XLambdaSeries = TruncatedSeries<PolyXOverLambda>;
