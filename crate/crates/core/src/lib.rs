//! Exact intersection numbers `a_N^(g) = <L^(G-N) D^N>` of the Hodge class `L`
//! and the boundary divisor `D` on the perfect cone compactification of `A_g`,
//! computed with arbitrary-precision rational arithmetic throughout.
//!
//! The crate is organized as follows:
//!
//! * [`exact`] — rational arithmetic and special values (factorials, Bernoulli
//!   numbers, Todd coefficients, zeta at negative odd integers);
//! * [`ring`] — the symbolic engine: polynomials on the corank-2 boundary
//!   stratum and on the `P^1`-bundle over it, with the shift operator and the
//!   pushforward maps;
//! * [`coeffs`] — the named coefficient families, each with two independent
//!   evaluation paths;
//! * [`terms`] — assembly of the intersection numbers from the three boundary
//!   terms, plus the printed closed forms as informational cross-checks.
//!
//! Polynomial arithmetic is generic over the coefficient scalar via
//! `num-traits`; the concrete instantiations used everywhere else are the
//! exact-rational aliases [`Rat`], [`DeltaPoly`] and [`YPoly`] below.

pub mod coeffs;
pub mod exact;
pub mod ring;
pub mod terms;

/// Arbitrary-precision exact rational, the universal value type.
pub type Rat = num_rational::BigRational;

/// Polynomial in the divisor classes `T1, T2, P` on the corank-2 stratum,
/// with exact rational coefficients.
pub type DeltaPoly = ring::DeltaPolynomial<Rat>;

/// Polynomial in `xi, f*T1, f*T2, f*P` on the `P^1`-bundle `Y`, with exact
/// rational coefficients.
pub type YPoly = ring::YPolynomial<Rat>;

pub use exact::{rat_from_str, rat_int, rat_to_string};
pub use terms::{assemble, DomainError, Method, TermBreakdown};
