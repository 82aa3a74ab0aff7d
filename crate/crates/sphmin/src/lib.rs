//! Exact-arithmetic toolkit for generalised spherical minors.
//!
//! The crate catalogs the spherical pairs of minimal rank `(G, Ĝ)` —
//! the diagonal pairs, `(SL_2n, Sp_2n)`, `(Spin_2n, Spin_2n-1)`,
//! `(E6, F4)` and `(B3, G2)` — together with their folding, twist and
//! exchange combinatorics, and evaluates the associated generalised
//! minors on exact rational matrix models.  Everything is computed over
//! arbitrary-precision integers and rationals; no floating point is
//! involved anywhere.
//!
//! Module map:
//!
//! * [`weyl`] — root systems, weights and Weyl group elements with
//!   exact integer actions on the weight lattice.
//! * [`pair`] — the catalog of spherical pairs of minimal rank and
//!   their exchange data.
//! * [`claims`] — combinatorial verification of the exchange-data
//!   properties (infinitesimal action tables, weight identities,
//!   formal cancellation, length-hypothesis scans).
//! * [`minors`] — rational matrix realizations, lifted Weyl
//!   representatives, minor evaluation and the numeric identity
//!   checks.
//! * [`stars`] — the star-diagram rendering of `SL_2n / Sp_2n` minors.
//! * [`report`] — structured pass/fail reports with JSON output.
//! * [`suite`] — the self-check suite run by `sphmin selfcheck` and
//!   the `acceptance` integration test.

pub mod claims;
pub mod matrix;
pub mod minors;
pub mod pair;
pub mod report;
pub mod rng;
pub mod stars;
pub mod suite;
pub mod weyl;

/// Lattice scalar: every weight and Weyl action entry is an exact big integer.
pub type Int = num_bigint::BigInt;
/// Field scalar used by the matrix realizations.
pub type Rat = num_rational::BigRational;

/// Integer matrices (weight-lattice actions, Cartan data).
pub type IntMatrix = matrix::Matrix<Int>;
/// Exact rational matrices (group elements in the realizations).
pub type RatMatrix = matrix::Matrix<Rat>;

/// Shorthand for small integer literals in `Int` arithmetic.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for small rational literals `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
