//! Invariants, automorphism-group certificates, hyperelliptic/bielliptic
//! classification and explicit models for the modular curves `X(N)`.
//!
//! The crate is organized around five pipelines:
//!
//! - [`arith`]: exact integer and residue arithmetic (factorization, the
//!   multiplicative functions `phi` and `psi`, squarefree parts);
//! - [`psl2`]: explicit computation in `PSL_2(Z/NZ)`, the Galois group of
//!   the cover `X(N) -> X(1)`;
//! - [`invariants`]: the closed-form numerology of `X(N)` (degree, genus,
//!   Hurwitz and index bounds, cusp counts, cover-degree ledger) plus an
//!   exact Riemann-Hurwitz evaluator;
//! - [`certificate`]: machine-checkable certificates that
//!   `Aut(X(N)) = PSL_2(Z/NZ)` for `N >= 7`, with an independent checker;
//! - [`classify`] and [`curves`]: the hyperelliptic/bielliptic
//!   classification and the concrete geometry (point enumeration over
//!   prime fields, involutions, quotient maps, bounded-height searches)
//!   of the explicit models behind it.
//!
//! Everything is integer-exact; inequalities are decided by
//! cross-multiplication and the only rationals in sight are explicit
//! `Ratio` values.

pub mod arith;
pub mod certificate;
pub mod classify;
pub mod curves;
pub mod invariants;
pub mod psl2;
