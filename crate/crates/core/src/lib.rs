//! Exact q-series arithmetic and identity verification for restricted
//! multipartition families.
//!
//! This crate implements, in exact rational arithmetic, the machinery needed
//! to enumerate the multipartition families `Lambda^{a,m}(n)` together with
//! their mod-2 residue statistic, to evaluate the associated closed-form and
//! multisum generating functions as truncated bivariate Laurent series, and
//! to certify the resulting identities coefficient by coefficient.
//!
//! The building blocks:
//! - [`XPoly`]: Laurent polynomial in the grading variable `x` with exact
//!   rational coefficients
//! - [`QSeries`]: truncated Laurent series in `q` with [`XPoly`] coefficients
//! - [`Monomial`]: a single term `c * x^j * q^k`, used as the argument of
//!   q-Pochhammer products
//! - [`pochhammer`]: finite/infinite products, Jacobi triple product, and the
//!   Ariki--Mathas infinite product
//! - [`partition`]: partitions, multipartitions, the restriction ladder, and
//!   exhaustive enumeration with residue grading
//! - [`statistics`]: odd/even-indexed part statistics and the `B_N`, `f_N`,
//!   `g_N` series with both brute-force and closed forms
//! - [`multisum`]: Gaussian polynomials and the q-binomial chain multisums
//! - [`bivariate`]: bilateral `H`/`I` sums, the `S_{1,M}`/`S_{2,M}` sums,
//!   triple-sum bivariate generating functions, and coefficient formulas
//! - [`registry`]: the named identity catalog with machine-checkable reports
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `rrverify` crate.

#![no_std]

extern crate alloc;

pub mod bivariate;
pub mod error;
pub mod multisum;
pub mod num;
pub mod partition;
pub mod pochhammer;
pub mod registry;
pub mod series;
pub mod statistics;
pub mod xpoly;

pub use error::Error;
pub use num::Rational;
pub use series::{Mismatch, Monomial, QSeries, EXACT};
pub use xpoly::XPoly;
