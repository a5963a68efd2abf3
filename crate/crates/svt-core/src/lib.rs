//! Exact enumeration of singular vector tuples of generic tensors.
//!
//! A generic m_1 × ⋯ × m_d tensor has a finite number c(m_1, …, m_d) of
//! simple singular vector tuples, given by a coefficient of an explicit
//! polynomial (Friedland–Ottaviani). This crate computes that number by three
//! independent exact methods, handles the hyper-cubical diagonal sequences
//! C_d(n) = c(n, …, n) through their linear recurrences with polynomial
//! coefficients, and estimates their asymptotic growth.
//!
//! Modules:
//!
//! * [`multipoly`] — sparse multivariate polynomials over `BigInt` with
//!   per-variable truncation;
//! * [`count`] — the three counting routes and the lattice dynamic program;
//! * [`holonomic`] — recurrences with polynomial coefficients: evaluation,
//!   verification, and exact guessing;
//! * [`asymptotics`] — growth-constant estimation and asymptotic-series
//!   evaluation at high precision;
//! * [`bfile`] — OEIS b-file reading and writing;
//! * [`golden`] — frozen reference terms for C_3..C_6 (C_3 is OEIS A271905).

pub mod asymptotics;
pub mod bfile;
pub mod count;
pub mod golden;
pub mod holonomic;
pub mod multipoly;
mod real;

pub use real::Real;
