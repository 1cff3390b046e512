//! Exact construction and verification of classical and generalized
//! orthogonal polynomial families.
//!
//! Everything here runs in arbitrary-precision rational arithmetic: the
//! classical Jacobi, Laguerre, and Charlier polynomials, the inversion
//! formulas and summation identities that tie them together, a
//! closed-form solver for the triangular systems `Σ_i A_i(x)·D^i P_n(x) =
//! F_n(x)`, and the generalized (point-mass and Sobolev-type) families
//! with exact orthogonality certificates.
//!
//! * [`rational`] — exact scalars, Pochhammer symbols, Γ-ratios.
//! * [`poly`] — the dense polynomial ring over ℚ with `D = d/dx`.
//! * [`families`] — classical family constructors and their classical
//!   identities (derivative shifts, differential equations, the `β → ∞`
//!   scaling limit).
//! * [`identities`] — inversion formulas and summation identities.
//! * [`solver`] — triangular matrices of derivatives, their closed-form
//!   inverses, and the coefficient-system solver with an independent
//!   back-substitution oracle.
//! * [`generalized`] — generalized Jacobi, Sobolev-type Laguerre, and
//!   symmetric generalized ultraspherical polynomials with exact inner
//!   products.
//! * [`report`] — machine-readable pass/fail records.

pub mod error;
pub mod families;
pub mod generalized;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod solver;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rational;
pub use report::IdentityReport;
