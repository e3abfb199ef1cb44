//! Exact arithmetic for polynomial endomorphisms and E-derivations of
//! `K[x,y]` over cyclotomic coefficient fields.
//!
//! The library fixes one coefficient field per session — the rationals or
//! a cyclotomic extension `Q(zeta_r)` — and everything downstream is exact:
//! sparse bivariate polynomials with arbitrary-precision rational
//! residues, the seven-class catalog of locally finite endomorphisms in
//! normal form, closed formulas for the attached E-derivations on
//! monomials, truncated windows onto their images with a triangular
//! preimage solver, quotients by principal ideals in `y` with CRT
//! splitting and exact nilpotency, idempotent search through the discrete
//! Fourier transform, weak-radical and falsifier probes for Mathieu-Zhao
//! style questions, and Newton polygons with exact Minkowski arithmetic.
//!
//! No floating point is used anywhere.

pub mod endo;
pub mod field;
pub mod linalg;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod sampling;
pub mod subspace;
pub mod ypoly;

pub use endo::{EDerivation, Endomorphism, NormalForm, NormalFormError};
pub use field::{Coeff, FieldSpec};
pub use linalg::TruncatedSpace;
pub use parse::{parse_coeff, parse_poly, parse_ypoly, ParseError};
pub use poly::{BiPoly, Monomial};
pub use ypoly::YPoly;
