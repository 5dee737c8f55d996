//! Exact Ehrhart h*- and local h*-polynomials of the lattice simplices
//! `Δ_(1,q) = conv(e_1, …, e_n, −Σ q_i e_i)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: dense arbitrary-precision integer polynomials and the
//!   distributional predicates (symmetry, unimodality, log-concavity,
//!   γ-expansion, congruence sections).
//! - [`realroot`]: Sturm-chain root isolation, interlacing decisions and the
//!   two interlacing-preserving sequence transforms.
//! - [`simplex`]: heights `ω(b)`, the open-index set `T_q`, h* and local h*,
//!   plus a lattice-point oracle that works directly from the vertex matrix.
//! - [`numeral`]: numeral systems, Lehmer codes, descents, Eulerian and
//!   maxDes polynomials, and the factoradic family.
//! - [`baser`]: the base-r family and its congruence-section recursion.

pub mod baser;
pub mod error;
pub mod numeral;
pub mod poly;
pub mod realroot;
pub mod simplex;

mod par;

pub use baser::SectionFamily;
pub use error::{Error, Result};
pub use numeral::{LehmerCode, Numeral, NumeralSystem, Permutation};
pub use poly::{GammaVector, IntPolynomial};
pub use realroot::{InterlacingSequence, RootCertificate};
pub use simplex::{ParallelepipedPoint, VertexMatrix, WeightVector};
