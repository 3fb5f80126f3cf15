//! Exact computation of ranks, signatures and weighted sums-of-squares
//! decompositions of Hermitian polynomials of the form `A(z,z̄)·‖z‖²_{r,s,t}`.
//!
//! Everything in this crate works over the Gaussian rationals: there is no
//! floating point anywhere in the rank pipeline. A lossy float rendering
//! exists only for report display.
//!
//! Module map:
//!
//! * [`arith`] — arbitrary-precision rationals and Gaussian rationals.
//! * [`linalg`] — exact matrices, congruence diagonalization, signatures, rank.
//! * [`poly`] — Hermitian and holomorphic polynomial algebra.
//! * [`sos`] — weighted sums-of-squares decompositions and induced maps.
//! * [`macaulay`] — Macaulay representations, the lowering operator, N(n;a,b).
//! * [`gaps`] — rank interval profiles for each theorem variant.
//! * [`spans`] — span-dimension experiments on induced maps.
//! * [`io`] — text and JSON serialization.

pub mod arith;
pub mod gaps;
pub mod io;
pub mod linalg;
pub mod macaulay;
pub mod poly;
pub mod sos;
pub mod spans;

pub use arith::{ArithError, GaussianRational, Rational};
pub use linalg::{CongruenceDiagonalization, HermitianMatrix, LinalgError, Matrix, Signature};
pub use poly::{HermitianPoly, HoloPoly, MonomialBasis, MultiIndex, PolyError, SignatureForm};
pub use sos::{InducedMap, SosError, WeightedSosDecomposition};
