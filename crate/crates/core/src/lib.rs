//! Exact symbolic engine for the Lie algebra `L_r` spanned by quadratic
//! Heisenberg elements `v^ij(m,n)`, its induced module `M_r`, and the vertex
//! operator algebra structure built on top of it.
//!
//! Everything is computed over `Q[r]` (see [`scalar`]), so identities checked
//! with a symbolic `r` hold for every value of the parameter. Specializations
//! to rational `r` are used by the singular-vector search.
//!
//! Module map:
//! - [`scalar`]: polynomials in `r` with rational coefficients
//! - [`heisenberg`]: words in the Heisenberg generators, normal ordering
//! - [`liealg`]: canonical generators, `[.,.]` and `[.,.]_r`
//! - [`fock`]: PBW monomials, states, the module action, gradings and weights
//! - [`virops`]: `L^ij(m)`, closed-form vertex modes, Virasoro probes
//! - [`linalg`]: exact nullspaces and ranks
//! - [`singular`]: determinant vectors, singularity checks, kernel sweeps
//! - [`griess`]: the degree-two product and its Jordan structure
//! - [`suite`]: the aggregated verification run

pub mod fock;
pub mod griess;
pub mod heisenberg;
pub mod liealg;
pub mod linalg;
pub mod scalar;
pub mod singular;
pub mod suite;
pub mod virops;

pub use fock::{act, act_word, degree_of, theta, weight_of, weight_space_basis, Graded, Monomial, State, Weight};
pub use liealg::{bracket, bracket_r, canonicalize, Generator, LieElement};
pub use scalar::{RParam, Rational, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range 1..={d}")]
    IndexOutOfRange { index: u32, d: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation undefined on the zero state")]
    ZeroState,
    #[error("state is not homogeneous")]
    Inhomogeneous,
    #[error("closed-form vertex mode requires i != j (got i = j = {0})")]
    DiagonalVertexMode(u32),
    #[error("mode indices must be negative (got m = {m}, n = {n})")]
    NonNegativeMode { m: i64, n: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("nonzero kernel of dimension {0} over Q(r); generic vectors are not representable")]
    GenericKernel(usize),
    #[error("no isomorphism onto symmetric matrices within the diagonal rescaling family: {0}")]
    NoIsomorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
