//! Gessel morphisms from acyclic digraphs to (word) quasi-symmetric
//! functions, cyclic inclusion-exclusion rewriting, and Kerov coefficients
//! through signed expander enumeration.
//!
//! The algebra is generic over the coefficient type (see [`scalar::Coeff`]);
//! the aliases below fix exact rationals, which is what every kernel and rank
//! computation uses.

pub mod bipartite;
pub mod digraph;
pub mod error;
pub mod gamma;
pub mod kerov;
pub mod linalg;
pub mod rewrite;
pub mod scalar;
pub mod selftest;
pub mod setcomp;
pub mod wqsym;

pub use error::{Error, Result};
pub use scalar::{Coeff, Field};

pub use digraph::{Bipartition, Digraph, UndirectedCycle};
pub use setcomp::{DStarPerm, IntegerComposition, SemiLengthView, SetComposition};
pub use wqsym::Basis;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Sparse WQSym vector with rational coefficients.
pub type WqsymVec = wqsym::WqsymElement<Rational>;

/// Sparse QSym vector (monomial basis) with rational coefficients.
pub type QsymVec = wqsym::QsymElement<Rational>;

/// Formal combination of labeled acyclic digraphs with rational coefficients.
pub type GraphVec = digraph::GraphElement<Rational>;

/// Floating-point WQSym vector, for quick numeric experiments.
pub type WqsymVecF64 = wqsym::WqsymElement<f64>;
