//! Exact computation in the complete lattice of sphere subsets cut out by
//! maximal pointed convex cones.
//!
//! A maximal pointed convex cone in Euclidean space is represented by its
//! canonical [`Frame`]: an ordered, pairwise-orthogonal list of primitive
//! integer vectors, with membership decided by the sign of the last nonzero
//! coordinate. A [`LatticeElement`] pairs such a cone with a reference cone
//! over the same span; the lattice operations (join, meet, complement, order)
//! are implemented recursively on frames in exact rational arithmetic, so
//! every decision procedure is tolerance-free.
//!
//! Modules:
//! - [`arith`]: exact scalars, vectors, and orthogonalization
//! - [`cone`]: frames, membership, supports, restriction, halfspace tests
//! - [`lattice`]: lattice elements and the join/meet/order algorithms
//! - [`gen`]: seeded deterministic generators for elements and rays
//! - [`oracle`]: independent ground truth (circle oracle, sampling falsifier)
//! - [`float`]: f64 shadow backend, benchmarking only
//! - [`check`]: property suites with witness reporting

pub mod arith;
pub mod check;
pub mod cone;
pub mod float;
pub mod gen;
pub mod lattice;
pub mod oracle;

pub use arith::{dot, orthogonalize, primitive, project_off, ArithError, IntVector, Rational, Vector};
pub use cone::{
    cone_contains, halfspace_pair_contains, lex_sign, negate, restrict, support_normal, ConeError,
    Frame, LexSign, Ray, Subspace,
};
pub use gen::{GenSpec, GenError};
pub use lattice::{
    bottom, closure_contains, closure_contains_halfspace, complement, is_bottom, is_top, join,
    join_all, leq, meet, meet_all, member, top, JoinStats, LatticeElement, LatticeError,
};
pub use oracle::{classify, subset_falsifier, ArcClass, FalsifierVerdict, OracleError};
