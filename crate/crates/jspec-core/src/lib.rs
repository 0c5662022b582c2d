//! Exact, desk-scale verification of the index category of ordinal pairs,
//! its diagram categories over finite sets, Day convolution, and symmetric
//! spectra, together with the equivalence between diagram data and
//! spectrum data and the prolongation functors.
//!
//! Everything is finite and checked exhaustively inside explicit windows;
//! all randomness is seeded and reproducible.

pub mod basecat;
pub mod fincomb;
pub mod jcat;
pub mod report;

pub use basecat::{coproduct, product, quotient, FinCarrier, FinMap, GroupAction};
pub use fincomb::{Injection, PartialBijection, Permutation};
pub use jcat::{JMorphism, JObject};
pub use report::{CheckReport, Violation};
