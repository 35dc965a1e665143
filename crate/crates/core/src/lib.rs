//! Numerical semigroups and the upper bounds they impose on the number of
//! rational places of a function field.
//!
//! * [`semigroup`]: construction, membership, gaps, Apery sets, minimal
//!   generators and residual sets `S \ ∪ (g_i + S)`.
//! * [`bounds`]: Lewittes' bound, the residual-set bound over all
//!   generators, their refinements and classical bounds on `N_q(g)`.
//! * [`enumerate`]: all semigroups of a given genus, plus a brute-force
//!   census used as an oracle.
//! * [`telescopic`]: telescopic sequences, closed-form genus and unique
//!   representations.
//! * [`tower`]: semigroups of the second Garcia-Stichtenoth tower.

pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod semigroup;
pub mod telescopic;
pub mod tower;

pub use bounds::{BoundReport, Rational};
pub use error::{Error, Result};
pub use semigroup::{NumericalSemigroup, ShiftSet, DEFAULT_MAX_BITS};
