//! Exact q,t symmetric functions, Macdonald operators and lattice-path statistics
//! for Delta and Delta-square identities.

pub mod conjectures;
pub mod error;
pub mod macdonald;
pub mod partition;
pub mod paths;
pub mod qt;
pub mod symfunc;

pub use error::{Error, Result};
pub use partition::Partition;
pub use qt::{QTPoly, QTRat, Rational};
pub use symfunc::SymFunc;
