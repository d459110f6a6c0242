//! Weight combinatorics of integrable highest-weight modules over the affine
//! Lie superalgebra sl(1|n)^(1): highest weights under every Borel in the
//! odd-reflection string, adjacency and blocks, truncated characters, Ext
//! quivers and the Duflo–Serganova invariant. All arithmetic is exact.

pub mod blocks;
pub mod characters;
pub mod cli;
pub mod ds_functor;
pub mod error;
pub mod highest_weights;
pub mod oracle;
pub mod quiver;
pub mod rational;
pub mod root_system;

pub use error::{Error, Result};
