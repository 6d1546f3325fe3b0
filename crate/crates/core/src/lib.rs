pub mod corona;
pub mod cospectral;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod named;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, IntMatrix, MatrixKind};
