//! Kostka-Foulkes polynomials for the classical root systems.

pub mod charge;
pub mod closed_forms;
pub mod crystal;
pub mod cyclage;
pub mod error;
pub mod kostant;
pub mod morris;
pub mod pieri;
pub mod qlaurent;
pub mod roots;
pub mod statistic;
pub mod tableau;
pub mod validate;

pub use error::{Error, Result};
pub use qlaurent::QLaurent;
pub use roots::{Family, GenPartition, RootSystem, SignedPerm, Weight};
