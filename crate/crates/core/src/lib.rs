//! Pattern-avoiding set partitions and restricted Schröder paths.
//!
//! The crate is organised around five pieces:
//!
//! * [`partition`]: canonical sequential forms, pattern containment, the
//!   left-to-right-maxima decomposition and irreducibility.
//! * [`path`] and [`render`]: Schröder, Dyck and skew Dyck paths with
//!   their peak statistics, exhaustive generators and drawings.
//! * [`bijection`]: the maps between 12312/12321-avoiding partitions of
//!   `[n+1]` and UH-free Schröder paths of semilength `n`, and the map from
//!   UH-free paths to paths without peaks at even level.
//! * [`enumeration`]: exact counting formulas and truncated series.
//! * [`verify`]: exhaustive cross-checks tying all of the above together.

pub mod bijection;
pub mod enumeration;
mod error;
pub mod partition;
pub mod path;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{parse_partition, Pattern, SetPartition};
pub use path::{parse_path, LatticePath, PathClass, Step};
