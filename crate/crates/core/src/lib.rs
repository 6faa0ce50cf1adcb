//! Exact lattice toolkit for integral rootless lattices spanned by pairs of
//! `EE8` lattices, together with the Leech lattice machinery used to embed
//! them.
//!
//! Module map:
//!
//! * [`exact`]: big-integer matrices, Hermite and Smith normal forms.
//! * [`lattice`]: embedded lattices and the sublattice calculus.
//! * [`shortvec`]: short-vector enumeration.
//! * [`rssd`]: involutions attached to sublattices, dihedral orders, fixed
//!   and coinvariant lattices.
//! * [`catalog`]: root lattices, their `sqrt 2` rescalings, `BW16`, tensors.
//! * [`leech`]: Golay code in MOG coordinates, the Leech lattice, octad
//!   lattices and the isometry `xi`.
//! * [`nree8`]: the eleven pairs, their builders, the witness search and the
//!   verification driver.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod catalog;
pub mod exact;
pub mod lattice;
pub mod leech;
pub mod nree8;
pub mod rssd;
pub mod shortvec;

pub use exact::{IntMatrix, RatMatrix, SmithSequence};
pub use lattice::{Fingerprint, Lattice, LatticeError};
pub use rssd::IsometryMap;

