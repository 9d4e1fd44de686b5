//! Symmetric pairs, Satake diagrams and Cartan-Helgason lattices.

mod catalog;
mod lattice;
pub mod names;
mod verify;

pub use catalog::{parse_pair_key, simple_types, Catalog, SatakeDiagram, SymmetricPairRecord};
pub use lattice::{ChLattice, Naturals};
pub use verify::{check_record, RecordCheck};

use crate::error::Result;
use crate::parabolic::{Parabolic, Theta};
use crate::rootsys::RootSystem;

/// The black nodes of the Satake diagram.
pub fn theta_of(rec: &SymmetricPairRecord) -> Theta {
    Theta(rec.satake.black.clone())
}

/// The Borel subalgebra `b_{G/H}` as a standard parabolic of `g`.
pub fn borel_for_pair<'a>(rs: &'a RootSystem, rec: &SymmetricPairRecord) -> Result<Parabolic<'a>> {
    Parabolic::new(rs, theta_of(rec))
}
