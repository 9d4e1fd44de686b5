pub mod branchkit;
pub mod chevalley;
pub mod classifier;
pub mod error;
pub mod linalg;
pub mod parabolic;
pub mod rootsys;
pub mod satake;
pub mod spherical;

pub use error::{Error, Result};
pub use parabolic::{make_parabolic, Parabolic, Theta};
pub use rootsys::{CartanType, Rational, Root, RootSystem, Weight};
