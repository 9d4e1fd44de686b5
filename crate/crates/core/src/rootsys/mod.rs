mod cartan;
mod recognize;
mod system;
mod weight;

pub use cartan::{CartanType, Series, SimpleFactor};
pub use recognize::recognize_cartan;
pub use system::{build_root_system, Root, RootSystem};
pub use weight::{Rational, Weight};
