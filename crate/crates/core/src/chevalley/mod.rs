//! Chevalley bases, adjoint group elements and subalgebra spans.

mod algebra;
mod exp;
mod involution;
mod span;

pub use algebra::{BasisElement, ChevalleyAlgebra, SparseVec};
pub use exp::{GroupElementWord, Letter};
pub use involution::{InvolutionSpec, SignedPermutation};
pub use span::SubalgebraSpan;
