//! Finite-dimensional representation oracle: characters, tensor products
//! and branching to reductive subalgebras.

mod branch;
mod character;
mod decomp;
mod embedding;
mod tensor;
mod weyl;

pub use branch::{branch, growth_scan, invariant_dim, m_restriction};
pub use character::{dominant_character, weight_multiplicities, Character, DIMENSION_GUARD};
pub use decomp::IrrDecomp;
pub use embedding::{diagonal_embedding, pair_embedding, EmbeddingOrigin, EmbeddingSpec};
pub use tensor::tensor_decompose;
pub use weyl::WeylTools;
