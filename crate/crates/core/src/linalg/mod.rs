//! Exact and modular linear algebra kernels.

mod exact;
mod modular;

pub use exact::{det_bigint, nullspace, primitive_integer, rank_bigint, rref};
pub use modular::{is_prime, random_prime, PrimeField};
