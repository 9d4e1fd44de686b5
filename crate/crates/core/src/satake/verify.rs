use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::catalog::SymmetricPairRecord;
use crate::chevalley::ChevalleyAlgebra;
use crate::error::Result;
use crate::linalg::{random_prime, PrimeField};
use crate::parabolic::Parabolic;
use crate::rootsys::RootSystem;

/// Independent consistency data for one catalog record.
#[derive(Clone, Debug, Serialize)]
pub struct RecordCheck {
    pub key: String,
    /// `dim g^σ` computed from the involution.
    pub fixed_dim: usize,
    /// Dimension of the named subalgebra type.
    pub named_dim: usize,
    /// `dim g - dim a - |Δ+ \ Δ+_Θ|` from the Satake diagram.
    pub satake_dim: usize,
    /// Real rank read off the diagram.
    pub diagram_rank: usize,
    /// Dimension of the centralizer in `g^{-σ}` of a random element of `g^{-σ}`.
    pub centralizer_rank: usize,
    pub automorphism: bool,
}

impl RecordCheck {
    pub fn consistent(&self) -> bool {
        self.automorphism
            && self.fixed_dim == self.named_dim
            && self.fixed_dim == self.satake_dim
            && self.diagram_rank == self.centralizer_rank
    }
}

pub fn check_record(alg: &ChevalleyAlgebra, rec: &SymmetricPairRecord, seed: u64) -> Result<RecordCheck> {
    let rs: &RootSystem = alg.root_system();
    let theta = alg.involution(&rec.involution)?;
    let plus = theta.eigenbasis(1);
    let minus = theta.eigenbasis(-1);
    let par = Parabolic::new(rs, super::theta_of(rec))?;
    let diagram_rank = rec.satake.restricted_rank();
    let satake_dim = alg.dim() - diagram_rank - par.nilradical_roots().len();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = PrimeField::new(random_prime(&mut rng));
    let dim = alg.dim();
    let mut x = vec![0u64; dim];
    for v in &minus {
        let c = rng.gen_range(1..f.modulus());
        for (slot, &a) in x.iter_mut().zip(v) {
            *slot = f.add(*slot, f.mul(c, f.from_i64(a)));
        }
    }
    let mut rows: Vec<Vec<u64>> = minus
        .iter()
        .map(|y| {
            let mut out = vec![0u64; dim];
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                for (j, &yj) in y.iter().enumerate() {
                    if yj == 0 {
                        continue;
                    }
                    for &(k, c) in alg.bracket_basis(i, j) {
                        out[k] = f.add(out[k], f.mul(f.mul(xi, f.from_i64(yj)), f.from_i64(c)));
                    }
                }
            }
            out
        })
        .collect();
    let rank = f.rank(&mut rows);
    Ok(RecordCheck {
        key: rec.key(),
        fixed_dim: plus.len(),
        named_dim: rec.h_type.dimension(),
        satake_dim,
        diagram_rank,
        centralizer_rank: minus.len() - rank,
        automorphism: alg.is_automorphism(&theta),
    })
}
