use std::collections::BTreeMap;

use rayon::prelude::*;

use super::character::{dominant_multiplicities, expand, guard, integral_dominant};
use super::decomp::IrrDecomp;
use super::embedding::EmbeddingSpec;
use super::weyl::WeylTools;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Restriction of `V(λ)` to the subalgebra described by `emb`.
pub fn branch(rs: &RootSystem, lambda: &Weight, emb: &EmbeddingSpec) -> Result<IrrDecomp> {
    if rs.cartan_type() != &emb.ambient {
        return Err(Error::Query(format!(
            "embedding {} is for {}, not {}",
            emb.key,
            emb.ambient,
            rs.cartan_type()
        )));
    }
    let l = integral_dominant(rs, lambda)?;
    let dim = guard(rs, lambda)?;
    let w = WeylTools::new(rs);
    let sub_rs = RootSystem::new(&emb.sub)?;
    let sw = WeylTools::new(&sub_rs);

    let mut rest: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, m) in expand(&w, &dominant_multiplicities(&w, &l)) {
        let nu = emb.restrict(&mu);
        if sw.is_dominant(&nu) {
            *rest.entry(nu).or_insert(0) += m as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        let top = rest
            .iter()
            .filter(|(_, &m)| m != 0)
            .max_by(|a, b| sw.height(a.0).cmp(&sw.height(b.0)).then_with(|| a.0.cmp(b.0)))
            .map(|(k, &m)| (k.clone(), m));
        let Some((pi, n)) = top else { break };
        if n < 0 {
            return Err(Error::Internal(format!("negative multiplicity at {pi:?} in {}", emb.key)));
        }
        for (nu, m) in dominant_multiplicities(&sw, &pi) {
            *rest.entry(nu).or_insert(0) -= n * m as i64;
        }
        out.insert(pi, n as u64);
    }
    let decomp = IrrDecomp::from_map(&sw, out);
    if decomp.dimension(&sub_rs)? != dim {
        return Err(Error::Internal(format!("dimension bookkeeping failed for {lambda} in {}", emb.key)));
    }
    Ok(decomp)
}

/// Largest multiplicity in the restriction of `V(λ)`.
pub fn m_restriction(rs: &RootSystem, lambda: &Weight, emb: &EmbeddingSpec) -> Result<u64> {
    Ok(branch(rs, lambda, emb)?.max_multiplicity())
}

/// Dimension of the space of invariants of the subalgebra in `V(λ)`.
pub fn invariant_dim(rs: &RootSystem, lambda: &Weight, emb: &EmbeddingSpec) -> Result<u64> {
    let zero = vec![0; emb.sub.weight_len()];
    Ok(branch(rs, lambda, emb)?.multiplicity(&zero))
}

/// `m_restriction(Nλ)` for `N = 1..=n_max`.
pub fn growth_scan(rs: &RootSystem, lambda: &Weight, emb: &EmbeddingSpec, n_max: usize) -> Result<Vec<u64>> {
    rs.ensure_dominant(&lambda.scaled(n_max as i64))?;
    guard(rs, &lambda.scaled(n_max as i64))?;
    (1..=n_max)
        .into_par_iter()
        .map(|n| m_restriction(rs, &lambda.scaled(n as i64), emb))
        .collect()
}
