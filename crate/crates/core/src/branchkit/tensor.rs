use std::collections::BTreeMap;

use super::character::{dominant_multiplicities, expand, guard, integral_dominant};
use super::decomp::IrrDecomp;
use super::weyl::WeylTools;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// `V(λ) ⊗ V(μ)` by the Brauer–Klimyk alternating sum over the weights of
/// the smaller factor.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<IrrDecomp> {
    let l = integral_dominant(rs, lambda)?;
    let m = integral_dominant(rs, mu)?;
    let dl = guard(rs, lambda)?;
    let dm = guard(rs, mu)?;
    if dl.saturating_mul(dm) > super::DIMENSION_GUARD * 100 {
        return Err(Error::Guard(format!("dim V({lambda}) ⊗ V({mu}) = {dl}·{dm}")));
    }
    let (big, small) = if dl >= dm { (l, m) } else { (m, l) };
    let w = WeylTools::new(rs);
    let chars = expand(&w, &dominant_multiplicities(&w, &small));
    let r = w.rank;
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, mult) in chars {
        let mut g: Vec<i64> = big.iter().zip(&nu).map(|(a, b)| a + b).collect();
        for c in g.iter_mut().take(r) {
            *c += 1;
        }
        let odd = w.to_dominant(&mut g);
        if g[..r].iter().any(|&c| c == 0) {
            continue;
        }
        for c in g.iter_mut().take(r) {
            *c -= 1;
        }
        *acc.entry(g).or_insert(0) += if odd { -(mult as i64) } else { mult as i64 };
    }
    let mut out = BTreeMap::new();
    for (k, v) in acc {
        if v < 0 {
            return Err(Error::Internal(format!("negative tensor multiplicity at {k:?}")));
        }
        if v > 0 {
            out.insert(k, v as u64);
        }
    }
    Ok(IrrDecomp::from_map(&w, out))
}
