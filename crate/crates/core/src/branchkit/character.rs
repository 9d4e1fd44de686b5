use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use super::weyl::WeylTools;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Largest module dimension the oracle will expand.
pub const DIMENSION_GUARD: u64 = 1_000_000;

/// A finite-dimensional character: weight (integer fundamental
/// coordinates) to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Character {
    pub weight_len: usize,
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl Character {
    pub fn dimension(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.weights.get(mu).copied().unwrap_or(0)
    }
}

pub(crate) fn integral_dominant(rs: &RootSystem, lambda: &Weight) -> Result<Vec<i64>> {
    rs.ensure_dominant(lambda)?;
    lambda
        .to_ints()
        .ok_or_else(|| Error::Query(format!("weight {lambda} is not integral")))
}

pub(crate) fn guard(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    let d = rs.weyl_dimension(lambda)?;
    match d.to_u64() {
        Some(d) if d <= DIMENSION_GUARD => Ok(d),
        _ => Err(Error::Guard(format!(
            "dim V({lambda}) = {d} exceeds the guard {DIMENSION_GUARD}"
        ))),
    }
}

/// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's
/// recursion. The input is assumed dominant integral.
pub(crate) fn dominant_multiplicities(w: &WeylTools, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let r = w.rank;
    // Dominant weights below λ, connected by positive roots through dominant weights.
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::new();
    depth.insert(lambda.to_vec(), 0);
    let mut queue = vec![lambda.to_vec()];
    while let Some(mu) = queue.pop() {
        let d = depth[&mu];
        for (beta, root) in w.pos_weights.iter().zip(&w.pos_roots) {
            let mut nu = mu.clone();
            for i in 0..r {
                nu[i] -= beta[i];
            }
            if w.is_dominant(&nu) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + root.iter().sum::<i64>());
                queue.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i64>)> = depth.into_iter().map(|(k, d)| (d, k)).collect();
    order.sort();

    let mut lr = lambda.to_vec();
    for c in lr.iter_mut().take(r) {
        *c += 1;
    }
    let top = w.inner(&lr, &lr);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    let known: HashSet<Vec<i64>> = order.iter().map(|(_, k)| k.clone()).collect();
    for (_, mu) in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for beta in &w.pos_weights {
            let mut nu = mu.clone();
            loop {
                for i in 0..r {
                    nu[i] += beta[i];
                }
                let mut dom = nu.clone();
                w.to_dominant(&mut dom);
                if !known.contains(&dom) {
                    break;
                }
                let m = mult.get(&dom).copied().unwrap_or(0) as i64;
                num += 2 * w.inner(&nu, beta) * m;
            }
        }
        let mut mr = mu.clone();
        for c in mr.iter_mut().take(r) {
            *c += 1;
        }
        let den = top - w.inner(&mr, &mr);
        debug_assert!(den > 0 && num % den == 0);
        let m = num / den;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    mult.into_iter().collect()
}

/// Dominant part of the character of `V(λ)`.
pub fn dominant_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let l = integral_dominant(rs, lambda)?;
    guard(rs, lambda)?;
    Ok(Character {
        weight_len: rs.weight_len(),
        weights: dominant_multiplicities(&WeylTools::new(rs), &l),
    })
}

pub(crate) fn expand(w: &WeylTools, dominant: &BTreeMap<Vec<i64>, u64>) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for (mu, &m) in dominant {
        for nu in w.orbit(mu) {
            out.insert(nu, m);
        }
    }
    out
}

/// The full character of `V(λ)`.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let l = integral_dominant(rs, lambda)?;
    guard(rs, lambda)?;
    let w = WeylTools::new(rs);
    Ok(Character {
        weight_len: rs.weight_len(),
        weights: expand(&w, &dominant_multiplicities(&w, &l)),
    })
}
