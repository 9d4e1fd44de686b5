//! Finite-dimensional evidence for a verdict: the running supremum of
//! branching multiplicities over distinguished weights of growing size.

use rayon::prelude::*;
use serde::Serialize;

use super::{Classifier, GroupSub, Outcome, TripleQuery};
use crate::branchkit::{m_restriction, pair_embedding, tensor_decompose};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::satake::{ChLattice, SymmetricPairRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSup {
    /// Number of Cartan-Helgason generators (largest coordinate in the
    /// group manifold case, where every weight is scanned).
    pub level: usize,
    pub weights: usize,
    /// Weights left out because a representation exceeded a size guard.
    pub skipped: usize,
    pub sup: Option<u64>,
    pub running_sup: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub query: String,
    pub outcome: Outcome,
    pub bound: usize,
    pub levels: Vec<LevelSup>,
    /// Levels before the first one with a guarded weight.
    pub complete_levels: usize,
    /// Strict increases of the running sup within the complete levels.
    pub strict_increases: usize,
    pub agreement: Agreement,
}

/// Bounded verdict: the running sup at the last complete level equals the
/// one halfway. Unbounded verdict: at least two strict increases. A scan cut
/// short by the size guard without reaching either is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Consistent,
    Inconsistent,
    Inconclusive,
}

/// Members of the Cartan-Helgason semigroup that are sums of at most
/// `bound` generators, with their degree (the least number of generators).
fn ch_weights(rs: &RootSystem, rec: &SymmetricPairRecord, bound: usize) -> Vec<(Vec<i64>, usize)> {
    let lat = ChLattice::new(rs, &rec.satake);
    let gens: Vec<Vec<i64>> = lat
        .fundamental_generators(rs)
        .iter()
        .filter_map(|w| w.to_ints())
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut layer = vec![vec![0i64; rs.weight_len()]];
    for degree in 1..=bound {
        let mut next_layer = Vec::new();
        for w in &layer {
            for g in &gens {
                let next: Vec<i64> = w.iter().zip(g).map(|(a, b)| a + b).collect();
                if seen.insert(next.clone()) {
                    out.push((next.clone(), degree));
                    next_layer.push(next);
                }
            }
        }
        layer = next_layer;
    }
    out
}

/// Every dominant weight with coordinates at most `bound`, except zero.
fn dominant_box(rs: &RootSystem, bound: usize) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let mut out = Vec::new();
    let mut w = vec![0i64; r];
    loop {
        let mut pos = 0;
        loop {
            if pos == r {
                return out;
            }
            w[pos] += 1;
            if w[pos] > bound as i64 {
                w[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
        out.push(w.clone());
    }
}

fn level(w: &[i64]) -> usize {
    w.iter().copied().max().unwrap_or(0).max(0) as usize
}

impl Classifier {
    /// Scans distinguished weights up to `bound` and compares the growth of
    /// the largest multiplicity with the verdict.
    pub fn empirical_crosscheck(&self, q: &TripleQuery, bound: usize) -> Result<CrosscheckReport> {
        let verdict = self.classify(q)?;
        // (level, multiplicity or None when guarded)
        let samples: Vec<(usize, Option<u64>)> = match q {
            TripleQuery::Restriction { g, h, gprime } => {
                let rh = self.catalog.lookup(g, h)?;
                let rg = self.catalog.lookup(g, gprime)?;
                let rs = RootSystem::new(&rh.g)?;
                let emb = pair_embedding(&rg)?;
                ch_weights(&rs, &rh, bound)
                    .into_par_iter()
                    .map(|(w, d)| guarded(m_restriction(&rs, &Weight::from_ints(&w), &emb)).map(|m| (d, m)))
                    .collect::<Result<_>>()?
            }
            TripleQuery::Tensor { g, h1, h2 } => {
                let r1 = self.catalog.lookup(g, h1)?;
                let r2 = self.catalog.lookup(g, h2)?;
                let rs = RootSystem::new(&r1.g)?;
                let a = ch_weights(&rs, &r1, bound);
                let b = ch_weights(&rs, &r2, bound);
                let pairs: Vec<(&(Vec<i64>, usize), &(Vec<i64>, usize))> =
                    a.iter().flat_map(|x| b.iter().map(move |y| (x, y))).collect();
                pairs
                    .into_par_iter()
                    .map(|((x, dx), (y, dy))| {
                        let m = tensor_decompose(&rs, &Weight::from_ints(x), &Weight::from_ints(y)).map(|d| d.max_multiplicity());
                        guarded(m).map(|m| (*dx.max(dy), m))
                    })
                    .collect::<Result<_>>()?
            }
            TripleQuery::GroupManifold { g, sub } => {
                let gt = self.simple_type(g)?;
                let rs = RootSystem::new(&gt)?;
                let weights = dominant_box(&rs, bound);
                match sub {
                    GroupSub::Product(a, b) => {
                        let e1 = pair_embedding(&self.catalog.lookup(g, a)?)?;
                        let e2 = pair_embedding(&self.catalog.lookup(g, b)?)?;
                        weights
                            .into_par_iter()
                            .map(|w| {
                                let tau = Weight::from_ints(&w);
                                let m = (|| {
                                    let dual = rs.dual_weight(&tau)?;
                                    Ok(m_restriction(&rs, &tau, &e1)? * m_restriction(&rs, &dual, &e2)?)
                                })();
                                guarded(m).map(|m| (level(&w), m))
                            })
                            .collect::<Result<_>>()?
                    }
                    GroupSub::Diag(sigma) => {
                        let perm = match sigma {
                            Some(s) => self.catalog.lookup(g, s)?.involution.perm,
                            None => (0..gt.rank()).collect(),
                        };
                        weights
                            .into_par_iter()
                            .map(|w| {
                                let tau = Weight::from_ints(&w);
                                let m = (|| {
                                    let dual = rs.dual_weight(&tau)?.to_ints().expect("integral");
                                    let mut twisted = vec![0; dual.len()];
                                    for (i, &x) in dual.iter().enumerate() {
                                        twisted[perm[i]] = x;
                                    }
                                    Ok(tensor_decompose(&rs, &tau, &Weight::from_ints(&twisted))?.max_multiplicity())
                                })();
                                guarded(m).map(|m| (level(&w), m))
                            })
                            .collect::<Result<_>>()?
                    }
                }
            }
            TripleQuery::ComplexG { .. } => {
                return Err(Error::Query("crosscheck is not available for complex g".into()));
            }
        };

        let mut levels = Vec::new();
        let mut running = 0u64;
        for lv in 1..=bound {
            let at: Vec<&Option<u64>> = samples.iter().filter(|(l, _)| *l == lv).map(|(_, m)| m).collect();
            let sup = at.iter().filter_map(|m| **m).max();
            if let Some(s) = sup {
                running = running.max(s);
            }
            levels.push(LevelSup {
                level: lv,
                weights: at.len(),
                skipped: at.iter().filter(|m| m.is_none()).count(),
                sup,
                running_sup: running,
            });
        }
        let complete_levels = levels.iter().take_while(|l| l.skipped == 0).count();
        let complete = &levels[..complete_levels];
        let truncated = complete_levels < levels.len();
        let strict_increases = complete
            .windows(2)
            .filter(|w| w[0].running_sup > 0 && w[1].running_sup > w[0].running_sup)
            .count();
        let agreement = if verdict.outcome.is_bounded() {
            let stable = match (complete.last(), complete.get(complete.len().saturating_sub(1) / 2)) {
                (Some(last), Some(mid)) => last.running_sup == mid.running_sup,
                _ => false,
            };
            match (stable, truncated && complete.len() < 2) {
                (_, true) => Agreement::Inconclusive,
                (true, _) => Agreement::Consistent,
                (false, _) => Agreement::Inconsistent,
            }
        } else if strict_increases >= 2 {
            Agreement::Consistent
        } else if truncated {
            Agreement::Inconclusive
        } else {
            Agreement::Inconsistent
        };
        Ok(CrosscheckReport {
            query: q.label(),
            outcome: verdict.outcome,
            bound,
            levels,
            complete_levels,
            strict_increases,
            agreement,
        })
    }
}

/// Turns a guard error into a skipped sample; other errors propagate.
fn guarded(r: Result<u64>) -> Result<Option<u64>> {
    match r {
        Ok(m) => Ok(Some(m)),
        Err(Error::Guard(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
