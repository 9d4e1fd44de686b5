use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::weyl::WeylTools;
use crate::error::Result;
use crate::rootsys::{RootSystem, Weight};

/// A decomposition into irreducibles, listed by decreasing height of the
/// highest weight and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrDecomp {
    pub terms: Vec<(Vec<i64>, u64)>,
}

impl IrrDecomp {
    pub(crate) fn from_map(w: &WeylTools, map: BTreeMap<Vec<i64>, u64>) -> Self {
        let mut terms: Vec<(Vec<i64>, u64)> = map.into_iter().filter(|(_, m)| *m > 0).collect();
        terms.sort_by(|a, b| w.height(&b.0).cmp(&w.height(&a.0)).then_with(|| b.0.cmp(&a.0)));
        IrrDecomp { terms }
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.terms
            .iter()
            .find(|(w, _)| w.as_slice() == mu)
            .map_or(0, |(_, m)| *m)
    }

    /// Largest multiplicity (0 for the empty decomposition).
    pub fn max_multiplicity(&self) -> u64 {
        self.terms.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    /// `Σ mult · dim`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<u64> {
        let mut total = 0u64;
        for (w, m) in &self.terms {
            let d = rs.weyl_dimension(&Weight::from_ints(w))?;
            total += m * d.to_u64().unwrap_or(u64::MAX);
        }
        Ok(total)
    }
}
