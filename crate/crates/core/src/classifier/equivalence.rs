//! Symmetric subalgebras of a simple `g` up to automorphisms of `g`.
//!
//! Inner conjugacy classes of involutions are labelled by Satake diagrams,
//! so a diagram automorphism acts on catalog records through their
//! diagrams. Triples are compared after a simultaneous automorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem, Series};
use crate::satake::{Catalog, SatakeDiagram, SymmetricPairRecord};

/// Node permutations of the Dynkin diagram of a simple type (identity first).
pub fn diagram_automorphisms(t: &CartanType) -> Vec<Vec<usize>> {
    let f = t.factors[0];
    let n = f.rank;
    let id: Vec<usize> = (0..n).collect();
    let mut out = vec![id.clone()];
    match (f.series, n) {
        (Series::A, n) if n >= 2 => out.push((0..n).rev().collect()),
        (Series::D, 4) => {
            for p in [[0, 1, 3, 2], [2, 1, 0, 3], [3, 1, 2, 0], [2, 1, 3, 0], [3, 1, 0, 2]] {
                out.push(p.to_vec());
            }
        }
        (Series::D, n) => {
            let mut p = id;
            p.swap(n - 2, n - 1);
            out.push(p);
        }
        (Series::E, 6) => out.push(vec![5, 1, 4, 3, 2, 0]),
        _ => {}
    }
    out
}

fn diagram_key(d: &SatakeDiagram, perm: &[usize]) -> (BTreeSet<usize>, BTreeSet<(usize, usize)>) {
    let black = d.black.iter().map(|&i| perm[i]).collect();
    let arrows = d
        .arrows
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    (black, arrows)
}

/// The catalog pairs of one simple `g` with the action of its diagram
/// automorphisms.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub g: CartanType,
    pub records: Vec<SymmetricPairRecord>,
    /// `action[k][i]`: index of the image of record `i` under automorphism `k`.
    action: Vec<Vec<usize>>,
    /// `-w0` as a node permutation.
    pub minus_w0: Vec<usize>,
}

impl Equivalence {
    pub fn new(catalog: &Catalog, g: &CartanType) -> Result<Self> {
        let records = catalog.pairs_for(g)?;
        let perms = diagram_automorphisms(g);
        let id: Vec<usize> = (0..g.rank()).collect();
        let keys: Vec<_> = records.iter().map(|r| diagram_key(&r.satake, &id)).collect();
        let mut action = Vec::new();
        for p in &perms {
            let mut row = Vec::new();
            for (i, r) in records.iter().enumerate() {
                // The catalog lists one inner class per real form; when the
                // outer image of a class is not listed, it is identified with
                // the class itself.
                let k = diagram_key(&r.satake, p);
                row.push(keys.iter().position(|x| *x == k).unwrap_or(i));
            }
            action.push(row);
        }
        let rs = RootSystem::new(g)?;
        Ok(Equivalence {
            g: g.clone(),
            records,
            action,
            minus_w0: rs.w0_permutation().to_vec(),
        })
    }

    pub fn index_of(&self, rec: &SymmetricPairRecord) -> Result<usize> {
        self.records
            .iter()
            .position(|r| r.key() == rec.key())
            .ok_or_else(|| Error::Query(format!("{} is not a catalog pair of {}", rec.key(), self.g)))
    }

    /// Canonical representative of `(h, g')` under simultaneous automorphisms.
    pub fn canonical_pair(&self, a: usize, b: usize) -> (usize, usize) {
        self.action.iter().map(|row| (row[a], row[b])).min().expect("identity")
    }

    /// As [`Self::canonical_pair`], also allowing the two entries to be swapped.
    pub fn canonical_unordered(&self, a: usize, b: usize) -> (usize, usize) {
        self.canonical_pair(a, b).min(self.canonical_pair(b, a))
    }

    /// The orbit of a single record.
    pub fn orbit(&self, a: usize) -> BTreeSet<usize> {
        self.action.iter().map(|row| row[a]).collect()
    }
}
