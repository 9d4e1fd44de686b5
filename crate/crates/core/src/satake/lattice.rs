use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::catalog::SatakeDiagram;
use crate::error::{Error, Result};
use crate::rootsys::{Rational, RootSystem, Weight};

/// Whether `ℕ` in the Cartan-Helgason condition contains 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Naturals {
    /// `{0, 1, 2, ...}`: walls allowed.
    #[default]
    WithZero,
    /// `{1, 2, ...}`.
    Positive,
}

/// Cartan-Helgason data of a Satake diagram: the split part `a` is spanned
/// by `ω_i` (white, unpaired) and `ω_i + ω_j` (arrow pairs); restricted
/// roots are orthogonal projections of roots onto `a`.
#[derive(Clone, Debug)]
pub struct ChLattice {
    rank: usize,
    weight_len: usize,
    /// Representative node of each basis vector of `a`, with its partner.
    pub directions: Vec<(usize, usize)>,
    /// Restricted positive roots as `(λ ↦ (λ, α))` data: the root `α` in
    /// simple-root coordinates and `(Pα, Pα)`.
    restricted: Vec<(Vec<i64>, Rational)>,
    black: Vec<usize>,
}

impl ChLattice {
    pub fn new(rs: &RootSystem, d: &SatakeDiagram) -> Self {
        let r = rs.rank();
        let mut directions = Vec::new();
        for i in 0..r {
            if d.black.contains(&i) {
                continue;
            }
            let j = d.partner(i);
            if j >= i {
                directions.push((i, j));
            }
        }
        let len = rs.weight_len();
        let basis: Vec<Weight> = directions
            .iter()
            .map(|&(i, j)| {
                let mut w = Weight::fundamental(len, i);
                if j != i {
                    w = &w + &Weight::fundamental(len, j);
                }
                w
            })
            .collect();
        let k = basis.len();
        let gram: Vec<Vec<Rational>> = (0..k)
            .map(|a| (0..k).map(|b| rs.weight_inner(&basis[a], &basis[b])).collect())
            .collect();
        let ginv = invert(&gram);
        let mut restricted = Vec::new();
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        for alpha in rs.positive_roots() {
            let b: Vec<Rational> = basis.iter().map(|u| rs.weight_root_inner(u, alpha)).collect();
            if b.iter().all(|x| x.is_zero()) {
                continue;
            }
            let c: Vec<Rational> = (0..k).map(|x| (0..k).map(|y| ginv[x][y] * b[y]).sum()).collect();
            let norm: Rational = (0..k).map(|x| c[x] * b[x]).sum();
            if seen.insert(c) {
                restricted.push((alpha.clone(), norm));
            }
        }
        ChLattice {
            rank: r,
            weight_len: len,
            directions,
            restricted,
            black: d.black.iter().copied().collect(),
        }
    }

    /// Dimension of `a`.
    pub fn restricted_rank(&self) -> usize {
        self.directions.len()
    }

    pub fn num_restricted_roots(&self) -> usize {
        self.restricted.len()
    }

    /// Whether `λ` lies in `a` (vanishes on black nodes, constant on arrows).
    fn in_split_part(&self, lambda: &Weight) -> bool {
        let c = lambda.coords();
        if self.black.iter().any(|&b| !c[b].is_zero()) {
            return false;
        }
        if c[self.rank..].iter().any(|x| !x.is_zero()) {
            return false;
        }
        self.directions.iter().all(|&(i, j)| c[i] == c[j])
    }

    pub fn member(&self, rs: &RootSystem, lambda: &Weight, nat: Naturals) -> Result<bool> {
        rs.ensure_dominant(lambda)?;
        if lambda.len() != self.weight_len {
            return Err(Error::WeightLength {
                got: lambda.len(),
                expected: self.weight_len,
            });
        }
        if !self.in_split_part(lambda) {
            return Ok(false);
        }
        for (alpha, norm) in &self.restricted {
            let v = rs.weight_root_inner(lambda, alpha) / norm;
            let ok = v.is_integer() && !v.is_negative() && (nat == Naturals::WithZero || !v.is_zero());
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn weight_from(&self, m: &[i64]) -> Weight {
        let mut c = vec![0i64; self.weight_len];
        for (&(i, j), &x) in self.directions.iter().zip(m) {
            c[i] = x;
            c[j] = x;
        }
        Weight::from_ints(&c)
    }

    /// Restricted coordinates `m_k` of a weight in `a`.
    pub fn restricted_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        if !self.in_split_part(lambda) {
            return None;
        }
        let ints = lambda.to_ints()?;
        Some(self.directions.iter().map(|&(i, _)| ints[i]).collect())
    }

    /// Irreducible members (with 0 allowed) found in the box
    /// `0 <= m_k <= bound`. The semigroup is free, so with a large enough
    /// bound this returns one generator per restricted direction.
    pub fn generators(&self, rs: &RootSystem, bound: i64) -> Vec<Weight> {
        let k = self.directions.len();
        let mut members: Vec<Vec<i64>> = Vec::new();
        let mut m = vec![0i64; k];
        loop {
            if m.iter().any(|&x| x != 0)
                && self
                    .member(rs, &self.weight_from(&m), Naturals::WithZero)
                    .unwrap_or(false)
            {
                members.push(m.clone());
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return self.irreducible(members);
                }
                m[pos] += 1;
                if m[pos] > bound {
                    m[pos] = 0;
                    pos += 1;
                } else {
                    break;
                }
            }
        }
    }

    fn irreducible(&self, mut members: Vec<Vec<i64>>) -> Vec<Weight> {
        members.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
        let set: HashSet<Vec<i64>> = members.iter().cloned().collect();
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for m in &members {
            let reducible = gens.iter().any(|g| {
                g.iter().zip(m).all(|(a, b)| a <= b) && {
                    let d: Vec<i64> = m.iter().zip(g).map(|(a, b)| a - b).collect();
                    set.contains(&d)
                }
            });
            if !reducible {
                gens.push(m.clone());
            }
        }
        gens.iter().map(|g| self.weight_from(g)).collect()
    }

    /// Smallest box bound that yields `restricted_rank` generators (up to 8).
    pub fn fundamental_generators(&self, rs: &RootSystem) -> Vec<Weight> {
        let k = self.restricted_rank();
        let mut best = Vec::new();
        for bound in 1..=8 {
            if (bound as f64 + 1.0).powi(k as i32) > 2.0e6 {
                break;
            }
            best = self.generators(rs, bound);
            if best.len() == k {
                // generators of a free semigroup with bound b also appear with 2b
                break;
            }
        }
        best
    }
}

fn invert(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("Gram matrix is definite");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..2 * n {
                    let v = m[c][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}
