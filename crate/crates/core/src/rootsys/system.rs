use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::cartan::CartanType;
use super::weight::{Rational, Weight};
use crate::error::{Error, Result};

/// A root in simple-root coordinates (semisimple part only).
pub type Root = Vec<i64>;

/// Root system of a reductive Cartan type, with the central torus carried
/// along as extra weight coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    /// `(α_i, α_j)`, short roots of squared length 2.
    gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = <α_i^∨, α_j>`.
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`.
    half_len: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    w0_perm: Vec<usize>,
    /// `ω_j` in simple-root coordinates (column `j` of the inverse Cartan matrix).
    fundamental: Vec<Vec<Rational>>,
    /// Factor index of each simple root.
    factor_of: Vec<usize>,
}

impl RootSystem {
    pub fn new(t: &CartanType) -> Result<Self> {
        for f in &t.factors {
            f.check()?;
        }
        let rank = t.rank();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut factor_of = Vec::with_capacity(rank);
        for (k, (f, off)) in t.factors.iter().zip(t.offsets()).enumerate() {
            let g = f.simple_gram();
            for i in 0..f.rank {
                factor_of.push(k);
                for j in 0..f.rank {
                    gram[off + i][off + j] = g[i][j];
                }
            }
        }
        let half_len: Vec<i64> = (0..rank).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let positive = generate_positive_roots(&cartan);
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let fundamental = invert_cartan(&cartan);

        let mut rs = RootSystem {
            cartan_type: t.clone(),
            rank,
            gram,
            cartan,
            half_len,
            positive,
            index,
            w0_perm: Vec::new(),
            fundamental,
            factor_of,
        };
        rs.w0_perm = rs.compute_w0_perm();
        Ok(rs)
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torus_rank(&self) -> usize {
        self.cartan_type.torus_rank
    }

    pub fn weight_len(&self) -> usize {
        self.rank + self.cartan_type.torus_rank
    }

    pub fn dimension(&self) -> usize {
        self.weight_len() + 2 * self.positive.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the simple roots.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn half_len(&self, i: usize) -> i64 {
        self.half_len[i]
    }

    pub fn factor_of(&self, i: usize) -> usize {
        self.factor_of[i]
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Root = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// `(β, γ)` for vectors in simple-root coordinates.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `<β, α_i^∨>`.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| beta[j] * self.cartan[i][j]).sum()
    }

    /// A root (simple-root coordinates) expressed in fundamental-weight
    /// coordinates; torus coordinates are zero.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        let mut c: Vec<i64> = (0..self.rank)
            .map(|i| self.coroot_pairing(beta, i))
            .collect();
        c.resize(self.weight_len(), 0);
        Weight::from_ints(&c)
    }

    /// `ω_j` in simple-root coordinates.
    pub fn fundamental_weights(&self) -> &[Vec<Rational>] {
        &self.fundamental
    }

    /// `(λ, β)` for a weight `λ` and a root `β` in simple-root coordinates.
    pub fn weight_root_inner(&self, lambda: &Weight, beta: &[i64]) -> Rational {
        let c = lambda.coords();
        (0..self.rank)
            .map(|i| c[i] * Rational::from_integer(beta[i] * self.half_len[i]))
            .sum()
    }

    /// `(λ, μ)` on the semisimple part.
    pub fn weight_inner(&self, lambda: &Weight, mu: &Weight) -> Rational {
        let (a, b) = (lambda.coords(), mu.coords());
        let mut s = Rational::zero();
        for i in 0..self.rank {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if b[j].is_zero() {
                    continue;
                }
                s += a[i] * b[j] * self.fundamental[j][i] * Rational::from_integer(self.half_len[i]);
            }
        }
        s
    }

    /// `s_i(μ)` in fundamental coordinates.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let m = mu.coords()[i];
        let coords = mu
            .coords()
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                if j < self.rank {
                    c - m * self.cartan[j][i]
                } else {
                    c
                }
            })
            .collect();
        Weight::new(coords)
    }

    pub fn rho(&self) -> Weight {
        let mut c = vec![1; self.rank];
        c.resize(self.weight_len(), 0);
        Weight::from_ints(&c)
    }

    /// Permutation of simple-root indices induced by `-w0`.
    pub fn w0_permutation(&self) -> &[usize] {
        &self.w0_perm
    }

    fn compute_w0_perm(&self) -> Vec<usize> {
        let word = self.longest_word();
        (0..self.rank)
            .map(|i| {
                let mut w = Weight::fundamental(self.rank, i);
                for &s in &word {
                    w = self.reflect(&w, s);
                }
                let neg = -&w;
                let ints = neg.to_ints().expect("integral");
                ints.iter()
                    .position(|&x| x == 1)
                    .expect("-w0 permutes fundamental weights")
            })
            .collect()
    }

    /// A reduced word for `w0`, found by reflecting `ρ` to `-ρ`.
    pub fn longest_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = Weight::from_ints(&vec![1; self.rank]);
        while let Some(i) = w.coords().iter().position(|c| c.is_positive()) {
            w = self.reflect(&w, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    fn check_len(&self, lambda: &Weight) -> Result<()> {
        if lambda.len() != self.weight_len() {
            return Err(Error::WeightLength {
                got: lambda.len(),
                expected: self.weight_len(),
            });
        }
        Ok(())
    }

    /// Nonnegative integers on semisimple nodes, integers on the torus.
    pub fn is_dominant(&self, lambda: &Weight) -> Result<bool> {
        self.check_len(lambda)?;
        let c = lambda.coords();
        Ok(c.iter().all(|x| x.is_integer()) && c[..self.rank].iter().all(|x| !x.is_negative()))
    }

    pub fn ensure_dominant(&self, lambda: &Weight) -> Result<()> {
        if self.is_dominant(lambda)? {
            Ok(())
        } else {
            Err(Error::NotDominant(lambda.to_string()))
        }
    }

    /// `-w0 λ`. Torus coordinates are negated.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        self.ensure_dominant(lambda)?;
        let c = lambda.coords();
        let mut out = vec![Rational::zero(); c.len()];
        for i in 0..self.rank {
            out[self.w0_perm[i]] = c[i];
        }
        for k in self.rank..c.len() {
            out[k] = -c[k];
        }
        Ok(Weight::new(out))
    }

    pub fn dual_theta(&self, theta: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        theta
            .iter()
            .map(|&i| {
                if i < self.rank {
                    Ok(self.w0_perm[i])
                } else {
                    Err(Error::IndexOutOfRange {
                        index: i,
                        rank: self.rank,
                    })
                }
            })
            .collect()
    }

    /// Weyl dimension formula over the given positive roots.
    pub fn weyl_product<'a>(
        &self,
        lambda: &Weight,
        roots: impl IntoIterator<Item = &'a Root>,
    ) -> BigUint {
        let c = lambda.coords();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for beta in roots {
            let mut a = 0i64;
            let mut b = 0i64;
            for i in 0..self.rank {
                let w = beta[i] * self.half_len[i];
                a += (c[i].to_integer() + 1) * w;
                b += w;
            }
            num *= a;
            den *= b;
        }
        let q = num / den;
        q.to_biguint().expect("dimension is positive")
    }

    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        self.ensure_dominant(lambda)?;
        Ok(self.weyl_product(lambda, self.positive.iter()))
    }

    /// `(λ, β) / (β, β)`.
    pub fn pairing(&self, lambda: &Weight, beta: &[i64]) -> Result<Rational> {
        self.check_len(lambda)?;
        if beta.len() != self.rank || !self.is_root(beta) {
            return Err(Error::NotARoot(format!("{beta:?}")));
        }
        let num = self.weight_root_inner(lambda, beta);
        Ok(num / Rational::from_integer(self.root_inner(beta, beta)))
    }
}

pub fn build_root_system(t: &CartanType) -> Result<RootSystem> {
    RootSystem::new(t)
}

/// Positive roots by the root-string rule: for `β` and simple `α_i`,
/// `β + α_i` is a root iff `p > 0`, where `p = q - <β, α_i^∨>` and `q` is
/// the length of the `α_i`-string below `β`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut all: Vec<Root> = Vec::new();
    let mut set: std::collections::HashSet<Root> = Default::default();
    let mut layer: Vec<Root> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    for v in &layer {
        set.insert(v.clone());
    }
    while !layer.is_empty() {
        layer.sort_by(|a, b| b.cmp(a));
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if set.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                if q - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

/// Inverse of an integer matrix over the rationals, returned by columns
/// so that entry `[j][i]` is `(A^{-1})[i][j]`.
fn invert_cartan(a: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = a[i].iter().map(|&x| Rational::from_integer(x)).collect();
            row.extend((0..n).map(|j| Rational::from_integer((i == j) as i64)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..2 * n {
                    let v = m[col][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    (0..n)
        .map(|j| (0..n).map(|i| m[i][n + j]).collect())
        .collect()
}
