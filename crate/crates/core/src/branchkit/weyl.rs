//! Integer weight arithmetic for a fixed root system.

use num_integer::Integer;

use crate::rootsys::{Rational, Root, RootSystem};

/// Integer views of a root system: weights are `Vec<i64>` in fundamental
/// coordinates (semisimple part, followed by torus coordinates).
#[derive(Clone, Debug)]
pub struct WeylTools {
    pub rank: usize,
    pub weight_len: usize,
    cartan: Vec<Vec<i64>>,
    /// `scale · (ω_i, ω_j)`.
    fgram: Vec<Vec<i64>>,
    /// Positive roots in weight coordinates (semisimple part only).
    pub pos_weights: Vec<Vec<i64>>,
    pub pos_roots: Vec<Root>,
    /// `⟨ω_i, ρ^∨⟩` scaled by `scale`.
    heights: Vec<i64>,
}

impl WeylTools {
    pub fn new(rs: &RootSystem) -> Self {
        let r = rs.rank();
        let fw = rs.fundamental_weights();
        let mut raw = vec![vec![Rational::from_integer(0); r]; r];
        let mut den = 1i64;
        for i in 0..r {
            for j in 0..r {
                raw[i][j] = fw[j][i] * Rational::from_integer(rs.half_len(i));
                den = den.lcm(raw[i][j].denom());
            }
        }
        let hts: Vec<Rational> = (0..r).map(|i| fw[i].iter().copied().sum()).collect();
        for h in &hts {
            den = den.lcm(h.denom());
        }
        let scale = |x: &Rational| (x * Rational::from_integer(den)).to_integer();
        let pos_roots = rs.positive_roots().to_vec();
        WeylTools {
            rank: r,
            weight_len: rs.weight_len(),
            cartan: rs.cartan_matrix().to_vec(),
            fgram: raw.iter().map(|row| row.iter().map(scale).collect()).collect(),
            pos_weights: pos_roots
                .iter()
                .map(|b| (0..r).map(|i| rs.coroot_pairing(b, i)).collect())
                .collect(),
            pos_roots,
            heights: hts.iter().map(scale).collect(),
        }
    }

    /// Scaled inner product on the semisimple coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.fgram[i][j] * b[j];
            }
        }
        s
    }

    /// Scaled `⟨μ, ρ^∨⟩`, a linear functional positive on positive roots.
    pub fn height(&self, mu: &[i64]) -> i64 {
        (0..self.rank).map(|i| mu[i] * self.heights[i]).sum()
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        mu[..self.rank].iter().all(|&c| c >= 0)
    }

    pub fn reflect(&self, mu: &mut [i64], i: usize) {
        let m = mu[i];
        if m != 0 {
            for j in 0..self.rank {
                mu[j] -= m * self.cartan[j][i];
            }
        }
    }

    /// Dominant conjugate and the parity of the number of reflections used.
    pub fn to_dominant(&self, mu: &mut [i64]) -> bool {
        let mut odd = false;
        while let Some(i) = (0..self.rank).find(|&i| mu[i] < 0) {
            self.reflect(mu, i);
            odd = !odd;
        }
        odd
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &[i64]) -> Vec<Vec<i64>> {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![dominant.to_vec()];
        seen.insert(dominant.to_vec());
        while let Some(mu) = stack.pop() {
            for i in 0..self.rank {
                if mu[i] > 0 {
                    let mut nu = mu.clone();
                    self.reflect(&mut nu, i);
                    if seen.insert(nu.clone()) {
                        stack.push(nu);
                    }
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort();
        out
    }
}
