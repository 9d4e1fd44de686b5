use serde::{Deserialize, Serialize};

use super::algebra::{BasisElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::rootsys::Root;

/// An involution given on Chevalley generators: `e_i -> s_i e_{τ(i)}`,
/// `f_i -> s_i f_{τ(i)}` with `τ` a diagram automorphism of order at most 2
/// and `s_i = ±1`, `s_i = s_{τ(i)}`. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl InvolutionSpec {
    pub fn identity(rank: usize) -> Self {
        InvolutionSpec {
            perm: (0..rank).collect(),
            signs: vec![1; rank],
        }
    }

    /// Diagram automorphism `perm` with `-1` at the listed nodes.
    pub fn new(perm: Vec<usize>, negated: &[usize]) -> Self {
        let mut signs = vec![1; perm.len()];
        for &i in negated {
            signs[i] = -1;
        }
        InvolutionSpec { perm, signs }
    }
}

/// An automorphism acting on the Chevalley basis as a signed permutation:
/// `b_j -> sign[j] b_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub sign: Vec<i64>,
}

impl SignedPermutation {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.perm[j]] += self.sign[j] * x;
        }
        out
    }

    /// Integer basis of the `eps`-eigenspace (`eps = ±1`).
    pub fn eigenbasis(&self, eps: i64) -> Vec<Vec<i64>> {
        let n = self.perm.len();
        let mut out = Vec::new();
        for j in 0..n {
            let k = self.perm[j];
            if k == j {
                if self.sign[j] == eps {
                    let mut v = vec![0; n];
                    v[j] = 1;
                    out.push(v);
                }
            } else if j < k {
                // θ(b_j + c b_k) = s_j b_k + c s_k b_j, so c = eps s_j
                let mut v = vec![0; n];
                v[j] = 1;
                v[k] = eps * self.sign[j];
                out.push(v);
            }
        }
        out
    }
}

impl ChevalleyAlgebra {
    /// Extends an involution spec from the simple root vectors to the whole
    /// algebra.
    pub fn involution(&self, spec: &InvolutionSpec) -> Result<SignedPermutation> {
        let r = self.rank();
        let rs = self.root_system();
        if spec.perm.len() != r || spec.signs.len() != r {
            return Err(Error::Involution(format!(
                "spec has length {} but rank is {r}",
                spec.perm.len()
            )));
        }
        let cartan = rs.cartan_matrix();
        for i in 0..r {
            let t = spec.perm[i];
            if t >= r || spec.perm[t] != i {
                return Err(Error::Involution("node map is not an involution".into()));
            }
            if spec.signs[i].abs() != 1 || spec.signs[i] != spec.signs[t] {
                return Err(Error::Involution("signs must be ±1 and constant on τ-orbits".into()));
            }
            for j in 0..r {
                if cartan[t][spec.perm[j]] != cartan[i][j] {
                    return Err(Error::Involution("node map is not a diagram automorphism".into()));
                }
            }
        }
        let permute = |beta: &[i64]| -> Root {
            let mut out = vec![0; r];
            for i in 0..r {
                out[spec.perm[i]] = beta[i];
            }
            out
        };
        let pos = rs.positive_roots();
        let mut coef = vec![0i64; pos.len()];
        for (k, xi) in pos.iter().enumerate() {
            let h = xi.iter().sum::<i64>();
            if h == 1 {
                let i = xi.iter().position(|&x| x == 1).unwrap();
                coef[k] = spec.signs[i];
                continue;
            }
            let (i, kb) = (0..r)
                .find_map(|i| {
                    let mut b = xi.clone();
                    b[i] -= 1;
                    rs.positive_index(&b).map(|kb| (i, kb))
                })
                .expect("non-simple root has a simple predecessor");
            let ai = rs.simple_root(i);
            let beta = &pos[kb];
            let num = self.structure_constant(&permute(&ai), &permute(beta));
            let den = self.structure_constant(&ai, beta);
            debug_assert_eq!(num.abs(), den.abs());
            coef[k] = spec.signs[i] * coef[kb] * num / den;
        }
        let dim = self.dim();
        let mut perm = vec![0; dim];
        let mut sign = vec![1; dim];
        for j in 0..dim {
            match self.element(j) {
                BasisElement::H(i) => perm[j] = spec.perm[i],
                BasisElement::Torus(_) => perm[j] = j,
                BasisElement::E(k) => {
                    let t = rs.positive_index(&permute(&pos[k])).unwrap();
                    perm[j] = self.index(BasisElement::E(t));
                    sign[j] = coef[k];
                }
                BasisElement::F(k) => {
                    let t = rs.positive_index(&permute(&pos[k])).unwrap();
                    perm[j] = self.index(BasisElement::F(t));
                    sign[j] = coef[k];
                }
            }
        }
        let sp = SignedPermutation { perm, sign };
        for j in 0..dim {
            let k = sp.perm[j];
            if sp.perm[k] != j || sp.sign[j] * sp.sign[k] != 1 {
                return Err(Error::Involution("extension does not square to the identity".into()));
            }
        }
        Ok(sp)
    }

    /// Exhaustive check that `[θx, θy] = θ[x, y]` on basis pairs.
    pub fn is_automorphism(&self, theta: &SignedPermutation) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.bracket_basis(theta.perm[i], theta.perm[j]);
                let s = theta.sign[i] * theta.sign[j];
                let mut rhs: Vec<(usize, i64)> = self
                    .bracket_basis(i, j)
                    .iter()
                    .map(|&(k, c)| (theta.perm[k], theta.sign[k] * c * s))
                    .collect();
                rhs.sort_unstable();
                let mut l = lhs.clone();
                l.sort_unstable();
                if l != rhs {
                    return false;
                }
            }
        }
        true
    }
}
