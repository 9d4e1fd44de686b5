use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::algebra::{BasisElement, ChevalleyAlgebra};
use crate::linalg::PrimeField;

/// `exp(ad t x_β)` where `x_β` is `e_β` or, if `negative`, `f_β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Letter {
    pub root: usize,
    pub negative: bool,
    pub scalar: i64,
}

/// A product of root-group elements, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupElementWord {
    pub letters: Vec<Letter>,
}

impl GroupElementWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn inverse(&self) -> Self {
        GroupElementWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    scalar: -l.scalar,
                    ..*l
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl ChevalleyAlgebra {
    fn letter_index(&self, l: &Letter) -> usize {
        if l.negative {
            self.index(BasisElement::F(l.root))
        } else {
            self.index(BasisElement::E(l.root))
        }
    }

    /// Applies `Ad(w)` to `v` modulo a prime.
    pub fn apply_word_mod(&self, f: &PrimeField, w: &GroupElementWord, v: &mut [u64]) {
        let dim = self.dim();
        for l in w.letters.iter().rev() {
            let x = self.letter_index(l);
            let t = f.from_i64(l.scalar);
            let mut term = v.to_vec();
            let mut k = 1u64;
            loop {
                let mut next = vec![0u64; dim];
                let mut any = false;
                for (j, &c) in term.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for &(idx, s) in self.bracket_basis(x, j) {
                        next[idx] = f.add(next[idx], f.mul(c, f.from_i64(s)));
                        any = true;
                    }
                }
                if !any {
                    break;
                }
                let scale = f.mul(t, f.inv(k));
                let mut nonzero = false;
                for (slot, n) in v.iter_mut().zip(next.iter_mut()) {
                    *n = f.mul(*n, scale);
                    if *n != 0 {
                        nonzero = true;
                        *slot = f.add(*slot, *n);
                    }
                }
                if !nonzero {
                    break;
                }
                term = next;
                k += 1;
            }
        }
    }

    /// Applies `Ad(w)` to an integer vector exactly.
    pub fn apply_word_exact(&self, w: &GroupElementWord, v: &mut [BigInt]) {
        let dim = self.dim();
        for l in w.letters.iter().rev() {
            let x = self.letter_index(l);
            let t = BigInt::from(l.scalar);
            let mut term = v.to_vec();
            let mut k = 1i64;
            loop {
                let mut next = vec![BigInt::zero(); dim];
                let mut any = false;
                for (j, c) in term.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for &(idx, s) in self.bracket_basis(x, j) {
                        next[idx] += c * s;
                        any = true;
                    }
                }
                if !any {
                    break;
                }
                let mut nonzero = false;
                for (slot, n) in v.iter_mut().zip(next.iter_mut()) {
                    if n.is_zero() {
                        continue;
                    }
                    let scaled = &*n * &t;
                    debug_assert!((&scaled % k).is_zero());
                    *n = scaled / k;
                    if !n.is_zero() {
                        nonzero = true;
                        *slot += &*n;
                    }
                }
                if !nonzero {
                    break;
                }
                term = next;
                k += 1;
            }
        }
    }

    /// Matrix of `Ad(w)`: entry `[i][j]` is the `b_i` coefficient of `Ad(w) b_j`.
    pub fn adjoint_exp(&self, w: &GroupElementWord) -> Vec<Vec<BigInt>> {
        let dim = self.dim();
        let mut m = vec![vec![BigInt::zero(); dim]; dim];
        for j in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[j] = 1.into();
            self.apply_word_exact(w, &mut v);
            for (i, x) in v.into_iter().enumerate() {
                m[i][j] = x;
            }
        }
        m
    }
}
