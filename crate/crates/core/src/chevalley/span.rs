use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::algebra::{BasisElement, ChevalleyAlgebra};
use super::involution::InvolutionSpec;
use crate::error::{Error, Result};
use crate::linalg::rref;

/// A subalgebra given by integer vectors in the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpan {
    pub vectors: Vec<Vec<i64>>,
    pub label: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Cartan,
    Positive,
    Negative,
    Mixed,
}

impl SubalgebraSpan {
    pub fn new(vectors: Vec<Vec<i64>>, label: impl Into<String>) -> Self {
        SubalgebraSpan {
            vectors,
            label: label.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Fixed points of an involution.
    pub fn from_involution(alg: &ChevalleyAlgebra, spec: &InvolutionSpec, label: impl Into<String>) -> Result<Self> {
        let theta = alg.involution(spec)?;
        Ok(SubalgebraSpan::new(theta.eigenbasis(1), label))
    }

    /// The whole algebra.
    pub fn full(alg: &ChevalleyAlgebra) -> Self {
        let dim = alg.dim();
        let vectors = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        SubalgebraSpan::new(vectors, "full")
    }

    fn part(alg: &ChevalleyAlgebra, v: &[i64]) -> Part {
        let mut part = None;
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let p = match alg.element(i) {
                BasisElement::H(_) | BasisElement::Torus(_) => Part::Cartan,
                BasisElement::E(_) => Part::Positive,
                BasisElement::F(_) => Part::Negative,
            };
            match part {
                None => part = Some(p),
                Some(q) if q != p => return Part::Mixed,
                _ => {}
            }
        }
        part.unwrap_or(Part::Mixed)
    }

    /// Exact check that the span is closed under the bracket.
    pub fn is_closed(&self, alg: &ChevalleyAlgebra) -> bool {
        let rows: Vec<Vec<BigRational>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (red, pivots) = rref(rows);
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let b = alg.bracket(&self.vectors[i], &self.vectors[j]);
                let mut res: Vec<BigRational> = b.iter().map(|&x| BigRational::from_integer(x.into())).collect();
                for (row, &pc) in red.iter().zip(&pivots) {
                    if res[pc].is_zero() {
                        continue;
                    }
                    let f = res[pc].clone();
                    for (r, x) in res.iter_mut().zip(row) {
                        *r -= &f * x;
                    }
                }
                if res.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// `k ∩ h` for a span whose vectors each lie in `h`, `n+` or `n-`.
    pub fn cartan_part(&self, alg: &ChevalleyAlgebra) -> Vec<Vec<i64>> {
        self.vectors
            .iter()
            .filter(|v| Self::part(alg, v) == Part::Cartan)
            .cloned()
            .collect()
    }

    /// Borel subalgebra `(k ∩ h) ⊕ (k ∩ n+)`. This is a Borel of `k` when
    /// `k ∩ h` contains the regular element `ρ^∨` (the element on which
    /// every simple root takes the value 1), which is checked.
    pub fn borel(&self, alg: &ChevalleyAlgebra) -> Result<SubalgebraSpan> {
        let mut cartan = Vec::new();
        let mut pos = Vec::new();
        let mut neg = 0;
        for v in &self.vectors {
            match Self::part(alg, v) {
                Part::Cartan => cartan.push(v.clone()),
                Part::Positive => pos.push(v.clone()),
                Part::Negative => neg += 1,
                Part::Mixed => {
                    return Err(Error::Subalgebra(format!(
                        "{}: basis vector is not a weight vector for the standard Cartan",
                        self.label
                    )))
                }
            }
        }
        if pos.len() != neg || !contains_rho_check(alg, &cartan) {
            return Err(Error::Subalgebra(format!(
                "{}: standard Cartan does not meet the subalgebra in a Cartan subalgebra",
                self.label
            )));
        }
        cartan.extend(pos);
        Ok(SubalgebraSpan::new(cartan, format!("borel of {}", self.label)))
    }
}

/// Whether `ρ^∨` lies in the span of the given vectors of `h`.
fn contains_rho_check(alg: &ChevalleyAlgebra, cartan: &[Vec<i64>]) -> bool {
    let r = alg.rank();
    // ρ^∨ in coroot coordinates: solve A^T c = (1,..,1), i.e. c_i = sum_j (A^{-1})[j][i]
    let rs = alg.root_system();
    let fw = rs.fundamental_weights();
    // ω_j = Σ_i (A^{-1})[i][j] α_i; ρ^∨ = Σ_i (Σ_j (A^T)^{-1}[i][j]) h_i = Σ_i Σ_j (A^{-1})[j][i] h_i
    let mut target: Vec<BigRational> = (0..r)
        .map(|i| {
            let s: crate::rootsys::Rational = (0..r).map(|j| fw[i][j]).sum();
            BigRational::new((*s.numer()).into(), (*s.denom()).into())
        })
        .collect();
    let rows: Vec<Vec<BigRational>> = cartan
        .iter()
        .map(|v| v[..r].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let (red, pivots) = rref(rows);
    for (row, &pc) in red.iter().zip(&pivots) {
        if target[pc].is_zero() {
            continue;
        }
        let f = target[pc].clone();
        for (t, x) in target.iter_mut().zip(row) {
            *t -= &f * x;
        }
    }
    target.iter().all(|x| x.is_zero())
}
