use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::chevalley::{BasisElement, ChevalleyAlgebra, SubalgebraSpan};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, primitive_integer, rref};
use crate::rootsys::{recognize_cartan, CartanType, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingOrigin {
    InvolutionDerived,
    Diagonal,
    Identity,
    Span,
}

/// Weight restriction from an ambient algebra to a reductive subalgebra.
///
/// Row `j` of `restriction` is, for `j < sub.rank()`, the simple coroot
/// `α_j^∨` of the subalgebra written in the ambient basis
/// `h_1..h_r, torus`; the remaining rows span the centre of the
/// subalgebra inside `h`. The subalgebra weight of an ambient weight `μ`
/// has coordinates `μ(row_j)`.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingSpec {
    pub key: String,
    pub ambient: CartanType,
    pub sub: CartanType,
    pub restriction: Vec<Vec<i64>>,
    pub origin: EmbeddingOrigin,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn to_i64(x: &BigRational) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

/// Invariant form on `h` in the basis `h_1..h_r, torus`.
fn h_form(rs: &RootSystem) -> Vec<Vec<BigRational>> {
    let (r, wl) = (rs.rank(), rs.weight_len());
    let g = rs.form();
    (0..wl)
        .map(|i| {
            (0..wl)
                .map(|j| {
                    if i < r && j < r {
                        BigRational::new(BigInt::from(4 * g[i][j]), BigInt::from(g[i][i] * g[j][j]))
                    } else if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn solve(m: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let aug: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let (red, piv) = rref(aug);
    if piv.len() != n || piv.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|row| row[n].clone()).collect())
}

impl EmbeddingSpec {
    pub fn identity(t: &CartanType) -> Self {
        let wl = t.weight_len();
        EmbeddingSpec {
            key: format!("{t}>{t}"),
            ambient: t.clone(),
            sub: t.clone(),
            restriction: (0..wl)
                .map(|i| (0..wl).map(|j| i64::from(i == j)).collect())
                .collect(),
            origin: EmbeddingOrigin::Identity,
        }
    }

    /// Derives the restriction from a subalgebra span whose Cartan part
    /// lies in the standard Cartan and contains a regular element.
    pub fn from_span(
        alg: &ChevalleyAlgebra,
        span: &SubalgebraSpan,
        key: impl Into<String>,
        origin: EmbeddingOrigin,
    ) -> Result<Self> {
        let key = key.into();
        let bad = |msg: &str| Error::Subalgebra(format!("{key}: {msg}"));
        let rs = alg.root_system();
        let (r, wl) = (rs.rank(), rs.weight_len());
        // The Borel check also guarantees that every vector is homogeneous.
        let borel = span.borel(alg)?;
        let cartan: Vec<Vec<i64>> = span.cartan_part(alg).iter().map(|v| v[..wl].to_vec()).collect();
        let s = cartan.len();

        let value = |k: usize| -> Vec<i64> {
            let beta = &rs.positive_roots()[k];
            cartan
                .iter()
                .map(|c| (0..r).map(|i| c[i] * rs.coroot_pairing(beta, i)).sum())
                .collect()
        };
        let mut positive: Vec<Vec<i64>> = Vec::new();
        for v in &borel.vectors[s..] {
            let mut fun: Option<Vec<i64>> = None;
            for (idx, &x) in v.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let BasisElement::E(k) = alg.element(idx) else {
                    return Err(bad("positive part leaves n+"));
                };
                let a = value(k);
                match &fun {
                    None => fun = Some(a),
                    Some(f) if *f == a => {}
                    Some(_) => return Err(bad("vector is not a weight vector for k ∩ h")),
                }
            }
            let f = fun.ok_or_else(|| bad("zero vector"))?;
            if positive.contains(&f) {
                return Err(bad("root space of dimension > 1"));
            }
            positive.push(f);
        }

        let form = h_form(rs);
        let m: Vec<Vec<BigRational>> = (0..s)
            .map(|a| {
                (0..s)
                    .map(|b| {
                        let mut acc = BigRational::zero();
                        for i in 0..wl {
                            for j in 0..wl {
                                if cartan[a][i] != 0 && cartan[b][j] != 0 {
                                    acc += q(cartan[a][i] * cartan[b][j]) * &form[i][j];
                                }
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();

        let is_pos = |f: &[i64]| positive.iter().any(|p| p.as_slice() == f);
        let simple: Vec<&Vec<i64>> = positive
            .iter()
            .filter(|p| {
                !positive.iter().any(|q2| {
                    let d: Vec<i64> = p.iter().zip(q2).map(|(a, b)| a - b).collect();
                    is_pos(&d)
                })
            })
            .collect();
        // Coroots in the basis of k ∩ h.
        let mut coroots: Vec<Vec<BigRational>> = Vec::new();
        for a in &simple {
            let rhs: Vec<BigRational> = a.iter().map(|&x| q(x)).collect();
            let x = solve(&m, &rhs).ok_or_else(|| bad("degenerate invariant form on k ∩ h"))?;
            let norm: BigRational = x.iter().zip(&rhs).map(|(u, v)| u * v).sum();
            let two = q(2);
            coroots.push(x.iter().map(|u| u * &two / &norm).collect());
        }
        let pairing = |y: &[BigRational], f: &[i64]| -> BigRational { y.iter().zip(f).map(|(u, &v)| u * q(v)).sum() };
        let mut amat = vec![vec![0i64; simple.len()]; simple.len()];
        for (j, y) in coroots.iter().enumerate() {
            for (k, a) in simple.iter().enumerate() {
                amat[j][k] = to_i64(&pairing(y, a)).ok_or_else(|| bad("non-integral Cartan entry"))?;
            }
        }
        let (ss_type, order) = if simple.is_empty() {
            (None, Vec::new())
        } else {
            let (t, o) = recognize_cartan(&amat)?;
            (Some(t), o)
        };

        let to_ambient = |y: &[BigRational]| -> Option<Vec<i64>> {
            (0..wl)
                .map(|i| {
                    let v: BigRational = y.iter().zip(&cartan).map(|(u, c)| u * q(c[i])).sum();
                    to_i64(&v)
                })
                .collect()
        };
        let mut restriction: Vec<Vec<i64>> = Vec::new();
        for &j in &order {
            restriction.push(to_ambient(&coroots[j]).ok_or_else(|| bad("coroot outside the coroot lattice"))?);
        }
        let smat: Vec<Vec<BigRational>> = simple.iter().map(|a| a.iter().map(|&x| q(x)).collect()).collect();
        let centre = if simple.is_empty() {
            (0..s)
                .map(|i| (0..s).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
                .collect()
        } else {
            nullspace(&smat, s)
        };
        for z in &centre {
            let zi: Vec<BigRational> = primitive_integer(z).into_iter().map(BigRational::from_integer).collect();
            let row: Vec<BigRational> = to_ambient(&zi)
                .ok_or_else(|| bad("centre"))?
                .into_iter()
                .map(q)
                .collect();
            let row: Vec<i64> = primitive_integer(&row)
                .iter()
                .map(|x| x.to_i64().ok_or_else(|| bad("overflow")))
                .collect::<Result<_>>()?;
            restriction.push(row);
        }
        let sub = match ss_type {
            Some(mut t) => {
                t.torus_rank = centre.len();
                t
            }
            None => CartanType::new(Vec::new(), centre.len())?,
        };

        // Double entry: restricted positive roots are exactly the positive
        // roots of the recognised type.
        let sub_rs = RootSystem::new(&sub)?;
        let mut expected: Vec<Vec<i64>> = sub_rs
            .positive_roots()
            .iter()
            .map(|b| sub_rs.root_to_weight(b).to_ints().expect("integral"))
            .collect();
        let mut got: Vec<Vec<i64>> = positive
            .iter()
            .map(|f| {
                let mut w: Vec<i64> = order
                    .iter()
                    .map(|&j| to_i64(&pairing(&coroots[j], f)).unwrap_or(i64::MIN))
                    .collect();
                w.resize(sub.weight_len(), 0);
                w
            })
            .collect();
        expected.sort();
        got.sort();
        if expected != got {
            return Err(bad("restricted roots do not form the recognised root system"));
        }
        Ok(EmbeddingSpec {
            key,
            ambient: rs.cartan_type().clone(),
            sub,
            restriction,
            origin,
        })
    }

    /// Subalgebra weight of an ambient weight (integer coordinates).
    pub fn restrict(&self, mu: &[i64]) -> Vec<i64> {
        self.restriction
            .iter()
            .map(|row| row.iter().zip(mu).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// The fixed-point subalgebra of a catalog symmetric pair.
pub fn pair_embedding(rec: &crate::satake::SymmetricPairRecord) -> Result<EmbeddingSpec> {
    let alg = ChevalleyAlgebra::new(&rec.g)?;
    let span = SubalgebraSpan::from_involution(&alg, &rec.involution, rec.h_label())?;
    EmbeddingSpec::from_span(
        &alg,
        &span,
        format!("{}>{}", rec.g_name, rec.h_label()),
        EmbeddingOrigin::InvolutionDerived,
    )
}

/// `g` embedded diagonally in `g ⊕ g`.
pub fn diagonal_embedding(g: &CartanType) -> Result<EmbeddingSpec> {
    let gg = g.direct_sum(g);
    let alg = ChevalleyAlgebra::new(&gg)?;
    let swap = crate::spherical::twisted_swap(g.rank(), None);
    let span = SubalgebraSpan::from_involution(&alg, &swap, "diag")?;
    EmbeddingSpec::from_span(&alg, &span, format!("{gg}>diag"), EmbeddingOrigin::Diagonal)
}
