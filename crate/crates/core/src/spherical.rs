//! Open-orbit tests on flag varieties.
//!
//! `span(sub) + Ad(w) p^Θ = g` for some `w` is equivalent to
//! `Ad(w^{-1}) sub + p^Θ = g`, i.e. to the projection of `Ad(w^{-1}) sub`
//! onto `g / p^Θ` (the coordinates on `f_β`, `β` in the nilradical) having
//! full rank. Generic `w` are drawn from the opposite unipotent radical,
//! whose product of root groups in any fixed order is dense in
//! `G / P^Θ` (big cell).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use num_bigint::BigInt;

use crate::chevalley::{ChevalleyAlgebra, GroupElementWord, InvolutionSpec, Letter, SubalgebraSpan};
use crate::error::Result;
use crate::linalg::{random_prime, rank_bigint, PrimeField};
use crate::parabolic::{Parabolic, Theta};
use crate::rootsys::{CartanType, RootSystem};

#[derive(Clone, Debug, Serialize)]
pub struct TrialPolicy {
    pub trials: usize,
    pub primes: usize,
    pub seed: u64,
    /// Largest absolute scalar tried when searching for an integral witness.
    pub witness_bound: i64,
    /// Attempts at finding an integral witness once a generic point has full rank.
    pub witness_attempts: usize,
}

impl Default for TrialPolicy {
    fn default() -> Self {
        TrialPolicy {
            trials: 24,
            primes: 2,
            seed: 0x5eed,
            witness_bound: 64,
            witness_attempts: 48,
        }
    }
}

impl TrialPolicy {
    pub fn with_seed(seed: u64) -> Self {
        TrialPolicy {
            seed,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphericityOutcome {
    /// An integral witness of full rank, re-verified over the integers.
    SphericalCertified,
    /// Every trial was rank deficient.
    NotSphericalWhp,
    /// `dim sub < dim g/p`, so no orbit can be open.
    NotSphericalByDimension,
}

impl SphericityOutcome {
    pub fn is_spherical(self) -> bool {
        self == SphericityOutcome::SphericalCertified
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    /// The exact rank of the projected integer matrix.
    pub exact_rank: usize,
    /// Largest absolute scalar in the witness.
    pub max_scalar: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericityVerdict {
    pub outcome: SphericityOutcome,
    /// Word `w` with `Ad(w) sub + p = g` (spherical outcome only).
    pub witness: Option<GroupElementWord>,
    pub certificate: Option<Certificate>,
    pub trials: usize,
    pub primes: Vec<u64>,
    /// `dim g / p`.
    pub target_rank: usize,
    /// Largest rank observed.
    pub best_rank: usize,
    pub rank_gap: usize,
    pub sub_dim: usize,
}

struct Problem<'a> {
    alg: &'a ChevalleyAlgebra,
    /// Indices of nilradical roots.
    nil: Vec<usize>,
    /// Basis indices of `f_β` for nilradical `β`.
    cols: Vec<usize>,
    vectors: &'a [Vec<i64>],
}

impl Problem<'_> {
    fn rank_mod(&self, f: &PrimeField, w: &GroupElementWord) -> usize {
        let mut rows = self.project_mod(f, w);
        f.rank(&mut rows)
    }

    fn project_mod(&self, f: &PrimeField, w: &GroupElementWord) -> Vec<Vec<u64>> {
        self.vectors
            .iter()
            .map(|v| {
                let mut x: Vec<u64> = v.iter().map(|&a| f.from_i64(a)).collect();
                self.alg.apply_word_mod(f, w, &mut x);
                self.cols.iter().map(|&c| x[c]).collect()
            })
            .collect()
    }

    fn word(&self, scalars: impl Iterator<Item = i64>) -> GroupElementWord {
        GroupElementWord {
            letters: self
                .nil
                .iter()
                .zip(scalars)
                .map(|(&root, scalar)| Letter {
                    root,
                    negative: true,
                    scalar,
                })
                .collect(),
        }
    }

    /// Exact rank of the projected integer matrix on the rows selected mod `p`.
    fn certify(&self, f: &PrimeField, w: &GroupElementWord) -> usize {
        let chosen = f.independent_rows(&self.project_mod(f, w));
        let rows: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|&i| {
                let mut x: Vec<BigInt> = self.vectors[i].iter().map(|&a| BigInt::from(a)).collect();
                self.alg.apply_word_exact(w, &mut x);
                self.cols.iter().map(|&c| x[c].clone()).collect()
            })
            .collect();
        rank_bigint(&rows)
    }
}

/// Whether the group generated by `vectors` has an open orbit on `G/P^Θ`.
pub fn open_orbit(
    alg: &ChevalleyAlgebra,
    theta: &Theta,
    vectors: &[Vec<i64>],
    policy: &TrialPolicy,
) -> Result<SphericityVerdict> {
    let rs = alg.root_system();
    let par = Parabolic::new(rs, theta.clone())?;
    let nil: Vec<usize> = par
        .nilradical_roots()
        .iter()
        .map(|r| rs.positive_index(r).expect("positive root"))
        .collect();
    let cols: Vec<usize> = nil
        .iter()
        .map(|&k| alg.index(crate::chevalley::BasisElement::F(k)))
        .collect();
    let target = nil.len();
    let problem = Problem {
        alg,
        nil,
        cols,
        vectors,
    };
    let mut seeder = ChaCha8Rng::seed_from_u64(policy.seed);
    let primes: Vec<u64> = (0..policy.primes.max(1)).map(|_| random_prime(&mut seeder)).collect();
    let mut verdict = SphericityVerdict {
        outcome: SphericityOutcome::NotSphericalWhp,
        witness: None,
        certificate: None,
        trials: 0,
        primes: primes.clone(),
        target_rank: target,
        best_rank: 0,
        rank_gap: target,
        sub_dim: vectors.len(),
    };
    if vectors.len() < target {
        verdict.outcome = SphericityOutcome::NotSphericalByDimension;
        verdict.trials = 0;
        verdict.primes.clear();
        // rank can be at most the number of vectors
        verdict.best_rank = vectors.len();
        verdict.rank_gap = target - vectors.len();
        return Ok(verdict);
    }
    if target == 0 {
        verdict.outcome = SphericityOutcome::SphericalCertified;
        verdict.witness = Some(GroupElementWord::identity());
        verdict.certificate = Some(Certificate {
            exact_rank: 0,
            max_scalar: 0,
        });
        return Ok(verdict);
    }

    // Generic trials with scalars uniform in the field, in deterministic batches.
    let batch = 4;
    let mut full = false;
    let mut start = 0;
    while start < policy.trials && !full {
        let end = (start + batch).min(policy.trials);
        let ranks: Vec<usize> = (start..end)
            .into_par_iter()
            .map(|t| {
                let p = primes[t % primes.len()];
                let f = PrimeField::new(p);
                let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
                rng.set_stream(t as u64 + 1);
                let w = problem.word((0..).map(|_| rng.gen_range(1..p as i64)));
                problem.rank_mod(&f, &w)
            })
            .collect();
        verdict.trials = end;
        for r in ranks {
            verdict.best_rank = verdict.best_rank.max(r);
        }
        full = verdict.best_rank == target;
        start = end;
    }
    verdict.rank_gap = target - verdict.best_rank;
    if !full {
        return Ok(verdict);
    }

    // Integral witness search with growing scalar bound, then exact check.
    let f = PrimeField::new(primes[0]);
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    rng.set_stream(u64::MAX);
    for attempt in 0..policy.witness_attempts {
        let bound = (2i64 << (attempt / 8)).min(policy.witness_bound.max(1));
        let scalars: Vec<i64> = (0..target)
            .map(|_| {
                let x = rng.gen_range(1..=bound);
                if rng.gen_bool(0.5) {
                    -x
                } else {
                    x
                }
            })
            .collect();
        let w = problem.word(scalars.into_iter());
        if problem.rank_mod(&f, &w) < target {
            continue;
        }
        let exact_rank = problem.certify(&f, &w);
        if exact_rank == target {
            verdict.outcome = SphericityOutcome::SphericalCertified;
            verdict.certificate = Some(Certificate {
                exact_rank,
                max_scalar: w.letters.iter().map(|l| l.scalar.abs()).max().unwrap_or(0),
            });
            verdict.witness = Some(w);
            return Ok(verdict);
        }
    }
    // A full-rank generic point exists but no integral witness was found;
    // without a certificate this is reported as the negative outcome with gap 0.
    verdict.rank_gap = 0;
    Ok(verdict)
}

/// `G/P^Θ` is spherical for the subgroup: a Borel of `sub` has an open orbit.
pub fn is_spherical(
    alg: &ChevalleyAlgebra,
    theta: &Theta,
    sub: &SubalgebraSpan,
    policy: &TrialPolicy,
) -> Result<SphericityVerdict> {
    let b = sub.borel(alg)?;
    open_orbit(alg, theta, &b.vectors, policy)
}

/// `sub` itself has an open orbit on `G/P^Θ`.
pub fn has_open_orbit(
    alg: &ChevalleyAlgebra,
    theta: &Theta,
    sub: &SubalgebraSpan,
    policy: &TrialPolicy,
) -> Result<SphericityVerdict> {
    open_orbit(alg, theta, &sub.vectors, policy)
}

/// `g ⊕ g` for simple or semisimple `g`.
pub fn doubled(g: &CartanType) -> CartanType {
    g.direct_sum(g)
}

/// The swap `x ⊕ y ↦ y ⊕ x` on `g ⊕ g` composed with an involution
/// `σ = (τ, s)` of `g`: fixed points are `{(x, σ x)}`.
pub fn twisted_swap(rank: usize, sigma: Option<&InvolutionSpec>) -> InvolutionSpec {
    let id = InvolutionSpec::identity(rank);
    let s = sigma.unwrap_or(&id);
    let mut perm = vec![0; 2 * rank];
    let mut signs = vec![1; 2 * rank];
    for i in 0..rank {
        perm[i] = rank + s.perm[i];
        perm[rank + i] = s.perm[i];
        signs[i] = s.signs[i];
        signs[rank + i] = s.signs[i];
    }
    InvolutionSpec { perm, signs }
}

/// `G/P^{Θ1} × G/P^{Θ2}` under the diagonal action.
pub fn tensor_spherical(g: &CartanType, theta1: &Theta, theta2: &Theta, policy: &TrialPolicy) -> Result<SphericityVerdict> {
    let gg = doubled(g);
    let alg = ChevalleyAlgebra::new(&gg)?;
    let diag = SubalgebraSpan::from_involution(&alg, &twisted_swap(g.rank(), None), "diag")?;
    let theta = theta1.union_shifted(theta2, g.rank());
    is_spherical(&alg, &theta, &diag, policy)
}

/// No two nilradical roots sum to a root.
pub fn abelian_nilradical(rs: &RootSystem, theta: &Theta) -> Result<bool> {
    let par = Parabolic::new(rs, theta.clone())?;
    let nil = par.nilradical_roots();
    for (i, a) in nil.iter().enumerate() {
        for b in &nil[i..] {
            let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if rs.is_root(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
