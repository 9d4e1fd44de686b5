//! Data attached to a pair of nested parabolics `q ⊆ p`: sphericity of
//! `G/Q` for a symmetric subgroup and the Levi dimensions `d_q(λ)`.

use serde::Serialize;

use super::Classifier;
use crate::chevalley::SubalgebraSpan;
use crate::error::{Error, Result};
use crate::parabolic::{Parabolic, Theta};
use crate::rootsys::{RootSystem, Weight};
use crate::spherical::{is_spherical, SphericityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DqEntry {
    pub lambda: Vec<i64>,
    /// Decimal string; the value can exceed 64 bits.
    pub d_q: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct QpReport {
    pub g: String,
    pub sub: String,
    pub theta_p: Vec<usize>,
    pub theta_q: Vec<usize>,
    pub sphericity: SphericityVerdict,
    pub grid_max: i64,
    pub d_q: Vec<DqEntry>,
    /// Present when `G/Q` is certified spherical.
    pub orbit_note: Option<String>,
    /// The multiplicity bound is existential; no constant is computed.
    pub constant: Option<u64>,
}

impl Classifier {
    /// `Θ_Q ⊆ Θ_P` is required (so that `q ⊆ p`). `sub` names a symmetric
    /// subalgebra of `g`. The grid is every dominant `λ` with coordinates
    /// in `0..=grid_max`.
    pub fn qp_report(&self, g: &str, theta_p: &Theta, theta_q: &Theta, sub: &str, grid_max: i64) -> Result<QpReport> {
        let gt = self.simple_type(g)?;
        let r = gt.rank();
        if theta_p.iter().chain(theta_q.iter()).any(|i| i >= r) {
            return Err(Error::IndexOutOfRange { index: r + 1, rank: r });
        }
        if !theta_q.0.is_subset(&theta_p.0) {
            return Err(Error::Query(format!(
                "q is not contained in p: Θ_Q = {theta_q} is not a subset of Θ_P = {theta_p}"
            )));
        }
        let rec = self.catalog.lookup(g, sub)?;
        let alg = self.algebra(&gt)?;
        let span = SubalgebraSpan::from_involution(&alg, &rec.involution, rec.h_label())?;
        let sph = is_spherical(&alg, theta_q, &span, &self.policy)?;
        let rs = RootSystem::new(&gt)?;
        let par = Parabolic::new(&rs, theta_q.clone())?;
        let mut d_q = Vec::new();
        let mut lam = vec![0i64; r];
        'grid: loop {
            d_q.push(DqEntry {
                lambda: lam.clone(),
                d_q: par.d_q(&Weight::from_ints(&lam))?.to_string(),
            });
            let mut pos = 0;
            loop {
                if pos == r {
                    break 'grid;
                }
                lam[pos] += 1;
                if lam[pos] > grid_max {
                    lam[pos] = 0;
                    pos += 1;
                } else {
                    break;
                }
            }
        }
        let orbit_note = sph
            .outcome
            .is_spherical()
            .then(|| format!("G/Q is {0}-spherical, so {0} has finitely many orbits on G/Q", rec.h_label()));
        Ok(QpReport {
            g: g.to_string(),
            sub: rec.h_label(),
            theta_p: theta_p.labels(),
            theta_q: theta_q.labels(),
            sphericity: sph,
            grid_max,
            d_q,
            orbit_note,
            constant: None,
        })
    }
}
