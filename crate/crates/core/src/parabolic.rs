use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};

/// A set of simple-root indices (0-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theta(pub BTreeSet<usize>);

impl Theta {
    pub fn empty() -> Self {
        Theta(BTreeSet::new())
    }

    pub fn all(rank: usize) -> Self {
        Theta((0..rank).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn complement(&self, rank: usize) -> Theta {
        Theta((0..rank).filter(|i| !self.0.contains(i)).collect())
    }

    /// Bourbaki (1-based) labels.
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// Disjoint union, with `other` shifted by `offset`.
    pub fn union_shifted(&self, other: &Theta, offset: usize) -> Theta {
        let mut s = self.0.clone();
        s.extend(other.0.iter().map(|i| i + offset));
        Theta(s)
    }
}

impl FromIterator<usize> for Theta {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Theta(iter.into_iter().collect())
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for Theta {
    type Err = Error;

    /// Comma-separated Bourbaki labels, e.g. `1,3`. Empty string or `{}` is
    /// the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if body.is_empty() {
            return Ok(Theta::empty());
        }
        body.split(',')
            .map(|p| match p.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect()
    }
}

/// The standard parabolic subalgebra `p^Θ` containing the positive Borel.
#[derive(Clone, Debug)]
pub struct Parabolic<'a> {
    rs: &'a RootSystem,
    theta: Theta,
    levi: Vec<Root>,
    nilradical: Vec<Root>,
}

impl<'a> Parabolic<'a> {
    pub fn new(rs: &'a RootSystem, theta: Theta) -> Result<Self> {
        if let Some(bad) = theta.iter().find(|&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: rs.rank(),
            });
        }
        let (levi, nilradical) = rs
            .positive_roots()
            .iter()
            .cloned()
            .partition(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || theta.contains(i)));
        Ok(Parabolic {
            rs,
            theta,
            levi,
            nilradical,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn theta(&self) -> &Theta {
        &self.theta
    }

    pub fn levi_positive_roots(&self) -> &[Root] {
        &self.levi
    }

    pub fn nilradical_roots(&self) -> &[Root] {
        &self.nilradical
    }

    /// Highest weight vanishes on every simple root in `Θ`.
    pub fn irr_pq_member(&self, lambda: &Weight) -> Result<bool> {
        self.rs.ensure_dominant(lambda)?;
        Ok(self.theta.iter().all(|i| lambda.coords()[i] == 0.into()))
    }

    /// Dimension of the Levi module generated by the highest weight vector.
    pub fn d_q(&self, lambda: &Weight) -> Result<BigUint> {
        self.rs.ensure_dominant(lambda)?;
        Ok(self.rs.weyl_product(lambda, self.levi.iter()))
    }

    /// Complex dimension of `G/P^Θ`.
    pub fn flag_dimension(&self) -> usize {
        self.nilradical.len()
    }
}

pub fn make_parabolic(rs: &RootSystem, theta: Theta) -> Result<Parabolic<'_>> {
    Parabolic::new(rs, theta)
}
