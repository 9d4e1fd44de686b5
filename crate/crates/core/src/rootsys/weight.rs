use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

/// A weight in fundamental-weight coordinates, followed by the
/// coordinates on the central torus (if any).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![Rational::zero(); len])
    }

    /// The fundamental weight `ω_i` (0-based).
    pub fn fundamental(len: usize, i: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[i] = Rational::one();
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated coordinates, optionally parenthesised; fractions
    /// such as `1/2` are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        body.split(',')
            .map(|p| p.trim().parse::<Rational>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(ints) = self.to_ints() {
            ints.serialize(serializer)
        } else {
            let strs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            strs.serialize(serializer)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: Weight = "(1, -2, 1/2)".parse().unwrap();
        assert_eq!(w.to_string(), "(1,-2,1/2)");
        assert!(!w.is_integral());
        let v: Weight = "3,0".parse().unwrap();
        assert_eq!(v.to_ints(), Some(vec![3, 0]));
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn serializes_integral_weights_as_ints() {
        let w = Weight::from_ints(&[1, 0]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,0]");
    }
}
