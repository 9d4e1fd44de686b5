use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lie series of a simple factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// One simple summand `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub series: Series,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let f = SimpleFactor { series, rank };
        f.check()?;
        Ok(f)
    }

    /// Admissible ranks: A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2.
    ///
    /// C2 is accepted as a labelling of its own; [`CartanType::canonical`]
    /// converts it to B2.
    pub fn check(&self) -> Result<()> {
        let ok = match self.series {
            Series::A => self.rank >= 1,
            Series::B => self.rank >= 2,
            Series::C => self.rank >= 2,
            Series::D => self.rank >= 4,
            Series::E => (6..=8).contains(&self.rank),
            Series::F => self.rank == 4,
            Series::G => self.rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InadmissibleType(self.to_string()))
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    pub fn dimension(&self) -> usize {
        2 * self.num_positive_roots() + self.rank
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots in Bourbaki order,
    /// normalised so that short roots have squared length 2.
    pub fn simple_gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Series::B => {
                for i in 0..n - 1 {
                    g[i][i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 1..n {
                    link(&mut g, i - 1, i, -2);
                }
            }
            Series::C => {
                for i in 0..n - 1 {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            Series::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Series::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 3..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Series::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Series::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A reductive Cartan type: a list of simple factors plus a central torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub factors: Vec<SimpleFactor>,
    pub torus_rank: usize,
}

impl CartanType {
    pub fn new(factors: Vec<SimpleFactor>, torus_rank: usize) -> Result<Self> {
        for f in &factors {
            f.check()?;
        }
        if factors.is_empty() && torus_rank == 0 {
            return Err(Error::InadmissibleType("empty type".into()));
        }
        Ok(CartanType {
            factors,
            torus_rank,
        })
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleFactor::new(series, rank)?], 0)
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Number of weight coordinates (semisimple rank plus torus rank).
    pub fn weight_len(&self) -> usize {
        self.rank() + self.torus_rank
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|f| f.dimension()).sum::<usize>() + self.torus_rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.factors.iter().map(|f| f.num_positive_roots()).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus_rank == 0
    }

    /// Offset of the first simple root of each factor.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for f in &self.factors {
            out.push(acc);
            acc += f.rank;
        }
        out
    }

    /// Direct sum with another type; nodes of `other` are shifted.
    pub fn direct_sum(&self, other: &CartanType) -> CartanType {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        CartanType {
            factors,
            torus_rank: self.torus_rank + other.torus_rank,
        }
    }

    /// Converts C2 factors to B2 (the only admissible pair of
    /// isomorphic labellings). Returns the converted type and, for each
    /// node of `self`, its index in the result.
    pub fn canonical(&self) -> (CartanType, Vec<usize>) {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut map = Vec::with_capacity(self.rank());
        let mut offset = 0;
        for f in &self.factors {
            if f.series == Series::C && f.rank == 2 {
                factors.push(SimpleFactor {
                    series: Series::B,
                    rank: 2,
                });
                map.push(offset + 1);
                map.push(offset);
            } else {
                factors.push(*f);
                map.extend(offset..offset + f.rank);
            }
            offset += f.rank;
        }
        (
            CartanType {
                factors,
                torus_rank: self.torus_rank,
            },
            map,
        )
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Grammar: factors separated by `+`, each a series letter followed by
    /// a decimal rank; `T<k>` adds a central torus of rank `k`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut torus = 0;
        for raw in s.split('+') {
            let part = raw.trim();
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| Error::Parse(s.to_string()))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(s.to_string()))?;
            if letter.eq_ignore_ascii_case(&'T') {
                torus += rank;
                continue;
            }
            let series = Series::from_char(letter).ok_or_else(|| Error::Parse(s.to_string()))?;
            factors.push(SimpleFactor::new(series, rank)?);
        }
        CartanType::new(factors, torus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_tori() {
        let t: CartanType = "D4+A1".parse().unwrap();
        assert_eq!(t.rank(), 5);
        assert_eq!(t.to_string(), "D4+A1");
        let t: CartanType = "B3+T1".parse().unwrap();
        assert_eq!(t.torus_rank, 1);
        assert_eq!(t.weight_len(), 4);
    }

    #[test]
    fn rejects_inadmissible_factors() {
        for bad in ["B1", "D3", "E5", "F3", "G3", "A0"] {
            let err = bad.parse::<CartanType>().unwrap_err();
            assert!(matches!(err, Error::InadmissibleType(ref f) if f == bad), "{bad}: {err}");
        }
        assert!("Q2".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn c2_converts_to_b2() {
        let t: CartanType = "C2".parse().unwrap();
        let (c, map) = t.canonical();
        assert_eq!(c.to_string(), "B2");
        assert_eq!(map, vec![1, 0]);
    }
}
