//! Parsing of Lie algebra names such as `sl4`, `so_10`, `s(gl2+gl3)`,
//! `so6+so2` or `e6+C` into Cartan types.

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Series, SimpleFactor};

/// Lower-cases, removes whitespace, underscores and braces.
pub fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}'))
        .flat_map(|c| c.to_lowercase())
        .collect()
}

/// Canonical spelling of a descriptor: summands sorted, `so1`/`sl1` dropped.
pub fn canonical_name(s: &str) -> String {
    let n = normalize(s);
    let mut parts: Vec<String> = split_summands(&n)
        .into_iter()
        .filter(|p| p != "so1" && p != "sl1")
        .collect();
    // central summands go last
    parts.sort_by_key(|p| (p == "c", p.clone()));
    parts.join("+")
}

/// Splits on `+` outside parentheses.
fn split_summands(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

fn factor(series: Series, rank: usize) -> SimpleFactor {
    SimpleFactor { series, rank }
}

/// Semisimple factors and torus rank of one summand.
fn summand_type(s: &str) -> Option<(Vec<SimpleFactor>, usize)> {
    if s == "c" || s == "u1" || s == "t1" || s == "gl1" {
        return Some((vec![], 1));
    }
    if let Some(inner) = s.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
        // s(gl_p + gl_q + ...): traceless part of a block-diagonal gl
        let parts = split_summands(inner);
        let mut fs = Vec::new();
        let mut torus = 0usize;
        for p in &parts {
            let (f, t) = summand_type(p)?;
            fs.extend(f);
            torus += t;
        }
        return Some((fs, torus.checked_sub(1)?));
    }
    let exceptional = [("e6", Series::E, 6), ("e7", Series::E, 7), ("e8", Series::E, 8), ("f4", Series::F, 4), ("g2", Series::G, 2)];
    for (name, series, rank) in exceptional {
        if s == name {
            return Some((vec![factor(series, rank)], 0));
        }
    }
    if s == "spin7" {
        return Some((vec![factor(Series::B, 3)], 0));
    }
    let letters: String = s.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let k: usize = s[letters.len()..].parse().ok()?;
    match letters.as_str() {
        "sl" | "su" => Some((if k >= 2 { vec![factor(Series::A, k - 1)] } else { vec![] }, 0)),
        "gl" | "u" => Some((if k >= 2 { vec![factor(Series::A, k - 1)] } else { vec![] }, 1)),
        "sp" => match k {
            0 => None,
            1 => Some((vec![factor(Series::A, 1)], 0)),
            2 => Some((vec![factor(Series::B, 2)], 0)),
            _ => Some((vec![factor(Series::C, k)], 0)),
        },
        "so" => match k {
            0 => None,
            1 => Some((vec![], 0)),
            2 => Some((vec![], 1)),
            3 => Some((vec![factor(Series::A, 1)], 0)),
            4 => Some((vec![factor(Series::A, 1), factor(Series::A, 1)], 0)),
            5 => Some((vec![factor(Series::B, 2)], 0)),
            6 => Some((vec![factor(Series::A, 3)], 0)),
            k if k % 2 == 1 => Some((vec![factor(Series::B, (k - 1) / 2)], 0)),
            k => Some((vec![factor(Series::D, k / 2)], 0)),
        },
        "a" | "b" | "c" | "d" | "e" | "f" | "g" | "t" => {
            let t: CartanType = s.to_uppercase().parse().ok()?;
            Some((t.factors, t.torus_rank))
        }
        _ => None,
    }
}

/// Isomorphism type of a (possibly reductive) descriptor, with factors
/// sorted so that equal types compare equal. C2 is written as B2.
pub fn descriptor_type(s: &str) -> Result<CartanType> {
    let n = normalize(s);
    let mut factors = Vec::new();
    let mut torus = 0;
    for part in split_summands(&n) {
        let (f, t) = summand_type(&part).ok_or_else(|| Error::Parse(s.to_string()))?;
        factors.extend(f);
        torus += t;
    }
    let t = CartanType { factors, torus_rank: torus };
    let (mut c, _) = t.canonical();
    c.factors.sort();
    if c.factors.is_empty() && c.torus_rank == 0 {
        return Ok(c);
    }
    for f in &c.factors {
        f.check()?;
    }
    Ok(c)
}

/// Type of the ambient algebra `g` in canonical labelling (C2 as B2, so6
/// as A3). Accepts matrix names and Cartan strings.
pub fn ambient_type(s: &str) -> Result<CartanType> {
    let t = descriptor_type(s)?;
    if t.factors.is_empty() {
        return Err(Error::Parse(format!("{s}: not semisimple")));
    }
    Ok(t)
}

/// Matrix-style display name of a simple type, e.g. `sl4`, `so8`.
pub fn display_simple(f: &SimpleFactor) -> String {
    let n = f.rank;
    match f.series {
        Series::A => format!("sl{}", n + 1),
        Series::B => format!("so{}", 2 * n + 1),
        Series::C => format!("sp{n}"),
        Series::D => format!("so{}", 2 * n),
        Series::E => format!("e{n}"),
        Series::F => "f4".into(),
        Series::G => "g2".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> String {
        descriptor_type(s).unwrap().to_string()
    }

    #[test]
    fn classical_names() {
        assert_eq!(ty("sl_4"), "A3");
        assert_eq!(ty("gl3"), "A2+T1");
        assert_eq!(ty("so8"), "D4");
        assert_eq!(ty("so6"), "A3");
        assert_eq!(ty("so5"), "B2");
        assert_eq!(ty("sp2"), "B2");
        assert_eq!(ty("so4"), "A1+A1");
        assert_eq!(ty("so2+so3"), "A1+T1");
        assert_eq!(ty("s(gl2+gl3)"), "A1+A2+T1");
        assert_eq!(ty("sl2+sl3+C"), "A1+A2+T1");
        assert_eq!(ty("e6+C"), "E6+T1");
        assert_eq!(ty("spin7"), "B3");
        assert_eq!(ty("C4"), "C4");
        assert_eq!(ty("C2"), "B2");
    }

    #[test]
    fn canonical_spelling() {
        assert_eq!(canonical_name("so_6 + so_2"), "so2+so6");
        assert_eq!(canonical_name("so1+so7"), "so7");
    }
}
