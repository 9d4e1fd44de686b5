//! Identification of a Cartan matrix with a Bourbaki-labelled type.

use super::cartan::{CartanType, Series, SimpleFactor};
use crate::error::{Error, Result};

fn cartan_of(f: &SimpleFactor) -> Vec<Vec<i64>> {
    let g = f.simple_gram();
    (0..f.rank)
        .map(|i| (0..f.rank).map(|j| 2 * g[i][j] / g[i][i]).collect())
        .collect()
}

fn candidates(n: usize) -> Vec<SimpleFactor> {
    let mut out = Vec::new();
    for s in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        if s == Series::C && n == 2 {
            continue;
        }
        if let Ok(f) = SimpleFactor::new(s, n) {
            out.push(f);
        }
    }
    out
}

/// Finds `perm` with `target[perm[i]][perm[j]] == model[i][j]`.
fn match_matrix(model: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(model: &[Vec<i64>], target: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = perm.len();
        if i == model.len() {
            return true;
        }
        for t in 0..target.len() {
            if used[t] {
                continue;
            }
            if (0..i).all(|j| target[t][perm[j]] == model[i][j] && target[perm[j]][t] == model[j][i]) {
                perm.push(t);
                used[t] = true;
                if go(model, target, perm, used) {
                    return true;
                }
                perm.pop();
                used[t] = false;
            }
        }
        false
    }
    let mut perm = Vec::new();
    let mut used = vec![false; target.len()];
    go(model, target, &mut perm, &mut used).then_some(perm)
}

/// Recognises a Cartan matrix (`a[i][j] = <α_i^∨, α_j>`). Returns the type
/// and, for each node of the result in Bourbaki order, the index of the
/// corresponding row of `a`.
pub fn recognize_cartan(a: &[Vec<i64>]) -> Result<(CartanType, Vec<usize>)> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if a[i][j] != 0 && comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort();
        comps.push(members);
    }
    let mut found: Vec<(SimpleFactor, Vec<usize>)> = Vec::new();
    for members in comps {
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| members.iter().map(|&j| a[i][j]).collect())
            .collect();
        let hit = candidates(members.len())
            .into_iter()
            .find_map(|f| match_matrix(&cartan_of(&f), &sub).map(|p| (f, p)))
            .ok_or_else(|| Error::Subalgebra(format!("unrecognised Cartan matrix {sub:?}")))?;
        found.push((hit.0, hit.1.iter().map(|&k| members[k]).collect()));
    }
    found.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    let factors = found.iter().map(|(f, _)| *f).collect();
    let order = found.into_iter().flat_map(|(_, o)| o).collect();
    Ok((CartanType::new(factors, 0)?, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_shuffled_types() {
        for name in ["A3", "B3", "C3", "D4", "E6", "F4", "G2", "B2+A1"] {
            let t: CartanType = name.parse().unwrap();
            let rs = crate::rootsys::RootSystem::new(&t).unwrap();
            let a = rs.cartan_matrix();
            let n = a.len();
            let shuffle: Vec<usize> = (0..n).rev().collect();
            let b: Vec<Vec<i64>> = shuffle
                .iter()
                .map(|&i| shuffle.iter().map(|&j| a[i][j]).collect())
                .collect();
            let (got, order) = recognize_cartan(&b).unwrap();
            let mut want = t.clone();
            want.factors.sort();
            assert_eq!(got, want, "{name}");
            let rs2 = crate::rootsys::RootSystem::new(&got).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b[order[i]][order[j]], rs2.cartan_matrix()[i][j]);
                }
            }
        }
    }
}
