use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root, RootSystem};

/// Sparse vector in the Chevalley basis: `(basis index, coefficient)`.
pub type SparseVec = Vec<(usize, i64)>;

/// Largest semisimple rank accepted by [`ChevalleyAlgebra::new`].
pub const MAX_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// Simple coroot `h_i`.
    H(usize),
    /// Central torus direction.
    Torus(usize),
    /// `e_β` for the positive root with the given index.
    E(usize),
    /// `f_β = e_{-β}`.
    F(usize),
}

/// A reductive Lie algebra in a Chevalley basis, ordered as
/// `h_1..h_r, torus, e_β (β > 0), f_β (β > 0)`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    /// Structure constants `N_{α,β}` for positive `α, β` with `α + β` a root.
    n_pos: HashMap<(usize, usize), i64>,
    /// `table[i][j] = [b_i, b_j]`.
    table: Vec<Vec<SparseVec>>,
}

impl ChevalleyAlgebra {
    pub fn new(t: &CartanType) -> Result<Self> {
        if t.rank() > MAX_RANK {
            return Err(Error::Guard(format!(
                "Chevalley basis limited to semisimple rank {MAX_RANK}, got {}",
                t.rank()
            )));
        }
        Self::from_root_system(RootSystem::new(t)?)
    }

    pub fn from_root_system(rs: RootSystem) -> Result<Self> {
        let n_pos = extraspecial_constants(&rs);
        let mut alg = ChevalleyAlgebra {
            rs,
            n_pos,
            table: Vec::new(),
        };
        alg.table = alg.build_table();
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.dimension()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    fn torus_offset(&self) -> usize {
        self.rs.rank()
    }

    fn e_offset(&self) -> usize {
        self.rs.weight_len()
    }

    fn f_offset(&self) -> usize {
        self.rs.weight_len() + self.rs.num_positive_roots()
    }

    pub fn index(&self, b: BasisElement) -> usize {
        match b {
            BasisElement::H(i) => i,
            BasisElement::Torus(k) => self.torus_offset() + k,
            BasisElement::E(k) => self.e_offset() + k,
            BasisElement::F(k) => self.f_offset() + k,
        }
    }

    pub fn element(&self, idx: usize) -> BasisElement {
        let (t, e, f) = (self.torus_offset(), self.e_offset(), self.f_offset());
        if idx < t {
            BasisElement::H(idx)
        } else if idx < e {
            BasisElement::Torus(idx - t)
        } else if idx < f {
            BasisElement::E(idx - e)
        } else {
            BasisElement::F(idx - f)
        }
    }

    /// Root of a basis element as a signed vector; zero for the Cartan part.
    pub fn weight_of(&self, idx: usize) -> Root {
        match self.element(idx) {
            BasisElement::H(_) | BasisElement::Torus(_) => vec![0; self.rank()],
            BasisElement::E(k) => self.rs.positive_roots()[k].clone(),
            BasisElement::F(k) => self.rs.positive_roots()[k].iter().map(|x| -x).collect(),
        }
    }

    /// Basis index of `e_β` for a signed root `β`.
    pub fn root_vector(&self, beta: &[i64]) -> Option<usize> {
        if let Some(k) = self.rs.positive_index(beta) {
            return Some(self.e_offset() + k);
        }
        let neg: Root = beta.iter().map(|x| -x).collect();
        self.rs.positive_index(&neg).map(|k| self.f_offset() + k)
    }

    /// `N_{α,β}` for arbitrary roots with `α + β` a root.
    pub fn structure_constant(&self, a: &[i64], b: &[i64]) -> i64 {
        signed_n(&self.rs, &self.n_pos, a, b)
    }

    /// `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for &(k, c) in &self.table[i][j] {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// The coroot `h_β` in terms of simple coroots.
    pub fn coroot(&self, beta: &[i64]) -> SparseVec {
        let norm = self.rs.root_inner(beta, beta);
        (0..self.rank())
            .filter(|&j| beta[j] != 0)
            .map(|j| {
                let num = beta[j].abs() * 2 * self.rs.half_len(j);
                debug_assert_eq!(num % norm, 0);
                (j, beta[j].signum() * num / norm)
            })
            .collect()
    }

    fn build_table(&self) -> Vec<Vec<SparseVec>> {
        let dim = self.dim();
        let r = self.rank();
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        let roots: Vec<Root> = (0..dim).map(|i| self.weight_of(i)).collect();
        for i in 0..dim {
            for j in 0..dim {
                let bi = self.element(i);
                let bj = self.element(j);
                let v: SparseVec = match (bi, bj) {
                    (BasisElement::H(_) | BasisElement::Torus(_), BasisElement::H(_) | BasisElement::Torus(_)) => {
                        Vec::new()
                    }
                    (BasisElement::Torus(_), _) | (_, BasisElement::Torus(_)) => Vec::new(),
                    (BasisElement::H(a), _) => {
                        let c = self.rs.coroot_pairing(&roots[j], a);
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(j, c)]
                        }
                    }
                    (_, BasisElement::H(b)) => {
                        let c = self.rs.coroot_pairing(&roots[i], b);
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(i, -c)]
                        }
                    }
                    _ => {
                        let sum: Root = (0..r).map(|k| roots[i][k] + roots[j][k]).collect();
                        if sum.iter().all(|&x| x == 0) {
                            // [e_β, e_{-β}] = h_β
                            self.coroot(&roots[i])
                        } else if let Some(k) = self.root_vector(&sum) {
                            vec![(k, self.structure_constant(&roots[i], &roots[j]))]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[i][j] = v;
            }
        }
        table
    }
}

fn neg(v: &[i64]) -> Root {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().any(|&x| x > 0)
}

/// `N_{a,b}` for arbitrary (signed) roots, reduced to positive pairs by
/// `N_{-a,-b} = -N_{a,b}`, antisymmetry and the cyclic relation
/// `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)` for `a + b + c = 0`.
fn signed_n(rs: &RootSystem, table: &HashMap<(usize, usize), i64>, a: &[i64], b: &[i64]) -> i64 {
    let (pa, pb) = (is_positive(a), is_positive(b));
    match (pa, pb) {
        (true, true) => {
            let ia = rs.positive_index(a).expect("root");
            let ib = rs.positive_index(b).expect("root");
            *table.get(&(ia, ib)).expect("a + b is a root")
        }
        (false, false) => -signed_n(rs, table, &neg(a), &neg(b)),
        (false, true) => -signed_n(rs, table, b, a),
        (true, false) => {
            let c = neg(&add(a, b));
            let nc = rs.root_inner(&c, &c);
            if is_positive(&c) {
                let v = Ratio::new(nc * signed_n(rs, table, &c, a), rs.root_inner(b, b));
                assert!(v.is_integer());
                v.to_integer()
            } else {
                let v = Ratio::new(nc * signed_n(rs, table, b, &c), rs.root_inner(a, a));
                assert!(v.is_integer());
                v.to_integer()
            }
        }
    }
}

/// Structure constants on positive pairs. For each positive root `ξ` the
/// extraspecial pair `(α, ξ - α)` with `α` first in root order gets
/// `N = p + 1`; all other pairs follow from the four-root relation.
fn extraspecial_constants(rs: &RootSystem) -> HashMap<(usize, usize), i64> {
    let mut table: HashMap<(usize, usize), i64> = HashMap::new();
    let pos = rs.positive_roots();
    for (xi_idx, xi) in pos.iter().enumerate() {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (ia, a) in pos.iter().enumerate().take(xi_idx) {
            let b: Root = xi.iter().zip(a).map(|(x, y)| x - y).collect();
            if let Some(ib) = rs.positive_index(&b) {
                if ia < ib {
                    pairs.push((ia, ib));
                }
            }
        }
        let Some(&(g0, d0)) = pairs.first() else {
            continue;
        };
        let gamma = &pos[g0];
        let delta = &pos[d0];
        // p: largest k with δ - kγ a root
        let mut p = 0;
        loop {
            let cand: Root = delta.iter().zip(gamma).map(|(d, g)| d - (p + 1) * g).collect();
            if rs.is_root(&cand) {
                p += 1;
            } else {
                break;
            }
        }
        let n0 = p + 1;
        table.insert((g0, d0), n0);
        table.insert((d0, g0), -n0);
        let nxi = rs.root_inner(xi, xi);
        for &(ia, ib) in &pairs[1..] {
            let a = &pos[ia];
            let b = &pos[ib];
            let mut acc = Ratio::from_integer(0i64);
            let b_g: Root = b.iter().zip(gamma).map(|(x, y)| x - y).collect();
            if rs.is_root(&b_g) {
                let t = signed_n(rs, &table, b, &neg(gamma)) * signed_n(rs, &table, a, &neg(delta));
                acc += Ratio::new(t, rs.root_inner(&b_g, &b_g));
            }
            let a_g: Root = a.iter().zip(gamma).map(|(x, y)| x - y).collect();
            if rs.is_root(&a_g) {
                let t = signed_n(rs, &table, &neg(gamma), a) * signed_n(rs, &table, b, &neg(delta));
                acc += Ratio::new(t, rs.root_inner(&a_g, &a_g));
            }
            let v = acc * nxi / n0;
            assert!(v.is_integer(), "non-integral structure constant");
            let v = v.to_integer();
            table.insert((ia, ib), v);
            table.insert((ib, ia), -v);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(&s.parse().unwrap()).unwrap()
    }

    fn unit(dim: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    }

    fn assert_jacobi(a: &ChevalleyAlgebra) {
        let d = a.dim();
        for i in 0..d {
            for j in i + 1..d {
                let ij = a.bracket(&unit(d, i), &unit(d, j));
                for k in j + 1..d {
                    let ek = unit(d, k);
                    let jk = a.bracket(&unit(d, j), &ek);
                    let ki = a.bracket(&ek, &unit(d, i));
                    let s1 = a.bracket(&ij, &ek);
                    let s2 = a.bracket(&jk, &unit(d, i));
                    let s3 = a.bracket(&ki, &unit(d, j));
                    for c in 0..d {
                        assert_eq!(s1[c] + s2[c] + s3[c], 0, "Jacobi fails in {} at {i},{j},{k}", a.rs.cartan_type());
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_relations() {
        let a = alg("A1");
        assert_eq!(a.dim(), 3);
        // basis h, e, f
        assert_eq!(a.bracket_basis(1, 2), &vec![(0, 1)]);
        assert_eq!(a.bracket_basis(0, 1), &vec![(1, 2)]);
        assert_eq!(a.bracket_basis(0, 2), &vec![(2, -2)]);
    }

    #[test]
    fn structure_constants_are_p_plus_one() {
        for t in ["A3", "B3", "C3", "G2", "F4", "D4"] {
            let a = alg(t);
            let rs = a.root_system();
            let mut max = 0;
            for x in rs.positive_roots() {
                for y in rs.positive_roots() {
                    let s = add(x, y);
                    if !rs.is_root(&s) {
                        continue;
                    }
                    let mut p = 0;
                    while rs.is_root(&y.iter().zip(x).map(|(b, a)| b - (p + 1) * a).collect::<Vec<_>>()) {
                        p += 1;
                    }
                    let n = a.structure_constant(x, y);
                    assert_eq!(n.abs(), p + 1, "{t}");
                    max = max.max(n.abs());
                }
            }
            if t == "G2" {
                assert_eq!(max, 3);
            }
        }
    }

    #[test]
    fn jacobi_small_types() {
        for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A2+A1"] {
            assert_jacobi(&alg(t));
        }
    }

    #[test]
    #[ignore = "slow; exhaustive Jacobi for rank 4"]
    fn jacobi_rank_four() {
        for t in ["A4", "B4", "C4", "D4", "F4"] {
            assert_jacobi(&alg(t));
        }
    }
}
