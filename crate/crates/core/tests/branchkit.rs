use std::collections::BTreeMap;

use spherimult::branchkit::{
    branch, diagonal_embedding, growth_scan, invariant_dim, m_restriction, pair_embedding, tensor_decompose,
    weight_multiplicities, EmbeddingSpec, IrrDecomp,
};
use proptest::prelude::*;
use spherimult::rootsys::{CartanType, RootSystem, Weight};
use spherimult::satake::Catalog;

fn rs(t: &str) -> RootSystem {
    RootSystem::new(&t.parse().unwrap()).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn emb(g: &str, h: &str) -> EmbeddingSpec {
    pair_embedding(&Catalog::builtin().unwrap().lookup(g, h).unwrap()).unwrap()
}

/// Weights of V(λ) for sl_{n+1} by brute force over semistandard tableaux:
/// fill the Young diagram with 1..=n+1, weight coordinate i is
/// #(i) - #(i+1).
fn sl_character(n: usize, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut rows = vec![0usize; n + 1];
    for i in (0..n).rev() {
        rows[i] = rows[i + 1] + lambda[i] as usize;
    }
    let shape: Vec<usize> = rows.into_iter().filter(|&r| r > 0).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = BTreeMap::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if k == cells.len() {
            let mut cnt = vec![0i64; n + 2];
            for row in grid.iter() {
                for &x in row {
                    cnt[x] += 1;
                }
            }
            let wt: Vec<i64> = (1..=n).map(|i| cnt[i] - cnt[i + 1]).collect();
            *out.entry(wt).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo = if r > 0 { lo.max(grid[r - 1][c] + 1) } else { lo };
        for x in lo..=n + 1 {
            grid[r][c] = x;
            fill(k + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

#[test]
fn freudenthal_matches_tableaux_for_type_a() {
    for (n, lam) in [(1, vec![4]), (2, vec![1, 1]), (2, vec![2, 1]), (2, vec![3, 2]), (3, vec![1, 0, 1]), (3, vec![2, 1, 1])] {
        let t = format!("A{n}");
        let ch = weight_multiplicities(&rs(&t), &w(&lam)).unwrap();
        assert_eq!(ch.weights, sl_character(n, &lam), "{t} {lam:?}");
    }
}

#[test]
fn character_examples() {
    let ch = weight_multiplicities(&rs("A2"), &w(&[1, 1])).unwrap();
    assert_eq!(ch.multiplicity(&[0, 0]), 2);
    let ch = weight_multiplicities(&rs("A1"), &w(&[5])).unwrap();
    assert_eq!(ch.weights.len(), 6);
    assert!(ch.weights.values().all(|&m| m == 1));
    let ch = weight_multiplicities(&rs("B2"), &w(&[0, 1])).unwrap();
    assert_eq!(ch.weights.len(), 4);
    assert!(ch.weights.values().all(|&m| m == 1));
    for (t, lam) in [("G2", vec![1, 1]), ("F4", vec![0, 0, 0, 1]), ("E6", vec![1, 0, 0, 0, 0, 1]), ("C3", vec![1, 1, 1])] {
        let r = rs(t);
        let ch = weight_multiplicities(&r, &w(&lam)).unwrap();
        assert_eq!(ch.dimension().to_string(), r.weyl_dimension(&w(&lam)).unwrap().to_string(), "{t}");
    }
    // guard
    assert!(weight_multiplicities(&rs("E8"), &w(&[3, 3, 3, 3, 3, 3, 3, 3])).is_err());
}

#[test]
fn tensor_examples() {
    let a1 = rs("A1");
    let d = tensor_decompose(&a1, &w(&[5]), &w(&[2])).unwrap();
    assert_eq!(d.terms, vec![(vec![7], 1), (vec![5], 1), (vec![3], 1)]);
    let b2 = rs("B2");
    let d = tensor_decompose(&b2, &w(&[1, 0]), &w(&[1, 0])).unwrap();
    assert_eq!(d.terms.len(), 3);
    assert_eq!(d.multiplicity(&[2, 0]), 1);
    assert_eq!(d.multiplicity(&[0, 2]), 1);
    assert_eq!(d.multiplicity(&[0, 0]), 1);
    assert_eq!(d.dimension(&b2).unwrap(), 25);
    let a2 = rs("A2");
    let d = tensor_decompose(&a2, &w(&[1, 1]), &w(&[1, 1])).unwrap();
    assert_eq!(d.multiplicity(&[1, 1]), 2);
    assert_eq!(d.dimension(&a2).unwrap(), 64);
}

#[test]
fn tensor_agrees_with_diagonal_branching() {
    for (t, l, m) in [("A2", [2, 1], [0, 1]), ("B2", [1, 1], [0, 2]), ("G2", [1, 0], [0, 1])] {
        let r = rs(t);
        let g: CartanType = t.parse().unwrap();
        let diag = diagonal_embedding(&g).unwrap();
        let rr = RootSystem::new(&g.direct_sum(&g)).unwrap();
        let outer: Vec<i64> = l.iter().chain(m.iter()).copied().collect();
        let b = branch(&rr, &w(&outer), &diag).unwrap();
        let tns = tensor_decompose(&r, &w(&l), &w(&m)).unwrap();
        assert_eq!(b, tns, "{t}");
    }
}

#[test]
fn branching_examples() {
    let b2 = rs("B2");
    let e = emb("so5", "so4");
    assert_eq!(e.sub.to_string(), "A1+A1");
    let d = branch(&b2, &w(&[1, 0]), &e).unwrap();
    assert_eq!(d.terms, vec![(vec![1, 1], 1), (vec![0, 0], 1)]);
    assert_eq!(m_restriction(&b2, &w(&[2, 0]), &e).unwrap(), 1);

    let a2 = rs("A2");
    let so3 = emb("sl3", "so3:principal");
    assert_eq!(so3.sub.to_string(), "A1");
    let d = branch(&a2, &w(&[1, 1]), &so3).unwrap();
    assert_eq!(d.terms, vec![(vec![4], 1), (vec![2], 1)]);
    let gl2 = emb("sl3", "gl2");
    assert_eq!(gl2.sub.to_string(), "A1+T1");
    assert_eq!(m_restriction(&a2, &w(&[1, 0]), &gl2).unwrap(), 1);
    assert_eq!(invariant_dim(&a2, &w(&[1, 1]), &gl2).unwrap(), 1);
    assert_eq!(invariant_dim(&a2, &w(&[1, 0]), &so3).unwrap(), 0);

    let a1 = rs("A1");
    let so2 = emb("sl2", "so2");
    assert_eq!(invariant_dim(&a1, &w(&[2]), &so2).unwrap(), 1);

    let id = EmbeddingSpec::identity(&"B3".parse().unwrap());
    let d = branch(&rs("B3"), &w(&[1, 0, 1]), &id).unwrap();
    assert_eq!(d.terms, vec![(vec![1, 0, 1], 1)]);
}

#[test]
fn growth_scan_examples() {
    let a2 = rs("A2");
    let so3 = emb("sl3", "so3:principal");
    assert_eq!(growth_scan(&a2, &w(&[1, 1]), &so3, 4).unwrap(), vec![1, 2, 2, 3]);
    let gl2 = emb("sl3", "gl2");
    assert_eq!(growth_scan(&a2, &w(&[1, 1]), &gl2, 4).unwrap(), vec![1, 1, 1, 1]);
    let g: CartanType = "A1".parse().unwrap();
    let diag = diagonal_embedding(&g).unwrap();
    let rr = RootSystem::new(&g.direct_sum(&g)).unwrap();
    assert_eq!(growth_scan(&rr, &w(&[1, 1]), &diag, 3).unwrap(), vec![1, 1, 1]);
}

#[test]
fn every_small_catalog_pair_yields_an_embedding() {
    let cat = Catalog::builtin().unwrap();
    for rec in cat.all_pairs(6).unwrap() {
        let e = pair_embedding(&rec).unwrap_or_else(|err| panic!("{}: {err}", rec.key()));
        assert_eq!(e.sub.dimension(), rec.h_type.dimension(), "{}", rec.key());
    }
}

/// Catalog embeddings of rank at most 3 used by the property suites.
const EMBEDDINGS: [(&str, &str); 7] = [
    ("sl3", "gl2"),
    ("sl3", "so3"),
    ("so5", "so4"),
    ("so5", "so2+so3"),
    ("sl4", "sp2"),
    ("sl4", "sl2+sl2+c"),
    ("sp3", "gl3"),
];

fn small_pair() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (0..EMBEDDINGS.len()).prop_flat_map(|k| {
        let rank = emb(EMBEDDINGS[k].0, EMBEDDINGS[k].1).ambient.rank();
        (Just(k), prop::collection::vec(0i64..3, rank), prop::collection::vec(0i64..3, rank))
    })
}

fn dual_decomp(sub: &RootSystem, d: &IrrDecomp) -> BTreeMap<Vec<i64>, u64> {
    d.terms
        .iter()
        .map(|(mu, m)| (sub.dual_weight(&w(mu)).unwrap().to_ints().unwrap(), *m))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn restriction_multiplicity_is_monotone((k, lam, nu) in small_pair()) {
        let (g, h) = EMBEDDINGS[k];
        let e = emb(g, h);
        let r = RootSystem::new(&e.ambient).unwrap();
        let sum: Vec<i64> = lam.iter().zip(&nu).map(|(a, b)| a + b).collect();
        prop_assert!(m_restriction(&r, &w(&sum), &e).unwrap() >= m_restriction(&r, &w(&lam), &e).unwrap());
    }

    #[test]
    fn branching_conserves_dimension_and_commutes_with_duality((k, lam, _nu) in small_pair()) {
        let (g, h) = EMBEDDINGS[k];
        let e = emb(g, h);
        let r = RootSystem::new(&e.ambient).unwrap();
        let sub = RootSystem::new(&e.sub).unwrap();
        let l = w(&lam);
        let d = branch(&r, &l, &e).unwrap();
        let dim: u64 = r.weyl_dimension(&l).unwrap().try_into().unwrap();
        prop_assert_eq!(d.dimension(&sub).unwrap(), dim);
        let dd = branch(&r, &r.dual_weight(&l).unwrap(), &e).unwrap();
        let dd_map: BTreeMap<Vec<i64>, u64> = dd.terms.iter().cloned().collect();
        prop_assert_eq!(dual_decomp(&sub, &d), dd_map);
    }

    #[test]
    fn tensor_matches_diagonal_branching(
        t in prop::sample::select(vec!["A1", "A2", "B2", "G2", "A3"]),
        a in prop::collection::vec(0i64..3, 3),
        b in prop::collection::vec(0i64..3, 3),
    ) {
        let g: CartanType = t.parse().unwrap();
        let n = g.rank();
        let (l, m) = (&a[..n], &b[..n]);
        let r = RootSystem::new(&g).unwrap();
        let tns = tensor_decompose(&r, &w(l), &w(m)).unwrap();
        let dl: u64 = r.weyl_dimension(&w(l)).unwrap().try_into().unwrap();
        let dm: u64 = r.weyl_dimension(&w(m)).unwrap().try_into().unwrap();
        prop_assert_eq!(tns.dimension(&r).unwrap(), dl * dm);
        let diag = diagonal_embedding(&g).unwrap();
        let rr = RootSystem::new(&g.direct_sum(&g)).unwrap();
        let outer: Vec<i64> = l.iter().chain(m).copied().collect();
        prop_assert_eq!(branch(&rr, &w(&outer), &diag).unwrap(), tns);
    }
}

/// For the pairs whose Borel has an open orbit on the full flag variety,
/// every restriction is multiplicity free.
#[test]
fn spherical_pairs_are_multiplicity_free() {
    for (g, h, max) in [("sl2", "so2", 4), ("sl3", "gl2", 4), ("sl4", "gl3", 4), ("so5", "so4", 4), ("so7", "so6", 3)] {
        let e = emb(g, h);
        let r = RootSystem::new(&e.ambient).unwrap();
        let n = r.rank();
        let mut lam = vec![0i64; n];
        'grid: loop {
            assert!(m_restriction(&r, &w(&lam), &e).unwrap() <= 1, "({g}, {h}) {lam:?}");
            for i in 0..=n {
                if i == n {
                    break 'grid;
                }
                lam[i] += 1;
                if lam[i] <= max {
                    break;
                }
                lam[i] = 0;
            }
        }
    }
}
