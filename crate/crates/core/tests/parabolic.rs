use num_bigint::BigUint;
use spherimult::rootsys::{RootSystem, Weight};
use spherimult::{make_parabolic, Theta};

fn rs(t: &str) -> RootSystem {
    RootSystem::new(&t.parse().unwrap()).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn theta(labels: &[usize]) -> Theta {
    labels.iter().map(|i| i - 1).collect()
}

fn all_thetas(rank: usize) -> Vec<Theta> {
    (0u32..1 << rank)
        .map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn grid(rank: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// `dim V(a)` for `sl_{k+1}` with highest weight `a` (length `k`), by the
/// product over pairs of rows of a Young diagram.
fn sl_dim(a: &[i64]) -> BigUint {
    let k = a.len();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for s in 0..=k {
        for t in s + 1..=k {
            let gap: i64 = a[s..t].iter().sum::<i64>() + (t - s) as i64;
            num *= gap as u64;
            den *= (t - s) as u64;
        }
    }
    num / den
}

/// `d_q` in type A: the Levi is a product of `sl` blocks, one per maximal
/// run of consecutive indices in Θ.
fn d_q_type_a(theta: &Theta, lam: &[i64]) -> BigUint {
    let mut out = BigUint::from(1u32);
    let mut run: Vec<i64> = Vec::new();
    for (i, &x) in lam.iter().enumerate() {
        if theta.contains(i) {
            run.push(x);
        } else if !run.is_empty() {
            out *= sl_dim(&run);
            run.clear();
        }
    }
    if !run.is_empty() {
        out *= sl_dim(&run);
    }
    out
}

#[test]
fn parabolic_examples() {
    let a2 = rs("A2");
    assert_eq!(make_parabolic(&a2, Theta::empty()).unwrap().nilradical_roots().len(), 3);
    let p = make_parabolic(&a2, theta(&[1])).unwrap();
    assert_eq!(p.levi_positive_roots().len(), 1);
    assert_eq!(p.nilradical_roots().len(), 2);
    assert!(make_parabolic(&a2, theta(&[1, 2])).unwrap().nilradical_roots().is_empty());
    assert!(make_parabolic(&a2, [5].into_iter().collect()).is_err());
}

#[test]
fn irr_pq_examples() {
    let a2 = rs("A2");
    let p = make_parabolic(&a2, theta(&[1])).unwrap();
    assert!(p.irr_pq_member(&w(&[0, 3])).unwrap());
    assert!(!p.irr_pq_member(&w(&[1, 0])).unwrap());
    assert!(p.irr_pq_member(&w(&[-1, 0])).is_err());
    for t in ["A3", "B3", "G2"] {
        let r = rs(t);
        let b = make_parabolic(&r, Theta::empty()).unwrap();
        for lam in grid(r.rank(), 2) {
            assert!(b.irr_pq_member(&w(&lam)).unwrap());
        }
    }
}

#[test]
fn d_q_examples() {
    let a2 = rs("A2");
    let lam = w(&[1, 1]);
    // the α1-string through λ has ⟨λ, α1^∨⟩ + 1 = 2 weights
    assert_eq!(make_parabolic(&a2, theta(&[1])).unwrap().d_q(&lam).unwrap(), 2u32.into());
    assert_eq!(make_parabolic(&a2, Theta::empty()).unwrap().d_q(&lam).unwrap(), 1u32.into());
    assert_eq!(make_parabolic(&a2, theta(&[1, 2])).unwrap().d_q(&lam).unwrap(), 8u32.into());
}

#[test]
fn flag_dimension_examples() {
    assert_eq!(make_parabolic(&rs("A2"), Theta::empty()).unwrap().flag_dimension(), 3);
    assert_eq!(make_parabolic(&rs("A3"), theta(&[2, 3])).unwrap().flag_dimension(), 3);
    // Δ⁺(B2) = {α1, α2, α1+α2, α1+2α2}; only α2 lies in Zα2
    assert_eq!(make_parabolic(&rs("B2"), theta(&[2])).unwrap().flag_dimension(), 3);
}

#[test]
fn d_q_matches_block_formula_in_type_a() {
    for n in 1..=4 {
        let r = rs(&format!("A{n}"));
        for th in all_thetas(n) {
            let p = make_parabolic(&r, th.clone()).unwrap();
            for lam in grid(n, 3) {
                assert_eq!(p.d_q(&w(&lam)).unwrap(), d_q_type_a(&th, &lam), "A{n} {th} {lam:?}");
            }
        }
    }
}

/// Exhaustive over every Θ and every λ with coordinates at most 3, for each
/// simple type of rank at most 4.
#[test]
fn parabolic_invariants_hold_exhaustively() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
        let r = rs(t);
        let n = r.rank();
        let thetas = all_thetas(n);
        let pars: Vec<_> = thetas.iter().map(|th| make_parabolic(&r, th.clone()).unwrap()).collect();
        for p in &pars {
            let levi = p.levi_positive_roots().len();
            assert_eq!(levi + p.nilradical_roots().len(), r.num_positive_roots());
            assert_eq!(p.flag_dimension(), p.nilradical_roots().len());
            for beta in p.levi_positive_roots() {
                assert!(beta.iter().enumerate().all(|(i, &c)| c == 0 || p.theta().contains(i)));
            }
        }
        for lam in grid(n, 3) {
            let l = w(&lam);
            let dim = r.weyl_dimension(&l).unwrap();
            let dual_l = r.dual_weight(&l).unwrap();
            let d: Vec<BigUint> = pars.iter().map(|p| p.d_q(&l).unwrap()).collect();
            for (i, p) in pars.iter().enumerate() {
                let one = d[i] == BigUint::from(1u32);
                assert_eq!(one, p.irr_pq_member(&l).unwrap(), "{t} {} {lam:?}", p.theta());
                let orth = p.theta().iter().all(|a| lam[a] == 0);
                assert_eq!(one, orth);
                let dual_th = Theta(r.dual_theta(&p.theta().0).unwrap());
                let dual_p = make_parabolic(&r, dual_th).unwrap();
                assert_eq!(d[i], dual_p.d_q(&dual_l).unwrap(), "{t} {} {lam:?}", p.theta());
                assert!(d[i] <= dim);
                let full = p.theta().len() == n;
                assert_eq!(d[i] == dim, full || l.is_zero(), "{t} {} {lam:?}", p.theta());
                // larger parabolic: fewer members, larger d_q
                for (j, q) in pars.iter().enumerate() {
                    if p.theta().0.is_subset(&q.theta().0) {
                        assert!(d[i] <= d[j]);
                        if q.irr_pq_member(&l).unwrap() {
                            assert!(p.irr_pq_member(&l).unwrap());
                        }
                    }
                }
            }
        }
    }
}
