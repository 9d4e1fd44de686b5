use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_bigint(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..nrows {
            for k in c + 1..ncols {
                let v = &a[r][c] * &a[i][k] - &a[i][c] * &a[r][k];
                a[i][k] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            a.swap(c, piv);
            sign = -sign;
        }
        for i in c + 1..n {
            for k in c + 1..n {
                let v = &a[c][c] * &a[i][k] - &a[i][c] * &a[c][k];
                a[i][k] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// Reduced row-echelon form over the rationals; returns the form and its
/// pivot columns.
pub fn rref(mut a: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..ncols {
                    if !a[r][k].is_zero() {
                        let d = &f * &a[r][k];
                        a[i][k] -= d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of `{x : A x = 0}` for an `m x ncols` matrix.
pub fn nullspace(a: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (red, pivots) = rref(a.to_vec());
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        let sign = out.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
        for x in out.iter_mut() {
            *x = &*x / &g;
            if sign {
                *x = -&*x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn bareiss_rank() {
        let m: Vec<Vec<BigInt>> = [[2, 4, 1], [1, 2, 0], [3, 6, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(rank_bigint(&m), 2);
        assert!(det_bigint(&m).is_zero());
        let m: Vec<Vec<BigInt>> = [[0, 2, 1], [1, 1, 0], [3, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(det_bigint(&m), BigInt::from(-5));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(7)]];
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let s: BigRational = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        let p = primitive_integer(&k[0]);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-1), BigInt::from(0)]);
    }
}
