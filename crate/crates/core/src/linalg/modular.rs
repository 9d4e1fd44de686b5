use rand::Rng;

/// Arithmetic modulo a prime `p < 2^31`, so that products fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// # Panics
    /// If `p` is not a prime below `2^31`.
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 31) && is_prime(p), "{p} is not a prime below 2^31");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// # Panics
    /// On `a == 0`.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Rank by Gaussian elimination; `rows` is consumed as scratch space.
    pub fn rank(&self, rows: &mut [Vec<u64>]) -> usize {
        self.eliminate(rows).len()
    }

    /// Indices of a maximal linearly independent subset of rows, chosen
    /// greedily in order.
    pub fn independent_rows(&self, rows: &[Vec<u64>]) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        // Reduced basis kept as (pivot column, row), each pivot normalised to 1.
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut chosen = Vec::new();
        for (idx, row) in rows.iter().enumerate() {
            let mut v = row.clone();
            for (pc, b) in &basis {
                let f = v[*pc];
                if f != 0 {
                    for c in 0..ncols {
                        if b[c] != 0 {
                            v[c] = self.sub(v[c], self.mul(f, b[c]));
                        }
                    }
                }
            }
            if let Some(pc) = v.iter().position(|&x| x != 0) {
                let inv = self.inv(v[pc]);
                for x in v.iter_mut() {
                    *x = self.mul(*x, inv);
                }
                basis.push((pc, v));
                chosen.push(idx);
                if basis.len() == ncols {
                    break;
                }
            }
        }
        chosen
    }

    /// Row-echelon form in place; returns the pivot columns.
    fn eliminate(&self, rows: &mut [Vec<u64>]) -> Vec<usize> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(piv) = (r..nrows).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            let (head, tail) = rows.split_at_mut(r + 1);
            let prow = &head[r];
            for row in tail.iter_mut() {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                let f = self.mul(f, inv);
                for k in c..ncols {
                    if prow[k] != 0 {
                        row[k] = self.sub(row[k], self.mul(f, prow[k]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A uniformly chosen prime in `(10^9, 2^31)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range(1_000_000_001u64..(1u64 << 31)) | 1;
        if is_prime(c) {
            return c;
        }
    }
}
