//! Dense linear algebra over a prime field `F_p` with `p < 2^32`.

/// Primes above 10^6 used when the caller supplies none.
pub const DEFAULT_PRIMES: [u64; 3] = [1_000_003, 1_000_033, 1_000_037];

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut i = 3u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Row-major matrix of residues modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub(crate) fn from_raw(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < p));
        Self { p, rows, cols, data }
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self::from_raw(p, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn vstack(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.cols, "modular stack shape mismatch");
        assert_eq!(self.p, other.p, "modular stack over different primes");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        ModMatrix::from_raw(self.p, self.rows + other.rows, self.cols, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, rhs.rows, "modular product shape mismatch");
        assert_eq!(self.p, rhs.p, "modular product over different primes");
        let p = self.p;
        let mut out = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let dst = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(rhs.row(k)) {
                    if b != 0 {
                        *d = (*d + mul_mod(a, b, p)) % p;
                    }
                }
            }
        }
        ModMatrix::from_raw(p, self.rows, rhs.cols, out)
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c));
            }
        }
        ModMatrix::from_raw(self.p, self.cols, self.rows, data)
    }

    /// Reduced echelon form in place; returns pivot columns in row order.
    fn reduce(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..cols {
            if next == self.rows {
                break;
            }
            let Some(piv) = (next..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if piv != next {
                for c in 0..cols {
                    self.data.swap(piv * cols + c, next * cols + c);
                }
            }
            let inv = inv_mod(self.get(next, col), p);
            for c in col..cols {
                let v = &mut self.data[next * cols + c];
                *v = mul_mod(*v, inv, p);
            }
            let pivot_row: Vec<u64> = self.row(next).to_vec();
            for r in 0..self.rows {
                if r == next {
                    continue;
                }
                let f = self.get(r, col);
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                let row = &mut self.data[r * cols..(r + 1) * cols];
                for (d, &s) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if s != 0 {
                        *d = (*d + mul_mod(neg, s, p)) % p;
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Basis of the right kernel, one row per free column.
    pub fn kernel_basis(&self) -> ModMatrix {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut data = Vec::new();
        let mut count = 0;
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = m.get(r, free);
                if coeff != 0 {
                    v[pc] = p - coeff;
                }
            }
            data.extend(v);
            count += 1;
        }
        ModMatrix::from_raw(p, count, self.cols, data)
    }
}
