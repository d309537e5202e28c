//! Dense exact linear algebra over the rationals, with a prime-field
//! fast path.
//!
//! Exact rank and kernel computations go through fraction-free integer
//! elimination (see [`fraction_free`]); rational entries are only
//! materialised at the boundary. The modular routines in [`modular`] are
//! advisory: a rank modulo `p` never exceeds the rational rank.

mod fraction_free;
pub mod modular;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use modular::{is_prime, ModMatrix, DEFAULT_PRIMES};

/// Arbitrary-precision rational scalar, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("prime {0} divides a stored denominator")]
    BadPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// Dense row-major matrix over [`Rat`].
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from explicit rows. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer matrix from nested slices; convenient in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut rows = fraction_free::integer_rows(self);
        fraction_free::forward_eliminate(&mut rows, self.cols).len()
    }

    /// A basis of the right kernel `{v : M v = 0}`, one primitive integer
    /// vector per row. Row count is `cols - rank`.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let rows = fraction_free::integer_rows(self);
        let basis = fraction_free::kernel(rows, self.cols);
        let entries = basis
            .into_iter()
            .flatten()
            .map(Rat::from_integer)
            .collect::<Vec<_>>();
        let n = entries.len() / self.cols.max(1);
        ExactMatrix {
            rows: if self.cols == 0 { 0 } else { n },
            cols: self.cols,
            entries,
        }
    }

    /// Reduced row echelon form over the rationals.
    pub fn rref(&self) -> ExactMatrix {
        let mut rows = fraction_free::integer_rows(self);
        let pivots = fraction_free::forward_eliminate(&mut rows, self.cols);
        fraction_free::back_substitute(&mut rows, &pivots);
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (i, &(_, col)) in pivots.iter().enumerate() {
            let lead = &rows[i][col];
            for (c, v) in rows[i].iter().enumerate() {
                if !v.is_zero() {
                    out.set(i, c, Rat::new(v.clone(), lead.clone()));
                }
            }
        }
        out
    }

    /// Reduces every entry into `F_p`. Fails when `p` divides a denominator.
    pub fn reduce_mod(&self, p: u64) -> Result<ModMatrix, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        let modulus = BigInt::from(p);
        let mut data = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let num = residue(e.numer(), &modulus);
            let den = residue(e.denom(), &modulus);
            if den == 0 {
                return Err(LinalgError::BadPrime(p));
            }
            data.push(modular::mul_mod(num, modular::inv_mod(den, p), p));
        }
        Ok(ModMatrix::from_raw(p, self.rows, self.cols, data))
    }

    /// Rank of the matrix reduced modulo `p`. Never exceeds [`Self::rank`].
    pub fn rank_mod_p(&self, p: u64) -> Result<usize, LinalgError> {
        Ok(self.reduce_mod(p)?.rank())
    }
}

fn residue(n: &BigInt, modulus: &BigInt) -> u64 {
    let r = n.mod_floor(modulus);
    debug_assert!(!r.is_negative());
    r.try_into().expect("residue fits in u64")
}

/// True iff `a` and `b` span the same row space.
pub fn same_rowspace(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool, LinalgError> {
    if a.cols != b.cols {
        return Err(LinalgError::DimensionMismatch(format!(
            "row spaces in {} and {} columns",
            a.cols, b.cols
        )));
    }
    let ra = a.rank();
    if ra != b.rank() {
        return Ok(false);
    }
    Ok(a.vstack(b)?.rank() == ra)
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
