//! Gaussian maps `γ^k_{O(a), O(b)}` on the projective line, in the affine
//! chart: sections of `O(a) ⊠ O(b)` are polynomials `G(x, y)` with
//! `deg_x G <= a`, `deg_y G <= b`, and the diagonal is `x = y`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{ExactMatrix, Rat};
use crate::poly::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum P1Error {
    #[error("(x - y)^{0} does not divide the tensor")]
    NotInDomain(u32),
    #[error("coefficient matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
}

/// `G = Σ c_ij x^i y^j` with `i <= a`, `j <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Tensor {
    a: u32,
    b: u32,
    coeffs: ExactMatrix,
}

impl P1Tensor {
    pub fn new(a: u32, b: u32, coeffs: ExactMatrix) -> Result<Self, P1Error> {
        let (er, ec) = (a as usize + 1, b as usize + 1);
        if coeffs.rows() != er || coeffs.cols() != ec {
            return Err(P1Error::Shape {
                rows: coeffs.rows(),
                cols: coeffs.cols(),
                expected_rows: er,
                expected_cols: ec,
            });
        }
        Ok(Self { a, b, coeffs })
    }

    pub fn zero(a: u32, b: u32) -> Self {
        Self {
            a,
            b,
            coeffs: ExactMatrix::zeros(a as usize + 1, b as usize + 1),
        }
    }

    /// Builds a tensor from `(c, i, j)` triples, summing repeats.
    pub fn from_terms(a: u32, b: u32, terms: impl IntoIterator<Item = (Rat, u32, u32)>) -> Self {
        let mut t = Self::zero(a, b);
        for (c, i, j) in terms {
            let cur = t.coeffs.get(i as usize, j as usize).clone();
            t.coeffs.set(i as usize, j as usize, cur + c);
        }
        t
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn coeffs(&self) -> &ExactMatrix {
        &self.coeffs
    }

    /// `G(y, x)`, a section of `O(b) ⊠ O(a)`.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            coeffs: self.coeffs.transpose(),
        }
    }
}

/// Dense coefficients `c[i][j]` of `x^i y^j`.
type Dense = Vec<Vec<Rat>>;

fn dense(t: &P1Tensor) -> Dense {
    t.coeffs.row_iter().map(|r| r.to_vec()).collect()
}

/// `G = (x - y) Q + R(y)` by synthetic division in `x`; returns `(Q, R)`.
fn divide_by_diagonal(g: &Dense) -> (Dense, Vec<Rat>) {
    let width = g.iter().map(Vec::len).max().unwrap_or(0) + g.len();
    let pad = |v: &[Rat]| {
        let mut v = v.to_vec();
        v.resize(width, Rat::zero());
        v
    };
    let times_y = |v: &[Rat]| {
        let mut out = vec![Rat::zero(); width];
        for (j, c) in v.iter().enumerate().take(width - 1) {
            out[j + 1] = c.clone();
        }
        out
    };
    let n = g.len();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut q = vec![vec![Rat::zero(); width]; n.saturating_sub(1)];
    let mut carry = pad(&g[n - 1]);
    for i in (1..n).rev() {
        q[i - 1] = carry.clone();
        let shifted = times_y(&carry);
        carry = pad(&g[i - 1]).into_iter().zip(shifted).map(|(a, b)| a + b).collect();
    }
    (q, carry)
}

/// Remainder coefficients of `G` modulo `(x - y)^k`, as `k` polynomials in
/// `y`, and the quotient.
fn diagonal_expansion(g: &Dense, k: u32) -> (Vec<Vec<Rat>>, Dense) {
    let mut rems = Vec::with_capacity(k as usize);
    let mut cur = g.clone();
    for _ in 0..k {
        let (q, r) = divide_by_diagonal(&cur);
        rems.push(r);
        cur = q;
    }
    (rems, cur)
}

/// `H(x, x)` where `G = (x - y)^k H`, a representative of `γ^k(G)`.
pub fn p1_gauss(g: &P1Tensor, k: u32) -> Result<UniPoly, P1Error> {
    let (rems, h) = diagonal_expansion(&dense(g), k);
    if rems.iter().flatten().any(|c| !c.is_zero()) {
        return Err(P1Error::NotInDomain(k));
    }
    let mut out = Vec::new();
    for (i, row) in h.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.len() <= i + j {
                out.resize(i + j + 1, Rat::zero());
            }
            out[i + j] += c;
        }
    }
    Ok(UniPoly::new(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P1Rank {
    pub a: u32,
    pub b: u32,
    pub k: u32,
    pub domain_dim: u64,
    pub rank: u64,
    pub codomain_dim: u64,
    pub surjective: bool,
}

/// Sections vanishing to order `k` on the diagonal, as flattened
/// coefficient rows (index `i (b + 1) + j`).
pub fn p1_domain(a: u32, b: u32, k: u32) -> ExactMatrix {
    let (na, nb) = (a as usize + 1, b as usize + 1);
    let mut conditions: Vec<Vec<Rat>> = Vec::new();
    for idx in 0..na * nb {
        let mut unit = P1Tensor::zero(a, b);
        unit.coeffs.set(idx / nb, idx % nb, Rat::from_integer(1.into()));
        let (rems, _) = diagonal_expansion(&dense(&unit), k);
        conditions.push(rems.into_iter().flatten().collect());
    }
    let n_cond = conditions.iter().map(Vec::len).max().unwrap_or(0);
    let mut m = ExactMatrix::zeros(n_cond, na * nb);
    for (col, cond) in conditions.iter().enumerate() {
        for (row, c) in cond.iter().enumerate() {
            if !c.is_zero() {
                m.set(row, col, c.clone());
            }
        }
    }
    m.kernel_basis()
}

/// Rank of `γ^k_{O(a), O(b)}` against `h^0(O(a + b - 2k))`.
pub fn p1_gauss_rank(a: u32, b: u32, k: u32) -> P1Rank {
    let domain = p1_domain(a, b, k);
    let codomain_dim = (i64::from(a) + i64::from(b) - 2 * i64::from(k) + 1).max(0) as usize;
    let nb = b as usize + 1;
    let mut image = ExactMatrix::zeros(domain.rows(), codomain_dim);
    for (r, row) in domain.row_iter().enumerate() {
        let t = P1Tensor::from_terms(
            a,
            b,
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| (c.clone(), (idx / nb) as u32, (idx % nb) as u32)),
        );
        let h = p1_gauss(&t, k).expect("domain rows are divisible");
        for (e, c) in h.coeffs().iter().enumerate() {
            image.set(r, e, c.clone());
        }
    }
    let rank = image.rank();
    P1Rank {
        a,
        b,
        k,
        domain_dim: domain.rows() as u64,
        rank: rank as u64,
        codomain_dim: codomain_dim as u64,
        surjective: rank == codomain_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn t(a: u32, b: u32, terms: &[(i64, u32, u32)]) -> P1Tensor {
        P1Tensor::from_terms(a, b, terms.iter().map(|&(c, i, j)| (rat(c), i, j)))
    }

    #[test]
    fn gauss_examples() {
        // (x - y) x y
        let g = t(2, 2, &[(1, 2, 1), (-1, 1, 2)]);
        assert_eq!(p1_gauss(&g, 1).unwrap(), UniPoly::new(vec![rat(0), rat(0), rat(1)]));
        let g = t(2, 2, &[(1, 2, 0), (-2, 1, 1), (1, 0, 2)]);
        assert_eq!(p1_gauss(&g, 2).unwrap(), UniPoly::new(vec![rat(1)]));
        let g = t(1, 1, &[(1, 1, 0), (-1, 0, 1)]);
        assert!(p1_gauss(&g, 0).unwrap().is_zero());
        assert_eq!(p1_gauss(&t(1, 1, &[(1, 1, 0)]), 1), Err(P1Error::NotInDomain(1)));
    }

    #[test]
    fn rank_examples() {
        let r = p1_gauss_rank(2, 2, 1);
        assert_eq!((r.rank, r.codomain_dim, r.surjective), (3, 3, true));
        for (a, b) in [(0, 0), (3, 1), (4, 6)] {
            let r = p1_gauss_rank(a, b, 0);
            assert_eq!(r.rank, u64::from(a + b + 1));
            assert!(r.surjective);
        }
        let r = p1_gauss_rank(1, 1, 1);
        assert_eq!((r.domain_dim, r.rank, r.codomain_dim), (1, 1, 1));
        let r = p1_gauss_rank(1, 3, 2);
        assert_eq!((r.domain_dim, r.rank, r.codomain_dim), (0, 0, 1));
    }

    #[test]
    fn shape_is_checked() {
        assert!(matches!(
            P1Tensor::new(1, 2, ExactMatrix::zeros(2, 2)),
            Err(P1Error::Shape { .. })
        ));
    }

    /// Independent domain: `∂_x^m G (y, y) = 0` for `m < k`.
    fn taylor_domain_dim(a: u32, b: u32, k: u32) -> usize {
        let (na, nb) = (a as usize + 1, b as usize + 1);
        let width = na + nb;
        let mut rows = Vec::new();
        for m in 0..k as usize {
            // coefficient of y^e in ∂_x^m G(y, y), for each basis x^i y^j
            for e in 0..width {
                let mut row = vec![rat(0); na * nb];
                for i in m..na {
                    if e + m >= i && e + m - i < nb {
                        let j = e + m - i;
                        let falling: i64 = (0..m).map(|s| (i - s) as i64).product();
                        row[i * nb + j] = rat(falling);
                    }
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return na * nb;
        }
        na * nb - ExactMatrix::from_rows(na * nb, rows).unwrap().rank()
    }

    #[test]
    fn domain_dimension_against_taylor_oracle() {
        for a in 0..=6 {
            for b in 0..=6 {
                for k in 0..=3 {
                    let dim = p1_domain(a, b, k).rows();
                    assert_eq!(dim, taylor_domain_dim(a, b, k), "a={a} b={b} k={k}");
                    if a >= k && b >= k {
                        let formula = (a + 1) * (b + 1) - (0..k).map(|m| a + b - 2 * m + 1).sum::<u32>();
                        assert_eq!(dim as u32, formula);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn swap_changes_sign_by_parity(
            a in 0u32..6, b in 0u32..6, k in 0u32..4,
            h in proptest::collection::vec(-5i64..=5, 36)
        ) {
            prop_assume!(a >= k && b >= k);
            // G = (x - y)^k H with H of bidegree (a - k, b - k).
            let mut g = P1Tensor::zero(a, b);
            for i in 0..=(a - k) {
                for j in 0..=(b - k) {
                    let c = h[(i * 6 + j) as usize];
                    if c == 0 {
                        continue;
                    }
                    for s in 0..=k {
                        let binom: i64 = (0..s).fold(1, |acc, t| acc * (k - t) as i64 / (t + 1) as i64);
                        let sign = if s % 2 == 0 { 1 } else { -1 };
                        let (ii, jj) = ((i + k - s) as usize, (j + s) as usize);
                        let cur = g.coeffs.get(ii, jj).clone();
                        g.coeffs.set(ii, jj, cur + rat(sign * binom * c));
                    }
                }
            }
            let direct = p1_gauss(&g, k).unwrap();
            let swapped = p1_gauss(&g.swapped(), k).unwrap();
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            let scaled = UniPoly::new(direct.coeffs().iter().map(|c| c * &sign).collect());
            prop_assert_eq!(swapped, scaled);
        }
    }
}
