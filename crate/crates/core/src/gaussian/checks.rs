//! Self-tests of the Gaussian map machinery that need no closed form.

use num_traits::{One, Zero};

use super::domain::{block_domain, Exact};
use super::{domain_subspace, DomainMethod, GaussianMaps};
use crate::curve::PlaneCurve;
use crate::linalg::{ExactMatrix, Rat, DEFAULT_PRIMES};
use crate::poly::{BiPoly, NormalForm};
use crate::Error;

/// Checks that the order-`k` twisted map kills every domain element whose
/// symmetry sign under swapping the factors is `(-1)^(k+1)`.
///
/// Swapping the factors preserves each block, since the order-0 images of
/// `P_a ⊗ P_b` and `P_b ⊗ P_a` coincide.
pub fn parity_vanishing_holds(maps: &mut GaussianMaps, k: u32) -> Result<bool, Error> {
    let g = maps.genus();
    let eps = if k.is_multiple_of(2) { -Rat::one() } else { Rat::one() };
    for columns in maps.blocks(k) {
        let local = |i: usize| columns.binary_search(&i).ok();
        // c_ab - eps c_ba = 0 for every a < b, and c_aa = 0 when eps = -1.
        let n = columns.len();
        let mut conditions: Vec<Vec<Rat>> = Vec::new();
        for (j, &i) in columns.iter().enumerate() {
            let (a, b) = (i / g, i % g);
            if a > b {
                continue;
            }
            let mut row = vec![Rat::zero(); n];
            if a == b {
                if eps.is_one() {
                    continue;
                }
                row[j] = Rat::one();
            } else {
                let Some(jt) = local(b * g + a) else {
                    return Err(Error::Inconsistent(format!(
                        "block containing ({a}, {b}) misses its transpose"
                    )));
                };
                row[j] = Rat::one();
                row[jt] = -eps.clone();
            }
            conditions.push(row);
        }
        let domain = block_domain(&Exact, maps, &columns, k, DomainMethod::Chain)?;
        if domain.rows() == 0 {
            continue;
        }
        let symmetric = if conditions.is_empty() {
            domain
        } else {
            let s = ExactMatrix::from_rows(n, conditions)?;
            let combos = s.mul(&domain.transpose())?.kernel_basis();
            if combos.rows() == 0 {
                continue;
            }
            combos.mul(&domain)?
        };
        let image = maps.block_matrix(k, &columns).mul(&symmetric.transpose())?;
        if !image.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that every domain basis vector of order `k` is annihilated by the
/// twisted maps of all orders `m < k`.
pub fn restriction_consistent(maps: &mut GaussianMaps, k: u32, method: DomainMethod) -> Result<bool, Error> {
    let domain = domain_subspace(maps, k, method);
    for block in domain.blocks() {
        if block.basis.rows() == 0 {
            continue;
        }
        for m in 0..k {
            let image = maps.block_matrix(m, &block.columns).mul(&block.basis.transpose())?;
            if !image.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether multiplication by `F_y^k` is injective on the normal-form
/// representatives of `H^0(K^(k+2))`.
///
/// Full rank modulo a prime certifies full rank over `Q`; the exact rank
/// is only computed when every prime fails.
pub fn twist_injective(curve: &PlaneCurve, k: u32) -> Result<bool, Error> {
    let basis = curve.pluricanonical_basis(k + 2)?;
    let mut reducer = NormalForm::new(curve.equation())?;
    let twist = curve.equation().partial_y().pow(k);
    let images: Vec<BiPoly> = basis
        .monomials
        .iter()
        .map(|&mo| reducer.reduce(&twist.shift(mo)))
        .collect();
    let rows: std::collections::BTreeSet<_> = images.iter().flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
    let index: std::collections::BTreeMap<_, _> = rows.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut matrix = ExactMatrix::zeros(rows.len(), images.len());
    for (j, p) in images.iter().enumerate() {
        for (mo, c) in p.terms() {
            matrix.set(index[mo], j, c.clone());
        }
    }
    let full = images.len();
    for p in DEFAULT_PRIMES {
        if let Ok(r) = matrix.rank_mod_p(p) {
            if r == full {
                return Ok(true);
            }
        }
    }
    Ok(matrix.rank() == full)
}

/// Rank of the multiplication map (order 0) together with `3(g - 1)`.
pub fn noether_rank(curve: &PlaneCurve) -> Result<(u64, u64), Error> {
    let report = super::gamma_rank(curve, 0)?;
    Ok((report.rank, 3 * (curve.genus() - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::curve::SmoothMode;

    #[test]
    fn parity_and_restriction_on_small_fermat() {
        for d in [5, 6] {
            let c = PlaneCurve::fermat(d).unwrap();
            let mut maps = GaussianMaps::new(&c);
            for k in 0..=2 {
                assert!(parity_vanishing_holds(&mut maps, k).unwrap(), "d={d} k={k}");
                assert!(restriction_consistent(&mut maps, k, DomainMethod::Chain).unwrap());
                assert!(restriction_consistent(&mut maps, k, DomainMethod::Direct).unwrap());
            }
        }
    }

    #[test]
    fn twist_is_injective() {
        for (d, k) in [(6, 0), (6, 1), (7, 2)] {
            assert!(twist_injective(&PlaneCurve::fermat(d).unwrap(), k).unwrap());
        }
    }

    #[test]
    fn noether_on_quartics_and_quintics() {
        let quartic = PlaneCurve::new(parse_poly("x^4 + y^4 + 1 + x*y^2 + 2*x^2").unwrap(), SmoothMode::Probabilistic).unwrap();
        for c in [PlaneCurve::fermat(4).unwrap(), quartic, PlaneCurve::fermat(5).unwrap()] {
            let (rank, expected) = noether_rank(&c).unwrap();
            assert_eq!(rank, expected);
        }
    }
}
