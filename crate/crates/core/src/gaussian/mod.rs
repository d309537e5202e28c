//! Matrices of the higher Gaussian maps of the canonical bundle of a
//! smooth plane curve.
//!
//! An element of `H^0(K_C) ⊗ H^0(K_C)` is a tensor `T = Σ c_ab P_a ⊗ P_b`
//! in the canonical basis. In the local coordinate `x`, with
//! `u_a = P_a / F_y`, its expansion along the diagonal is
//!
//! ```text
//! Σ_ab c_ab u_a(t) u_b(t + s) = Σ_m s^m / m! · Σ_ab c_ab u_a D^m u_b.
//! ```
//!
//! `T` vanishes to order `k` on the diagonal iff the coefficients for
//! `m < k` vanish, and then `γ^k(T)` is the `m = k` coefficient. Since
//! `u_a D^m u_b = P_a R^(m)(P_b) / F_y^(2m+2)` and a section of `K^(m+2)`
//! is `Q (dx / F_y)^(m+2)`, the polynomial attached to `γ^m(T)` is
//! `Σ c_ab P_a R^(m)(P_b) / F_y^m`. The *twisted* map drops the `F_y^m`
//! denominator. Multiplication by `F_y^m` is injective in the coordinate
//! ring of an irreducible curve, so both have the same kernel and rank on
//! every subspace.
//!
//! Twisted images are normal forms modulo `F` (remainders in `y`), so
//! comparing coefficient vectors decides equality on the curve.

mod checks;
mod domain;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::curve::PlaneCurve;
use crate::linalg::{ExactMatrix, LinalgError, Rat};
use crate::poly::{BiPoly, CurveDerivation, Monomial, NormalForm};

pub use checks::{noether_rank, parity_vanishing_holds, restriction_consistent, twist_injective};
pub use domain::{domain_subspace, DomainBlock, DomainMethod, DomainSubspace};
pub use report::{gamma_rank, gamma_rank_with, Arithmetic, GaussReport};

/// Coefficient matrix of an element of `H^0(K_C) ⊗ H^0(K_C)`; entry
/// `(a, b)` multiplies `P_a ⊗ P_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    coeffs: ExactMatrix,
}

impl TensorElement {
    pub fn new(coeffs: ExactMatrix) -> Result<Self, LinalgError> {
        if coeffs.rows() != coeffs.cols() {
            return Err(LinalgError::DimensionMismatch(format!(
                "tensor coefficients must be square, got {}x{}",
                coeffs.rows(),
                coeffs.cols()
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(genus: usize) -> Self {
        Self {
            coeffs: ExactMatrix::zeros(genus, genus),
        }
    }

    /// `P_a ⊗ P_b`.
    pub fn basis(genus: usize, a: usize, b: usize) -> Self {
        let mut t = Self::zero(genus);
        t.coeffs.set(a, b, Rat::from_integer(1.into()));
        t
    }

    /// Inverse of [`Self::flatten`]: index `a * g + b` holds `c_ab`.
    pub fn from_flat(genus: usize, flat: &[Rat]) -> Result<Self, LinalgError> {
        Self::new(ExactMatrix::new(genus, genus, flat.to_vec())?)
    }

    pub fn genus(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &ExactMatrix {
        &self.coeffs
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.coeffs.entries().to_vec()
    }

    /// Exchanges the two factors.
    pub fn swapped(&self) -> Self {
        Self {
            coeffs: self.coeffs.transpose(),
        }
    }

    /// `(S, A)` with `T = S + A`, `S` symmetric and `A` antisymmetric.
    pub fn symmetry_split(&self) -> (TensorElement, TensorElement) {
        let g = self.genus();
        let half = Rat::new(1.into(), 2.into());
        let mut sym = ExactMatrix::zeros(g, g);
        let mut anti = ExactMatrix::zeros(g, g);
        for a in 0..g {
            for b in 0..g {
                let ab = self.coeffs.get(a, b);
                let ba = self.coeffs.get(b, a);
                sym.set(a, b, (ab + ba) * &half);
                anti.set(a, b, (ab - ba) * &half);
            }
        }
        (Self { coeffs: sym }, Self { coeffs: anti })
    }
}

/// Polynomial data of the twisted Gaussian maps of one curve, with the
/// `R^(m)` images of the canonical basis cached per order.
#[derive(Clone, Debug)]
pub struct GaussianMaps {
    curve: PlaneCurve,
    basis: Vec<Monomial>,
    derivation: CurveDerivation,
    reducer: NormalForm,
    r_images: Vec<Vec<BiPoly>>,
}

impl GaussianMaps {
    pub fn new(curve: &PlaneCurve) -> Self {
        let reducer = NormalForm::new(curve.equation())
            .expect("admissible curves are y-monic");
        Self {
            basis: curve.canonical_basis().monomials,
            derivation: CurveDerivation::new(curve.equation()),
            curve: curve.clone(),
            reducer,
            r_images: Vec::new(),
        }
    }

    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn genus(&self) -> usize {
        self.basis.len()
    }

    /// Number of columns, `g^2`.
    pub fn tensor_dim(&self) -> usize {
        self.basis.len() * self.basis.len()
    }

    /// Upper bound on the total (hence `x`-) degree of twisted images of
    /// order `m`: `2(d - 3) + m(2d - 3)`.
    pub fn degree_bound(&self, m: u32) -> u32 {
        let d = self.curve.degree();
        2 * (d - 3) + m * (2 * d - 3)
    }

    fn ensure_order(&mut self, m: u32) {
        while self.r_images.len() <= m as usize {
            let order = self.r_images.len() as u32;
            let next: Vec<BiPoly> = if order == 0 {
                self.basis
                    .iter()
                    .map(|mo| BiPoly::monomial(mo.x, mo.y))
                    .collect()
            } else {
                let prev = &self.r_images[order as usize - 1];
                prev.iter()
                    .map(|r| self.derivation.r_step(r, order - 1))
                    .collect()
            };
            self.r_images.push(next);
        }
    }

    /// `R^(m)(P_b)` for the `b`-th canonical basis element.
    pub fn r_image(&mut self, m: u32, b: usize) -> &BiPoly {
        self.ensure_order(m);
        &self.r_images[m as usize][b]
    }

    /// `NF(P_a · R^(m)(P_b))`, the twisted image of `P_a ⊗ P_b`.
    pub fn column(&mut self, m: u32, a: usize, b: usize) -> BiPoly {
        self.ensure_order(m);
        let shifted = self.r_images[m as usize][b].shift(self.basis[a]);
        self.reducer.reduce(&shifted)
    }

    /// Twisted images of all `g^2` basis tensors, flattened as `a * g + b`.
    pub fn columns(&mut self, m: u32) -> Vec<BiPoly> {
        let g = self.genus();
        (0..g * g).map(|i| self.column(m, i / g, i % g)).collect()
    }

    /// Twisted image of an arbitrary tensor.
    pub fn apply(&mut self, m: u32, t: &TensorElement) -> BiPoly {
        let g = self.genus();
        assert_eq!(t.genus(), g, "tensor genus does not match the curve");
        let mut out = BiPoly::zero();
        for a in 0..g {
            for b in 0..g {
                let c = t.coeffs().get(a, b);
                if !c.is_zero() {
                    let col = self.column(m, a, b);
                    out.add_scaled_shift(&col, c, Monomial::ONE);
                }
            }
        }
        out
    }

    /// Ambient row basis of the order-`m` matrix: `x^a y^b` with `b < d`
    /// and `a <= degree_bound(m)`.
    pub fn ambient_rows(&self, m: u32) -> Vec<Monomial> {
        let d = self.curve.degree();
        let bound = self.degree_bound(m);
        (0..d)
            .flat_map(|b| (0..=bound).map(move |a| Monomial::new(a, b)))
            .collect()
    }

    /// Full matrix of the twisted map of order `m` on all of
    /// `H^0(K) ⊗ H^0(K)`, in the ambient row basis.
    pub fn twisted_gauss_matrix(&mut self, m: u32) -> ExactMatrix {
        let rows = self.ambient_rows(m);
        let index: BTreeMap<Monomial, usize> =
            rows.iter().enumerate().map(|(i, mo)| (*mo, i)).collect();
        let cols = self.columns(m);
        let mut out = ExactMatrix::zeros(rows.len(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (mo, c) in col.terms() {
                let i = *index
                    .get(mo)
                    .expect("twisted image within the ambient degree bound");
                out.set(i, j, c.clone());
            }
        }
        out
    }

    /// Matrix of the order-`m` map on the given columns, with rows the
    /// monomials that actually occur, in increasing order.
    pub fn block_matrix(&mut self, m: u32, columns: &[usize]) -> ExactMatrix {
        let g = self.genus();
        let polys: Vec<BiPoly> = columns
            .iter()
            .map(|&i| self.column(m, i / g, i % g))
            .collect();
        let rows: BTreeSet<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(mo, _)| *mo)).collect();
        let index: BTreeMap<Monomial, usize> =
            rows.iter().enumerate().map(|(i, mo)| (*mo, i)).collect();
        let mut out = ExactMatrix::zeros(rows.len(), columns.len());
        for (j, p) in polys.iter().enumerate() {
            for (mo, c) in p.terms() {
                out.set(index[mo], j, c.clone());
            }
        }
        out
    }

    /// Partition of the `g^2` columns into groups whose images for every
    /// order `m <= max_order` involve pairwise disjoint monomials.
    ///
    /// The stacked matrix of orders `0..=max_order` is block diagonal with
    /// respect to this partition, so ranks add and kernels split. Curves
    /// with a diagonal symmetry group (e.g. Fermat curves) split into many
    /// small blocks; a generic curve gives a single block.
    pub fn blocks(&mut self, max_order: u32) -> Vec<Vec<usize>> {
        let n = self.tensor_dim();
        let mut dsu = DisjointSets::new(n);
        for m in 0..=max_order {
            let mut owner: BTreeMap<Monomial, usize> = BTreeMap::new();
            let g = self.genus();
            for i in 0..n {
                for (mo, _) in self.column(m, i / g, i % g).terms() {
                    match owner.get(mo) {
                        Some(&j) => dsu.union(i, j),
                        None => {
                            owner.insert(*mo, i);
                        }
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            groups.entry(dsu.find(i)).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Full twisted Gaussian matrix of order `m`.
pub fn twisted_gauss_matrix(curve: &PlaneCurve, m: u32) -> ExactMatrix {
    GaussianMaps::new(curve).twisted_gauss_matrix(m)
}
