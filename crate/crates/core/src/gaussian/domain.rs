//! The domain `H^0(C × C, I_Δ^k ⊗ (K ⊠ K))` as a subspace of
//! `H^0(K) ⊗ H^0(K)`, built block by block.

use num_traits::Zero;

use super::GaussianMaps;
use crate::linalg::{same_rowspace, ExactMatrix, LinalgError, ModMatrix, Rat};

/// How the domain is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainMethod {
    /// Kernel of the order-`m` map restricted to the order-`m` domain, for
    /// `m = 0, ..., k - 1` in turn.
    Chain,
    /// Kernel of the stacked matrix of all orders `m < k` at once.
    Direct,
}

/// One block of the domain: a basis in the local coordinates of `columns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainBlock {
    pub columns: Vec<usize>,
    pub basis: ExactMatrix,
}

#[derive(Clone, Debug)]
pub struct DomainSubspace {
    pub k: u32,
    pub method: DomainMethod,
    tensor_dim: usize,
    blocks: Vec<DomainBlock>,
}

impl DomainSubspace {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.basis.rows()).sum()
    }

    pub fn blocks(&self) -> &[DomainBlock] {
        &self.blocks
    }

    pub fn tensor_dim(&self) -> usize {
        self.tensor_dim
    }

    /// Basis rows as flattened tensors (`g^2` columns each).
    pub fn basis(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.dim(), self.tensor_dim);
        let mut r = 0;
        for block in &self.blocks {
            for row in block.basis.row_iter() {
                for (local, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out.set(r, block.columns[local], v.clone());
                    }
                }
                r += 1;
            }
        }
        out
    }

    /// Basis vectors as flattened tensors, without building the dense matrix.
    pub fn vectors(&self) -> impl Iterator<Item = Vec<Rat>> + '_ {
        self.blocks.iter().flat_map(move |block| {
            block.basis.row_iter().map(move |row| {
                let mut v = vec![Rat::zero(); self.tensor_dim];
                for (local, x) in row.iter().enumerate() {
                    v[block.columns[local]] = x.clone();
                }
                v
            })
        })
    }

    /// Row-space equality with another domain; blockwise when both share
    /// the same column partition.
    pub fn same_span(&self, other: &DomainSubspace) -> Result<bool, LinalgError> {
        if self.tensor_dim != other.tensor_dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "domains in {} and {} dimensional tensor spaces",
                self.tensor_dim, other.tensor_dim
            )));
        }
        let aligned = self.blocks.len() == other.blocks.len()
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a.columns == b.columns);
        if !aligned {
            return same_rowspace(&self.basis(), &other.basis());
        }
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            if !same_rowspace(&a.basis, &b.basis)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Linear algebra used per block, over `Q` or over `F_p`.
pub(crate) trait Backend {
    type M: Clone;
    fn lift(&self, m: &ExactMatrix) -> Result<Self::M, LinalgError>;
    fn identity(&self, n: usize) -> Self::M;
    fn rows(&self, m: &Self::M) -> usize;
    fn rank(&self, m: &Self::M) -> usize;
    fn kernel(&self, m: &Self::M) -> Self::M;
    fn mul(&self, a: &Self::M, b: &Self::M) -> Self::M;
    fn transpose(&self, m: &Self::M) -> Self::M;
    fn vstack(&self, a: &Self::M, b: &Self::M) -> Self::M;
}

pub(crate) struct Exact;

impl Backend for Exact {
    type M = ExactMatrix;
    fn lift(&self, m: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        Ok(m.clone())
    }
    fn identity(&self, n: usize) -> ExactMatrix {
        ExactMatrix::identity(n)
    }
    fn rows(&self, m: &ExactMatrix) -> usize {
        m.rows()
    }
    fn rank(&self, m: &ExactMatrix) -> usize {
        m.rank()
    }
    fn kernel(&self, m: &ExactMatrix) -> ExactMatrix {
        m.kernel_basis()
    }
    fn mul(&self, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        a.mul(b).expect("block shapes agree")
    }
    fn transpose(&self, m: &ExactMatrix) -> ExactMatrix {
        m.transpose()
    }
    fn vstack(&self, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        a.vstack(b).expect("block widths agree")
    }
}

pub(crate) struct Modular(pub u64);

impl Backend for Modular {
    type M = ModMatrix;
    fn lift(&self, m: &ExactMatrix) -> Result<ModMatrix, LinalgError> {
        m.reduce_mod(self.0)
    }
    fn identity(&self, n: usize) -> ModMatrix {
        ModMatrix::identity(self.0, n)
    }
    fn rows(&self, m: &ModMatrix) -> usize {
        m.rows()
    }
    fn rank(&self, m: &ModMatrix) -> usize {
        m.rank()
    }
    fn kernel(&self, m: &ModMatrix) -> ModMatrix {
        m.kernel_basis()
    }
    fn mul(&self, a: &ModMatrix, b: &ModMatrix) -> ModMatrix {
        a.mul(b)
    }
    fn transpose(&self, m: &ModMatrix) -> ModMatrix {
        m.transpose()
    }
    fn vstack(&self, a: &ModMatrix, b: &ModMatrix) -> ModMatrix {
        a.vstack(b)
    }
}

/// Domain basis of one block (rows in local coordinates).
pub(crate) fn block_domain<B: Backend>(
    backend: &B,
    maps: &mut GaussianMaps,
    columns: &[usize],
    k: u32,
    method: DomainMethod,
) -> Result<B::M, LinalgError> {
    let n = columns.len();
    match method {
        DomainMethod::Chain => {
            let mut basis = backend.identity(n);
            for m in 0..k {
                if backend.rows(&basis) == 0 {
                    break;
                }
                let map = backend.lift(&maps.block_matrix(m, columns))?;
                let restricted = backend.mul(&map, &backend.transpose(&basis));
                let kernel = backend.kernel(&restricted);
                basis = backend.mul(&kernel, &basis);
            }
            Ok(basis)
        }
        DomainMethod::Direct => {
            if k == 0 {
                return Ok(backend.identity(n));
            }
            let mut stacked = backend.lift(&maps.block_matrix(0, columns))?;
            for m in 1..k {
                let next = backend.lift(&maps.block_matrix(m, columns))?;
                stacked = backend.vstack(&stacked, &next);
            }
            Ok(backend.kernel(&stacked))
        }
    }
}

/// Rank of the order-`k` twisted map on a block's domain.
pub(crate) fn block_rank<B: Backend>(
    backend: &B,
    maps: &mut GaussianMaps,
    columns: &[usize],
    k: u32,
    domain: &B::M,
) -> Result<usize, LinalgError> {
    if backend.rows(domain) == 0 {
        return Ok(0);
    }
    let map = backend.lift(&maps.block_matrix(k, columns))?;
    Ok(backend.rank(&backend.mul(&map, &backend.transpose(domain))))
}

/// Exact domain of the order-`k` Gaussian map.
///
/// Blocks are computed for orders `0..=k` so that the same partition also
/// serves for the order-`k` map itself.
pub fn domain_subspace(maps: &mut GaussianMaps, k: u32, method: DomainMethod) -> DomainSubspace {
    let partition = maps.blocks(k);
    let blocks = partition
        .into_iter()
        .map(|columns| {
            let basis = block_domain(&Exact, maps, &columns, k, method)
                .expect("exact arithmetic cannot fail");
            DomainBlock { columns, basis }
        })
        .collect();
    DomainSubspace {
        k,
        method,
        tensor_dim: maps.tensor_dim(),
        blocks,
    }
}
