//! Closed-form rank formulas and numeric surjectivity criteria.
//!
//! Every inequality is evaluated in integers, with fractions cleared.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{ratio, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("the product criterion needs k >= 2, got k = {0}")]
    KBelowTwo(u32),
    #[error("divisor degrees must be positive")]
    ZeroDegree,
    #[error("phi must be at least 1")]
    ZeroPhi,
    #[error("genus formula is negative ({0})")]
    NegativeGenus(i128),
}

/// Predicted rank and corank of the order-`k` Gaussian map of a smooth
/// plane curve of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneRankFormula {
    pub rank: Rat,
    pub corank: Rat,
    /// Whether `(d, k)` is in the proven range `0 <= k <= (d - 6) / 2`.
    pub valid: bool,
}

impl PlaneRankFormula {
    pub fn rank_integer(&self) -> Option<u64> {
        self.rank.is_integer().then(|| self.rank.to_integer().to_u64()).flatten()
    }

    pub fn corank_integer(&self) -> Option<u64> {
        self.corank.is_integer().then(|| self.corank.to_integer().to_u64()).flatten()
    }
}

/// `rank = (2k+3)(d(d-3) - k(k+3)) / 2`, `corank = k(k+3)(2k+3) / 2`.
pub fn plane_rank_formula(d: u32, k: u32) -> PlaneRankFormula {
    let (d, k) = (i64::from(d), i64::from(k));
    let valid = d >= 6 && 2 * k <= d - 6;
    let out = PlaneRankFormula {
        rank: ratio((2 * k + 3) * (d * (d - 3) - k * (k + 3)), 2),
        corank: ratio(k * (k + 3) * (2 * k + 3), 2),
        valid,
    };
    if valid {
        assert!(
            out.rank.is_integer() && out.corank.is_integer(),
            "rank formula not integral at d={d}, k={k}"
        );
    }
    out
}

/// Corank of the restriction map from the plane, `k(k+3)(2k+3)/2`.
/// The product `k(k+3)` is always even.
pub fn p2_corank_formula(k: u32) -> u64 {
    let k = u64::from(k);
    k * (k + 3) * (2 * k + 3) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hyperelliptic {
    Yes,
    No,
    #[default]
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EinLazConclusion {
    SurjectiveByI,
    SurjectiveByII,
    NoConclusion,
}

/// Surjectivity of `γ^k_{L,M}` for line bundles of degrees `d`, `m` on a
/// curve of genus `g`. `k = 0` is outside the criterion and gives
/// `NoConclusion`.
pub fn einlaz_predicate(g: u32, d: u32, m: u32, k: u32, hyperelliptic: Hyperelliptic) -> EinLazConclusion {
    if k == 0 {
        return EinLazConclusion::NoConclusion;
    }
    let (g, d, m, k) = (i64::from(g), i64::from(d), i64::from(m), i64::from(k));
    let floor = (k + 1) * (g + 1);
    if d < floor || m < floor {
        return EinLazConclusion::NoConclusion;
    }
    let base = (k + 1) * (2 * g + 2);
    if d + m >= base + 2 * g - 1 {
        EinLazConclusion::SurjectiveByI
    } else if hyperelliptic == Hyperelliptic::No && d + m >= base + 2 * g - 2 {
        EinLazConclusion::SurjectiveByII
    } else {
        EinLazConclusion::NoConclusion
    }
}

/// Genera of `C_1`, `C_2`, degrees of `D_1`, `D_2`, and the order `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductData {
    pub g1: u32,
    pub g2: u32,
    pub d1: u32,
    pub d2: u32,
    pub k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductCase {
    Case1,
    Case2,
    /// Case 2 with the roles of the two factors exchanged.
    Case2Swapped,
    NoConclusion,
}

impl ProductCase {
    pub fn is_conclusive(self) -> bool {
        self != ProductCase::NoConclusion
    }
}

fn rational_case(g_rat: u32, g_other: u32, d_rat: u32, d_other: u32, k: u32) -> bool {
    let (g2, d1, d2, k) = (u64::from(g_other), u64::from(d_rat), u64::from(d_other), u64::from(k));
    g_rat == 0
        && g2 >= 2
        && d1 > 2 * (k + 1)
        && (g2 - 1) * d1 > k * d2
        && d2 >= k * g2 + k + 3
}

/// Hypotheses for surjectivity of `γ^k_C` for curves `C` in
/// `|p_1^* D_1 ⊗ p_2^* D_2|` on `C_1 × C_2`.
pub fn product_predicate(p: &ProductData) -> Result<ProductCase, CriteriaError> {
    if p.k < 2 {
        return Err(CriteriaError::KBelowTwo(p.k));
    }
    if p.d1 == 0 || p.d2 == 0 {
        return Err(CriteriaError::ZeroDegree);
    }
    let k = u64::from(p.k);
    let bound = |g: u32| k * u64::from(g) + k + 3;
    let genera = (p.g1 >= 2 && p.g2 >= 1) || (p.g1 >= 1 && p.g2 >= 2);
    if genera && u64::from(p.d1) >= bound(p.g1) && u64::from(p.d2) >= bound(p.g2) {
        return Ok(ProductCase::Case1);
    }
    if rational_case(p.g1, p.g2, p.d1, p.d2, p.k) {
        return Ok(ProductCase::Case2);
    }
    if rational_case(p.g2, p.g1, p.d2, p.d1, p.k) {
        return Ok(ProductCase::Case2Swapped);
    }
    Ok(ProductCase::NoConclusion)
}

/// `1 + (g_2 - 1) d_1 + (g_1 - 1) d_2 + d_1 d_2`.
pub fn product_genus(g1: u32, g2: u32, d1: u32, d2: u32) -> Result<u64, CriteriaError> {
    let (g1, g2, d1, d2) = (i128::from(g1), i128::from(g2), i128::from(d1), i128::from(d2));
    let g = 1 + (g2 - 1) * d1 + (g1 - 1) * d2 + d1 * d2;
    u64::try_from(g).map_err(|_| CriteriaError::NegativeGenus(g))
}

/// Genus of a general curve with surjective `γ^k`, when the product
/// criterion applies to `p`.
pub fn surjective_genus(p: &ProductData) -> Result<Option<u64>, CriteriaError> {
    if !product_predicate(p)?.is_conclusive() {
        return Ok(None);
    }
    product_genus(p.g1, p.g2, p.d1, p.d2).map(Some)
}

/// The closed form `6k^2 + 17k + 13` stated for the lowest genus.
pub fn claimed_min_genus(k: u32) -> u64 {
    let k = u64::from(k);
    6 * k * k + 17 * k + 13
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub d1: u32,
    pub d2: u32,
    pub genus: u64,
    pub case: ProductCase,
}

/// Smallest product genus over `1 <= d_1, d_2 <= bound` satisfying the
/// product criterion; ties go to the lexicographically smallest `(d_1, d_2)`.
pub fn sweep_min_genus(g1: u32, g2: u32, k: u32, bound: u32) -> Result<Option<SweepResult>, CriteriaError> {
    let mut best: Option<SweepResult> = None;
    for d1 in 1..=bound {
        for d2 in 1..=bound {
            let p = ProductData { g1, g2, d1, d2, k };
            let case = product_predicate(&p)?;
            if !case.is_conclusive() {
                continue;
            }
            let genus = product_genus(g1, g2, d1, d2)?;
            if best.is_none_or(|b| genus < b.genus) {
                best = Some(SweepResult { d1, d2, genus, case });
            }
        }
    }
    Ok(best)
}

/// `φ(O_X(C))` and `k` for a curve on an unnodal Enriques surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnriquesData {
    pub phi: u32,
    pub k: u32,
}

impl EnriquesData {
    pub fn new(phi: u32, k: u32) -> Result<Self, CriteriaError> {
        if phi == 0 {
            return Err(CriteriaError::ZeroPhi);
        }
        Ok(Self { phi, k })
    }
}

/// `φ > 6` for `k = 1`, otherwise `φ > 4(k + 2)`.
pub fn enriques_predicate(e: &EnriquesData) -> bool {
    let phi = u64::from(e.phi);
    if e.k == 1 {
        phi > 6
    } else {
        phi > 4 * (u64::from(e.k) + 2)
    }
}
