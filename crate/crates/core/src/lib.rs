//! Exact higher Gaussian (Wahl) maps of the canonical bundle of smooth
//! plane curves.
//!
//! The crate builds the matrices of the maps from polynomial data, computes
//! their ranks exactly over the rationals, and evaluates the closed-form
//! rank formulas and surjectivity criteria they are checked against.

pub mod criteria;
pub mod curve;
mod error;
pub mod gaussian;
pub mod linalg;
pub mod p1;
pub mod poly;

pub use criteria::{
    claimed_min_genus, einlaz_predicate, enriques_predicate, p2_corank_formula, plane_rank_formula,
    product_genus, product_predicate, surjective_genus, sweep_min_genus, CriteriaError, EinLazConclusion,
    EnriquesData, Hyperelliptic, PlaneRankFormula, ProductCase, ProductData, SweepResult,
};
pub use curve::{
    genus_of_degree, pluricanonical_dim_for_degree, CurveError, CurveFile, PlaneCurve, SectionBasis, SmoothMode,
};
pub use error::Error;
pub use gaussian::{
    domain_subspace, gamma_rank, gamma_rank_with, twisted_gauss_matrix, Arithmetic, DomainMethod,
    DomainSubspace, GaussReport, GaussianMaps, TensorElement,
};
pub use linalg::{same_rowspace, ExactMatrix, LinalgError, ModMatrix, Rat};
pub use p1::{p1_gauss, p1_gauss_rank, P1Error, P1Rank, P1Tensor};
pub use poly::{delta, normal_form, parse_poly, r_operator, BiPoly, Monomial, ParseError, PolyError, UniPoly};
