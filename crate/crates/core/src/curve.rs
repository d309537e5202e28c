//! Validated smooth plane curves and their (pluri)canonical section spaces.
//!
//! A smooth plane curve `C` of degree `d` has `K_C = O_C(d - 3)`, so
//! `H^0(K_C^m)` is the image of the polynomials of total degree at most
//! `m(d - 3)` in the coordinate ring. With admissible coordinates the
//! monomials `x^a y^b` with `a + b <= m(d - 3)` and `b < d` form a basis of
//! that image.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Rat;
use crate::poly::{BiPoly, Monomial, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("curve has degree {0}; degree at least 4 is required")]
    DegreeTooLow(u32),
    #[error("coefficient of y^{0} vanishes; apply a generic linear change of coordinates")]
    NotYMonic(u32),
    #[error("the line at infinity is not transverse (repeated point at infinity); apply a generic linear change of coordinates")]
    SingularAtInfinity,
    #[error("curve is probably singular: resultant of F and {0} in y vanished at every sample")]
    ProbablySingular(&'static str),
    #[error("pluricanonical power must be at least 1, got {0}")]
    InvalidPower(u32),
    #[error("internal inconsistency: h0(K^{m}) is {counted} by monomial count but {expected} by Riemann-Roch (d = {d})")]
    InternalInconsistency {
        d: u32,
        m: u32,
        counted: u64,
        expected: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SmoothMode {
    Assume,
    #[default]
    Probabilistic,
}

/// Which checks were run when the curve was accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub y_monic: bool,
    pub distinct_points_at_infinity: bool,
    pub smooth_mode: SmoothMode,
    /// Number of sample abscissae at which the resultant checks were
    /// attempted before both came out nonzero; 0 in assume mode.
    pub resultant_samples: usize,
}

/// On-disk curve description: `{"F": "<polynomial>", "smooth_mode": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(rename = "F")]
    pub f: String,
    #[serde(default)]
    pub smooth_mode: SmoothMode,
}

#[derive(Clone, Debug)]
pub struct PlaneCurve {
    f: BiPoly,
    degree: u32,
    genus: u64,
    admissibility: Admissibility,
}

const RESULTANT_SAMPLES: usize = 8;

pub fn genus_of_degree(d: u32) -> u64 {
    let d = d as u64;
    (d - 1) * (d - 2) / 2
}

fn binom2(n: i64) -> u64 {
    if n < 2 {
        0
    } else {
        (n * (n - 1) / 2) as u64
    }
}

/// `h^0(O_C(M))` for `M = m(d - 3)`, counted as
/// `C(M + 2, 2) - C(M - d + 2, 2)`.
pub fn monomial_count(d: u32, m: u32) -> u64 {
    let big_m = m as i64 * (d as i64 - 3);
    binom2(big_m + 2) - binom2(big_m - d as i64 + 2)
}

/// `h^0(K_C^m)` for a smooth plane curve of degree `d`, cross-checked
/// against `g` (m = 1) and `(2m - 1)(g - 1)` (m >= 2).
pub fn pluricanonical_dim_for_degree(d: u32, m: u32) -> Result<u64, CurveError> {
    if m == 0 {
        return Err(CurveError::InvalidPower(0));
    }
    let g = genus_of_degree(d);
    let counted = monomial_count(d, m);
    let expected = if m == 1 { g } else { (2 * m as u64 - 1) * (g - 1) };
    if counted != expected {
        return Err(CurveError::InternalInconsistency {
            d,
            m,
            counted,
            expected,
        });
    }
    Ok(counted)
}

impl PlaneCurve {
    pub fn new(f: BiPoly, smooth_mode: SmoothMode) -> Result<Self, CurveError> {
        let degree = f.total_degree().ok_or(CurveError::ZeroPolynomial)?;
        if degree < 4 {
            return Err(CurveError::DegreeTooLow(degree));
        }
        if f.coeff(Monomial::new(0, degree)).is_zero() {
            return Err(CurveError::NotYMonic(degree));
        }
        let top = f.homogeneous_part(degree).dehomogenize_y();
        let at_infinity_on_y_axis = degree as usize - top.degree().unwrap_or(0);
        if at_infinity_on_y_axis > 1 || !top.is_squarefree() {
            return Err(CurveError::SingularAtInfinity);
        }
        let resultant_samples = match smooth_mode {
            SmoothMode::Assume => 0,
            SmoothMode::Probabilistic => probabilistic_smoothness(&f)?,
        };
        Ok(Self {
            f,
            degree,
            genus: genus_of_degree(degree),
            admissibility: Admissibility {
                y_monic: true,
                distinct_points_at_infinity: true,
                smooth_mode,
                resultant_samples,
            },
        })
    }

    /// The Fermat curve `x^d + y^d + 1`.
    pub fn fermat(d: u32) -> Result<Self, CurveError> {
        let f = BiPoly::from_terms([
            (crate::linalg::rat(1), d, 0),
            (crate::linalg::rat(1), 0, d),
            (crate::linalg::rat(1), 0, 0),
        ]);
        Self::new(f, SmoothMode::Probabilistic)
    }

    pub fn from_file(file: &CurveFile) -> Result<Self, crate::Error> {
        let f = crate::poly::parse_poly(&file.f)?;
        Ok(Self::new(f, file.smooth_mode)?)
    }

    pub fn equation(&self) -> &BiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn admissibility(&self) -> &Admissibility {
        &self.admissibility
    }

    /// Basis `x^a y^b`, `a + b <= d - 3`, of `H^0(K_C)`.
    pub fn canonical_basis(&self) -> SectionBasis {
        let monomials = graded_monomials(self.degree - 3, self.degree);
        debug_assert_eq!(monomials.len() as u64, self.genus);
        SectionBasis {
            power: 1,
            monomials,
        }
    }

    /// Basis of `H^0(K_C^m)`: monomials of degree `<= m(d - 3)` and
    /// `y`-degree `< d`.
    pub fn pluricanonical_basis(&self, m: u32) -> Result<SectionBasis, CurveError> {
        let dim = self.pluricanonical_dim(m)?;
        let monomials = graded_monomials(m * (self.degree - 3), self.degree);
        debug_assert_eq!(monomials.len() as u64, dim);
        Ok(SectionBasis { power: m, monomials })
    }

    pub fn pluricanonical_dim(&self, m: u32) -> Result<u64, CurveError> {
        pluricanonical_dim_for_degree(self.degree, m)
    }
}

/// Monomials of total degree `<= max_degree` with `y`-degree `< y_bound`,
/// ordered by degree and then by decreasing power of `x`.
fn graded_monomials(max_degree: u32, y_bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for t in 0..=max_degree {
        for b in 0..=t.min(y_bound - 1) {
            out.push(Monomial::new(t - b, b));
        }
    }
    out
}

/// Necessary smoothness conditions: `Res_y(F, F_y)` and `Res_y(F, F_x)` are
/// nonzero polynomials in `x`. Both are tested by specialising `x` at
/// pseudo-random integers; returns the number of samples consumed.
fn probabilistic_smoothness(f: &BiPoly) -> Result<usize, CurveError> {
    let fx = f.partial_x();
    let fy = f.partial_y();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut ok_y = false;
    let mut ok_x = false;
    for sample in 1..=RESULTANT_SAMPLES {
        let x0 = Rat::from_integer(rng.gen_range(-1000i64..=1000).into());
        let f0 = f.specialize_x(&x0);
        if !ok_y {
            ok_y = !UniPoly::resultant(&f0, &fy.specialize_x(&x0)).is_zero();
        }
        if !ok_x {
            ok_x = !UniPoly::resultant(&f0, &fx.specialize_x(&x0)).is_zero();
        }
        if ok_x && ok_y {
            return Ok(sample);
        }
    }
    Err(CurveError::ProbablySingular(if ok_y { "F_x" } else { "F_y" }))
}

/// Ordered basis of `H^0(K_C^power)` by monomial representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionBasis {
    pub power: u32,
    pub monomials: Vec<Monomial>,
}

impl SectionBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn polys(&self) -> Vec<BiPoly> {
        self.monomials
            .iter()
            .map(|m| BiPoly::monomial(m.x, m.y))
            .collect()
    }
}
