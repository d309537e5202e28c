//! Sparse bivariate polynomials over [`Rat`], plus the curve-adapted
//! operators used to build Gaussian maps.
//!
//! Functions on an affine plane curve `{F = 0}` are differentiated along
//! the curve with respect to `x`. For a polynomial `P`,
//!
//! ```text
//! D(P) = P_x - P_y * F_x / F_y = delta(P, F) / F_y,
//! delta(P, F) = P_x * F_y - P_y * F_x.
//! ```
//!
//! Canonical sections are represented as `P dx / F_y`, so the Taylor
//! coefficients of a section along the diagonal are iterated derivatives
//! of `P / F_y`. Induction on `m` gives
//!
//! ```text
//! D^m(P / F_y) = R^(m)(P) / F_y^(2m+1),
//! R^(0)(P)   = P,
//! R^(m+1)(P) = delta(R^(m)(P), F) * F_y - (2m+1) * R^(m)(P) * delta(F_y, F),
//! ```
//!
//! since differentiating `N / F_y^e` yields
//! `(delta(N, F) F_y - e N delta(F_y, F)) / F_y^(e+2)`. See [`r_operator`].

mod parse;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{rat, Rat};

pub use parse::{parse_poly, ParseError};
pub use univariate::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not y-monic: its leading coefficient in y is not a nonzero constant")]
    NotYMonic,
    #[error("zero polynomial has no normal form reducer")]
    ZeroModulus,
}

/// Exponent pair `x^x * y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }

    /// Graded-lex comparison: total degree first, then higher power of `x`.
    pub fn grlex_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
    }
}

/// Polynomial in `x, y` with no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(x: u32, y: u32) -> Self {
        Self::term(Rat::one(), Monomial::new(x, y))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    /// Builds from `(coefficient, x exponent, y exponent)` triples.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rat, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, a, b) in terms {
            p.add_term(Monomial::new(a, b), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_in_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other * m`, the workhorse of every product.
    pub fn add_scaled_shift(&mut self, other: &BiPoly, c: &Rat, m: Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(om.times(m), oc * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, m: Monomial) -> BiPoly {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.times(m), v.clone())).collect(),
        }
    }

    pub fn partial_x(&self) -> BiPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.x > 0 {
                out.add_term(Monomial::new(m.x - 1, m.y), c * rat(m.x as i64));
            }
        }
        out
    }

    pub fn partial_y(&self) -> BiPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.y > 0 {
                out.add_term(Monomial::new(m.x, m.y - 1), c * rat(m.y as i64));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Part of total degree exactly `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> BiPoly {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (m, c)| {
            acc + c * pow_rat(x, m.x) * pow_rat(y, m.y)
        })
    }

    /// Substitutes `x = x0`, leaving a polynomial in `y`.
    pub fn specialize_x(&self, x0: &Rat) -> UniPoly {
        let deg = self.degree_in_y().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.y as usize] += c * pow_rat(x0, m.x);
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients of a polynomial in `(t, 1)` as a polynomial in `t`,
    /// i.e. dehomogenises a form in `x, y` by `y = 1`.
    pub fn dehomogenize_y(&self) -> UniPoly {
        let deg = self.degree_in_x().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.x as usize] += c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// Scales so that all coefficients become coprime integers.
    pub fn primitive_integer(&self) -> BiPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        self.scale(&Rat::new(lcm, gcd))
    }
}

fn pow_rat(base: &Rat, e: u32) -> Rat {
    num_traits::pow(base.clone(), e as usize)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            out.add_scaled_shift(rhs, c, *m);
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// `P_x F_y - P_y F_x`: the derivative of `P` along `{F = 0}` with respect
/// to `x`, times `F_y`.
pub fn delta(p: &BiPoly, f: &BiPoly) -> BiPoly {
    delta_with(p, &f.partial_x(), &f.partial_y())
}

fn delta_with(p: &BiPoly, fx: &BiPoly, fy: &BiPoly) -> BiPoly {
    &(&p.partial_x() * fy) - &(&p.partial_y() * fx)
}

/// Precomputed partials of `F` for repeated [`r_operator`] calls.
#[derive(Clone, Debug)]
pub struct CurveDerivation {
    fx: BiPoly,
    fy: BiPoly,
    delta_fy: BiPoly,
}

impl CurveDerivation {
    pub fn new(f: &BiPoly) -> Self {
        let fx = f.partial_x();
        let fy = f.partial_y();
        let delta_fy = delta_with(&fy, &fx, &fy);
        Self { fx, fy, delta_fy }
    }

    pub fn delta(&self, p: &BiPoly) -> BiPoly {
        delta_with(p, &self.fx, &self.fy)
    }

    /// One step of the recursion: `R^(m) -> R^(m+1)`.
    pub fn r_step(&self, r_m: &BiPoly, m: u32) -> BiPoly {
        let lhs = &self.delta(r_m) * &self.fy;
        let rhs = (r_m * &self.delta_fy).scale(&rat(2 * m as i64 + 1));
        &lhs - &rhs
    }

    /// `[R^(0)(P), ..., R^(m_max)(P)]`.
    pub fn r_sequence(&self, p: &BiPoly, m_max: u32) -> Vec<BiPoly> {
        let mut seq = Vec::with_capacity(m_max as usize + 1);
        seq.push(p.clone());
        for m in 0..m_max {
            let next = self.r_step(&seq[m as usize], m);
            seq.push(next);
        }
        seq
    }
}

/// `R^(m)(P)`, the numerator of `D^m(P / F_y)` over `F_y^(2m+1)`.
pub fn r_operator(p: &BiPoly, f: &BiPoly, m: u32) -> BiPoly {
    CurveDerivation::new(f).r_sequence(p, m).pop().expect("nonempty")
}

/// Remainder of `P` on division by `F` as a polynomial in `y`.
pub fn normal_form(p: &BiPoly, f: &BiPoly) -> Result<BiPoly, PolyError> {
    Ok(NormalForm::new(f)?.reduce(p))
}

/// Reducer modulo a y-monic `F` with cached normal forms of `y^b`.
///
/// `F` of `y`-degree `e` is y-monic when its leading coefficient in `y` is
/// a nonzero constant `c`; then `y^e = y^e - F / c` modulo `F` rewrites
/// `y^e` with lower `y`-degree. When `y^e` is also of top total degree (as
/// for admissible plane curves) the rewrite never raises total degree.
#[derive(Clone, Debug)]
pub struct NormalForm {
    degree: u32,
    y_powers: Vec<BiPoly>,
}

impl NormalForm {
    pub fn new(f: &BiPoly) -> Result<Self, PolyError> {
        let degree = f.degree_in_y().ok_or(PolyError::ZeroModulus)?;
        if f.terms().any(|(m, _)| m.y == degree && m.x > 0) {
            return Err(PolyError::NotYMonic);
        }
        let lead = f.coeff(Monomial::new(0, degree));
        let mut y_powers: Vec<BiPoly> = (0..degree).map(|b| BiPoly::monomial(0, b)).collect();
        let tail = &BiPoly::monomial(0, degree) - &f.scale(&(Rat::one() / lead));
        y_powers.push(tail);
        Ok(Self { degree, y_powers })
    }

    /// `y`-degree of the modulus; reduced polynomials have smaller `y`-degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn y_power(&mut self, b: u32) -> &BiPoly {
        while self.y_powers.len() <= b as usize {
            let prev = self.y_powers.last().expect("seeded").clone();
            let mut next = BiPoly::zero();
            for (m, c) in prev.terms() {
                if m.y + 1 == self.degree {
                    let tail = self.y_powers[self.degree as usize].clone();
                    next.add_scaled_shift(&tail, c, Monomial::new(m.x, 0));
                } else {
                    next.add_term(Monomial::new(m.x, m.y + 1), c.clone());
                }
            }
            self.y_powers.push(next);
        }
        &self.y_powers[b as usize]
    }

    pub fn reduce(&mut self, p: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in p.terms() {
            if m.y < self.degree {
                out.add_term(*m, c.clone());
            } else {
                let shift = Monomial::new(m.x, 0);
                let yp = self.y_power(m.y).clone();
                out.add_scaled_shift(&yp, c, shift);
            }
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        assert_eq!(p("x^2 y").partial_x(), p("2 x y"));
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        let q = p("3 x^2 - 1/2 y + 7");
        assert!((&q + &q.scale(&rat(-1))).is_zero());
        assert_eq!(p("x^3 y^2 + y").partial_y(), p("2 x^3 y + 1"));
        assert_eq!(BiPoly::zero().total_degree(), None);
        assert_eq!(p("x^3 y^2 + y").total_degree(), Some(5));
    }

    #[test]
    fn delta_examples() {
        let f = p("x^3 + y^3 + 1");
        assert_eq!(delta(&BiPoly::x(), &f), p("3 y^2"));
        assert_eq!(delta(&BiPoly::y(), &f), p("-3 x^2"));
        assert!(delta(&f, &f).is_zero());
        let g = p("x^5 - 2 x y^3 + y + 4");
        assert!(delta(&g, &g).is_zero());
    }

    #[test]
    fn r_operator_examples() {
        let f = p("x^3 + y^3 + 1");
        let q = p("x y - 3");
        assert_eq!(r_operator(&q, &f, 0), q);
        // delta(1) = 0, F_y = 3y^2, delta(F_y) = -18 x^2 y
        assert_eq!(r_operator(&BiPoly::one(), &f, 1), p("18 x^2 y"));
    }

    #[test]
    fn normal_form_examples() {
        let f = p("y^2 - x^3 - 1");
        assert_eq!(normal_form(&p("y^3"), &f).unwrap(), p("x^3 y + y"));
        assert!(normal_form(&f, &f).unwrap().is_zero());
        assert_eq!(normal_form(&p("x^5"), &f).unwrap(), p("x^5"));
        assert_eq!(
            normal_form(&p("y^3"), &p("x y^2 + 1")),
            Err(PolyError::NotYMonic)
        );
        assert_eq!(normal_form(&p("y"), &BiPoly::zero()), Err(PolyError::ZeroModulus));
        let g = p("y^3 - x^3 - 1");
        assert_eq!(normal_form(&p("y^4"), &g).unwrap(), p("x^3 y + y"));
        assert!(normal_form(&g, &g).unwrap().is_zero());
        assert_eq!(normal_form(&p("x^5"), &g).unwrap(), p("x^5"));
    }

    #[test]
    fn normal_form_of_multiple_vanishes() {
        let f = p("x^4 + y^4 + 1 + x y^2");
        let g = p("3 x^2 y - y^5 + 2/3");
        assert!(normal_form(&(&g * &f), &f).unwrap().is_zero());
    }

    fn small_poly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0..=max_deg, 0..=max_deg, -5i64..6, 1i64..4), 0..6).prop_map(
            |terms| {
                BiPoly::from_terms(
                    terms
                        .into_iter()
                        .map(|(a, b, n, d)| (ratio(n, d), a, b)),
                )
            },
        )
    }

    fn curve() -> impl Strategy<Value = BiPoly> {
        (small_poly(2), 3u32..6).prop_map(|(lower, d)| {
            let top = p(&format!("x^{d} + y^{d} + 1"));
            let lower = BiPoly::from_terms(
                lower
                    .terms()
                    .filter(|(m, _)| m.degree() < d)
                    .map(|(m, c)| (c.clone(), m.x, m.y)),
            );
            &top + &lower
        })
    }

    proptest! {
        #[test]
        fn delta_is_a_derivation(a in small_poly(3), b in small_poly(3), f in curve()) {
            let lhs = delta(&(&a * &b), &f);
            let rhs = &(&a * &delta(&b, &f)) + &(&b * &delta(&a, &f));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn delta_preserves_the_ideal(g in small_poly(3), f in curve()) {
            let image = delta(&(&g * &f), &f);
            prop_assert!(normal_form(&image, &f).unwrap().is_zero());
        }

        #[test]
        fn normal_form_linear_and_idempotent(a in small_poly(7), b in small_poly(7), f in curve()) {
            let na = normal_form(&a, &f).unwrap();
            prop_assert_eq!(normal_form(&na, &f).unwrap(), na.clone());
            let nb = normal_form(&b, &f).unwrap();
            prop_assert_eq!(normal_form(&(&a + &b), &f).unwrap(), &na + &nb);
            let d = f.total_degree().unwrap();
            prop_assert!(na.degree_in_y().is_none_or(|y| y < d));
            prop_assert!(na.total_degree() <= a.total_degree());
        }

        #[test]
        fn r_operator_degree_bound(q in small_poly(3), f in curve(), m in 0u32..3) {
            let r = r_operator(&q, &f, m);
            if let (Some(dr), Some(dq)) = (r.total_degree(), q.total_degree()) {
                let df = f.total_degree().unwrap();
                prop_assert!(dr <= dq + m * (2 * df - 3));
            }
        }
    }
}
