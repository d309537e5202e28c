use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{ExactMatrix, Rat};

/// Dense univariate polynomial over [`Rat`], coefficients in ascending
/// degree with no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (UniPoly::zero(), self.clone());
        };
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd; zero when both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => UniPoly::new(a.coeffs.iter().map(|c| c / &l).collect()),
            None => a,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Sylvester matrix of `f` (degree m) and `g` (degree n): `(m+n)` square.
    pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> ExactMatrix {
        let m = f.degree().unwrap_or(0);
        let n = g.degree().unwrap_or(0);
        let size = m + n;
        let mut out = ExactMatrix::zeros(size, size);
        // rows hold coefficients from the leading one down
        for r in 0..n {
            for (i, c) in f.coeffs.iter().rev().enumerate() {
                out.set(r, r + i, c.clone());
            }
        }
        for r in 0..m {
            for (i, c) in g.coeffs.iter().rev().enumerate() {
                out.set(n + r, r + i, c.clone());
            }
        }
        out
    }

    /// Resultant of `f` and `g`, computed as the Sylvester determinant.
    pub fn resultant(f: &UniPoly, g: &UniPoly) -> Rat {
        if f.is_zero() || g.is_zero() {
            return Rat::zero();
        }
        if f.degree() == Some(0) && g.degree() == Some(0) {
            return Rat::one();
        }
        determinant(UniPoly::sylvester_matrix(f, g))
    }
}

/// Determinant by rational Gaussian elimination.
fn determinant(mut m: ExactMatrix) -> Rat {
    let n = m.rows();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            for c in 0..n {
                let a = m.get(piv, c).clone();
                let b = m.get(col, c).clone();
                m.set(piv, c, b);
                m.set(col, c, a);
            }
            det = -det;
        }
        let p = m.get(col, col).clone();
        det *= &p;
        for r in col + 1..n {
            let f = m.get(r, col) / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = m.get(r, c) - &f * m.get(col, c);
                m.set(r, c, v);
            }
        }
    }
    det
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "UniPoly[{}]", parts.join(", "))
    }
}
