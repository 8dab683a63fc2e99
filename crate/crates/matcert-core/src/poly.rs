//! Univariate polynomials over exact rationals, characteristic polynomials,
//! and the Cayley-Hamilton check.
//!
//! Coefficients are stored in ascending degree order and kept canonical: the
//! highest stored coefficient is nonzero, and the zero polynomial is the
//! empty coefficient vector. Characteristic polynomials are computed by the
//! Faddeev-LeVerrier recurrence over rationals; the divisions involved are
//! by the integers `1..n`, so the result must come out integral, and a final
//! integrality assertion catches any arithmetic slip.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::{GuardedMatrix, MatrixError};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A univariate polynomial in canonical ascending-coefficient form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Coeff>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The operation is undefined on the zero polynomial.
    ZeroPolynomial,
    /// A matrix evaluation needs integer coefficients; `index` is the degree
    /// of the offending coefficient.
    NonIntegralCoefficient { index: usize },
    /// The Faddeev-LeVerrier recurrence produced a non-integer coefficient
    /// for an integer matrix. This cannot happen for correct arithmetic and
    /// signals an implementation bug.
    NonIntegralCharPoly { index: usize },
    Matrix(MatrixError),
}

impl From<MatrixError> for PolyError {
    fn from(e: MatrixError) -> Self {
        PolyError::Matrix(e)
    }
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined on the zero polynomial"),
            PolyError::NonIntegralCoefficient { index } => {
                write!(f, "coefficient of x^{index} is not an integer")
            }
            PolyError::NonIntegralCharPoly { index } => write!(
                f,
                "characteristic polynomial came out non-integral at x^{index} (implementation bug)"
            ),
            PolyError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PolyError {}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![Coeff::one()] }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Coeff::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Ascending coefficients in canonical form.
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_integer)
    }

    /// Ascending integer coefficients, if every coefficient is integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Coeff::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix: sum of `c_k * M^k` with
    /// `M^0` the 1-matrix, computed by Horner's scheme in exact signed
    /// arithmetic. Requires integral coefficients.
    pub fn eval_matrix(&self, m: &GuardedMatrix) -> Result<GuardedMatrix, PolyError> {
        if !m.is_square() {
            return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() }.into());
        }
        if let Some(index) = self.coeffs.iter().position(|c| !c.is_integer()) {
            return Err(PolyError::NonIntegralCoefficient { index });
        }
        let n = m.rows();
        let mut acc = GuardedMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            let diag = GuardedMatrix::identity(n).scale(&c.to_integer());
            acc = acc.mul(m)?.add(&diag)?;
        }
        Ok(acc)
    }

    /// Divides by `x - 1`, returning the quotient and the exact remainder,
    /// so that `self = quotient * (x - 1) + remainder`.
    pub fn div_by_x_minus_one(&self) -> Result<(Polynomial, Coeff), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![Coeff::zero(); d];
        let mut carry = Coeff::zero();
        for k in (1..=d).rev() {
            carry = &self.coeffs[k] + carry;
            quotient[k - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry;
        Ok((Polynomial::from_coeffs(quotient), remainder))
    }

    /// The largest `m` such that `(x - 1)^m` divides the polynomial,
    /// by repeated exact synthetic division.
    pub fn multiplicity_of_root_one(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut multiplicity = 0;
        loop {
            let (quotient, remainder) = p.div_by_x_minus_one()?;
            if !remainder.is_zero() {
                return Ok(multiplicity);
            }
            multiplicity += 1;
            p = quotient;
            if p.is_zero() {
                return Ok(multiplicity);
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Square matrix with rational entries, used only inside the
/// Faddeev-LeVerrier recurrence.
struct RatMat {
    n: usize,
    entries: Vec<Coeff>,
}

impl RatMat {
    fn from_int(m: &GuardedMatrix) -> Self {
        let n = m.rows();
        let entries = m
            .indexed_entries()
            .map(|(_, v)| Coeff::from_integer(v.clone()))
            .collect();
        RatMat { n, entries }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![Coeff::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * &other.entries[k * n + j];
                }
            }
        }
        RatMat { n, entries }
    }

    fn add_diag(&self, c: &Coeff) -> Self {
        let mut entries = self.entries.clone();
        for i in 0..self.n {
            entries[i * self.n + i] += c;
        }
        RatMat { n: self.n, entries }
    }

    fn trace(&self) -> Coeff {
        (0..self.n).map(|i| self.entries[i * self.n + i].clone()).sum()
    }
}

/// The characteristic polynomial `det(x*I - M)` of a square integer matrix,
/// as a monic integral polynomial of degree `n`.
pub fn char_poly(m: &GuardedMatrix) -> Result<Polynomial, PolyError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    let n = m.rows();
    let mut coeffs = vec![Coeff::zero(); n + 1];
    coeffs[n] = Coeff::one();
    if n > 0 {
        let a = RatMat::from_int(m);
        let mut mk = RatMat::from_int(m);
        coeffs[n - 1] = -mk.trace();
        for k in 2..=n {
            mk = a.mul(&mk.add_diag(&coeffs[n - k + 1]));
            coeffs[n - k] = -mk.trace() / Coeff::from_integer(BigInt::from(k));
        }
    }
    if let Some(index) = coeffs.iter().position(|c| !c.is_integer()) {
        return Err(PolyError::NonIntegralCharPoly { index });
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Checks that a matrix is annihilated by its own characteristic polynomial.
/// Holds for every square integer matrix; exposed so the test suite can
/// exercise it as an oracle.
pub fn cayley_hamilton_holds(m: &GuardedMatrix) -> Result<bool, PolyError> {
    let chi = char_poly(m)?;
    Ok(chi.eval_matrix(m)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Scalar;
    use alloc::string::ToString;

    fn m(rows: &[&[i64]]) -> GuardedMatrix {
        GuardedMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn add_and_mul() {
        // (x + 1) + (x - 1) = 2x
        assert_eq!(p(&[1, 1]).add(&p(&[-1, 1])), p(&[0, 2]));
        // (x - 1)(x + 1) = x^2 - 1
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        let q = p(&[3, 0, 2]);
        assert_eq!(q.add(&Polynomial::zero()), q);
    }

    #[test]
    fn canonical_form() {
        assert!(Polynomial::from_int_coeffs(&[0, 0]).is_zero());
        assert_eq!(Polynomial::from_int_coeffs(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn matrix_evaluation() {
        // x^2 - 2x + 1 annihilates the identity
        assert!(p(&[1, -2, 1]).eval_matrix(&GuardedMatrix::identity(2)).unwrap().is_zero());
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(p(&[0, 1]).eval_matrix(&a).unwrap(), a);
        // M^2 = I for the swap matrix
        assert!(p(&[-1, 0, 1]).eval_matrix(&m(&[&[0, 1], &[1, 0]])).unwrap().is_zero());
        let half = Polynomial::from_coeffs(vec![Coeff::new(BigInt::from(1), BigInt::from(2))]);
        assert_eq!(
            half.eval_matrix(&a).unwrap_err(),
            PolyError::NonIntegralCoefficient { index: 0 }
        );
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly(&GuardedMatrix::identity(2)).unwrap(), p(&[1, -2, 1]));
        assert_eq!(char_poly(&m(&[&[1, 1], &[0, 1]])).unwrap(), p(&[1, -2, 1]));
        assert_eq!(char_poly(&m(&[&[0, 1], &[1, 0]])).unwrap(), p(&[-1, 0, 1]));
        assert!(matches!(
            char_poly(&GuardedMatrix::zero(2, 3)),
            Err(PolyError::Matrix(MatrixError::NotSquare { .. }))
        ));
    }

    #[test]
    fn cayley_hamilton_examples() {
        assert!(cayley_hamilton_holds(&GuardedMatrix::identity(3)).unwrap());
        assert!(cayley_hamilton_holds(&m(&[&[1, 1], &[0, 1]])).unwrap());
        // chi = x^2 - 3x + 1
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(char_poly(&a).unwrap(), p(&[1, -3, 1]));
        assert!(cayley_hamilton_holds(&a).unwrap());
    }

    #[test]
    fn root_one_multiplicity() {
        assert_eq!(p(&[1, -2, 1]).multiplicity_of_root_one().unwrap(), 2);
        assert_eq!(p(&[-1, 0, 1]).multiplicity_of_root_one().unwrap(), 1);
        assert_eq!(p(&[0, 0, 1]).multiplicity_of_root_one().unwrap(), 0);
        assert_eq!(
            Polynomial::zero().multiplicity_of_root_one().unwrap_err(),
            PolyError::ZeroPolynomial
        );
        // (x - 1)^3 fully deflates
        assert_eq!(p(&[-1, 3, -3, 1]).multiplicity_of_root_one().unwrap(), 3);
    }

    #[test]
    fn synthetic_division() {
        let (q, r) = p(&[1, -2, 1]).div_by_x_minus_one().unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), Coeff::zero()));
        let (q, r) = p(&[-1, 0, 1]).div_by_x_minus_one().unwrap();
        assert_eq!((q, r), (p(&[1, 1]), Coeff::zero()));
        let (q, r) = p(&[0, 0, 1]).div_by_x_minus_one().unwrap();
        assert_eq!((q, r), (p(&[1, 1]), Coeff::one()));
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "x^2 - 2*x + 1");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[5]).to_string(), "5");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }
}
