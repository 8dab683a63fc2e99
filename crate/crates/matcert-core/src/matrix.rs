//! Dimension-guarded matrices over exact arbitrary-precision integers.
//!
//! A [`GuardedMatrix`] stores its dimensions next to a flat row-major entry
//! vector; every operation checks the dimension guard of its operands and
//! returns a structured [`MatrixError`] instead of producing a malformed
//! value. Entries are signed (`BigInt`) because characteristic-polynomial
//! work needs them; operations whose meaning requires nonnegativity (the
//! linear norm, the termination order) check and reject.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact integer carrier for matrix entries.
pub type Scalar = BigInt;

/// An `m x n` matrix whose shape is checked at every use.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GuardedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Structured failure of a dimension guard or entry-sign requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Two operands with incompatible shapes; carries both.
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Entry vector length does not equal `rows * cols`.
    EntryCount { rows: usize, cols: usize, len: usize },
    /// Row `row` has `found` entries where `expected` were required.
    RaggedRow { row: usize, expected: usize, found: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// `pointwise_max` over no matrices.
    EmptySet,
    /// A nonnegative matrix was required; the offending entry is at `(row, col)`.
    NegativeEntry { row: usize, col: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimensionMismatch { op, left, right } => write!(
                f,
                "{op}: dimension mismatch between {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
            MatrixError::EntryCount { rows, cols, len } => write!(
                f,
                "entry vector of length {len} cannot fill a {rows}x{cols} matrix"
            ),
            MatrixError::RaggedRow { row, expected, found } => write!(
                f,
                "row {row} has {found} entries, expected {expected}"
            ),
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            MatrixError::EmptySet => write!(f, "pointwise maximum of an empty set"),
            MatrixError::NegativeEntry { row, col } => {
                write!(f, "nonnegative matrix required, entry ({row}, {col}) is negative")
            }
        }
    }
}

impl core::error::Error for MatrixError {}

impl GuardedMatrix {
    /// Builds a matrix from a flat row-major entry vector, checking the
    /// length guard.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount { rows, cols, len: entries.len() });
        }
        Ok(GuardedMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows, rejecting ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::RaggedRow { row: i, expected: n, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(GuardedMatrix { rows: m, cols: n, entries })
    }

    /// Builds a matrix by tabulating `f` over all index pairs.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        GuardedMatrix { rows, cols, entries }
    }

    /// The all-zero `rows x cols` matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    /// The `n x n` 1-matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// The dimension guard: does this value represent an `m x n` matrix?
    pub fn has_shape(&self, rows: usize, cols: usize) -> bool {
        self.rows == rows && self.cols == cols && self.entries.len() == rows * cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Checked entry access; `(0, 0)` is the upper-left corner.
    pub fn get(&self, row: usize, col: usize) -> Option<&Scalar> {
        if row < self.rows && col < self.cols {
            Some(&self.entries[row * self.cols + col])
        } else {
            None
        }
    }

    /// Row-major iteration over `((row, col), entry)`.
    pub fn indexed_entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| ((k / cols, k % cols), v))
    }

    /// The rows as vectors of entries, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.cols.max(1)).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Position of the first negative entry in row-major order, if any.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.indexed_entries()
            .find(|(_, v)| v.is_negative())
            .map(|(ij, _)| ij)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    fn require_same_shape(&self, other: &Self, op: &'static str) -> Result<(), MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Pointwise sum; both operands must share one shape, which the result
    /// keeps.
    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.require_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GuardedMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Matrix product; `self.cols` must equal `other.rows`.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc += &self.entries[i * self.cols + k] * &other.entries[k * other.cols + j];
                }
                entries.push(acc);
            }
        }
        Ok(GuardedMatrix { rows: self.rows, cols: other.cols, entries })
    }

    /// Entrywise scaling by an exact scalar.
    pub fn scale(&self, s: &Scalar) -> Self {
        let entries = self.entries.iter().map(|v| v * s).collect();
        GuardedMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// `k`-th power of a square matrix, with `M^0` the 1-matrix.
    pub fn pow(&self, k: usize) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Entrywise maximum of a nonempty family of equally-shaped matrices.
    pub fn pointwise_max<'a>(
        ms: impl IntoIterator<Item = &'a GuardedMatrix>,
    ) -> Result<Self, MatrixError> {
        let mut iter = ms.into_iter();
        let first = iter.next().ok_or(MatrixError::EmptySet)?;
        let mut acc = first.clone();
        for m in iter {
            acc.require_same_shape(m, "pointwise_max")?;
            for (a, b) in acc.entries.iter_mut().zip(&m.entries) {
                if b > a {
                    *a = b.clone();
                }
            }
        }
        Ok(acc)
    }

    /// Weak matrix order: every entry of `self` is >= the matching entry of
    /// `other`. Both operands must be square and equally shaped.
    pub fn geq(&self, other: &Self) -> Result<bool, MatrixError> {
        self.require_square()?;
        self.require_same_shape(other, "geq")?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b))
    }

    /// Strict matrix order: strictly greater at `(0, 0)`, weakly greater
    /// everywhere else.
    pub fn gt(&self, other: &Self) -> Result<bool, MatrixError> {
        self.require_square()?;
        self.require_same_shape(other, "gt")?;
        if self.rows == 0 {
            return Ok(false);
        }
        Ok(self.entries[0] > other.entries[0]
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .skip(1)
                .all(|(a, b)| a >= b))
    }

    /// Sum of all entries. Sub-multiplicative over nonnegative matrices;
    /// rejects matrices with a negative entry.
    pub fn linear_norm(&self) -> Result<Scalar, MatrixError> {
        if let Some((row, col)) = self.first_negative() {
            return Err(MatrixError::NegativeEntry { row, col });
        }
        Ok(self.entries.iter().sum())
    }

    /// Largest entry, by value. Zero for an empty matrix.
    pub fn max_entry(&self) -> Scalar {
        self.entries.iter().max().cloned().unwrap_or_else(Scalar::zero)
    }
}

impl Index<(usize, usize)> for GuardedMatrix {
    type Output = Scalar;

    fn index(&self, (row, col): (usize, usize)) -> &Scalar {
        assert!(
            row < self.rows && col < self.cols,
            "entry ({row}, {col}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[row * self.cols + col]
    }
}

impl fmt::Display for GuardedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
