//! Explicit N x N matrices for the operators used by the search loop, built
//! straight from their entry formulas. Small-n only: this is the reference
//! path the fast in-place transforms are checked against, so it stays
//! deliberately naive (O(N^2) apply, O(N^3) products).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::QubitCount;

/// Dense matrices are capped at 10 qubits: a 1024 x 1024 complex product
/// still runs in well under a second.
pub const MAX_DENSE_QUBITS: u32 = 10;

/// Square complex matrix of dimension 2^n, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n: QubitCount,
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseOperator {
    fn check_size(n: QubitCount) -> Result<()> {
        if n.get() > MAX_DENSE_QUBITS {
            return Err(Error::DenseTooLarge(n.get()));
        }
        Ok(())
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(n: QubitCount, f: impl Fn(usize, usize) -> Complex64) -> Result<Self> {
        Self::check_size(n)?;
        let dim = n.state_count();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            for col in 0..dim {
                entries.push(f(row, col));
            }
        }
        Ok(DenseOperator { n, dim, entries })
    }

    pub fn identity(n: QubitCount) -> Result<Self> {
        Self::from_fn(n, |i, j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    /// Walsh-Hadamard matrix: entry (i, j) = 2^{-n/2} * (-1)^{i.j} with i.j
    /// the bitwise dot product (parity of popcount(i AND j)).
    pub fn walsh(n: QubitCount) -> Result<Self> {
        let scale = 1.0 / (n.state_count() as f64).sqrt();
        Self::from_fn(n, |i, j| {
            let sign = if (i & j).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            Complex64::new(scale * sign, 0.0)
        })
    }

    /// Phase rotation matrix with diagonal (1, -1, -1, ..., -1): it flips
    /// the sign of every amplitude except that of state 0.
    pub fn phase_rotation(n: QubitCount) -> Result<Self> {
        Self::from_fn(n, |i, j| {
            let v = if i != j {
                0.0
            } else if i == 0 {
                1.0
            } else {
                -1.0
            };
            Complex64::new(v, 0.0)
        })
    }

    /// Projection onto the uniform vector: every entry is 1/N. Applying it
    /// replaces each component with the average of all components.
    pub fn average_projection(n: QubitCount) -> Result<Self> {
        let value = 1.0 / n.state_count() as f64;
        Self::from_fn(n, |_, _| Complex64::new(value, 0.0))
    }

    /// Diffusion matrix: diagonal -1 + 2/N, off-diagonal 2/N. Equal to
    /// -I + 2P and to W.R.W.
    pub fn diffusion(n: QubitCount) -> Result<Self> {
        let off = 2.0 / n.state_count() as f64;
        Self::from_fn(n, |i, j| {
            Complex64::new(if i == j { -1.0 + off } else { off }, 0.0)
        })
    }

    pub fn qubit_count(&self) -> QubitCount {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    fn check_same_dim(&self, other: &DenseOperator) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n.get(),
                right: other.n.get(),
            });
        }
        Ok(())
    }

    /// Standard matrix product.
    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same_dim(other)?;
        let dim = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for row in 0..dim {
            for k in 0..dim {
                let a = self.entries[row * dim + k];
                let lhs = &other.entries[k * dim..(k + 1) * dim];
                let out = &mut entries[row * dim..(row + 1) * dim];
                for (o, &b) in out.iter_mut().zip(lhs) {
                    *o += a * b;
                }
            }
        }
        Ok(DenseOperator {
            n: self.n,
            dim,
            entries,
        })
    }

    /// Entrywise sum; used to recompose operators from their split parts.
    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DenseOperator {
            n: self.n,
            dim: self.dim,
            entries,
        })
    }

    /// Applies the matrix to a raw amplitude slice. This is the oracle path
    /// the fast transforms are tested against; the result is whatever the
    /// linear map produces, normalized or not.
    pub fn apply(&self, amps: &[Complex64]) -> Result<Vec<Complex64>> {
        if amps.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.n.get(),
                right: amps.len().trailing_zeros(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (row, o) in out.iter_mut().enumerate() {
            let row_entries = &self.entries[row * self.dim..(row + 1) * self.dim];
            *o = row_entries
                .iter()
                .zip(amps)
                .map(|(m, v)| m * v)
                .sum();
        }
        Ok(out)
    }

    pub fn conjugate_transpose(&self) -> DenseOperator {
        let dim = self.dim;
        let mut entries = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            for col in 0..dim {
                entries.push(self.entries[col * dim + row].conj());
            }
        }
        DenseOperator {
            n: self.n,
            dim,
            entries,
        }
    }

    /// Largest absolute entry difference against another matrix.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max |A.A^dagger - I|, the distance from being norm-preserving.
    pub fn unitarity_deviation(&self) -> f64 {
        let product = self
            .matmul(&self.conjugate_transpose())
            .expect("same dimensions");
        let identity = DenseOperator::identity(self.n).expect("size already checked");
        product.max_abs_diff(&identity)
    }

    /// True when max |A.A^dagger - I| stays within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }
}
