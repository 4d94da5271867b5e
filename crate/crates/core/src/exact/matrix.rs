use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::upoly::UniPoly;
use crate::error::{precondition, Error, Result};

/// Symmetric `d x d` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl SymMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = entries.len();
        for row in &entries {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return precondition(format!("matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        SymMatrix { dim, entries: vec![vec![Rational::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i][i] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Sets entries `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i][j] = v.clone();
        self.entries[j][i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// `self + c * other`
    pub fn add_scaled(&self, other: &SymMatrix, c: &Rational) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y * c).collect())
            .collect();
        SymMatrix { dim: self.dim, entries }
    }

    fn mul(&self, other: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| &self.entries[i][k] * &other[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// `det(lambda I - A)` via the Faddeev-LeVerrier recurrence.
    pub fn characteristic_polynomial(&self) -> UniPoly {
        let d = self.dim;
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for k in 1..=d {
            // M_k = A M_{k-1} + c_{d-k+1} I
            let mut next = self.mul(&m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[d - k + 1];
            }
            let am = self.mul(&next);
            let trace: Rational = (0..d).map(|i| am[i][i].clone()).sum();
            coeffs[d - k] = -trace / Rational::from_integer((k as i64).into());
            m = next;
        }
        UniPoly::new(coeffs)
    }

    /// Exact PSD test from the signs of the characteristic polynomial:
    /// a real-rooted `lambda^d + c_{d-1} lambda^{d-1} + ... + c_0` has only
    /// nonnegative roots iff `(-1)^(d-k) c_k >= 0` for every `k`.
    pub fn is_psd(&self) -> bool {
        let chi = self.characteristic_polynomial();
        let d = self.dim;
        (0..=d).all(|k| {
            let c = chi.coeff(k);
            if (d - k) % 2 == 0 {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }
}

/// Free-function form of [`SymMatrix::is_psd`].
pub fn psd_check_exact(a: &SymMatrix) -> bool {
    a.is_psd()
}
