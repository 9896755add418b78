//! Dense lower-triangular and lower-Hessenberg matrices over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{render, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    /// Zero strictly above the diagonal.
    Lower,
    /// Zero above the first superdiagonal.
    Hessenberg,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriMatrix {
    rows: Vec<Vec<Rational>>,
    band: Band,
}

impl TriMatrix {
    /// Builds a square matrix from rows, inferring the narrowest band that fits.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "matrix must have at least one row".into(),
            ));
        }
        for r in &rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(dim, r.len()));
            }
        }
        let mut band = Band::Lower;
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate().skip(i + 1) {
                if v.is_zero() {
                    continue;
                }
                if j == i + 1 {
                    band = Band::Hessenberg;
                } else {
                    return Err(Error::BandViolation(i, j));
                }
            }
        }
        Ok(TriMatrix { rows, band })
    }

    /// Lower-triangular matrix with entry `(n, k)` given by `f` for `k <= n`.
    pub fn lower_from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..dim)
            .map(|n| {
                (0..dim)
                    .map(|k| if k <= n { f(n, k) } else { Rational::zero() })
                    .collect()
            })
            .collect();
        TriMatrix {
            rows,
            band: Band::Lower,
        }
    }

    /// Hessenberg matrix with entry `(n, k)` given by `f` for `k <= n + 1`.
    pub fn hessenberg_from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..dim)
            .map(|n| {
                (0..dim)
                    .map(|k| {
                        if k <= n + 1 {
                            f(n, k)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("entries stay inside the band")
    }

    pub fn identity(dim: usize) -> Self {
        Self::lower_from_fn(dim, |n, k| {
            if n == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Parses rows of integers; convenient for fixed tables.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.len();
        let full = rows
            .iter()
            .map(|r| {
                let mut v: Vec<Rational> = r.iter().map(|&x| crate::rational::int(x)).collect();
                v.resize(dim, Rational::zero());
                v
            })
            .collect();
        Self::from_rows(full)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn is_lower(&self) -> bool {
        self.band == Band::Lower
    }

    pub fn get(&self, n: usize, k: usize) -> &Rational {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// Row `n` up to and including the diagonal (plus the superdiagonal entry
    /// for a Hessenberg matrix when present).
    pub fn row_prefix(&self, n: usize) -> &[Rational] {
        let end = match self.band {
            Band::Lower => n + 1,
            Band::Hessenberg => (n + 2).min(self.dim()),
        };
        &self.rows[n][..end]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[k].clone()).collect()
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r[i].is_one())
    }

    /// Leading `dim x dim` block.
    pub fn leading(&self, dim: usize) -> Result<Self> {
        if dim == 0 || dim > self.dim() {
            return Err(Error::DimensionMismatch(dim, self.dim()));
        }
        let rows = self.rows[..dim].iter().map(|r| r[..dim].to_vec()).collect();
        Self::from_rows(rows)
    }

    /// Nonzero only on the diagonal and first sub/superdiagonals.
    pub fn is_tridiagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, v)| v.is_zero() || j + 1 >= i && j <= i + 1)
        })
    }

    /// Exact product; the result must still fit a lower-Hessenberg band.
    pub fn mat_mul(&self, other: &TriMatrix) -> Result<TriMatrix> {
        let dim = self.dim();
        if other.dim() != dim {
            return Err(Error::DimensionMismatch(dim, other.dim()));
        }
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for (k, a) in self.rows[i].iter().enumerate() {
                            if !a.is_zero() && !other.rows[k][j].is_zero() {
                                acc += a * &other.rows[k][j];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Inverse of a lower-triangular matrix with nonzero diagonal, by forward
    /// substitution.
    pub fn mat_inverse(&self) -> Result<TriMatrix> {
        if !self.is_lower() {
            let (i, j) = self.first_superdiagonal().expect("band is Hessenberg");
            return Err(Error::BandViolation(i, j));
        }
        let dim = self.dim();
        for i in 0..dim {
            if self.rows[i][i].is_zero() {
                return Err(Error::Singular(i));
            }
        }
        let mut inv = vec![vec![Rational::zero(); dim]; dim];
        for n in 0..dim {
            let d = self.rows[n][n].recip();
            inv[n][n] = d.clone();
            for k in (0..n).rev() {
                let mut acc = Rational::zero();
                for j in k..n {
                    if !self.rows[n][j].is_zero() && !inv[j][k].is_zero() {
                        acc += &self.rows[n][j] * &inv[j][k];
                    }
                }
                inv[n][k] = -acc * &d;
            }
        }
        Ok(TriMatrix {
            rows: inv,
            band: Band::Lower,
        })
    }

    fn first_superdiagonal(&self) -> Option<(usize, usize)> {
        (0..self.dim().saturating_sub(1))
            .find(|&i| !self.rows[i][i + 1].is_zero())
            .map(|i| (i, i + 1))
    }

    /// `U * A`: drops row 0 and moves every row up by one. The result is one
    /// smaller than the input and lower-Hessenberg.
    pub fn shift_apply(&self) -> Result<TriMatrix> {
        let dim = self.dim();
        if dim < 2 {
            return Err(Error::InvalidArgument(
                "shift_apply needs dimension >= 2".into(),
            ));
        }
        let rows = self.rows[1..]
            .iter()
            .map(|r| r[..dim - 1].to_vec())
            .collect();
        Self::from_rows(rows)
    }

    /// Right-aligned table, one row per line.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(render).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for r in &cells {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
