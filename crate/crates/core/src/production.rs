//! Production (Stieltjes) matrices of exponential Riordan arrays.
//!
//! Two independent routes are provided. The definitional route solves
//! `M P = U M` with exact triangular algebra; the analytic route expands the
//! bivariate generating function `e^{xy}(Z(x) + y A(x))` with
//! `A = f'(fbar)` and `Z = g'(fbar) / g(fbar)`. They must agree exactly.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::orthopoly::Recurrence;
use crate::rational::{factorial_q, int, Rational};
use crate::riordan::ExpRiordan;
use crate::series::Series;

/// The `Z` and `A` series of a production matrix, as ordinary coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZAPair {
    pub z: Series,
    pub a: Series,
}

impl ZAPair {
    pub fn new(z: Series, a: Series) -> Result<Self> {
        if z.order() != a.order() {
            return Err(Error::OrderMismatch {
                left: z.order(),
                right: a.order(),
            });
        }
        if !a.coeff(0).is_one() {
            return Err(Error::Normalization("A(0) must be 1".into()));
        }
        Ok(ZAPair { z, a })
    }

    pub fn order(&self) -> usize {
        self.z.order()
    }
}

/// Parameters of the tridiagonal production form
/// `e^{xy}(alpha + beta x + y(1 + gamma x + delta x^2))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JacobiParams {
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub beta: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub gamma: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub delta: Rational,
}

impl JacobiParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        JacobiParams {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        Self::new(int(alpha), int(beta), int(gamma), int(delta))
    }

    /// Diagonal entry `b_k = alpha + k gamma`.
    pub fn b(&self, k: usize) -> Rational {
        &self.alpha + int(k as i64) * &self.gamma
    }

    /// Subdiagonal entry `lambda_k = k beta + k(k-1) delta`.
    pub fn lambda(&self, k: usize) -> Rational {
        let k = k as i64;
        int(k) * &self.beta + int(k * (k - 1)) * &self.delta
    }

    /// `b_0..b_{len-1}` and `lambda_1..lambda_len`.
    pub fn recurrence(&self, len: usize) -> Recurrence {
        Recurrence::new(
            (0..len).map(|k| self.b(k)).collect(),
            (1..=len).map(|k| self.lambda(k)).collect(),
        )
        .expect("lambda list is as long as b")
    }

    /// The Jacobi matrix with unit superdiagonal.
    pub fn tridiagonal_matrix(&self, dim: usize) -> TriMatrix {
        TriMatrix::hessenberg_from_fn(dim, |n, k| {
            if k == n + 1 {
                Rational::one()
            } else if k == n {
                self.b(n)
            } else if k + 1 == n {
                self.lambda(n)
            } else {
                Rational::zero()
            }
        })
    }
}

/// `P = M^{-1} (U M)` on the leading `N x N` block, where `M` has order `N`.
pub fn production_definitional(array: &ExpRiordan) -> Result<TriMatrix> {
    let m = array.matrix();
    let dim = m.dim() - 1;
    if dim == 0 {
        return Err(Error::InsufficientData {
            needed: 1,
            available: 0,
        });
    }
    let inv = m.mat_inverse()?.leading(dim)?;
    inv.mat_mul(&m.shift_apply()?)
}

/// `A = f'(fbar)` and `Z = g'(fbar) / g(fbar)`; both have order `N - 1`.
pub fn za_sequences(g: &Series, f: &Series) -> Result<ZAPair> {
    let n = g.order();
    if f.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: f.order(),
        });
    }
    if n == 0 {
        return Err(Error::InsufficientData {
            needed: 1,
            available: 0,
        });
    }
    let fbar = f.revert()?.truncate(n - 1)?;
    let g_at = g.truncate(n - 1)?.compose(&fbar)?;
    let z = g.derive().compose(&fbar)?.div(&g_at)?;
    let a = f.derive().compose(&fbar)?;
    ZAPair::new(z, a)
}

/// Expands `e^{xy}(Z + yA)`:
/// `P_{n,k} = n!/k! z_{n-k} + n!/(k-1)! a_{n-k+1}`.
pub fn production_analytic(za: &ZAPair, dim: usize) -> Result<TriMatrix> {
    if dim == 0 || za.order() + 1 < dim {
        return Err(Error::InsufficientData {
            needed: dim,
            available: za.order() + 1,
        });
    }
    Ok(TriMatrix::hessenberg_from_fn(dim, |n, k| {
        let fact_n = factorial_q(n);
        let mut v = Rational::zero();
        if k <= n {
            v += &fact_n / factorial_q(k) * za.z.coeff(n - k);
        }
        if k >= 1 {
            v += &fact_n / factorial_q(k - 1) * za.a.coeff(n + 1 - k);
        }
        v
    }))
}

/// Reads `(alpha, beta, gamma, delta)` from the corner entries and accepts
/// them only if they reproduce every entry of `P` exactly.
pub fn tridiagonal_params(p: &TriMatrix) -> Option<JacobiParams> {
    if p.dim() < 3 {
        return None;
    }
    let alpha = p.get(0, 0).clone();
    let beta = p.get(1, 0).clone();
    let gamma = p.get(1, 1) - &alpha;
    let delta = p.get(2, 1) / int(2) - &beta;
    let params = JacobiParams::new(alpha, beta, gamma, delta);
    (params.tridiagonal_matrix(p.dim()) == *p).then_some(params)
}

/// `U [1 / fbar', x]`, which equals the production matrix of `[f', f]`.
/// The result has dimension `N - 1` for `f` of order `N`.
pub fn derivative_production_check(f: &Series) -> Result<TriMatrix> {
    let n = f.order();
    if n < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            available: n,
        });
    }
    let fbar_prime = f.revert()?.derive();
    let h = fbar_prime.reciprocal()?;
    let order = h.order();
    let base = ExpRiordan::build(h, Series::x(order))?;
    base.matrix().shift_apply()
}

/// Rebuilds an array from its production matrix: row 0 is `e_0` and row
/// `n + 1` is row `n` times `P`.
pub fn generate_rows(p: &TriMatrix) -> TriMatrix {
    let dim = p.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    let mut v = vec![Rational::zero(); dim];
    v[0] = Rational::one();
    rows.push(v);
    for n in 1..dim {
        let prev = &rows[n - 1];
        let next: Vec<Rational> = (0..dim)
            .map(|j| {
                prev.iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (i, a)| acc + a * p.get(i, j))
            })
            .collect();
        rows.push(next);
    }
    TriMatrix::from_rows(rows).expect("rows generated by a Hessenberg matrix are lower-triangular")
}
