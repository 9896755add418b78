//! Formally orthogonal polynomials: three-term recurrences, coefficient and
//! moment arrays, Hankel transforms and Jacobi continued fractions.
//!
//! Families are monic and follow the Jacobi-matrix indexing
//! `P_n = (x - b_{n-1}) P_{n-1} - lambda_{n-1} P_{n-2}`. Nothing requires
//! `lambda_k > 0`.

use std::ops::Deref;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::rational::{factorial_q, int, sign_pow, Rational};
use crate::series::{elementary as el, Series};

/// Recurrence data: `b` holds `b_0, b_1, ...` and `lambda` holds
/// `lambda_1, lambda_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Recurrence {
    #[serde(with = "crate::rational::serde_str::vec")]
    b: Vec<Rational>,
    #[serde(rename = "lambda", with = "crate::rational::serde_str::vec")]
    lam: Vec<Rational>,
}

impl Recurrence {
    pub fn new(b: Vec<Rational>, lam: Vec<Rational>) -> Result<Self> {
        if lam.len() + 1 < b.len() {
            return Err(Error::InvalidArgument(format!(
                "{} diagonal terms need at least {} lambda terms, got {}",
                b.len(),
                b.len() - 1,
                lam.len()
            )));
        }
        Ok(Recurrence { b, lam })
    }

    pub fn from_fn(
        len: usize,
        b: impl Fn(usize) -> Rational,
        lam: impl Fn(usize) -> Rational,
    ) -> Self {
        Recurrence {
            b: (0..len).map(b).collect(),
            lam: (1..=len).map(lam).collect(),
        }
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// `lambda_1, lambda_2, ...`
    pub fn lambda(&self) -> &[Rational] {
        &self.lam
    }

    /// `lambda_k` for `k >= 1`.
    pub fn lambda_at(&self, k: usize) -> &Rational {
        &self.lam[k - 1]
    }

    /// Number of polynomials `P_0..P_{n}` this data determines, minus one.
    pub fn max_degree(&self) -> usize {
        self.b.len().min(self.lam.len() + 1)
    }

    fn require(&self, n: usize) -> Result<()> {
        if n > self.max_degree() {
            return Err(Error::InsufficientData {
                needed: n,
                available: self.max_degree(),
            });
        }
        Ok(())
    }
}

/// Moment sequence `m_0, m_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MomentSequence {
    #[serde(with = "crate::rational::serde_str::vec")]
    m: Vec<Rational>,
}

impl MomentSequence {
    pub fn new(m: Vec<Rational>) -> Self {
        MomentSequence { m }
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.m
    }

    /// The sequence read as an ordinary generating function.
    pub fn ogf(&self) -> Series {
        Series::from_ogf(self.m.clone())
    }
}

impl Deref for MomentSequence {
    type Target = [Rational];

    fn deref(&self) -> &[Rational] {
        &self.m
    }
}

impl From<Vec<Rational>> for MomentSequence {
    fn from(m: Vec<Rational>) -> Self {
        MomentSequence::new(m)
    }
}

/// Lower-triangular matrix whose row `k` holds the coefficients of `P_k`,
/// for `k = 0..=n`.
pub fn coefficient_array(r: &Recurrence, n: usize) -> Result<TriMatrix> {
    r.require(n)?;
    let mut polys: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    polys.push(vec![Rational::one()]);
    if n >= 1 {
        polys.push(vec![-r.b[0].clone(), Rational::one()]);
    }
    for k in 2..=n {
        let b = &r.b[k - 1];
        let lam = r.lambda_at(k - 1);
        let p1 = &polys[k - 1];
        let p2 = &polys[k - 2];
        let mut next = vec![Rational::zero(); k + 1];
        for (j, c) in p1.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= b * c;
        }
        for (j, c) in p2.iter().enumerate() {
            next[j] -= lam * c;
        }
        polys.push(next);
    }
    Ok(TriMatrix::lower_from_fn(n + 1, |i, j| polys[i][j].clone()))
}

/// `m_0..=m_n`: the first column of the inverse coefficient array.
pub fn moments(r: &Recurrence, n: usize) -> Result<MomentSequence> {
    let inv = coefficient_array(r, n)?.mat_inverse()?;
    Ok(MomentSequence::new(inv.column(0)))
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `h_n = det(m_{i+j})_{0 <= i,j <= n}`.
pub fn hankel(seq: &[Rational], n: usize) -> Result<Rational> {
    if seq.len() < 2 * n + 1 {
        return Err(Error::InsufficientData {
            needed: 2 * n + 1,
            available: seq.len(),
        });
    }
    let a = (0..=n)
        .map(|i| (0..=n).map(|j| seq[i + j].clone()).collect())
        .collect();
    Ok(determinant(a))
}

/// `h_0..=h_n`.
pub fn hankel_transform(seq: &[Rational], n: usize) -> Result<Vec<Rational>> {
    (0..=n).map(|k| hankel(seq, k)).collect()
}

/// Closed-form Hankel product formulas for known expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HankelFormula {
    /// EGF coefficients of `sech^2`: `prod_k ((k+2)(1-(k+2)))^{n-k}`.
    Sech2,
    /// EGF coefficients of `sec^2`: `prod_k ((k+1)(k+2))^{n-k}`.
    Sec2Moments,
    /// EGF coefficients of `tanh`: `(prod_k k!^2) (-1)^{(n+1)/2} (1 - (-1)^n)/2`.
    Tanh,
}

impl HankelFormula {
    pub const ALL: [HankelFormula; 3] = [Self::Sech2, Self::Sec2Moments, Self::Tanh];

    pub fn name(self) -> &'static str {
        match self {
            Self::Sech2 => "sech2",
            Self::Sec2Moments => "sec2",
            Self::Tanh => "tanh",
        }
    }

    /// The formula's value at `n`.
    pub fn value(self, n: usize) -> Rational {
        match self {
            Self::Sech2 => (0..=n).fold(Rational::one(), |acc, k| {
                let base = int(((k + 2) * (k + 1)) as i64) * sign_pow(1);
                acc * pow(&base, n - k)
            }),
            Self::Sec2Moments => (0..=n).fold(Rational::one(), |acc, k| {
                acc * pow(&int(((k + 1) * (k + 2)) as i64), n - k)
            }),
            Self::Tanh => {
                if n.is_multiple_of(2) {
                    // (1 - (-1)^n) / 2 vanishes
                    return Rational::zero();
                }
                let squares = (0..=n).fold(Rational::one(), |acc, k| {
                    let f = factorial_q(k);
                    acc * &f * &f
                });
                squares * sign_pow(n.div_ceil(2))
            }
        }
    }

    /// The sequence the formula describes, `len` terms.
    pub fn sequence(self, len: usize) -> Vec<Rational> {
        let order = len.max(1) - 1;
        let s = match self {
            Self::Sech2 => {
                let s = el::sech(order);
                s.mul(&s).expect("same order")
            }
            Self::Sec2Moments => {
                let s = el::sec(order);
                s.mul(&s).expect("same order")
            }
            Self::Tanh => el::tanh(order),
        };
        s.egf()
    }
}

impl FromStr for HankelFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn pow(base: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * base)
}

/// Compares the closed product formula with the computed transform for
/// `0..=n`.
pub fn hankel_formula_check(kind: HankelFormula, n: usize) -> Result<bool> {
    let seq = kind.sequence(2 * n + 1);
    let computed = hankel_transform(&seq, n)?;
    Ok(computed
        .iter()
        .enumerate()
        .all(|(k, h)| *h == kind.value(k)))
}

/// Jacobi continued fraction of the moment OGF, by repeated
/// reciprocal-and-strip: `1/F = 1 - b x - lambda x^2 G`.
///
/// Returns `b_0..b_{depth-1}` and `lambda_1..lambda_depth`; needs
/// `m_0..=m_{2 depth}` with `m_0 = 1`.
pub fn jfraction(m: &[Rational], depth: usize) -> Result<Recurrence> {
    if m.len() < 2 * depth + 1 {
        return Err(Error::InsufficientData {
            needed: 2 * depth + 1,
            available: m.len(),
        });
    }
    if m[0].is_zero() {
        return Err(Error::VanishingHankel(0));
    }
    if !m[0].is_one() {
        return Err(Error::Normalization("m_0 must be 1".into()));
    }
    let mut f = Series::from_ogf(m[..=2 * depth].to_vec());
    let mut b = Vec::with_capacity(depth);
    let mut lam = Vec::with_capacity(depth);
    for level in 0..depth {
        let r = f.reciprocal()?;
        b.push(-r.coeff(1));
        let tail = Series::from_fn(r.order() - 2, |k| -r.coeff(k + 2));
        let l = tail.coeff(0);
        lam.push(l.clone());
        if level + 1 < depth {
            if l.is_zero() {
                return Err(Error::VanishingHankel(level + 1));
            }
            f = tail.scale(&l.recip());
        }
    }
    Recurrence::new(b, lam)
}

/// Truncated OGF of `1/(1 - b_0 x - lambda_1 x^2/(1 - b_1 x - ...))` using the
/// first `depth` levels.
pub fn cf_to_ogf(r: &Recurrence, depth: usize, order: usize) -> Result<Series> {
    if depth == 0 {
        return Ok(Series::one(order));
    }
    if r.b.len() < depth || r.lam.len() + 1 < depth {
        return Err(Error::InsufficientData {
            needed: depth,
            available: r.b.len().min(r.lam.len() + 1),
        });
    }
    let level = |j: usize, inner: Option<&Series>| -> Result<Series> {
        let mut d = Series::one(order).sub(&Series::monomial(r.b[j].clone(), 1, order))?;
        if let Some(g) = inner {
            d = d.sub(&g.shift_up(2).scale(r.lambda_at(j + 1)))?;
        }
        d.reciprocal()
    };
    let mut f = level(depth - 1, None)?;
    for j in (0..depth - 1).rev() {
        f = level(j, Some(&f))?;
    }
    Ok(f)
}

/// `h_n = prod_{k=1}^{n} lambda_k^{n+1-k}`, the Hankel determinant implied by
/// a recurrence.
pub fn hankel_from_recurrence(r: &Recurrence, n: usize) -> Result<Rational> {
    if r.lam.len() < n {
        return Err(Error::InsufficientData {
            needed: n,
            available: r.lam.len(),
        });
    }
    Ok((1..=n).fold(Rational::one(), |acc, k| {
        acc * pow(r.lambda_at(k), n + 1 - k)
    }))
}
