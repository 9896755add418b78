//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores the ordinary coefficients `c_0..=c_N` of
//! `sum c_n x^n`. The exponential view multiplies coefficient `n` by `n!`.
//! Binary operations require both operands to share the same order; mixing
//! orders is an error rather than a silent truncation.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial_q, int, render, Rational};

pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]", self.ogf_strings().join(", "))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", render(c))?,
                1 => write!(f, "({})x", render(c))?,
                _ => write!(f, "({})x^{}", render(c), n)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Series {
    /// Builds a series from its ordinary coefficients; the order is `len - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn from_ogf(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs }
    }

    /// Builds a series from exponential coefficients `a_n`, storing `a_n / n!`.
    pub fn from_egf(egf: Vec<Rational>) -> Self {
        let coeffs = egf
            .into_iter()
            .enumerate()
            .map(|(n, a)| a / factorial_q(n))
            .collect();
        Self::from_ogf(coeffs)
    }

    /// A polynomial padded with zeros (or truncated) to the given order.
    pub fn from_poly(poly: &[Rational], order: usize) -> Self {
        let mut coeffs: Vec<Rational> = poly.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_poly(&[c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// `c x^k`, or zero when `k > order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ordinary coefficient of `x^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Exponential coefficients `n! c_n`.
    pub fn egf(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * factorial_q(n))
            .collect()
    }

    pub fn egf_coeff(&self, n: usize) -> Rational {
        self.coeff(n) * factorial_q(n)
    }

    pub fn ogf_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(render).collect()
    }

    pub fn egf_strings(&self) -> Vec<String> {
        self.egf().iter().map(render).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// True when every even coefficient vanishes.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    /// Keeps coefficients up to `order`. Raising the order is rejected, since
    /// the missing coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: order,
                right: self.order(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplies by `x^k`, dropping what falls past the order.
    pub fn shift_up(&self, k: usize) -> Series {
        Series::from_fn(self.order(), |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Multiplicative inverse, by the recursive coefficient solve.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(&other.reciprocal()?))
    }

    /// `outer(inner(x))` truncated at the common order, by Horner's rule.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                op: "compose",
                expected: "0 for the inner series",
                actual: render(&inner.coeffs[0]),
            });
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse by Newton iteration `g <- g - (f(g) - x) / f'(g)`.
    ///
    /// Requires `f(0) = 0` and a nonzero linear coefficient.
    pub fn revert(&self) -> Result<Series> {
        let n = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                op: "revert",
                expected: "0",
                actual: render(&self.coeffs[0]),
            });
        }
        let slope = self.coeff(1);
        if slope.is_zero() {
            return Err(Error::ZeroSlope);
        }
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let x = Series::x(n);
        let df = self.derive_padded();
        let mut g = Series::monomial(slope.recip(), 1, n);
        // Each step doubles the number of correct coefficients.
        let mut correct = 1;
        while correct < n {
            let residual = self.compose(&g)?.sub(&x)?;
            let slope_at = df.compose(&g)?;
            g = g.sub(&residual.div(&slope_at)?)?;
            correct *= 2;
        }
        Ok(g)
    }

    /// Formal derivative; the order drops by one.
    pub fn derive(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        }
    }

    /// Derivative padded back to the original order with a trailing zero.
    /// Exact when the series is a polynomial of degree at most the order.
    pub fn derive_padded(&self) -> Series {
        let mut d = self.derive().coeffs;
        d.push(Rational::zero());
        d.truncate(self.order() + 1);
        Series { coeffs: d }
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn integrate(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / int(k as i64 + 1)),
        );
        Series { coeffs }
    }

    /// `exp(s)` for `s(0) = 0`, from `n e_n = sum_k k s_k e_{n-k}`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                op: "exp",
                expected: "0",
                actual: render(&self.coeffs[0]),
            });
        }
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::one());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &e[m - k] * int(k as i64);
                }
            }
            e.push(acc / int(m as i64));
        }
        Ok(Series { coeffs: e })
    }

    /// `log(s)` for `s(0) = 1`, as the integral of `s' / s`.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                op: "log",
                expected: "1",
                actual: render(&self.coeffs[0]),
            });
        }
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let q = self.derive().div(&self.truncate(n - 1)?)?;
        Ok(q.integrate())
    }

    /// `s^r` for `s(0) = 1`, as `exp(r log s)`.
    pub fn pow_rational(&self, r: &Rational) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                op: "pow_rational",
                expected: "1",
                actual: render(&self.coeffs[0]),
            });
        }
        self.log()?.scale(r).exp()
    }

    /// Substitutes `x -> c x`.
    pub fn dilate(&self, c: &Rational) -> Series {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &p);
            p *= c;
        }
        Series { coeffs }
    }
}

/// Closed-form expansions of the elementary functions the catalog is built from.
pub mod elementary {
    use super::*;
    use crate::rational::{binomial, ratio, sign_pow};
    use num_bigint::BigInt;

    /// `e^{c x}`.
    pub fn exp_scaled(c: &Rational, order: usize) -> Series {
        Series::from_fn(order, |n| {
            let mut p = Rational::one();
            for _ in 0..n {
                p *= c;
            }
            p / factorial_q(n)
        })
    }

    pub fn exp(order: usize) -> Series {
        exp_scaled(&Rational::one(), order)
    }

    pub fn sin(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 1 {
                sign_pow(n / 2) / factorial_q(n)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn cos(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 0 {
                sign_pow(n / 2) / factorial_q(n)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn sinh(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 1 {
                factorial_q(n).recip()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn cosh(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 0 {
                factorial_q(n).recip()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn tan(order: usize) -> Series {
        sin(order).div(&cos(order)).expect("cos(0) = 1")
    }

    pub fn tanh(order: usize) -> Series {
        sinh(order).div(&cosh(order)).expect("cosh(0) = 1")
    }

    pub fn sec(order: usize) -> Series {
        cos(order).reciprocal().expect("cos(0) = 1")
    }

    pub fn sech(order: usize) -> Series {
        cosh(order).reciprocal().expect("cosh(0) = 1")
    }

    /// `sum (-1)^k x^{2k+1} / (2k+1)`.
    pub fn atan(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 1 {
                sign_pow(n / 2) / int(n as i64)
            } else {
                Rational::zero()
            }
        })
    }

    /// `sum x^{2k+1} / (2k+1)`.
    pub fn atanh(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 1 {
                ratio(1, n as i64)
            } else {
                Rational::zero()
            }
        })
    }

    /// `sum binom(2k, k) x^{2k+1} / (4^k (2k+1))`.
    pub fn asin(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n % 2 == 1 {
                let k = n / 2;
                let num = Rational::from_integer(binomial(2 * k, k));
                let den = Rational::from_integer(BigInt::from(4).pow(k as u32) * BigInt::from(n));
                num / den
            } else {
                Rational::zero()
            }
        })
    }

    /// `log(1 + x)`.
    pub fn log1p(order: usize) -> Series {
        Series::from_fn(order, |n| {
            if n == 0 {
                Rational::zero()
            } else {
                sign_pow(n + 1) / int(n as i64)
            }
        })
    }

    /// `(1 + c x^k)^r`.
    pub fn binomial_power(c: &Rational, k: usize, r: &Rational, order: usize) -> Series {
        let mut base = Series::monomial(c.clone(), k, order);
        base.coeffs[0] += Rational::one();
        base.pow_rational(r).expect("constant term is 1")
    }
}

#[cfg(test)]
mod tests {
    use super::elementary as el;
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_poly(&q(&[1, 1]), 4);
        let b = Series::from_poly(&q(&[1, -1]), 4);
        assert_eq!(a.mul(&b).unwrap(), Series::from_poly(&q(&[1, 0, -1]), 4));
    }

    #[test]
    fn geometric_series() {
        let one = Series::one(6);
        let d = Series::from_poly(&q(&[1, -1]), 6);
        assert_eq!(one.div(&d).unwrap(), Series::from_poly(&q(&[1; 7]), 6));
    }

    #[test]
    fn sech_squared_by_egf_convolution() {
        // Euler numbers as EGF: sech = 1, 0, -1, 0, 5, 0, -61.
        let euler = q(&[1, 0, -1, 0, 5, 0, -61]);
        let brute: Vec<Rational> = (0..=6)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        Rational::from_integer(crate::rational::binomial(n, k))
                            * &euler[k]
                            * &euler[n - k]
                    })
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect();
        assert_eq!(brute, q(&[1, 0, -2, 0, 16, 0, -272]));
        let s = el::sech(6);
        assert_eq!(s.mul(&s).unwrap().egf(), brute);
    }

    #[test]
    fn order_mismatch_and_zero_division() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert!(matches!(a.add(&b), Err(Error::OrderMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch { .. })));
        assert_eq!(a.div(&Series::x(3)), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn compose_identity_and_constant_term_error() {
        let s = el::exp(8);
        assert_eq!(s.compose(&Series::x(8)).unwrap(), s);
        assert!(matches!(
            s.compose(&Series::one(8)),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn tanh_after_atanh_is_identity() {
        let n = 15;
        assert_eq!(el::tanh(n).compose(&el::atanh(n)).unwrap(), Series::x(n));
        assert_eq!(el::atanh(n).compose(&el::tanh(n)).unwrap(), Series::x(n));
    }

    #[test]
    fn exp_of_one_minus_exp_neg_by_multinomial_expansion() {
        // u = 1 - e^{-x} = x - x^2/2 + x^3/6 - x^4/24; e^u = sum u^j / j!
        // expanded by hand to x^4:
        //   x^2: 1/2 - 1/2 = 0
        //   x^3: 1/6 - 1/2 + 1/6 = -1/6
        //   x^4: -1/24 + (1/4 + 1/3)/2 - 1/4 + 1/24 = 1/24
        let n = 4;
        let u = Series::one(n).sub(&el::exp_scaled(&int(-1), n)).unwrap();
        let e = el::exp(n).compose(&u).unwrap();
        assert_eq!(
            e.coeffs(),
            &[int(1), int(1), int(0), ratio(-1, 6), ratio(1, 24)]
        );
        assert_eq!(u.exp().unwrap(), e);
    }

    #[test]
    fn revert_examples() {
        let n = 7;
        assert_eq!(Series::x(n).revert().unwrap(), Series::x(n));
        // Lagrange inversion: [x^m] g = (1/m) [x^{m-1}] (x / sin x)^m.
        let sin = el::sin(n + 1);
        let x_over_sin = Series::from_fn(n, |k| sin.coeff(k + 1))
            .reciprocal()
            .unwrap();
        let lagrange = Series::from_fn(n, |m| {
            if m == 0 {
                return Rational::zero();
            }
            let mut p = Series::one(n);
            for _ in 0..m {
                p = p.mul(&x_over_sin).unwrap();
            }
            p.coeff(m - 1) / int(m as i64)
        });
        assert_eq!(
            lagrange.coeffs()[..6],
            [int(0), int(1), int(0), ratio(1, 6), int(0), ratio(3, 40)]
        );
        assert_eq!(el::sin(n).revert().unwrap(), lagrange);
        assert_eq!(el::asin(n), lagrange);
        assert_eq!(
            el::tanh(6).revert().unwrap().coeffs(),
            &[
                int(0),
                int(1),
                int(0),
                ratio(1, 3),
                int(0),
                ratio(1, 5),
                int(0)
            ]
        );
    }

    #[test]
    fn revert_errors() {
        assert_eq!(
            Series::from_poly(&q(&[0, 0, 1]), 4).revert(),
            Err(Error::ZeroSlope)
        );
        assert!(matches!(
            Series::one(4).revert(),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn derivatives_of_catalog_functions() {
        let n = 12;
        let sech = el::sech(n - 1);
        assert_eq!(el::tanh(n).derive(), sech.mul(&sech).unwrap());
        let gd = el::atan(n).compose(&el::sinh(n)).unwrap();
        assert_eq!(gd.derive(), sech);
    }

    #[test]
    fn exp_log_basics() {
        assert_eq!(Series::zero(5).exp().unwrap(), Series::one(5));
        assert_eq!(Series::x(5).exp().unwrap(), el::exp(5));
        assert!(Series::one(5).exp().is_err());
        assert!(Series::x(5).log().is_err());
        assert_eq!(
            el::exp(6)
                .sub(&Series::one(6))
                .unwrap()
                .compose(&el::log1p(6))
                .unwrap(),
            Series::x(6)
        );
    }

    #[test]
    fn gompertz_first_column_from_exp() {
        let n = 6;
        let u = Series::one(n).sub(&el::exp_scaled(&int(-1), n)).unwrap();
        let g = u.exp().unwrap().mul(&el::exp_scaled(&int(-1), n)).unwrap();
        assert_eq!(g.egf(), q(&[1, 0, -1, 1, 2, -9, 9]));
    }

    #[test]
    fn pow_rational_examples() {
        let s = Series::from_poly(&q(&[1, 0, 1]), 6);
        assert_eq!(s.pow_rational(&int(0)).unwrap(), Series::one(6));
        let g = s.pow_rational(&ratio(-3, 2)).unwrap();
        assert_eq!(g.egf_coeff(2), int(-3));
        assert!(Series::x(4).pow_rational(&int(2)).is_err());
    }

    #[test]
    fn half_tanh_half_x_egf() {
        // tanh(u) = u - u^3/3 + 2u^5/15 - 17u^7/315 + 62u^9/2835, u = x/2, halved:
        // EGF coefficient n = n! * [x^n].
        let expected = [
            int(0),
            ratio(1, 4),
            int(0),
            ratio(-1, 8),
            int(0),
            ratio(1, 4),
            int(0),
            ratio(-17, 16),
            int(0),
            ratio(31, 4),
        ];
        let s = el::tanh(9).dilate(&ratio(1, 2)).scale(&ratio(1, 2));
        assert_eq!(s.egf(), expected);
        // The logistic route: 1/(1+e^{-x}) - 1/2.
        let denom = el::exp_scaled(&int(-1), 9).add(&Series::one(9)).unwrap();
        let logistic = Series::one(9)
            .div(&denom)
            .unwrap()
            .sub(&Series::constant(ratio(1, 2), 9))
            .unwrap();
        assert_eq!(logistic, s);
    }

    #[test]
    fn tanh_matches_exponential_oracle() {
        let n = 9;
        let e2 = el::exp_scaled(&int(2), n);
        let one = Series::one(n);
        let oracle = e2.sub(&one).unwrap().div(&e2.add(&one).unwrap()).unwrap();
        assert_eq!(el::tanh(n), oracle);
        assert_eq!(
            oracle.coeffs()[..6],
            [int(0), int(1), int(0), ratio(-1, 3), int(0), ratio(2, 15)]
        );
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec(-5i64..=5, order + 1)
            .prop_map(move |v| Series::from_ogf(v.into_iter().map(int).collect()))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = Series> {
        small_series(order).prop_map(|s| {
            let mut c = s.into_coeffs();
            c[0] = Rational::one();
            Series::from_ogf(c)
        })
    }

    fn invertible_map(order: usize) -> impl Strategy<Value = Series> {
        small_series(order).prop_map(|s| {
            let mut c = s.into_coeffs();
            c[0] = Rational::zero();
            c[1] = Rational::one();
            Series::from_ogf(c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(a in small_series(6), b in small_series(6), c in small_series(6)) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn leibniz(a in small_series(7), b in small_series(7)) {
            let lhs = a.mul(&b).unwrap().derive();
            let rhs = a.derive().mul(&b.truncate(6).unwrap()).unwrap()
                .add(&a.truncate(6).unwrap().mul(&b.derive()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integrate_undoes_derive(a in small_series(7)) {
            let mut expected = a.clone().into_coeffs();
            expected[0] = Rational::zero();
            prop_assert_eq!(a.derive().integrate(), Series::from_ogf(expected));
        }

        #[test]
        fn egf_round_trip(a in small_series(8)) {
            prop_assert_eq!(Series::from_egf(a.egf()), a);
        }

        #[test]
        fn revert_is_two_sided(f in invertible_map(7)) {
            let g = f.revert().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), Series::x(7));
            prop_assert_eq!(g.compose(&f).unwrap(), Series::x(7));
        }

        #[test]
        fn compose_is_associative(a in small_series(5), f in invertible_map(5), g in invertible_map(5)) {
            let lhs = a.compose(&f).unwrap().compose(&g).unwrap();
            let rhs = a.compose(&f.compose(&g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exp_log_inverse(s in unit_series(6), t in invertible_map(6)) {
            prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
            prop_assert_eq!(t.exp().unwrap().log().unwrap(), t);
        }

        #[test]
        fn rational_powers(s in unit_series(5), p in -4i64..4, q in -4i64..4) {
            let (p, q) = (ratio(p, 3), ratio(q, 2));
            let lhs = s.pow_rational(&p).unwrap().mul(&s.pow_rational(&q).unwrap()).unwrap();
            prop_assert_eq!(lhs, s.pow_rational(&(p + q)).unwrap());
            let rt = s.pow_rational(&ratio(2, 3)).unwrap().pow_rational(&ratio(3, 2)).unwrap();
            prop_assert_eq!(rt, s);
        }
    }
}
