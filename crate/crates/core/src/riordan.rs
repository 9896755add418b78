//! Exponential Riordan arrays `[g, f]` and their group law.
//!
//! An array keeps its generating pair together with the realized matrix
//! `t_{n,k} = n!/k! [x^n] g f^k`. Group operations are computed on the pair
//! and, in debug builds, cross-checked against the matrix route.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::rational::{factorial_q, render, Rational};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpRiordan {
    g: Series,
    f: Series,
    matrix: TriMatrix,
}

/// The element formula without any normalization requirement beyond
/// `f(0) = 0`.
pub fn element_matrix(g: &Series, f: &Series) -> Result<TriMatrix> {
    if g.order() != f.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: f.order(),
        });
    }
    if !f.coeff(0).is_zero() {
        return Err(Error::Normalization(format!(
            "f(0) must be 0, got {}",
            render(&f.coeff(0))
        )));
    }
    let order = g.order();
    let dim = order + 1;
    // columns[k] holds g f^k
    let mut columns = Vec::with_capacity(dim);
    let mut cur = g.clone();
    for _ in 0..dim {
        let next = cur.mul(f)?;
        columns.push(cur);
        cur = next;
    }
    Ok(TriMatrix::lower_from_fn(dim, |n, k| {
        columns[k].coeff(n) * factorial_q(n) / factorial_q(k)
    }))
}

impl ExpRiordan {
    /// Builds `[g, f]`; requires `g(0) = 1`, `f(0) = 0`, `f'(0) = 1`.
    pub fn build(g: Series, f: Series) -> Result<Self> {
        if g.order() != f.order() {
            return Err(Error::OrderMismatch {
                left: g.order(),
                right: f.order(),
            });
        }
        if !g.coeff(0).is_one() {
            return Err(Error::Normalization(format!(
                "g(0) must be 1, got {}",
                render(&g.coeff(0))
            )));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::Normalization(format!(
                "f(0) must be 0, got {}",
                render(&f.coeff(0))
            )));
        }
        if g.order() > 0 && !f.coeff(1).is_one() {
            return Err(Error::Normalization(format!(
                "f'(0) must be 1, got {}",
                render(&f.coeff(1))
            )));
        }
        let matrix = element_matrix(&g, &f)?;
        Ok(ExpRiordan { g, f, matrix })
    }

    /// The group identity `[1, x]`.
    pub fn identity(order: usize) -> Self {
        Self::build(Series::one(order), Series::x(order)).expect("identity is normalized")
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn matrix(&self) -> &TriMatrix {
        &self.matrix
    }

    pub fn get(&self, n: usize, k: usize) -> &Rational {
        self.matrix.get(n, k)
    }

    /// `[g, f] * [u, v] = [g u(f), v(f)]`.
    pub fn multiply(&self, other: &ExpRiordan) -> Result<ExpRiordan> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let g = self.g.mul(&other.g.compose(&self.f)?)?;
        let f = other.f.compose(&self.f)?;
        let out = Self::build(g, f)?;
        debug_assert_eq!(
            Some(&out.matrix),
            self.matrix.mat_mul(&other.matrix).ok().as_ref(),
            "series and matrix routes disagree on a product"
        );
        Ok(out)
    }

    /// `[g, f]^{-1} = [1 / g(fbar), fbar]`.
    pub fn inverse(&self) -> Result<ExpRiordan> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.reciprocal()?;
        let out = Self::build(g, fbar)?;
        debug_assert_eq!(
            Some(&out.matrix),
            self.matrix.mat_inverse().ok().as_ref(),
            "series and matrix routes disagree on an inverse"
        );
        Ok(out)
    }

    /// `p_n(x) = sum_k t_{n,k} x^k`, i.e. the array applied to `(1, x, x^2, ...)`.
    pub fn row_polynomials(&self) -> PolynomialFamily {
        PolynomialFamily::from_matrix(&self.matrix)
    }

    /// `g = f'` up to order `N - 1`.
    pub fn is_derivative_subgroup(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        self.f.derive() == self.g.truncate(n - 1).expect("n - 1 < n")
    }

    /// `g` even and `f` odd.
    pub fn is_checkerboard(&self) -> bool {
        self.g.is_even() && self.f.is_odd()
    }

    /// Same pair truncated to a lower order.
    pub fn truncate(&self, order: usize) -> Result<ExpRiordan> {
        Self::build(self.g.truncate(order)?, self.f.truncate(order)?)
    }
}

/// Monic polynomial families read off the rows of a lower-triangular matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialFamily {
    polys: Vec<Vec<Rational>>,
}

impl PolynomialFamily {
    /// Row `n` of the matrix gives the coefficients of `p_n`, constant first.
    pub fn from_matrix(m: &TriMatrix) -> Self {
        let polys = (0..m.dim()).map(|n| m.row(n)[..=n].to_vec()).collect();
        PolynomialFamily { polys }
    }

    pub fn polys(&self) -> &[Vec<Rational>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.polys
            .iter()
            .all(|p| p.last().map(One::is_one).unwrap_or(false))
    }

    pub fn render(&self) -> Vec<String> {
        self.polys.iter().map(|p| format_poly(p)).collect()
    }
}

impl fmt::Display for PolynomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render().join(", "))
    }
}

/// Human-readable polynomial, highest degree first: `x^4 - 20x^2 + 24`.
pub fn format_poly(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rational::zero();
        let mag = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag_text = render(&mag);
        let needs_parens = mag_text.contains('/');
        match k {
            0 => out.push_str(&mag_text),
            _ => {
                if !mag.is_one() {
                    if needs_parens {
                        out.push_str(&format!("({mag_text})"));
                    } else {
                        out.push_str(&mag_text);
                    }
                }
                out.push('x');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, int, sign_pow};
    use crate::series::elementary as el;
    use proptest::prelude::*;

    fn row(a: &ExpRiordan, n: usize) -> Vec<Rational> {
        a.matrix().row(n)[..=n].to_vec()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn pascal_is_binomial() {
        let p = ExpRiordan::build(el::exp(8), Series::x(8)).unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(p.get(n, k), &Rational::from_integer(binomial(n, k)));
            }
        }
        let inv = p.inverse().unwrap();
        assert_eq!(inv.g(), &el::exp_scaled(&int(-1), 8));
        for n in 0..=8 {
            for k in 0..=n {
                let e = sign_pow(n - k) * Rational::from_integer(binomial(n, k));
                assert_eq!(inv.get(n, k), &e);
            }
        }
    }

    #[test]
    fn cos_sin_row_three() {
        let a = ExpRiordan::build(el::cos(6), el::sin(6)).unwrap();
        assert_eq!(row(&a, 3), ints(&[0, -4, 0, 1]));
    }

    #[test]
    fn gaussian_rows() {
        let n = 8;
        let g = Series::monomial(int(-1), 2, n).exp().unwrap();
        let f = g.truncate(n - 1).unwrap().integrate();
        let a = ExpRiordan::build(g, f).unwrap();
        assert_eq!(row(&a, 3), ints(&[0, -8, 0, 1]));
        assert_eq!(row(&a, 6), ints(&[-120, 0, 532, 0, -70, 0, 1]));
    }

    #[test]
    fn normalization_errors() {
        let n = 4;
        assert!(matches!(
            ExpRiordan::build(Series::constant(int(2), n), Series::x(n)),
            Err(Error::Normalization(_))
        ));
        assert!(matches!(
            ExpRiordan::build(Series::one(n), Series::x(n).scale(&int(2))),
            Err(Error::Normalization(_))
        ));
        assert!(matches!(
            ExpRiordan::build(Series::one(n), el::exp(n)),
            Err(Error::Normalization(_))
        ));
        assert!(matches!(
            ExpRiordan::build(Series::one(n), Series::x(n + 1)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn identity_is_neutral() {
        let a = ExpRiordan::build(el::cos(7), el::sin(7)).unwrap();
        let id = ExpRiordan::identity(7);
        assert_eq!(a.multiply(&id).unwrap(), a);
        assert_eq!(id.multiply(&a).unwrap(), a);
        assert_eq!(id.row_polynomials().render()[..3], ["1", "x", "x^2"]);
    }

    #[test]
    fn sech_tanh_times_arcsin_is_gudermann() {
        let n = 10;
        let a = ExpRiordan::build(el::sech(n), el::tanh(n)).unwrap();
        let b = ExpRiordan::build(Series::one(n), el::asin(n)).unwrap();
        let gd = el::atan(n).compose(&el::sinh(n)).unwrap();
        let expected = ExpRiordan::build(el::sech(n), gd).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expected);
    }

    #[test]
    fn sech_squared_inverse() {
        let n = 10;
        let s = el::sech(n);
        let a = ExpRiordan::build(s.mul(&s).unwrap(), el::tanh(n)).unwrap();
        let one_minus_x2 = Series::from_poly(&ints(&[1, 0, -1]), n);
        let expected = ExpRiordan::build(one_minus_x2.reciprocal().unwrap(), el::atanh(n)).unwrap();
        assert_eq!(a.inverse().unwrap(), expected);
    }

    #[test]
    fn subgroup_predicates() {
        let cs = ExpRiordan::build(el::cos(8), el::sin(8)).unwrap();
        assert!(cs.is_derivative_subgroup());
        assert!(cs.is_checkerboard());
        let p = ExpRiordan::build(el::exp(8), Series::x(8)).unwrap();
        assert!(!p.is_derivative_subgroup());
        assert!(!p.is_checkerboard());
    }

    #[test]
    fn polynomial_formatting() {
        assert_eq!(format_poly(&ints(&[24, 0, -20, 0, 1])), "x^4 - 20x^2 + 24");
        assert_eq!(format_poly(&ints(&[0, -8, 0, 1])), "x^3 - 8x");
        assert_eq!(format_poly(&[int(0)]), "0");
        assert_eq!(
            format_poly(&[crate::rational::ratio(-1, 2), int(1)]),
            "x - 1/2"
        );
        assert_eq!(
            format_poly(&[int(0), crate::rational::ratio(3, 2)]),
            "(3/2)x"
        );
    }

    fn normalized_pair(order: usize) -> impl Strategy<Value = (Series, Series)> {
        (
            proptest::collection::vec(-3i64..=3, order),
            proptest::collection::vec(-3i64..=3, order - 1),
        )
            .prop_map(move |(g, f)| {
                let mut gc = vec![int(1)];
                gc.extend(g.into_iter().map(int));
                let mut fc = vec![int(0), int(1)];
                fc.extend(f.into_iter().map(int));
                (Series::from_ogf(gc), Series::from_ogf(fc))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn inverse_is_involutive((g, f) in normalized_pair(6)) {
            let a = ExpRiordan::build(g, f).unwrap();
            let inv = a.inverse().unwrap();
            prop_assert_eq!(inv.matrix(), &a.matrix().mat_inverse().unwrap());
            prop_assert_eq!(inv.inverse().unwrap(), a.clone());
            prop_assert_eq!(a.multiply(&inv).unwrap(), ExpRiordan::identity(6));
        }

        #[test]
        fn derivative_subgroup_is_closed((_, f) in normalized_pair(7), (_, h) in normalized_pair(7)) {
            let a = ExpRiordan::build(f.derive_padded(), f).unwrap();
            let b = ExpRiordan::build(h.derive_padded(), h).unwrap();
            prop_assert!(a.is_derivative_subgroup());
            prop_assert!(a.multiply(&b).unwrap().is_derivative_subgroup());
            prop_assert!(a.inverse().unwrap().is_derivative_subgroup());
        }

        #[test]
        fn bivariate_generating_function((g, f) in normalized_pair(6)) {
            // n! [x^n] g e^{y f} = sum_k t_{n,k} y^k, checked at integer y.
            let a = ExpRiordan::build(g.clone(), f.clone()).unwrap();
            for y in -3i64..=3 {
                let egf = g.mul(&f.scale(&int(y)).exp().unwrap()).unwrap().egf();
                for n in 0..=6 {
                    let mut row_at_y = Rational::zero();
                    let mut p = Rational::one();
                    for k in 0..=n {
                        row_at_y += a.get(n, k) * &p;
                        p *= int(y);
                    }
                    prop_assert_eq!(&egf[n], &row_at_y);
                }
            }
        }

        #[test]
        fn checkerboard_zero_pattern((g, f) in normalized_pair(8)) {
            let even_g = Series::from_fn(8, |n| if n % 2 == 0 { g.coeff(n) } else { Rational::zero() });
            let odd_f = Series::from_fn(8, |n| if n % 2 == 1 { f.coeff(n) } else { Rational::zero() });
            let a = ExpRiordan::build(even_g, odd_f).unwrap();
            prop_assert!(a.is_checkerboard());
            for n in 0..=8 {
                for k in 0..=n {
                    if (n - k) % 2 == 1 {
                        prop_assert!(a.get(n, k).is_zero());
                    }
                }
            }
        }
    }
}
