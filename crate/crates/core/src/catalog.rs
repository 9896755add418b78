//! Named sigmoid pairs `(f', f)` and the auxiliary arrays that go with them.
//!
//! Every entry carries exact series generators at any order, closed-form
//! `f64` evaluators for plotting, and the closed forms of its inverse array,
//! production matrix and orthogonal family where those are known. Transcendental
//! constants (the `sqrt(pi)/2` of erf, the `e` of Gompertz) are normalized away
//! so the exact side stays rational; the float evaluators keep them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::orthopoly::HankelFormula;
use crate::production::{production_definitional, tridiagonal_params, JacobiParams, ZAPair};
use crate::rational::{factorial_q, int, ratio, sign_pow, Rational};
use crate::riordan::ExpRiordan;
use crate::series::{elementary as el, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryId {
    Tanh,
    Tanh2,
    Arctan,
    Algebraic,
    Quartic,
    Gudermann,
    Erf,
    Gompertz,
    CosSin,
    Pascal,
}

impl EntryId {
    pub const ALL: [EntryId; 10] = [
        Self::Tanh,
        Self::Tanh2,
        Self::Arctan,
        Self::Algebraic,
        Self::Quartic,
        Self::Gudermann,
        Self::Erf,
        Self::Gompertz,
        Self::CosSin,
        Self::Pascal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tanh => "tanh",
            Self::Tanh2 => "tanh2",
            Self::Arctan => "arctan",
            Self::Algebraic => "algebraic",
            Self::Quartic => "quartic",
            Self::Gudermann => "gudermann",
            Self::Erf => "erf",
            Self::Gompertz => "gompertz",
            Self::CosSin => "cos_sin",
            Self::Pascal => "pascal",
        }
    }

    pub fn entry(self) -> &'static CatalogEntry {
        &REGISTRY[self as usize]
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Which array a closed-form production generating function belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Array,
    Inverse,
}

/// A production generating function `e^{xy}(Z + yA)` given in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatedProduction {
    pub orientation: Orientation,
    pub label: &'static str,
    pub za: ZAPair,
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub id: EntryId,
    pub g_label: &'static str,
    pub f_label: &'static str,
    pub notes: &'static str,
    /// `f` is a sigmoid (monotone, bounded); excludes the circle and Pascal.
    pub sigmoid: bool,
}

static REGISTRY: [CatalogEntry; 10] = [
    CatalogEntry {
        id: EntryId::Tanh,
        g_label: "sech(x)^2",
        f_label: "tanh(x)",
        notes: "logistic sigmoid 2/(1+e^{-2x}) - 1",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Tanh2,
        g_label: "sech(2x)^2",
        f_label: "tanh(2x)/2",
        notes: "rescaled tanh; t'(n,k) = 2^(n-k) t(n,k)",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Arctan,
        g_label: "1/(1+x^2)",
        f_label: "atan(x)",
        notes: "coefficient array of an orthogonal family; moments sec(x)^2",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Algebraic,
        g_label: "(1+x^2)^(-3/2)",
        f_label: "x/sqrt(1+x^2)",
        notes: "algebraic sigmoid; production matrix not tridiagonal",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Quartic,
        g_label: "(1+x^4)^(-5/4)",
        f_label: "x/(1+x^4)^(1/4)",
        notes: "quartic member of the algebraic family",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Gudermann,
        g_label: "sech(x)",
        f_label: "gd(x) = atan(sinh(x))",
        notes: "Gudermannian; [sech, gd] = [sech, tanh] [1, asin]",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Erf,
        g_label: "exp(-x^2)",
        f_label: "sqrt(pi)/2 erf(x)",
        notes: "error function; [exp(-x^2), x] [1, sqrt(pi)/2 erf(x)]",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::Gompertz,
        g_label: "exp(1-x-exp(-x))",
        f_label: "exp(1-exp(-x)) - 1",
        notes: "Gompertz; not odd; Stirling numbers of the second kind",
        sigmoid: true,
    },
    CatalogEntry {
        id: EntryId::CosSin,
        g_label: "cos(x)",
        f_label: "sin(x)",
        notes: "circle; derivative and checkerboard subgroups",
        sigmoid: false,
    },
    CatalogEntry {
        id: EntryId::Pascal,
        g_label: "exp(x)",
        f_label: "x",
        notes: "binomial triangle",
        sigmoid: false,
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    &REGISTRY
}

/// Looks an entry up by its short name.
pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    id.parse::<EntryId>().map(EntryId::entry)
}

fn poly(coeffs: &[i64], order: usize) -> Series {
    let c: Vec<Rational> = coeffs.iter().map(|&v| int(v)).collect();
    Series::from_poly(&c, order)
}

/// `(1 + c x^k)^r`
fn binom_pow(c: i64, k: usize, r: Rational, order: usize) -> Series {
    el::binomial_power(&int(c), k, &r, order)
}

fn square(s: Series) -> Series {
    s.mul(&s).expect("same order")
}

fn exp_neg(order: usize) -> Series {
    el::exp_scaled(&int(-1), order)
}

/// `1 - e^{-x}`
fn one_minus_exp_neg(order: usize) -> Series {
    Series::one(order).sub(&exp_neg(order)).expect("same order")
}

/// `sum (-1)^n x^{2n+1} / (n! (2n+1))`, the integral of `e^{-x^2}`.
pub fn erf_series(order: usize) -> Series {
    Series::from_fn(order, |m| {
        if m % 2 == 1 {
            let n = m / 2;
            sign_pow(n) / (factorial_q(n) * int(m as i64))
        } else {
            Rational::zero()
        }
    })
}

/// `e^{-x^2}`
pub fn gaussian(order: usize) -> Series {
    Series::from_fn(order, |m| {
        if m % 2 == 0 {
            sign_pow(m / 2) / factorial_q(m / 2)
        } else {
            Rational::zero()
        }
    })
}

/// `e^{1-x-e^{-x}}`
pub fn gompertz_g(order: usize) -> Series {
    one_minus_exp_neg(order)
        .sub(&Series::x(order))
        .and_then(|s| s.exp())
        .expect("constant term is 0")
}

/// `gd(x) = atan(sinh x)`
pub fn gudermann_f(order: usize) -> Series {
    el::atan(order)
        .compose(&el::sinh(order))
        .expect("sinh(0) = 0")
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.id.name()
    }

    pub fn g_series(&self, order: usize) -> Series {
        let n = order;
        match self.id {
            EntryId::Tanh => square(el::sech(n)),
            EntryId::Tanh2 => square(el::sech(n)).dilate(&int(2)),
            EntryId::Arctan => poly(&[1, 0, 1], n).reciprocal().expect("1 + x^2"),
            EntryId::Algebraic => binom_pow(1, 2, ratio(-3, 2), n),
            EntryId::Quartic => binom_pow(1, 4, ratio(-5, 4), n),
            EntryId::Gudermann => el::sech(n),
            EntryId::Erf => gaussian(n),
            EntryId::Gompertz => gompertz_g(n),
            EntryId::CosSin => el::cos(n),
            EntryId::Pascal => el::exp(n),
        }
    }

    pub fn f_series(&self, order: usize) -> Series {
        let n = order;
        match self.id {
            EntryId::Tanh => el::tanh(n),
            EntryId::Tanh2 => el::tanh(n).dilate(&int(2)).scale(&ratio(1, 2)),
            EntryId::Arctan => el::atan(n),
            EntryId::Algebraic => binom_pow(1, 2, ratio(-1, 2), n).shift_up(1),
            EntryId::Quartic => binom_pow(1, 4, ratio(-1, 4), n).shift_up(1),
            EntryId::Gudermann => gudermann_f(n),
            EntryId::Erf => erf_series(n),
            EntryId::Gompertz => one_minus_exp_neg(n)
                .exp()
                .and_then(|s| s.sub(&Series::one(n)))
                .expect("constant term is 0"),
            EntryId::CosSin => el::sin(n),
            EntryId::Pascal => Series::x(n),
        }
    }

    pub fn array(&self, order: usize) -> ExpRiordan {
        ExpRiordan::build(self.g_series(order), self.f_series(order))
            .expect("catalog pairs are normalized")
    }

    pub fn is_derivative_pair(&self) -> bool {
        self.id != EntryId::Pascal
    }

    pub fn f_eval(&self, t: f64) -> f64 {
        match self.id {
            EntryId::Tanh => t.tanh(),
            EntryId::Tanh2 => (2.0 * t).tanh() / 2.0,
            EntryId::Arctan => t.atan(),
            EntryId::Algebraic => t / (1.0 + t * t).sqrt(),
            EntryId::Quartic => t / (1.0 + t.powi(4)).powf(0.25),
            EntryId::Gudermann => t.sinh().atan(),
            EntryId::Erf => std::f64::consts::PI.sqrt() / 2.0 * libm::erf(t),
            EntryId::Gompertz => (1.0 - (-t).exp()).exp() - 1.0,
            EntryId::CosSin => t.sin(),
            EntryId::Pascal => t,
        }
    }

    pub fn fprime_eval(&self, t: f64) -> f64 {
        match self.id {
            EntryId::Tanh => 1.0 / t.cosh().powi(2),
            EntryId::Tanh2 => 1.0 / (2.0 * t).cosh().powi(2),
            EntryId::Arctan => 1.0 / (1.0 + t * t),
            EntryId::Algebraic => (1.0 + t * t).powf(-1.5),
            EntryId::Quartic => (1.0 + t.powi(4)).powf(-1.25),
            EntryId::Gudermann => 1.0 / t.cosh(),
            EntryId::Erf => (-t * t).exp(),
            EntryId::Gompertz => (1.0 - t - (-t).exp()).exp(),
            EntryId::CosSin => t.cos(),
            EntryId::Pascal => 1.0,
        }
    }

    /// The first member of the pair; equals `f'` except for Pascal.
    pub fn g_eval(&self, t: f64) -> f64 {
        match self.id {
            EntryId::Pascal => t.exp(),
            _ => self.fprime_eval(t),
        }
    }

    /// Closed form of the inverse array, where one is known.
    pub fn stated_inverse(&self, order: usize) -> Option<(Series, Series)> {
        let n = order;
        let pair = match self.id {
            EntryId::Tanh => (poly(&[1, 0, -1], n).reciprocal().ok()?, el::atanh(n)),
            EntryId::Tanh2 => (
                poly(&[1, 0, -4], n).reciprocal().ok()?,
                el::atanh(n).dilate(&int(2)).scale(&ratio(1, 2)),
            ),
            EntryId::Arctan => (square(el::sec(n)), el::tan(n)),
            EntryId::Algebraic => (
                binom_pow(-1, 2, ratio(-3, 2), n),
                binom_pow(-1, 2, ratio(-1, 2), n).shift_up(1),
            ),
            EntryId::Quartic => (
                binom_pow(-1, 4, ratio(-5, 4), n),
                binom_pow(-1, 4, ratio(-1, 4), n).shift_up(1),
            ),
            EntryId::Gudermann => {
                let sec = el::sec(n);
                let f = sec.add(&el::tan(n)).ok()?.log().ok()?;
                (sec, f)
            }
            EntryId::Erf => return None,
            EntryId::Gompertz => {
                let one_minus_log = Series::one(n).sub(&el::log1p(n)).ok()?;
                let g = poly(&[1, 1], n)
                    .mul(&one_minus_log)
                    .ok()?
                    .reciprocal()
                    .ok()?;
                let f = one_minus_log.log().ok()?.neg();
                (g, f)
            }
            EntryId::CosSin => (binom_pow(-1, 2, ratio(-1, 2), n), el::asin(n)),
            EntryId::Pascal => (exp_neg(n), Series::x(n)),
        };
        Some(pair)
    }

    /// Closed-form production generating functions, at the given order.
    pub fn stated_productions(&self, order: usize) -> Vec<StatedProduction> {
        let n = order;
        let za = |z: Series, a: Series| ZAPair::new(z, a).expect("A(0) = 1");
        let mk = |orientation, label, z, a| StatedProduction {
            orientation,
            label,
            za: za(z, a),
        };
        use Orientation::*;
        match self.id {
            EntryId::Tanh => vec![mk(
                Array,
                "-2x + y(1-x^2)",
                Series::monomial(int(-2), 1, n),
                poly(&[1, 0, -1], n),
            )],
            EntryId::Tanh2 => vec![mk(
                Array,
                "-8x + y(1-4x^2)",
                Series::monomial(int(-8), 1, n),
                poly(&[1, 0, -4], n),
            )],
            EntryId::Arctan => vec![mk(
                Inverse,
                "2x + y(1+x^2)",
                Series::monomial(int(2), 1, n),
                poly(&[1, 0, 1], n),
            )],
            EntryId::Algebraic => vec![
                mk(
                    Array,
                    "-3x sqrt(1-x^2) + y(1-x^2)^(3/2)",
                    binom_pow(-1, 2, ratio(1, 2), n).shift_up(1).scale(&int(-3)),
                    binom_pow(-1, 2, ratio(3, 2), n),
                ),
                mk(
                    Inverse,
                    "3x sqrt(1+x^2) + y(1+x^2)^(3/2)",
                    binom_pow(1, 2, ratio(1, 2), n).shift_up(1).scale(&int(3)),
                    binom_pow(1, 2, ratio(3, 2), n),
                ),
            ],
            EntryId::Quartic => vec![mk(
                Array,
                "-5x^3 (1-x^4)^(1/4) + y(1-x^4)^(5/4)",
                binom_pow(-1, 4, ratio(1, 4), n).shift_up(3).scale(&int(-5)),
                binom_pow(-1, 4, ratio(5, 4), n),
            )],
            EntryId::Gudermann => vec![
                mk(Array, "-sin(x) + y cos(x)", el::sin(n).neg(), el::cos(n)),
                mk(Inverse, "sinh(x) + y cosh(x)", el::sinh(n), el::cosh(n)),
            ],
            EntryId::Erf => vec![],
            EntryId::Gompertz => vec![],
            EntryId::CosSin => {
                let sqrt = binom_pow(-1, 2, ratio(1, 2), n);
                let z = Series::x(n).neg().div(&sqrt).expect("sqrt(0) = 1");
                let sec = el::sec(n);
                let zi = el::sin(n)
                    .mul(&sec)
                    .and_then(|s| s.mul(&sec))
                    .expect("same order");
                vec![
                    mk(Array, "-x/sqrt(1-x^2) + y sqrt(1-x^2)", z, sqrt),
                    mk(Inverse, "sin(x) sec(x)^2 + y sec(x)", zi, sec),
                ]
            }
            EntryId::Pascal => vec![mk(Array, "1 + y", Series::one(n), Series::one(n))],
        }
    }

    /// `1 / fbar'` in closed form, so that the production matrix is
    /// `U [1/fbar', x]`.
    pub fn stated_shift_base(&self, order: usize) -> Option<Series> {
        let n = order;
        Some(match self.id {
            EntryId::Tanh => poly(&[1, 0, -1], n),
            EntryId::Tanh2 => poly(&[1, 0, -4], n),
            EntryId::Arctan => square(el::cos(n)),
            EntryId::Algebraic => binom_pow(-1, 2, ratio(3, 2), n),
            EntryId::Quartic => binom_pow(-1, 4, ratio(5, 4), n),
            EntryId::Gudermann => el::cos(n),
            EntryId::Gompertz => {
                let one_minus_log = Series::one(n).sub(&el::log1p(n)).ok()?;
                poly(&[1, 1], n).mul(&one_minus_log).ok()?
            }
            EntryId::CosSin => binom_pow(-1, 2, ratio(1, 2), n),
            EntryId::Erf | EntryId::Pascal => return None,
        })
    }

    /// The moment array of the orthogonal family attached to this entry:
    /// the array itself, its inverse, or a related array.
    pub fn moment_array(&self, order: usize) -> Option<ExpRiordan> {
        let n = order;
        let pair = match self.id {
            EntryId::Tanh | EntryId::Tanh2 | EntryId::Pascal => {
                (self.g_series(n), self.f_series(n))
            }
            EntryId::Arctan => (square(el::sec(n)), el::tan(n)),
            EntryId::Gudermann => (el::sech(n), el::tanh(n)),
            EntryId::Erf => (gaussian(n), Series::x(n)),
            EntryId::Gompertz => (gompertz_g(n), one_minus_exp_neg(n)),
            EntryId::Algebraic | EntryId::Quartic | EntryId::CosSin => return None,
        };
        ExpRiordan::build(pair.0, pair.1).ok()
    }

    /// Jacobi parameters of the attached orthogonal family.
    pub fn family_params(&self, order: usize) -> Option<JacobiParams> {
        let m = self.moment_array(order)?;
        tridiagonal_params(&production_definitional(&m).ok()?)
    }

    /// Known Hankel product formula for the expansion of `g` or `f`.
    pub fn hankel_formulas(&self) -> Vec<(SeriesPart, HankelFormula)> {
        match self.id {
            EntryId::Tanh => vec![
                (SeriesPart::G, HankelFormula::Sech2),
                (SeriesPart::F, HankelFormula::Tanh),
            ],
            _ => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesPart {
    G,
    F,
}

impl FromStr for SeriesPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(Self::G),
            "f" => Ok(Self::F),
            _ => Err(Error::InvalidArgument(format!(
                "series must be `g` or `f`, got `{s}`"
            ))),
        }
    }
}

/// Stirling numbers of the second kind `S2(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    matrix: TriMatrix,
}

impl StirlingTriangle {
    pub fn matrix(&self) -> &TriMatrix {
        &self.matrix
    }

    pub fn get(&self, n: usize, k: usize) -> &Rational {
        self.matrix.get(n, k)
    }
}

/// Rows `0..=n` from `S2(n,k) = S2(n-1,k-1) + k S2(n-1,k)`.
pub fn stirling2(n: usize) -> StirlingTriangle {
    let dim = n + 1;
    let mut rows = vec![vec![Rational::zero(); dim]; dim];
    rows[0][0] = Rational::one();
    for i in 1..dim {
        for k in 1..=i {
            let v = &rows[i - 1][k - 1] + int(k as i64) * &rows[i - 1][k];
            rows[i][k] = v;
        }
    }
    StirlingTriangle {
        matrix: TriMatrix::from_rows(rows).expect("lower-triangular"),
    }
}

/// Checks, entry-wise for rows `0..=n`:
/// the two factorizations of the Gompertz array through Stirling arrays,
/// `g_{n,k} = sum_j S2(n+1,j+1) (-1)^{n-j} S2(j+1,k+1)`, and the first-column
/// special case `g_{n,0} = sum_j S2(n+1,j+1) (-1)^{n-j}`.
pub fn gompertz_identities(n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(EntryId::Gompertz.entry().array(0).get(0, 0).is_one());
    }
    let gomp = EntryId::Gompertz.entry().array(n);

    let left = ExpRiordan::build(exp_neg(n), one_minus_exp_neg(n))?;
    let right = ExpRiordan::build(el::exp(n), el::exp(n).sub(&Series::one(n))?)?;
    let first = left.multiply(&right)? == gomp;

    let moment = ExpRiordan::build(gompertz_g(n), one_minus_exp_neg(n))?;
    let s2_array = ExpRiordan::build(Series::one(n), el::exp(n).sub(&Series::one(n))?)?;
    let second = moment.multiply(&s2_array)? == gomp;

    let s2 = stirling2(n + 1);
    let s2_matches = s2.matrix().leading(n + 1)? == *s2_array.matrix();
    let double_sum = (0..=n).all(|row| {
        (0..=row).all(|k| {
            let v: Rational = (0..=row)
                .map(|j| s2.get(row + 1, j + 1) * sign_pow(row - j) * s2.get(j + 1, k + 1))
                .sum();
            &v == gomp.get(row, k)
        })
    });
    let first_column = (0..=n).all(|row| {
        let v: Rational = (0..=row)
            .map(|j| s2.get(row + 1, j + 1) * sign_pow(row - j))
            .sum();
        &v == gomp.get(row, 0)
    });
    Ok(first && second && s2_matches && double_sum && first_column)
}

/// `[sech, gd] = [sech, tanh] [1, asin]`, and `[sech, tanh]` has a
/// tridiagonal production matrix with `b = 0`, `lambda_k = -k^2`.
pub fn gudermann_identities(order: usize) -> Result<bool> {
    let n = order;
    let sigmoid = EntryId::Gudermann.entry().array(n);
    let moment = ExpRiordan::build(el::sech(n), el::tanh(n))?;
    let arcsin = ExpRiordan::build(Series::one(n), el::asin(n))?;
    let factorization = moment.multiply(&arcsin)? == sigmoid;
    let params = tridiagonal_params(&production_definitional(&moment)?);
    let expected = JacobiParams::from_ints(0, -1, 0, -1);
    let lambdas = params
        .as_ref()
        .map(|p| (1..n).all(|k| p.lambda(k) == -int((k * k) as i64)))
        .unwrap_or(false);
    Ok(factorization && params == Some(expected) && lambdas)
}

/// `[e^{-x^2}, erf] = [e^{-x^2}, x] [1, erf]`, and `[e^{-x^2}, x]` has
/// production parameters `(0, -2, 0, 0)`.
pub fn erf_identity(order: usize) -> Result<bool> {
    let n = order;
    let sigmoid = EntryId::Erf.entry().array(n);
    let moment = ExpRiordan::build(gaussian(n), Series::x(n))?;
    let inner = ExpRiordan::build(Series::one(n), erf_series(n))?;
    let factorization = moment.multiply(&inner)? == sigmoid;
    let params = tridiagonal_params(&production_definitional(&moment)?);
    Ok(factorization && params == Some(JacobiParams::from_ints(0, -2, 0, 0)))
}
