//! Exact rational scalars.
//!
//! The coefficient field everywhere is [`num_rational::BigRational`], which
//! keeps values reduced with a positive denominator. This module adds the
//! small amount of glue the rest of the crate needs: constructors, factorials,
//! the `p/q` text form and string-based serde helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^n` as a rational.
pub fn sign_pow(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn render(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational: `{t}`")))
}

/// Parses a comma separated list such as `1,0,-1/3`.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Serde adapters that carry rationals as `"p/q"` strings.
pub mod serde_str {
    use super::{parse, render, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse(&raw).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::{parse, render, Rational};
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&render(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| parse(s).map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod rows {
        use super::{parse, render, Rational};
        use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let text: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(render).collect())
                .collect();
            text.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let raw = Vec::<Vec<String>>::deserialize(d)?;
            raw.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| parse(s).map_err(D::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(render(&int(-7)), "-7");
        assert_eq!(render(&ratio(6, -4)), "-3/2");
        assert_eq!(render(&Rational::zero()), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1", "-3/2", "17/16"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        assert_eq!(parse(" 4/8 ").unwrap(), ratio(1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
