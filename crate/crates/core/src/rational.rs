//! Exact rationals and their JSON rendering as `{"num": …, "den": …}`.

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = num_rational::Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Canonical representative of `x` modulo `m` in `[0, m)`.
pub fn rem_euclid(x: &Rational, m: &Rational) -> Rational {
    let q = (x / m).floor();
    x - q * m
}

/// True iff `x / m` is an integer.
pub fn divisible_by(x: &Rational, m: &Rational) -> bool {
    (x / m).is_integer()
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i128,
    den: i128,
}

pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    RationalRepr {
        num: *x.numer(),
        den: *x.denom(),
    }
    .serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let r = RationalRepr::deserialize(d)?;
    if r.den.is_zero() {
        return Err(serde::de::Error::custom("zero denominator"));
    }
    Ok(Rational::new(r.num, r.den))
}

/// JSON value for a rational, for ad-hoc record building.
pub fn to_json(x: &Rational) -> serde_json::Value {
    serde_json::json!({ "num": *x.numer(), "den": *x.denom() })
}

/// Serde adapter for `Vec<Rational>`.
pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&RationalRepr {
                num: *x.numer(),
                den: *x.denom(),
            })?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<RationalRepr>::deserialize(d)?;
        raw.into_iter()
            .map(|r| {
                if r.den.is_zero() {
                    Err(serde::de::Error::custom("zero denominator"))
                } else {
                    Ok(Rational::new(r.num, r.den))
                }
            })
            .collect()
    }
}

/// Serde adapter writing a `BigInt` as a decimal string.
pub mod bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `"p"` or `"p/q"` (optional leading sign) into a rational.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().ok()?;
            let q: i128 = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<i128>().ok().map(Rational::from_integer),
    }
}
