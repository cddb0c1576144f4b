//! Exact rationals and their `"p/q"` string encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn half() -> Q {
    frac(1, 2)
}

/// Formats as `p/q`, always with an explicit denominator.
pub fn to_string(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (p, d) = match s.split_once('/') {
        Some((p, d)) => (p.trim(), d.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("bad rational numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad rational denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Q::new(p, d))
}

/// Lossy conversion, used for drawing only.
pub fn to_f64(q: &Q) -> f64 {
    let n: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

pub fn midpoint(a: &Q, b: &Q) -> Q {
    (a + b) * half()
}

pub fn is_one(q: &Q) -> bool {
    q.is_one()
}

pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_points {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(pts: &[(Q, Q)], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(pts.len()))?;
        for (t, h) in pts {
            seq.serialize_element(&[to_string(t), to_string(h)])?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(Q, Q)>, D::Error> {
        let raw = Vec::<[String; 2]>::deserialize(d)?;
        raw.iter()
            .map(|[t, h]| Ok((parse(t)?, parse(h)?)))
            .collect::<Result<Vec<_>, String>>()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["3/4", "-7/2", "5/1", "0/1"] {
            assert_eq!(to_string(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("6/8").unwrap(), frac(3, 4));
        assert_eq!(parse("12").unwrap(), int(12));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
