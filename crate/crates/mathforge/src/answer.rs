//! The uniform grading target shared by every problem family.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A canonical answer value. Rationals are kept in lowest terms with a
/// positive denominator; decimal answers are meaningful only at their
/// declared precision (fractional digits).
#[derive(Debug, Clone)]
pub enum CanonicalAnswer {
    Integer(BigInt),
    Rational(BigRational),
    Decimal { value: f64, precision: u8 },
    Text(String),
}

impl CanonicalAnswer {
    pub fn integer<T: Into<BigInt>>(v: T) -> Self {
        CanonicalAnswer::Integer(v.into())
    }

    /// Builds a reduced rational with positive denominator. Collapses to
    /// `Integer` when the denominator reduces to 1.
    pub fn rational(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let r = BigRational::new(num, den);
        Self::from_big_rational(r)
    }

    pub fn from_big_rational(r: BigRational) -> Self {
        if r.denom().is_one() {
            CanonicalAnswer::Integer(r.numer().clone())
        } else {
            CanonicalAnswer::Rational(r)
        }
    }

    pub fn decimal(value: f64, precision: u8) -> Self {
        CanonicalAnswer::Decimal { value, precision }
    }

    pub fn text<S: Into<String>>(s: S) -> Self {
        CanonicalAnswer::Text(s.into())
    }

    /// Renders the answer the way it is expected in a model response.
    pub fn render(&self) -> String {
        match self {
            CanonicalAnswer::Integer(i) => i.to_string(),
            CanonicalAnswer::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            CanonicalAnswer::Decimal { value, precision } => {
                render_decimal(*value, *precision)
            }
            CanonicalAnswer::Text(s) => s.clone(),
        }
    }
}

/// Fixed-point rendering with half-away-from-zero rounding at `precision`
/// fractional digits.
pub fn render_decimal(value: f64, precision: u8) -> String {
    let scale = 10f64.powi(precision as i32);
    let scaled = (value * scale).round(); // f64::round is half away from zero
    let scaled = scaled as i64;
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.unsigned_abs();
    let denom = 10u64.pow(precision as u32);
    if precision == 0 {
        format!("{sign}{abs}")
    } else {
        format!(
            "{sign}{}.{:0width$}",
            abs / denom,
            abs % denom,
            width = precision as usize
        )
    }
}

/// Decimal answers compare at their declared precision, so values that
/// render identically are equal.
impl PartialEq for CanonicalAnswer {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (CanonicalAnswer::Integer(a), CanonicalAnswer::Integer(b)) => a == b,
            (CanonicalAnswer::Rational(a), CanonicalAnswer::Rational(b)) => a == b,
            (
                CanonicalAnswer::Decimal {
                    value: a,
                    precision: pa,
                },
                CanonicalAnswer::Decimal {
                    value: b,
                    precision: pb,
                },
            ) => pa == pb && render_decimal(*a, *pa) == render_decimal(*b, *pb),
            (CanonicalAnswer::Text(a), CanonicalAnswer::Text(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CanonicalAnswer {}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum AnswerRepr {
    Integer { value: String },
    Rational { num: String, den: String },
    Decimal { value: String, precision: u8 },
    Text { value: String },
}

impl Serialize for CanonicalAnswer {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            CanonicalAnswer::Integer(i) => AnswerRepr::Integer {
                value: i.to_string(),
            },
            CanonicalAnswer::Rational(r) => AnswerRepr::Rational {
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            },
            CanonicalAnswer::Decimal { value, precision } => AnswerRepr::Decimal {
                value: render_decimal(*value, *precision),
                precision: *precision,
            },
            CanonicalAnswer::Text(s) => AnswerRepr::Text { value: s.clone() },
        };
        repr.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CanonicalAnswer {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = AnswerRepr::deserialize(de)?;
        match repr {
            AnswerRepr::Integer { value } => {
                let i: BigInt = value
                    .parse()
                    .map_err(|_| D::Error::custom("bad integer answer"))?;
                Ok(CanonicalAnswer::Integer(i))
            }
            AnswerRepr::Rational { num, den } => {
                let n: BigInt = num
                    .parse()
                    .map_err(|_| D::Error::custom("bad rational numerator"))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| D::Error::custom("bad rational denominator"))?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                if d.is_negative() {
                    return Err(D::Error::custom("non-positive denominator"));
                }
                if num::integer::gcd(n.clone(), d.clone()) != BigInt::one() {
                    return Err(D::Error::custom("unreduced rational"));
                }
                if d.is_one() {
                    return Err(D::Error::custom("rational with unit denominator"));
                }
                Ok(CanonicalAnswer::Rational(BigRational::new_raw(n, d)))
            }
            AnswerRepr::Decimal { value, precision } => {
                let v: f64 = value
                    .parse()
                    .map_err(|_| D::Error::custom("bad decimal answer"))?;
                Ok(CanonicalAnswer::Decimal {
                    value: v,
                    precision,
                })
            }
            AnswerRepr::Text { value } => Ok(CanonicalAnswer::Text(value)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_reduces_on_construction() {
        let a = CanonicalAnswer::rational(BigInt::from(2), BigInt::from(4));
        assert_eq!(a.render(), "1/2");
        let b = CanonicalAnswer::rational(BigInt::from(3), BigInt::from(-6));
        assert_eq!(b.render(), "-1/2");
        let c = CanonicalAnswer::rational(BigInt::from(4), BigInt::from(2));
        assert_eq!(c, CanonicalAnswer::integer(2));
    }

    #[test]
    fn decimal_rendering_half_away_from_zero() {
        assert_eq!(render_decimal(0.745, 2), "0.75");
        assert_eq!(render_decimal(-0.745, 2), "-0.75");
        assert_eq!(render_decimal(1.0, 1), "1.0");
        assert_eq!(render_decimal(0.04999, 1), "0.0");
        assert_eq!(render_decimal(12.0, 2), "12.00");
    }

    #[test]
    fn unreduced_rational_rejected_on_parse() {
        let raw = r#"{"kind":"rational","num":"2","den":"4"}"#;
        let res: std::result::Result<CanonicalAnswer, _> = serde_json::from_str(raw);
        assert!(res.unwrap_err().to_string().contains("unreduced"));
    }

    #[test]
    fn answer_roundtrip() {
        for a in [
            CanonicalAnswer::integer(-37),
            CanonicalAnswer::rational(BigInt::from(7), BigInt::from(11)),
            CanonicalAnswer::decimal(2.3456, 2),
            CanonicalAnswer::text("x^2/2 + C"),
        ] {
            let line = serde_json::to_string(&a).unwrap();
            let back: CanonicalAnswer = serde_json::from_str(&line).unwrap();
            assert_eq!(back.render(), a.render());
        }
    }
}
