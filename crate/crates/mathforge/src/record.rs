//! The line-delimited dataset record format.
//!
//! One record per line, field order fixed, so equal records serialize to
//! byte-identical lines and files diff cleanly.

use serde::{Deserialize, Serialize};

use crate::answer::CanonicalAnswer;
use crate::error::{Error, Result};
use crate::registry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitTag {
    Train,
    TestId,
    TestOod,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemRecord {
    pub template_id: String,
    /// Family-specific parameter blob; each family re-derives the answer
    /// from it during verification.
    pub params: serde_json::Value,
    pub statement: String,
    pub answer: CanonicalAnswer,
    pub complexity: u32,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub split_tag: Option<SplitTag>,
}

pub fn serialize_record(record: &ProblemRecord) -> String {
    serde_json::to_string(record).expect("record serialization cannot fail")
}

pub fn parse_record(line: &str) -> Result<ProblemRecord> {
    let record: ProblemRecord =
        serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
    if !registry::is_known_template(&record.template_id) {
        return Err(Error::Parse(format!(
            "unknown template_id {:?}",
            record.template_id
        )));
    }
    if record.complexity == 0 {
        return Err(Error::Parse("complexity must be positive".into()));
    }
    Ok(record)
}

pub fn serialize_records(records: &[ProblemRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serialize_record(r));
        out.push('\n');
    }
    out
}

pub fn parse_records(text: &str) -> Result<Vec<ProblemRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_record)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn sample() -> ProblemRecord {
        ProblemRecord {
            template_id: "arithmetic/gcd".into(),
            params: serde_json::json!({"a": "3450", "b": "24380"}),
            statement: "What is the greatest common divisor of 3450 and 24380?".into(),
            answer: CanonicalAnswer::integer(230),
            complexity: 5,
            seed: 77,
            split_tag: Some(SplitTag::Train),
        }
    }

    #[test]
    fn round_trip_identity() {
        let r = sample();
        let line = serialize_record(&r);
        assert_eq!(parse_record(&line).unwrap(), r);
    }

    #[test]
    fn equal_records_byte_identical() {
        assert_eq!(serialize_record(&sample()), serialize_record(&sample()));
    }

    #[test]
    fn unreduced_rational_rejected() {
        let mut r = sample();
        r.answer = CanonicalAnswer::rational(BigInt::from(1), BigInt::from(2));
        let line = serialize_record(&r).replace("\"num\":\"1\"", "\"num\":\"2\"")
            .replace("\"den\":\"2\"", "\"den\":\"4\"");
        let err = parse_record(&line).unwrap_err();
        assert!(err.to_string().contains("unreduced"), "{err}");
    }

    #[test]
    fn unknown_template_rejected() {
        let mut r = sample();
        r.template_id = "arithmetic/nope".into();
        let err = parse_record(&serialize_record(&r)).unwrap_err();
        assert!(err.to_string().contains("unknown template_id"));
    }
}
