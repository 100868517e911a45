use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A computed count, or the marker that no trustworthy value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MlValue {
    Count(u64),
    Inconclusive,
}

impl MlValue {
    pub fn count(self) -> Option<u64> {
        match self {
            MlValue::Count(c) => Some(c),
            MlValue::Inconclusive => None,
        }
    }
}

impl fmt::Display for MlValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MlValue::Count(c) => write!(f, "{c}"),
            MlValue::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

impl Serialize for MlValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MlValue::Count(c) => s.serialize_u64(*c),
            MlValue::Inconclusive => s.serialize_str("inconclusive"),
        }
    }
}

impl<'de> Deserialize<'de> for MlValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Count(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Count(c) => Ok(MlValue::Count(c)),
            Repr::Text(t) if t == "inconclusive" => Ok(MlValue::Inconclusive),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("unexpected value {t:?}"))),
        }
    }
}

/// One randomized run: the prime, the seed of the random data, and the raw
/// count (absent when the run did not finish).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub prime: u64,
    pub seed: u64,
    pub count: Option<u64>,
}

/// Result of an ML-degree (or reciprocal-degree) computation. For the exact
/// engines `trials` is empty and `consensus` is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MLReport {
    pub value: MlValue,
    pub engine: String,
    pub trials: Vec<TrialRecord>,
    pub consensus: usize,
    pub warnings: Vec<String>,
}

impl MLReport {
    pub fn exact(value: u64, engine: &str) -> Self {
        Self { value: MlValue::Count(value), engine: engine.to_string(), trials: vec![], consensus: 0, warnings: vec![] }
    }
}

/// Outcome of the randomized determinant test for ML degree zero.
/// `is_zero == false` is certified by a nonzero evaluation; `is_zero == true`
/// fails with probability at most `failure_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroTestReport {
    pub is_zero: bool,
    pub method: String,
    /// Evaluation points over GF(p), one per trial run.
    pub witnesses: Vec<Vec<u64>>,
    pub p: u64,
    /// Schwartz-Zippel bound per trial, as the string "deg/p".
    pub failure_bound: String,
}
