//! Edge-connectivity, restricted edge-connectivity and the optimality and
//! superness classifications built on top of them.

mod classify;
mod cuts;
mod flow;
mod oracle;
mod report;
mod witness;

use std::fmt;
use std::time::Instant;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub use classify::{is_lambda_prime_optimal, is_super_lambda, is_super_lambda_prime, Certification, SuperVerdict};
pub use cuts::{
    edge_connectivity, minimum_edge_cut, minimum_restricted_edge_cut, repair_restricted_side,
    restricted_edge_connectivity,
};
pub use flow::{max_flow_unit, min_terminal_cut, TerminalCut};
pub use oracle::{lambda_prime_oracle, oracle_min_cut, SideRule};
pub use report::{full_report, ConnectivityReport, ReportWitnesses};
pub use witness::{CutKind, CutWitness};

pub const DEFAULT_ORACLE_ORDER: usize = 30;

/// A nonnegative count or `+∞`. Serializes as a JSON number or the string
/// `"infinity"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtCount {
    Finite(u64),
    Infinite,
}

impl ExtCount {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtCount::Finite(x) => Some(x),
            ExtCount::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtCount::Infinite
    }

    /// `k * self` with `0 * ∞ = 0`.
    pub fn scale(self, k: u64) -> ExtCount {
        match self {
            ExtCount::Finite(x) => ExtCount::Finite(x * k),
            ExtCount::Infinite if k == 0 => ExtCount::Finite(0),
            ExtCount::Infinite => ExtCount::Infinite,
        }
    }
}

impl From<u64> for ExtCount {
    fn from(x: u64) -> Self {
        ExtCount::Finite(x)
    }
}

impl From<usize> for ExtCount {
    fn from(x: usize) -> Self {
        ExtCount::Finite(x as u64)
    }
}

impl fmt::Display for ExtCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCount::Finite(x) => write!(f, "{x}"),
            ExtCount::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for ExtCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtCount::Finite(x) => s.serialize_u64(*x),
            ExtCount::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtCount;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"infinity\"")
            }
            fn visit_u64<E: de::Error>(self, x: u64) -> std::result::Result<ExtCount, E> {
                Ok(ExtCount::Finite(x))
            }
            fn visit_i64<E: de::Error>(self, x: i64) -> std::result::Result<ExtCount, E> {
                u64::try_from(x).map(ExtCount::Finite).map_err(E::custom)
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<ExtCount, E> {
                if s == "infinity" {
                    Ok(ExtCount::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(s), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// Work limits shared by the expensive routines.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Largest order the brute-force oracle accepts.
    pub oracle_order: usize,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { oracle_order: DEFAULT_ORACLE_ORDER, deadline: None }
    }
}

impl Limits {
    pub fn with_oracle_order(oracle_order: usize) -> Self {
        Limits { oracle_order, ..Default::default() }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::TimedOut),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_count_order_and_json() {
        assert!(ExtCount::Finite(1_000_000) < ExtCount::Infinite);
        assert_eq!(ExtCount::Infinite.scale(0), ExtCount::Finite(0));
        assert_eq!(ExtCount::Finite(3).scale(4), ExtCount::Finite(12));
        assert_eq!(serde_json::to_string(&ExtCount::Infinite).unwrap(), "\"infinity\"");
        assert_eq!(serde_json::to_string(&ExtCount::Finite(14)).unwrap(), "14");
        let back: ExtCount = serde_json::from_str("\"infinity\"").unwrap();
        assert_eq!(back, ExtCount::Infinite);
        assert!(serde_json::from_str::<ExtCount>("\"inf\"").is_err());
    }
}
