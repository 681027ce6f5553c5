//! Empirical checks of the λ′ product formulas, the `K_2 × K_n` /
//! `K_2 × T_n` layer-cut bounds, and the super-λ′ sufficient conditions,
//! over configurable corpora.

mod claims;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::connectivity::{Certification, CutWitness, ExtCount, Limits};
use crate::constructors::{complete_graph, direct_product, parse_graph6, total_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use claims::{
    check_claim, check_layer_cut_bound, check_layer_product_super, check_product_formula, check_super_by_inequality,
    check_super_by_optimality, inequality_hypothesis,
};
pub(crate) use claims::{edge_term, layer_term};
pub use sweep::{sweep, SweepSummary};

/// The second factor of a product: `K_n` or `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Factor {
    Complete,
    Total,
}

impl Factor {
    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            Factor::Complete => complete_graph(n),
            Factor::Total => total_graph(n),
        }
    }

    pub fn symbol(self, n: usize) -> String {
        match self {
            Factor::Complete => format!("K{n}"),
            Factor::Total => format!("T{n}"),
        }
    }
}

/// Identifiers of the checked statements. The serialized names are the
/// stable wire ids accepted by `--claim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// `λ′(G×K_n) = min{(n−1)ξ(G) + 2(n−2), n(n−1)λ′(G)}`, n >= 3.
    #[serde(rename = "THM_1_1")]
    CompleteProductFormula,
    /// `λ′(G×T_n) = min{nξ(G) + 2(n−1), n²λ′(G)}`, n >= 3.
    #[serde(rename = "THM_1_2")]
    TotalProductFormula,
    /// Cuts of `K_2×K_n` with `2 <= |A| <= 2n−2` are at least `2(n−2)`,
    /// with equality exactly when `A` or its complement induces `K_2`; n >= 5.
    #[serde(rename = "LEM_2_1")]
    CompleteLayerCutBound,
    /// The same on `K_2×T_n` with bound `2(n−1)`; n >= 3.
    #[serde(rename = "LEM_2_3")]
    TotalLayerCutBound,
    /// `K_2×K_n` is super-λ and super-λ′ for n >= 5.
    #[serde(rename = "COR_2_2")]
    CompleteLayerSuper,
    /// `K_2×T_n` is super-λ and super-λ′ for n >= 3.
    #[serde(rename = "COR_2_4")]
    TotalLayerSuper,
    /// `n(n−1)λ′(G) > (n−1)ξ(G) + 2(n−2)` implies `G×K_n` super-λ′; n >= 5.
    #[serde(rename = "THM_3_1")]
    CompleteSuperByInequality,
    /// λ′-optimal `G` implies `G×K_n` super-λ′; n >= 5.
    #[serde(rename = "COR_3_2")]
    CompleteSuperByOptimality,
    /// `n²λ′(G) > nξ(G) + 2(n−1)` implies `G×T_n` super-λ′; n >= 3.
    #[serde(rename = "THM_3_3")]
    TotalSuperByInequality,
    /// λ′-optimal `G` implies `G×T_n` super-λ′; n >= 3.
    #[serde(rename = "COR_3_4")]
    TotalSuperByOptimality,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::CompleteProductFormula,
        ClaimId::TotalProductFormula,
        ClaimId::CompleteLayerCutBound,
        ClaimId::TotalLayerCutBound,
        ClaimId::CompleteLayerSuper,
        ClaimId::TotalLayerSuper,
        ClaimId::CompleteSuperByInequality,
        ClaimId::CompleteSuperByOptimality,
        ClaimId::TotalSuperByInequality,
        ClaimId::TotalSuperByOptimality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::CompleteProductFormula => "THM_1_1",
            ClaimId::TotalProductFormula => "THM_1_2",
            ClaimId::CompleteLayerCutBound => "LEM_2_1",
            ClaimId::TotalLayerCutBound => "LEM_2_3",
            ClaimId::CompleteLayerSuper => "COR_2_2",
            ClaimId::TotalLayerSuper => "COR_2_4",
            ClaimId::CompleteSuperByInequality => "THM_3_1",
            ClaimId::CompleteSuperByOptimality => "COR_3_2",
            ClaimId::TotalSuperByInequality => "THM_3_3",
            ClaimId::TotalSuperByOptimality => "COR_3_4",
        }
    }

    pub fn factor(self) -> Factor {
        match self {
            ClaimId::CompleteProductFormula
            | ClaimId::CompleteLayerCutBound
            | ClaimId::CompleteLayerSuper
            | ClaimId::CompleteSuperByInequality
            | ClaimId::CompleteSuperByOptimality => Factor::Complete,
            _ => Factor::Total,
        }
    }

    /// Whether the statement quantifies over a graph `G` (otherwise the
    /// first factor is fixed to `K_2`).
    pub fn takes_graph(self) -> bool {
        !matches!(
            self,
            ClaimId::CompleteLayerCutBound
                | ClaimId::TotalLayerCutBound
                | ClaimId::CompleteLayerSuper
                | ClaimId::TotalLayerSuper
        )
    }

    /// Smallest `n` covered by the statement.
    pub fn min_n(self) -> usize {
        match self {
            ClaimId::CompleteProductFormula | ClaimId::TotalProductFormula => 3,
            ClaimId::CompleteLayerCutBound
            | ClaimId::CompleteLayerSuper
            | ClaimId::CompleteSuperByInequality
            | ClaimId::CompleteSuperByOptimality => 5,
            _ => 3,
        }
    }

    /// `{5, 6}` for the `K_n` statements and `{3, 4}` for the `T_n` ones.
    pub fn default_ns(self) -> Vec<usize> {
        match self.factor() {
            Factor::Complete => vec![5, 6],
            Factor::Total => vec![3, 4],
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        let up = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == up)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown claim `{s}`")))
    }
}

/// Parses `all` or a comma-separated list of claim ids.
pub fn parse_claims(s: &str) -> Result<Vec<ClaimId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Counterexample,
    HypothesisNotMet,
    SkippedOverBudget,
}

/// The graph and parameter an instance was run on. `graph6` encodes the
/// first factor (`K_2` for the layer statements).
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Instance {
    pub graph: String,
    pub graph6: String,
    pub corpus_index: Option<usize>,
    pub n: usize,
    pub product: String,
}

/// Both sides of the checked relation plus supporting values.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Detail {
    pub relation: &'static str,
    pub lhs: Option<ExtCount>,
    pub rhs: Option<ExtCount>,
    pub values: BTreeMap<String, serde_json::Value>,
}

impl Detail {
    fn new(relation: &'static str) -> Self {
        Detail { relation, lhs: None, rhs: None, values: BTreeMap::new() }
    }

    fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("plain data serializes");
        self.values.insert(key.to_string(), v);
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimCheckResult {
    pub claim_id: ClaimId,
    pub instance: Instance,
    pub hypothesis_holds: bool,
    /// `None` when the conclusion could not be evaluated.
    pub conclusion_holds: Option<bool>,
    pub verdict: Verdict,
    /// Run outside the statement's `n` range; never counted as verification.
    pub exploratory: bool,
    pub certification: Option<Certification>,
    pub detail: Detail,
    /// Cuts of the product graph, keyed by what they certify.
    pub witnesses: BTreeMap<String, CutWitness>,
}

impl ClaimCheckResult {
    /// Rebuilds the product graph the witnesses refer to.
    pub fn subject_graph(&self) -> Result<Graph> {
        let left = parse_graph6(&self.instance.graph6)?;
        direct_product(&left, &self.claim_id.factor().build(self.instance.n)?)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// Budgets and switches for claim checks.
#[derive(Debug, Clone)]
pub struct HarnessConfig {
    pub limits: Limits,
    /// Products above this order are skipped.
    pub max_product_order: usize,
    pub time_cap: Option<Duration>,
    /// Evaluate `n` below a statement's range as exploration.
    pub probe_small_n: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            limits: Limits::default(),
            max_product_order: 64,
            time_cap: Some(Duration::from_secs(60)),
            probe_small_n: false,
        }
    }
}

impl HarnessConfig {
    pub(crate) fn instance_limits(&self) -> Limits {
        Limits { deadline: self.time_cap.map(|d| std::time::Instant::now() + d), ..self.limits }
    }
}
