use rayon::prelude::*;
use serde::Serialize;

use crate::constructors::CorpusItem;
use crate::error::Result;

use super::{check_claim, ClaimCheckResult, ClaimId, HarnessConfig, Verdict};

/// Verdict counts for a sweep. Exploratory runs are tallied separately and
/// never affect `exit_code`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepSummary {
    pub total: usize,
    pub verified: usize,
    pub counterexample: usize,
    pub hypothesis_not_met: usize,
    pub skipped_over_budget: usize,
    pub exploratory: usize,
    pub exploratory_counterexample: usize,
}

impl SweepSummary {
    pub fn from_results(results: &[ClaimCheckResult]) -> Self {
        let mut s = SweepSummary { total: results.len(), ..Default::default() };
        for r in results {
            if r.exploratory {
                s.exploratory += 1;
                s.exploratory_counterexample += usize::from(r.verdict == Verdict::Counterexample);
                continue;
            }
            match r.verdict {
                Verdict::Verified => s.verified += 1,
                Verdict::Counterexample => s.counterexample += 1,
                Verdict::HypothesisNotMet => s.hypothesis_not_met += 1,
                Verdict::SkippedOverBudget => s.skipped_over_budget += 1,
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.counterexample > 0)
    }
}

/// Runs every claim against the corpus for each `n` (default: the claim's
/// own `default_ns`). Graph-free claims run once per `n`, before the
/// corpus. Output order does not depend on the rayon pool size.
pub fn sweep(
    corpus: &[CorpusItem],
    claims: &[ClaimId],
    ns: Option<&[usize]>,
    config: &HarnessConfig,
) -> Result<(SweepSummary, Vec<ClaimCheckResult>)> {
    let ns_for = |c: ClaimId| ns.map_or_else(|| c.default_ns(), <[usize]>::to_vec);
    let mut jobs: Vec<(ClaimId, Option<&CorpusItem>, usize)> = Vec::new();
    let mut fixed: Vec<ClaimId> = claims.iter().copied().filter(|c| !c.takes_graph()).collect();
    fixed.sort();
    fixed.dedup();
    for c in fixed {
        jobs.extend(ns_for(c).into_iter().map(|n| (c, None, n)));
    }
    for item in corpus {
        for &c in claims.iter().filter(|c| c.takes_graph()) {
            jobs.extend(ns_for(c).into_iter().map(|n| (c, Some(item), n)));
        }
    }
    let results =
        jobs.into_par_iter().map(|(c, item, n)| check_claim(c, item, n, config)).collect::<Result<Vec<_>>>()?;
    Ok((SweepSummary::from_results(&results), results))
}
