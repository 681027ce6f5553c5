//! Runs every claim over the connected graphs of order <= 4 and prints a
//! per-claim tally, plus one full JSON result.

use lplab::constructors::CorpusSpec;
use lplab::harness::{sweep, ClaimId, HarnessConfig, SweepSummary, Verdict};

fn main() -> lplab::Result<()> {
    let corpus = "exhaustive:4;connected".parse::<CorpusSpec>()?.items()?;
    let (summary, results) = sweep(&corpus, &ClaimId::ALL, None, &HarnessConfig::default())?;
    for claim in ClaimId::ALL {
        let mine: Vec<_> = results.iter().filter(|r| r.claim_id == claim).cloned().collect();
        let t = SweepSummary::from_results(&mine);
        println!(
            "{claim}  verified {:>3}  counterexample {}  hypothesis-not-met {:>2}  skipped {}",
            t.verified, t.counterexample, t.hypothesis_not_met, t.skipped_over_budget
        );
    }
    if let Some(r) =
        results.iter().find(|r| r.verdict == Verdict::Verified && r.claim_id == ClaimId::CompleteSuperByInequality)
    {
        println!("{}", r.to_json_line());
    }
    println!("exit code would be {}", summary.exit_code());
    Ok(())
}
