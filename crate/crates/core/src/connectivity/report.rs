use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;

use super::classify::{is_super_lambda, is_super_lambda_prime, Certification};
use super::cuts::{minimum_edge_cut, minimum_restricted_edge_cut};
use super::witness::CutWitness;
use super::{ExtCount, Limits};

/// Minimum cuts backing the report's numbers and negative verdicts.
#[derive(Debug, Clone, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportWitnesses {
    pub lambda: Option<CutWitness>,
    pub lambda_prime: Option<CutWitness>,
    pub super_lambda: Option<CutWitness>,
    pub super_lambda_prime: Option<CutWitness>,
}

/// Every invariant and classification for one graph. `None` fields are
/// not applicable; `notes` say why.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectivityReport {
    pub order: usize,
    pub size: usize,
    pub loops: usize,
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub min_edge_degree: Option<usize>,
    pub lambda: Option<usize>,
    pub lambda_prime: Option<ExtCount>,
    pub lambda_optimal: Option<bool>,
    pub super_lambda: Option<bool>,
    pub lambda_prime_optimal: Option<bool>,
    pub super_lambda_prime: Option<bool>,
    pub super_lambda_prime_certification: Option<Certification>,
    pub witnesses: ReportWitnesses,
    pub notes: Vec<String>,
}

impl ConnectivityReport {
    /// Checks the witnesses and the order relations between the fields.
    pub fn consistency_errors(&self, g: &Graph) -> Vec<String> {
        let mut errs = Vec::new();
        let w = &self.witnesses;
        for (name, wit) in [
            ("lambda", &w.lambda),
            ("lambdaPrime", &w.lambda_prime),
            ("superLambda", &w.super_lambda),
            ("superLambdaPrime", &w.super_lambda_prime),
        ] {
            if let Some(wit) = wit {
                if let Err(e) = wit.validate(g) {
                    errs.push(format!("{name} witness: {e}"));
                }
            }
        }
        if let (Some(l), Some(d)) = (self.lambda, self.min_degree) {
            if l > d {
                errs.push(format!("λ = {l} exceeds δ = {d}"));
            }
        }
        if let (Some(ExtCount::Finite(lp)), Some(xi)) = (self.lambda_prime, self.min_edge_degree) {
            if !g.is_star() && g.order() >= 4 && !g.has_loops() && lp as usize > xi {
                errs.push(format!("λ′ = {lp} exceeds ξ = {xi}"));
            }
        }
        if self.super_lambda_prime == Some(true) && self.lambda_prime_optimal == Some(false) {
            errs.push("super-λ′ without λ′-optimality".into());
        }
        if self.super_lambda == Some(true) && self.lambda_optimal == Some(false) {
            errs.push("super-λ without λ-optimality".into());
        }
        errs
    }
}

fn note(notes: &mut Vec<String>, field: &str, e: &Error) {
    notes.push(format!("{field}: {e}"));
}

/// Computes all fields; precondition failures become `None` plus a note.
pub fn full_report(g: &Graph, limits: &Limits) -> ConnectivityReport {
    let mut notes = Vec::new();
    let mut witnesses = ReportWitnesses::default();
    let connected = g.is_connected();
    let min_degree = g.min_degree();
    let min_edge_degree = g.min_edge_degree().ok();

    let lambda = match minimum_edge_cut(g, limits) {
        Ok(w) => {
            let v = w.value;
            witnesses.lambda = Some(w);
            Some(v)
        }
        Err(e) => {
            note(&mut notes, "lambda", &e);
            None
        }
    };
    let lambda_prime = match minimum_restricted_edge_cut(g, limits) {
        Ok(Some(w)) => {
            let v = w.value;
            witnesses.lambda_prime = Some(w);
            Some(ExtCount::from(v))
        }
        Ok(None) => Some(ExtCount::Infinite),
        Err(e) => {
            note(&mut notes, "lambdaPrime", &e);
            None
        }
    };
    let lambda_optimal = lambda.zip(min_degree).map(|(l, d)| l == d);
    let super_lambda = match is_super_lambda(g, limits) {
        Ok(v) => {
            witnesses.super_lambda = v.witness;
            Some(v.holds)
        }
        Err(e) => {
            note(&mut notes, "superLambda", &e);
            None
        }
    };
    let lambda_prime_optimal = if g.order() < 4 || g.is_star() || !connected {
        notes.push("lambdaPrimeOptimal: needs a connected non-star graph of order >= 4".into());
        None
    } else {
        match (lambda_prime, min_edge_degree) {
            (Some(ExtCount::Finite(lp)), Some(xi)) => Some(lp as usize == xi),
            _ => None,
        }
    };
    let (super_lambda_prime, super_lambda_prime_certification) = match lambda_prime {
        Some(ExtCount::Finite(_)) => match is_super_lambda_prime(g, limits) {
            Ok(v) => {
                witnesses.super_lambda_prime = v.witness;
                (Some(v.holds), Some(v.certification))
            }
            Err(e) => {
                note(&mut notes, "superLambdaPrime", &e);
                (None, None)
            }
        },
        Some(ExtCount::Infinite) => {
            note(&mut notes, "superLambdaPrime", &Error::InfiniteLambdaPrime);
            (None, None)
        }
        None => (None, None),
    };

    ConnectivityReport {
        order: g.order(),
        size: g.size(),
        loops: g.loop_count(),
        connected,
        min_degree,
        min_edge_degree,
        lambda,
        lambda_prime,
        lambda_optimal,
        super_lambda,
        lambda_prime_optimal,
        super_lambda_prime,
        super_lambda_prime_certification,
        witnesses,
        notes,
    }
}
