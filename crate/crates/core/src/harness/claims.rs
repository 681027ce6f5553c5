use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::connectivity::{
    is_lambda_prime_optimal, is_super_lambda, is_super_lambda_prime, minimum_restricted_edge_cut, Certification,
    CutWitness, ExtCount, Limits,
};
use crate::constructors::{complete_graph, emit_graph6, CorpusItem, DirectProduct};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{ClaimCheckResult, ClaimId, Detail, Factor, HarnessConfig, Instance, Verdict};

/// `(n−1)ξ + 2(n−2)` for `K_n`, `nξ + 2(n−1)` for `T_n`: the edge-isolating
/// cut value in the product.
pub(crate) fn edge_term(factor: Factor, n: u64, xi: u64) -> u64 {
    match factor {
        Factor::Complete => (n - 1) * xi + 2 * (n - 2),
        Factor::Total => n * xi + 2 * (n - 1),
    }
}

/// `n(n−1)λ′` for `K_n`, `n²λ′` for `T_n`: the layer-aligned cut value.
pub(crate) fn layer_term(factor: Factor, n: u64, lambda_prime: ExtCount) -> ExtCount {
    match factor {
        Factor::Complete => lambda_prime.scale(n * (n - 1)),
        Factor::Total => lambda_prime.scale(n * n),
    }
}

/// The strict inequality `layer term > edge term`; an infinite `λ′(G)`
/// satisfies it.
pub fn inequality_hypothesis(factor: Factor, n: usize, xi: usize, lambda_prime: ExtCount) -> bool {
    layer_term(factor, n as u64, lambda_prime) > ExtCount::from(edge_term(factor, n as u64, xi as u64))
}

fn lambda_prime_of(g: &Graph, limits: &Limits) -> Result<(ExtCount, Option<CutWitness>)> {
    Ok(match minimum_restricted_edge_cut(g, limits)? {
        Some(w) => (ExtCount::from(w.value), Some(w)),
        None => (ExtCount::Infinite, None),
    })
}

/// Shared bookkeeping for one (claim, graph, n) instance.
struct Run<'a> {
    claim: ClaimId,
    graph: &'a Graph,
    label: String,
    corpus_index: Option<usize>,
    n: usize,
    config: &'a HarnessConfig,
    limits: Limits,
    detail: Detail,
    witnesses: BTreeMap<String, CutWitness>,
    certification: Option<Certification>,
}

impl<'a> Run<'a> {
    fn new(
        claim: ClaimId,
        graph: &'a Graph,
        label: String,
        corpus_index: Option<usize>,
        n: usize,
        config: &'a HarnessConfig,
        relation: &'static str,
    ) -> Self {
        Run {
            claim,
            graph,
            label,
            corpus_index,
            n,
            config,
            limits: config.instance_limits(),
            detail: Detail::new(relation),
            witnesses: BTreeMap::new(),
            certification: None,
        }
    }

    /// Whether `n` is admissible, and whether the run is exploratory.
    fn n_range(&self) -> (bool, bool) {
        let floor = if self.claim.factor() == Factor::Complete { 2 } else { 1 };
        if self.n < floor {
            return (false, false);
        }
        if self.n >= self.claim.min_n() {
            (true, false)
        } else if self.config.probe_small_n {
            (true, true)
        } else {
            (false, false)
        }
    }

    fn product(&mut self) -> Result<Option<Graph>> {
        let order = self.graph.order() * self.n;
        self.detail.set("productOrder", order);
        if order > self.config.max_product_order {
            return Err(Error::OverBudget { order, budget: self.config.max_product_order });
        }
        if self.n == 0 {
            return Ok(None);
        }
        let right = self.claim.factor().build(self.n)?;
        Ok(Some(DirectProduct::new(self.graph, &right)?.into_graph()))
    }

    fn witness(&mut self, key: &str, w: Option<CutWitness>) {
        if let Some(w) = w {
            self.witnesses.insert(key.to_string(), w);
        }
    }

    /// Super-λ′ of the product; `None` when it is not defined.
    fn product_super_lambda_prime(&mut self, product: &Graph) -> Result<Option<bool>> {
        match is_super_lambda_prime(product, &self.limits) {
            Ok(v) => {
                self.certification = Some(v.certification);
                self.detail.set("productSuperLambdaPrime", v.holds);
                self.witness("productSuperLambdaPrime", v.witness);
                Ok(Some(v.holds))
            }
            Err(Error::Disconnected | Error::InfiniteLambdaPrime | Error::Edgeless) => {
                self.detail.set("productSuperLambdaPrime", serde_json::Value::Null);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self, outcome: Result<(bool, Option<bool>)>) -> ClaimCheckResult {
        let (_, exploratory) = self.n_range();
        let mut detail = self.detail;
        let (hypothesis_holds, conclusion_holds, verdict) = match outcome {
            Ok((hyp, concl)) => {
                let verdict = match (hyp, concl) {
                    (false, _) => Verdict::HypothesisNotMet,
                    (true, Some(true)) => Verdict::Verified,
                    (true, Some(false)) => Verdict::Counterexample,
                    (true, None) => {
                        detail.set("note", "conclusion not evaluable");
                        Verdict::HypothesisNotMet
                    }
                };
                (hyp, concl, verdict)
            }
            Err(e @ (Error::OverBudget { .. } | Error::TimedOut)) => {
                detail.set("skipReason", e.to_string());
                (false, None, Verdict::SkippedOverBudget)
            }
            Err(e) => {
                detail.set("error", e.to_string());
                (false, None, Verdict::HypothesisNotMet)
            }
        };
        ClaimCheckResult {
            claim_id: self.claim,
            instance: Instance {
                graph6: emit_graph6(self.graph).unwrap_or_default(),
                graph: self.label,
                corpus_index: self.corpus_index,
                n: self.n,
                product: format!("G x {}", self.claim.factor().symbol(self.n)),
            },
            hypothesis_holds,
            conclusion_holds,
            verdict,
            exploratory,
            certification: self.certification,
            detail,
            witnesses: self.witnesses,
        }
    }
}

fn claim_for(factor: Factor, complete: ClaimId, total: ClaimId) -> ClaimId {
    match factor {
        Factor::Complete => complete,
        Factor::Total => total,
    }
}

fn label_of(item: &CorpusItem) -> (String, Option<usize>) {
    (item.label.clone(), Some(item.index))
}

/// Compares `λ′(G × F_n)` with `min{edge term, layer term}`.
pub fn check_product_formula(factor: Factor, item: &CorpusItem, n: usize, config: &HarnessConfig) -> ClaimCheckResult {
    let claim = claim_for(factor, ClaimId::CompleteProductFormula, ClaimId::TotalProductFormula);
    let (label, index) = label_of(item);
    let mut run =
        Run::new(claim, &item.graph, label, index, n, config, "lambdaPrime(G x F) == min(edgeTerm, layerTerm)");
    let outcome = (|| {
        let g = run.graph;
        let (range_ok, _) = run.n_range();
        let admissible = g.order() >= 2 && g.is_connected();
        let hypothesis = admissible && range_ok;
        if !admissible || run.n < 2 {
            return Ok((hypothesis, None));
        }
        let xi = g.min_edge_degree()?;
        let (lp, _) = lambda_prime_of(g, &run.limits)?;
        let edge = ExtCount::from(edge_term(factor, n as u64, xi as u64));
        let layer = layer_term(factor, n as u64, lp);
        let formula = edge.min(layer);
        run.detail.set("xi", xi);
        run.detail.set("lambdaPrimeG", lp);
        run.detail.set("edgeTerm", edge);
        run.detail.set("layerTerm", layer);
        run.detail.rhs = Some(formula);
        let Some(product) = run.product()? else { return Ok((hypothesis, None)) };
        let computed = match lambda_prime_of(&product, &run.limits) {
            Ok((v, w)) => {
                run.witness("productLambdaPrime", w);
                v
            }
            Err(Error::Disconnected) => return Ok((hypothesis, None)),
            Err(e) => return Err(e),
        };
        run.detail.lhs = Some(computed);
        Ok((hypothesis, Some(computed == formula)))
    })();
    run.finish(outcome)
}

/// Exhaustive check of the layer cut bound on `K_2 × F_n`: every `A` with
/// `2 <= |A| <= 2n−2` cuts at least the bound, and the sets attaining it
/// are exactly the adjacent pairs and their complements.
pub fn check_layer_cut_bound(factor: Factor, n: usize, config: &HarnessConfig) -> ClaimCheckResult {
    let claim = claim_for(factor, ClaimId::CompleteLayerCutBound, ClaimId::TotalLayerCutBound);
    let k2 = complete_graph(2).expect("K2");
    let mut run = Run::new(
        claim,
        &k2,
        "complete:2".into(),
        None,
        n,
        config,
        "cut(A) >= bound, equality iff A or complement induces K2",
    );
    let outcome = (|| {
        let (range_ok, _) = run.n_range();
        if run.n < 2 {
            return Ok((false, None));
        }
        let Some(p) = run.product()? else { return Ok((false, None)) };
        let order = p.order();
        if order > run.limits.oracle_order {
            return Err(Error::OverBudget { order, budget: run.limits.oracle_order });
        }
        let bound = match factor {
            Factor::Complete => 2 * (n - 2),
            Factor::Total => 2 * (n - 1),
        };
        let adj: Vec<u64> = (0..order).map(|v| p.simple_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let full = (1u64 << order) - 1;
        let induces_k2 = |s: u64| s.count_ones() == 2 && adj[s.trailing_zeros() as usize] & s != 0;
        let (mut checked, mut below, mut equal, mut characterized) = (0u64, 0u64, 0u64, 0u64);
        let (mut uncharacterized_equal, mut strict_characterized) = (0u64, 0u64);
        let mut min_cut: Option<(usize, u64)> = None;
        for a in 1..full {
            let size = a.count_ones() as usize;
            if size < 2 || size > order - 2 {
                continue;
            }
            checked += 1;
            let mut cut = 0usize;
            let mut rest = a;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                cut += (adj[v] & !a & full).count_ones() as usize;
            }
            if min_cut.is_none_or(|(c, m)| cut < c || (cut == c && a < m)) {
                min_cut = Some((cut, a));
            }
            let is_char = induces_k2(a) || induces_k2(full & !a);
            characterized += u64::from(is_char);
            match cut.cmp(&bound) {
                std::cmp::Ordering::Less => below += 1,
                std::cmp::Ordering::Equal => {
                    equal += 1;
                    uncharacterized_equal += u64::from(!is_char);
                }
                std::cmp::Ordering::Greater => strict_characterized += u64::from(is_char),
            }
        }
        run.certification = Some(Certification::Oracle);
        run.detail.set("subsetsChecked", checked);
        run.detail.set("belowBound", below);
        run.detail.set("equalityCases", equal);
        run.detail.set("characterizedCases", characterized);
        run.detail.set("equalityNotCharacterized", uncharacterized_equal);
        run.detail.set("characterizedNotEquality", strict_characterized);
        run.detail.rhs = Some(ExtCount::from(bound));
        if let Some((c, mask)) = min_cut {
            run.detail.lhs = Some(ExtCount::from(c));
            let side = VertexSet::from_mask(order, mask);
            run.witness("minimumCut", Some(CutWitness::from_side(&p, side)?));
        }
        let holds = min_cut.is_some() && below == 0 && uncharacterized_equal == 0 && strict_characterized == 0;
        Ok((range_ok, Some(holds)))
    })();
    run.finish(outcome)
}

/// Super-λ and super-λ′ of `K_2 × F_n`.
pub fn check_layer_product_super(factor: Factor, n: usize, config: &HarnessConfig) -> ClaimCheckResult {
    let claim = claim_for(factor, ClaimId::CompleteLayerSuper, ClaimId::TotalLayerSuper);
    let k2 = complete_graph(2).expect("K2");
    let mut run = Run::new(claim, &k2, "complete:2".into(), None, n, config, "superLambda && superLambdaPrime");
    let outcome = (|| {
        let (range_ok, _) = run.n_range();
        if run.n < 2 {
            return Ok((false, None));
        }
        let Some(p) = run.product()? else { return Ok((false, None)) };
        run.detail.set("delta", p.min_degree());
        run.detail.set("xi", p.min_edge_degree().ok());
        let super_lambda = match is_super_lambda(&p, &run.limits) {
            Ok(v) => {
                run.witness("productSuperLambda", v.witness);
                Some(v.holds)
            }
            Err(Error::Disconnected | Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        run.detail.set("productSuperLambda", super_lambda);
        if let Ok((lp, w)) = lambda_prime_of(&p, &run.limits) {
            run.detail.lhs = Some(lp);
            run.witness("productLambdaPrime", w);
        }
        run.detail.rhs = p.min_edge_degree().ok().map(ExtCount::from);
        let super_lambda_prime = run.product_super_lambda_prime(&p)?;
        let conclusion = match (super_lambda, super_lambda_prime) {
            (Some(a), Some(b)) => Some(a && b),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        };
        Ok((range_ok, conclusion))
    })();
    run.finish(outcome)
}

/// If the layer term strictly exceeds the edge term, `G × F_n` must be
/// super-λ′. The product's classification is recorded either way.
pub fn check_super_by_inequality(
    factor: Factor,
    item: &CorpusItem,
    n: usize,
    config: &HarnessConfig,
) -> ClaimCheckResult {
    let claim = claim_for(factor, ClaimId::CompleteSuperByInequality, ClaimId::TotalSuperByInequality);
    let (label, index) = label_of(item);
    let mut run =
        Run::new(claim, &item.graph, label, index, n, config, "layerTerm > edgeTerm => superLambdaPrime(G x F)");
    let outcome = (|| {
        let g = run.graph;
        let (range_ok, _) = run.n_range();
        let admissible = g.order() >= 2 && g.is_connected();
        let mut hypothesis = false;
        if admissible && run.n >= 2 {
            let xi = g.min_edge_degree()?;
            let (lp, _) = lambda_prime_of(g, &run.limits)?;
            let ineq = inequality_hypothesis(factor, n, xi, lp);
            run.detail.set("xi", xi);
            run.detail.set("lambdaPrimeG", lp);
            run.detail.set("inequalityHypothesis", ineq);
            run.detail.lhs = Some(layer_term(factor, n as u64, lp));
            run.detail.rhs = Some(ExtCount::from(edge_term(factor, n as u64, xi as u64)));
            hypothesis = range_ok && ineq;
        }
        let Some(product) = run.product()? else { return Ok((hypothesis, None)) };
        let conclusion = run.product_super_lambda_prime(&product)?;
        Ok((hypothesis, conclusion))
    })();
    run.finish(outcome)
}

/// If `G` is λ′-optimal, `G × F_n` must be super-λ′. Also records whether
/// the inequality hypothesis holds on the same instance.
pub fn check_super_by_optimality(
    factor: Factor,
    item: &CorpusItem,
    n: usize,
    config: &HarnessConfig,
) -> ClaimCheckResult {
    let claim = claim_for(factor, ClaimId::CompleteSuperByOptimality, ClaimId::TotalSuperByOptimality);
    let (label, index) = label_of(item);
    let mut run =
        Run::new(claim, &item.graph, label, index, n, config, "lambdaPrimeOptimal(G) => superLambdaPrime(G x F)");
    let outcome = (|| {
        let g = run.graph;
        let (range_ok, _) = run.n_range();
        let optimal = match is_lambda_prime_optimal(g, &run.limits) {
            Ok(b) => Some(b),
            Err(Error::Precondition(_) | Error::Disconnected | Error::InfiniteLambdaPrime) => None,
            Err(e) => return Err(e),
        };
        run.detail.set("lambdaPrimeOptimal", optimal);
        if g.order() >= 2 && g.is_connected() && run.n >= 2 {
            let xi = g.min_edge_degree()?;
            let (lp, _) = lambda_prime_of(g, &run.limits)?;
            run.detail.set("inequalityHypothesis", inequality_hypothesis(factor, n, xi, lp));
            run.detail.lhs = Some(lp);
            run.detail.rhs = Some(ExtCount::from(xi));
        }
        let hypothesis = range_ok && optimal == Some(true);
        let Some(product) = run.product()? else { return Ok((hypothesis, None)) };
        let conclusion = run.product_super_lambda_prime(&product)?;
        Ok((hypothesis, conclusion))
    })();
    run.finish(outcome)
}

/// Runs `claim` on `item` (ignored by the `K_2`-only statements).
pub fn check_claim(
    claim: ClaimId,
    item: Option<&CorpusItem>,
    n: usize,
    config: &HarnessConfig,
) -> Result<ClaimCheckResult> {
    let factor = claim.factor();
    let need = || item.ok_or_else(|| Error::Precondition(format!("{claim} needs a graph")));
    Ok(match claim {
        ClaimId::CompleteProductFormula | ClaimId::TotalProductFormula => {
            check_product_formula(factor, need()?, n, config)
        }
        ClaimId::CompleteLayerCutBound | ClaimId::TotalLayerCutBound => check_layer_cut_bound(factor, n, config),
        ClaimId::CompleteLayerSuper | ClaimId::TotalLayerSuper => check_layer_product_super(factor, n, config),
        ClaimId::CompleteSuperByInequality | ClaimId::TotalSuperByInequality => {
            check_super_by_inequality(factor, need()?, n, config)
        }
        ClaimId::CompleteSuperByOptimality | ClaimId::TotalSuperByOptimality => {
            check_super_by_optimality(factor, need()?, n, config)
        }
    })
}
