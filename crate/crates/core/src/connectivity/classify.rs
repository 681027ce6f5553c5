use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::cuts::{minimum_edge_cut, minimum_restricted_edge_cut, repair_restricted_side};
use super::flow::min_terminal_cut;
use super::oracle::{oracle_min_cut, SideRule};
use super::witness::{keep_min, CutKind, CutWitness};
use super::Limits;

/// How a superness verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Exhaustive enumeration of bipartitions.
    Oracle,
    /// Minimum over seeded terminal flows.
    FlowCertified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperVerdict {
    pub holds: bool,
    /// A minimum cut that is not of the required trivial kind, when
    /// `holds` is false.
    pub witness: Option<CutWitness>,
    pub certification: Certification,
}

/// Super-λ: `λ = δ` and every bipartition with both sides of order at least
/// two cuts more than `λ` edges.
///
/// The second condition is checked with flows between `{0, a}` and `{c, d}`
/// for all distinct `a, c, d`, which covers every such bipartition.
pub fn is_super_lambda(g: &Graph, limits: &Limits) -> Result<SuperVerdict> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition("super-λ needs order >= 3".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lambda_cut = minimum_edge_cut(g, limits)?;
    let delta = g.min_degree().expect("nonempty");
    if lambda_cut.value < delta {
        return Ok(SuperVerdict {
            holds: false,
            witness: Some(lambda_cut),
            certification: Certification::FlowCertified,
        });
    }
    let lambda = lambda_cut.value;
    let mut offending: Option<CutWitness> = None;
    for a in 1..n {
        limits.check()?;
        let src = VertexSet::from_iter(n, [0, a]);
        for c in 1..n {
            for d in c + 1..n {
                if c == a || d == a {
                    continue;
                }
                let sink = VertexSet::from_iter(n, [c, d]);
                let cut = min_terminal_cut(g, &src, &sink, lambda + 1)?;
                if let Some(side) = cut.source_side {
                    keep_min(&mut offending, CutWitness::from_side(g, side)?);
                }
            }
        }
    }
    Ok(SuperVerdict { holds: offending.is_none(), witness: offending, certification: Certification::FlowCertified })
}

/// Vertex sets of order three that induce a connected subgraph, ascending.
fn connected_triples(g: &Graph) -> Vec<VertexSet> {
    let mut out = BTreeSet::new();
    for c in 0..g.order() {
        let nb = g.simple_neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                out.insert(VertexSet::from_iter(g.order(), [a, b, c]));
            }
        }
    }
    out.into_iter().collect()
}

/// Smallest cut of value `target` among bipartitions separating two
/// disjoint connected triples, repaired to be restricted with both sides of
/// order at least three.
///
/// When `target = ξ ≥ 1`, a side made only of disjoint edges cuts at least
/// `2ξ > target` edges, so every qualifying side contains a connected
/// triple and the search is complete.
fn triple_seeded_cut(g: &Graph, target: usize, limits: &Limits) -> Result<Option<CutWitness>> {
    let triples = connected_triples(g);
    for (i, s) in triples.iter().enumerate() {
        limits.check()?;
        for t in &triples[i + 1..] {
            if !s.is_disjoint(t) {
                continue;
            }
            let cut = min_terminal_cut(g, s, t, target + 1)?;
            let Some(side) = cut.source_side else { continue };
            if cut.value != target {
                continue;
            }
            let repaired = repair_restricted_side(g, &side, s, t);
            assert!(g.crossing_count(&repaired) <= cut.value, "cut repair increased the cut");
            let w = CutWitness::from_side(g, repaired)?;
            if w.is_restricted(g) && w.smaller_side() >= 3 {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Super-λ′: `λ′ = ξ` and no restricted bipartition with both sides of
/// order at least three attains `λ′`.
///
/// Graphs within the oracle budget are settled by enumeration; larger ones
/// by triple-seeded flows and marked as flow-certified.
pub fn is_super_lambda_prime(g: &Graph, limits: &Limits) -> Result<SuperVerdict> {
    let lp = minimum_restricted_edge_cut(g, limits)?.ok_or(Error::InfiniteLambdaPrime)?;
    let xi = g.min_edge_degree()?;
    let by_oracle = g.order() <= limits.oracle_order;
    let certification = if by_oracle { Certification::Oracle } else { Certification::FlowCertified };
    if lp.value != xi {
        return Ok(SuperVerdict { holds: false, witness: Some(lp), certification });
    }
    let offending = if by_oracle {
        oracle_min_cut(g, SideRule::RestrictedAtLeastThree, limits)?.filter(|w| w.value == lp.value)
    } else {
        triple_seeded_cut(g, lp.value, limits)?
    };
    debug_assert!(offending.as_ref().is_none_or(|w| w.kind == CutKind::LargeBothSides));
    Ok(SuperVerdict { holds: offending.is_none(), witness: offending, certification })
}

/// λ′-optimality, `λ′ = ξ`, for connected non-star graphs of order >= 4.
pub fn is_lambda_prime_optimal(g: &Graph, limits: &Limits) -> Result<bool> {
    if g.order() < 4 {
        return Err(Error::Precondition("λ′-optimality needs order >= 4".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_star() {
        return Err(Error::Precondition("λ′-optimality is undefined for stars".into()));
    }
    let lp = minimum_restricted_edge_cut(g, limits)?.ok_or(Error::InfiniteLambdaPrime)?;
    Ok(lp.value == g.min_edge_degree()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        barbell_graph, complete_graph, cycle_graph, direct_product, petersen_graph, star_graph, total_graph,
    };

    fn k2_times(g: &Graph) -> Graph {
        direct_product(&complete_graph(2).unwrap(), g).unwrap()
    }

    #[test]
    fn super_lambda_examples() {
        let lim = Limits::default();
        assert!(is_super_lambda(&k2_times(&complete_graph(5).unwrap()), &lim).unwrap().holds);
        let c5 = is_super_lambda(&cycle_graph(5).unwrap(), &lim).unwrap();
        assert!(!c5.holds);
        assert_eq!(c5.witness.unwrap().value, 2);
        assert!(is_super_lambda(&complete_graph(4).unwrap(), &lim).unwrap().holds);
        assert!(is_super_lambda(&complete_graph(2).unwrap(), &lim).is_err());
    }

    #[test]
    fn super_lambda_prime_examples() {
        let lim = Limits::default();
        let v = is_super_lambda_prime(&k2_times(&complete_graph(5).unwrap()), &lim).unwrap();
        assert!(v.holds);
        assert_eq!(v.certification, Certification::Oracle);
        assert!(is_super_lambda_prime(&k2_times(&total_graph(3).unwrap()), &lim).unwrap().holds);
        let c6 = is_super_lambda_prime(&cycle_graph(6).unwrap(), &lim).unwrap();
        assert!(!c6.holds);
        let w = c6.witness.unwrap();
        assert_eq!((w.value, w.kind), (2, CutKind::LargeBothSides));
        assert_eq!(is_super_lambda_prime(&star_graph(3).unwrap(), &lim).unwrap_err(), Error::InfiniteLambdaPrime);
    }

    #[test]
    fn flow_certified_path_matches_oracle() {
        let small = Limits::with_oracle_order(4);
        let lim = Limits::default();
        let graphs = [
            cycle_graph(6).unwrap(),
            petersen_graph(),
            k2_times(&complete_graph(5).unwrap()),
            k2_times(&total_graph(3).unwrap()),
            barbell_graph(3).unwrap(),
            complete_graph(6).unwrap(),
        ];
        for g in &graphs {
            let exact = is_super_lambda_prime(g, &lim).unwrap();
            let flow = is_super_lambda_prime(g, &small).unwrap();
            assert_eq!(flow.certification, Certification::FlowCertified);
            assert_eq!(exact.holds, flow.holds, "{g:?}");
            if let Some(w) = &flow.witness {
                assert!(w.validate(g).is_ok());
            }
        }
    }

    #[test]
    fn lambda_prime_optimality() {
        let lim = Limits::default();
        assert!(is_lambda_prime_optimal(&cycle_graph(4).unwrap(), &lim).unwrap());
        assert!(is_lambda_prime_optimal(&petersen_graph(), &lim).unwrap());
        assert!(!is_lambda_prime_optimal(&barbell_graph(3).unwrap(), &lim).unwrap());
        assert!(is_lambda_prime_optimal(&star_graph(3).unwrap(), &lim).is_err());
        assert!(is_lambda_prime_optimal(&complete_graph(3).unwrap(), &lim).is_err());
    }
}
