use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::constructors::enumerate::{enumerate_connected_graphs_up_to, DEFAULT_ENUMERATION_BUDGET};
use crate::constructors::families::Family;
use crate::constructors::graph6::{emit_graph6, parse_graph6_lines};
use crate::constructors::random::erdos_renyi;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where corpus graphs come from.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSource {
    /// Every connected graph with order in `min..=max`, up to isomorphism.
    Exhaustive {
        min: usize,
        max: usize,
    },
    Family(Family),
    Graph6File(PathBuf),
    /// `count` samples of `G(order, probability)` with seeds `seed..seed+count`.
    Random {
        order: usize,
        probability: f64,
        seed: u64,
        count: u64,
    },
}

/// A list of sources plus filters, written as `;`-separated terms:
///
/// ```text
/// exhaustive:5            orders 1..=5
/// exhaustive:3-5
/// family:cycle:4-7        a parameter range expands to one graph each
/// family:petersen
/// graph6:path/to/file.g6
/// random:12:0.3:7:100     order, probability, first seed, count
/// connected | nonstar     filters
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub sources: Vec<CorpusSource>,
    pub connected_only: bool,
    pub non_star_only: bool,
    pub enumeration_budget: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            sources: Vec::new(),
            connected_only: false,
            non_star_only: false,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

/// One corpus member; `index` is its position after filtering.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub index: usize,
    pub label: String,
    pub graph: Graph,
}

fn spec_err(s: &str) -> Error {
    Error::CorpusSpec(s.to_string())
}

fn parse_range(s: &str, whole: &str) -> Result<(usize, usize)> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| spec_err(whole));
    match s.split_once('-') {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(spec_err(whole));
            }
            Ok((a, b))
        }
        None => num(s).map(|k| (k, k)),
    }
}

impl CorpusSpec {
    pub fn exhaustive(max_order: usize) -> Self {
        CorpusSpec { sources: vec![CorpusSource::Exhaustive { min: 1, max: max_order }], ..Default::default() }
    }

    pub fn families(families: impl IntoIterator<Item = Family>) -> Self {
        CorpusSpec { sources: families.into_iter().map(CorpusSource::Family).collect(), ..Default::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// Generates the corpus in source order, then applies the filters.
    pub fn items(&self) -> Result<Vec<CorpusItem>> {
        let mut raw: Vec<(String, Graph)> = Vec::new();
        for source in &self.sources {
            match source {
                CorpusSource::Exhaustive { min, max } => {
                    let levels = enumerate_connected_graphs_up_to(*max, self.enumeration_budget)?;
                    for level in levels.into_iter().skip(min.saturating_sub(1)) {
                        for g in level {
                            raw.push((emit_graph6(&g)?, g));
                        }
                    }
                }
                CorpusSource::Family(f) => raw.push((f.to_string(), f.build()?)),
                CorpusSource::Graph6File(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
                    for g in parse_graph6_lines(&text)? {
                        raw.push((emit_graph6(&g)?, g));
                    }
                }
                CorpusSource::Random { order, probability, seed, count } => {
                    for s in *seed..seed + count {
                        let g = erdos_renyi(*order, *probability, s)?;
                        raw.push((format!("random:{order}:{probability}:{s}"), g));
                    }
                }
            }
        }
        Ok(raw
            .into_iter()
            .filter(|(_, g)| !self.connected_only || g.is_connected())
            .filter(|(_, g)| !self.non_star_only || !g.is_star())
            .enumerate()
            .map(|(index, (label, graph))| CorpusItem { index, label, graph })
            .collect())
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut spec = CorpusSpec::default();
        for term in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, rest) = term.split_once(':').unwrap_or((term, ""));
            match kind {
                "connected" => spec.connected_only = true,
                "nonstar" => spec.non_star_only = true,
                "exhaustive" => {
                    let (min, max) = match rest.split_once('-') {
                        Some(_) => parse_range(rest, term)?,
                        None => (1, parse_range(rest, term)?.1),
                    };
                    spec.sources.push(CorpusSource::Exhaustive { min: min.max(1), max });
                }
                "family" => {
                    let (name, param) = match rest.split_once(':') {
                        Some((n, p)) => (n, Some(p)),
                        None => (rest, None),
                    };
                    match param {
                        Some(p) if p.contains('-') => {
                            let (a, b) = parse_range(p, term)?;
                            for k in a..=b {
                                let family = Family::from_parts(name, Some(&k.to_string()))?;
                                spec.sources.push(CorpusSource::Family(family));
                            }
                        }
                        _ => spec.sources.push(CorpusSource::Family(Family::from_parts(name, param)?)),
                    }
                }
                "graph6" if !rest.is_empty() => spec.sources.push(CorpusSource::Graph6File(rest.into())),
                "random" => {
                    let parts: Vec<&str> = rest.split(':').collect();
                    if !(3..=4).contains(&parts.len()) {
                        return Err(spec_err(term));
                    }
                    let order = parts[0].parse().map_err(|_| spec_err(term))?;
                    let probability = parts[1].parse().map_err(|_| spec_err(term))?;
                    let seed = parts[2].parse().map_err(|_| spec_err(term))?;
                    let count = match parts.get(3) {
                        Some(c) => c.parse().map_err(|_| spec_err(term))?,
                        None => 1,
                    };
                    spec.sources.push(CorpusSource::Random { order, probability, seed, count });
                }
                _ => return Err(spec_err(term)),
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .sources
            .iter()
            .map(|s| match s {
                CorpusSource::Exhaustive { min, max } => format!("exhaustive:{min}-{max}"),
                CorpusSource::Family(fam) => format!("family:{fam}"),
                CorpusSource::Graph6File(p) => format!("graph6:{}", p.display()),
                CorpusSource::Random { order, probability, seed, count } => {
                    format!("random:{order}:{probability}:{seed}:{count}")
                }
            })
            .collect();
        if self.connected_only {
            terms.push("connected".into());
        }
        if self.non_star_only {
            terms.push("nonstar".into());
        }
        write!(f, "{}", terms.join(";"))
    }
}
