use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `T_n`: `K_n` with a loop at every vertex.
pub fn total_graph(n: usize) -> Result<Graph> {
    require(n >= 1, "total graph needs n >= 1")?;
    let simple = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, simple.chain((0..n).map(|v| (v, v))))
}

/// `P_k`: the path on `k` vertices.
pub fn path_graph(k: usize) -> Result<Graph> {
    require(k >= 1, "path needs k >= 1")?;
    Graph::from_edges(k, (1..k).map(|v| (v - 1, v)))
}

/// `C_k`, k >= 3.
pub fn cycle_graph(k: usize) -> Result<Graph> {
    require(k >= 3, "cycle needs k >= 3")?;
    Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k)))
}

/// `K_{1,k}` with center 0.
pub fn star_graph(k: usize) -> Result<Graph> {
    require(k >= 1, "star needs k >= 1")?;
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite_graph(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1")?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Two copies of `K_k` joined by a single edge between vertex `k-1` and `k`.
pub fn barbell_graph(k: usize) -> Result<Graph> {
    require(k >= 2, "barbell needs k >= 2")?;
    let clique = move |off: usize| (0..k).flat_map(move |u| (u + 1..k).map(move |v| (u + off, v + off)));
    Graph::from_edges(2 * k, clique(0).chain(clique(k)).chain([(k - 1, k)]))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen_graph() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("static construction")
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Total(usize),
    CompleteBipartite(usize, usize),
    Barbell(usize),
    Petersen,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(k) => path_graph(k),
            Family::Cycle(k) => cycle_graph(k),
            Family::Star(k) => star_graph(k),
            Family::Complete(k) => complete_graph(k),
            Family::Total(k) => total_graph(k),
            Family::CompleteBipartite(a, b) => complete_bipartite_graph(a, b),
            Family::Barbell(k) => barbell_graph(k),
            Family::Petersen => Ok(petersen_graph()),
        }
    }

    /// Resolves a family name and an optional parameter string such as
    /// `"4"` or `"2,3"`.
    pub fn from_parts(name: &str, param: Option<&str>) -> Result<Family> {
        let ints = || -> Result<Vec<usize>> {
            let p = param.ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs a parameter")))?;
            p.split(',')
                .map(|t| {
                    t.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad parameter `{p}` for `{name}`")))
                })
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [k] => Ok(*k),
                _ => Err(Error::InvalidParameter(format!("family `{name}` takes one parameter"))),
            }
        };
        let family = match name.to_ascii_lowercase().as_str() {
            "path" | "p" => Family::Path(one()?),
            "cycle" | "c" => Family::Cycle(one()?),
            "star" => Family::Star(one()?),
            "complete" | "k" => Family::Complete(one()?),
            "total" | "t" => Family::Total(one()?),
            "complete-bipartite" | "complete_bipartite" | "kab" => match ints()?.as_slice() {
                [a, b] => Family::CompleteBipartite(*a, *b),
                _ => return Err(Error::InvalidParameter("complete-bipartite takes `a,b`".into())),
            },
            "barbell" => Family::Barbell(one()?),
            "petersen" => {
                if param.is_some() {
                    return Err(Error::InvalidParameter("petersen takes no parameter".into()));
                }
                Family::Petersen
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(family)
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `name:param` (`cycle:4`, `complete-bipartite:2,3`,
    /// `petersen`) and the compact `K5` / `T3` / `C4` / `P4` forms.
    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        if let Some((name, param)) = s.split_once(':') {
            return Family::from_parts(name, Some(param));
        }
        let split = s.find(|c: char| c.is_ascii_digit());
        match split {
            Some(i) if i > 0 && s[i..].chars().all(|c| c.is_ascii_digit()) => {
                Family::from_parts(&s[..i], Some(&s[i..]))
            }
            _ => Family::from_parts(s, None),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(k) => write!(f, "path:{k}"),
            Family::Cycle(k) => write!(f, "cycle:{k}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Complete(k) => write!(f, "complete:{k}"),
            Family::Total(k) => write!(f, "total:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            Family::Barbell(k) => write!(f, "barbell:{k}"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

/// Builds a named family from `name` and an optional parameter string.
pub fn named_family(name: &str, param: Option<&str>) -> Result<Graph> {
    Family::from_parts(name, param)?.build()
}
