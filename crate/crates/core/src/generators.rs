//! Fixed graph families with canonical vertex numbering and edge order, plus
//! a textual family spec (`name` or `name:p1,p2,...`) for the CLI.

use std::fmt;
use std::str::FromStr;

use crate::{Error, MultiGraph};

/// Complete graph on `n >= 1` vertices; edges in lexicographic order.
pub fn complete(n: usize) -> Result<MultiGraph, Error> {
    if n == 0 {
        return Err(Error::InvalidFamily(
            "complete graph needs at least one vertex".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    MultiGraph::new(n, edges)
}

/// Complete bipartite graph with sides `a` and `b` (both >= 1). The first
/// side is `0..a`, the second `a..a+b`; edges in lexicographic order.
pub fn complete_bipartite(a: usize, b: usize) -> Result<MultiGraph, Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidFamily(
            "complete bipartite graph needs nonempty sides".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    MultiGraph::new(a + b, edges)
}

/// The octahedron, i.e. the complete tripartite graph on parts
/// `{0,1}, {2,3}, {4,5}`; 4-regular on 6 vertices.
pub fn octahedron() -> MultiGraph {
    let part = |v: usize| v / 2;
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if part(i) != part(j) {
                edges.push((i, j));
            }
        }
    }
    MultiGraph::new(6, edges).expect("octahedron endpoints are in range")
}

/// Dipole: two vertices joined by `n >= 1` parallel edges.
pub fn dipole(n: usize) -> Result<MultiGraph, Error> {
    if n == 0 {
        return Err(Error::InvalidFamily("dipole needs at least one edge".into()));
    }
    MultiGraph::new(2, std::iter::repeat((0, 1)).take(n))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<MultiGraph, Error> {
    if n < 3 {
        return Err(Error::InvalidFamily(
            "cycle needs at least three vertices".into(),
        ));
    }
    MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Cycle on `n >= 2` vertices with every edge doubled; the two copies of each
/// cycle edge are consecutive in the edge order. 4-regular.
pub fn doubled_cycle(n: usize) -> Result<MultiGraph, Error> {
    if n < 2 {
        return Err(Error::InvalidFamily(
            "doubled cycle needs at least two vertices".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let pair = (i, (i + 1) % n);
        edges.push(pair);
        edges.push(pair);
    }
    MultiGraph::new(n, edges)
}

/// Bouquet: a single vertex with `k` loops. `bouquet(2)` is 4-regular.
pub fn bouquet(k: usize) -> MultiGraph {
    MultiGraph::new(1, std::iter::repeat((0, 0)).take(k)).expect("loops at vertex 0 are in range")
}

/// Circulant graph on `m >= 3` vertices: vertex `i` is joined to `i +/- s`
/// (mod `m`) for each step `s`. Steps must be distinct and lie in
/// `1..=m/2`; a step of exactly `m/2` contributes one diameter edge per
/// antipodal pair. Edges are emitted step by step in the given order.
pub fn circulant(m: usize, steps: &[usize]) -> Result<MultiGraph, Error> {
    if m < 3 {
        return Err(Error::InvalidFamily(
            "circulant needs at least three vertices".into(),
        ));
    }
    if steps.is_empty() {
        return Err(Error::InvalidFamily("circulant needs at least one step".into()));
    }
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    for &s in steps {
        if s == 0 || s > m / 2 {
            return Err(Error::InvalidFamily(format!(
                "circulant step {s} out of range 1..={}",
                m / 2
            )));
        }
        if !seen.insert(s) {
            return Err(Error::InvalidFamily(format!("duplicate circulant step {s}")));
        }
        let span = if 2 * s == m { m / 2 } else { m };
        for i in 0..span {
            edges.push((i, (i + s) % m));
        }
    }
    MultiGraph::new(m, edges)
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes, inner pentagram `5..10`.
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::new(10, edges).expect("petersen endpoints are in range")
}

/// The graph families nameable in a [`FamilySpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Octahedron,
    Dipole,
    DoubledCycle,
    Bouquet,
    Circulant,
    Petersen,
    Cycle,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Octahedron => "octahedron",
            Family::Dipole => "dipole",
            Family::DoubledCycle => "doubled_cycle",
            Family::Bouquet => "bouquet",
            Family::Circulant => "circulant",
            Family::Petersen => "petersen",
            Family::Cycle => "cycle",
        }
    }
}

/// A parsed family spec: family name plus integer parameters.
///
/// Grammar: `<family>` for parameterless families, `<family>:<p1>,<p2>,...`
/// otherwise. Examples: `complete:5`, `circulant:18,1,8`, `petersen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    /// Builds the named graph, validating parameter count and values.
    pub fn build(&self) -> Result<MultiGraph, Error> {
        let arity = |want: usize| -> Result<(), Error> {
            if self.params.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{} takes {} parameter(s), got {}",
                    self.family.name(),
                    want,
                    self.params.len()
                )))
            }
        };
        match self.family {
            Family::Complete => {
                arity(1)?;
                complete(self.params[0])
            }
            Family::Octahedron => {
                arity(0)?;
                Ok(octahedron())
            }
            Family::Dipole => {
                arity(1)?;
                dipole(self.params[0])
            }
            Family::DoubledCycle => {
                arity(1)?;
                doubled_cycle(self.params[0])
            }
            Family::Bouquet => {
                arity(1)?;
                Ok(bouquet(self.params[0]))
            }
            Family::Circulant => {
                if self.params.len() < 2 {
                    return Err(Error::InvalidFamily(
                        "circulant takes a vertex count and at least one step".into(),
                    ));
                }
                circulant(self.params[0], &self.params[1..])
            }
            Family::Petersen => {
                arity(0)?;
                Ok(petersen())
            }
            Family::Cycle => {
                arity(1)?;
                cycle(self.params[0])
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (name, params_str) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let family = match name {
            "complete" => Family::Complete,
            "octahedron" => Family::Octahedron,
            "dipole" => Family::Dipole,
            "doubled_cycle" => Family::DoubledCycle,
            "bouquet" => Family::Bouquet,
            "circulant" => Family::Circulant,
            "petersen" => Family::Petersen,
            "cycle" => Family::Cycle,
            other => {
                return Err(Error::InvalidFamily(format!(
                    "unknown family {other:?} (expected one of: complete, octahedron, dipole, \
                     doubled_cycle, bouquet, circulant, petersen, cycle)"
                )))
            }
        };
        let params = match params_str {
            None => Vec::new(),
            Some("") => {
                return Err(Error::InvalidFamily(
                    "trailing ':' without parameters".into(),
                ))
            }
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidFamily(format!("parameter {p:?} is not a nonnegative integer"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        Ok(FamilySpec { family, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { ':' } else { ',' }, p)?;
        }
        Ok(())
    }
}
