//! Hamiltonian cycles with edge-id-set identity, and the 2-factors that
//! complement them in 4-regular multigraphs.

use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::Error;

/// A Hamiltonian cycle, stored as an aligned traversal: `edges[i]` joins
/// `order[i]` to `order[(i + 1) % len]`.
///
/// Two cycles are the same exactly when their edge-id sets are equal;
/// rotation and reflection never distinguish cycles. Construction
/// canonicalizes the stored traversal (vertex 0 first, then the
/// lexicographically smaller of the two directions), which makes that
/// identity coincide with derived equality and hashing: an edge set walks
/// into a unique cyclic traversal even through parallel edges, so equal sets
/// always canonicalize identically.
///
/// Cycles have length at least 3. A loop or a pair of parallel edges is a
/// closed walk but not a Hamiltonian cycle here; this keeps complement
/// pairing and decomposition counts meaningful on every 4-regular multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HamCycle {
    order: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl HamCycle {
    /// Validates an aligned traversal as a Hamiltonian cycle of `g` and
    /// canonicalizes it.
    pub fn new(g: &MultiGraph, order: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<HamCycle, Error> {
        let n = g.n();
        if order.len() != n || edges.len() != n {
            return Err(Error::InvalidCycle(format!(
                "cycle has {} vertices and {} edges; a Hamiltonian cycle here needs {n} of each",
                order.len(),
                edges.len()
            )));
        }
        if n < 3 {
            return Err(Error::InvalidCycle(
                "closed walks on fewer than 3 vertices are not Hamiltonian cycles".into(),
            ));
        }
        let mut seen_vertex = vec![false; n];
        for &v in &order {
            if v.0 >= n {
                return Err(Error::InvalidCycle(format!("vertex {v} out of range")));
            }
            if seen_vertex[v.0] {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
            seen_vertex[v.0] = true;
        }
        let mut seen_edge = vec![false; g.m()];
        for (i, &e) in edges.iter().enumerate() {
            if e.0 >= g.m() {
                return Err(Error::InvalidCycle(format!("edge {e} out of range")));
            }
            if seen_edge[e.0] {
                return Err(Error::InvalidCycle(format!("edge {e} repeats")));
            }
            seen_edge[e.0] = true;
            let (x, y) = (order[i], order[(i + 1) % n]);
            let want = if x <= y { (x, y) } else { (y, x) };
            if g.endpoints(e) != want {
                return Err(Error::InvalidCycle(format!(
                    "edge {e} does not join {x} and {y}"
                )));
            }
        }
        Ok(Self::canonical(order, edges))
    }

    /// Rotates vertex 0 to the front and keeps the lexicographically smaller
    /// of the two traversal directions.
    fn canonical(mut order: Vec<VertexId>, mut edges: Vec<EdgeId>) -> HamCycle {
        let p = order
            .iter()
            .position(|v| v.0 == 0)
            .expect("a spanning cycle contains vertex 0");
        order.rotate_left(p);
        edges.rotate_left(p);
        // Reversed traversal from the same start: order[0], order[n-1], ...,
        // order[1]; its step i uses the edge between those, i.e. the forward
        // edge list reversed.
        let mut rev_order = order.clone();
        rev_order[1..].reverse();
        let mut rev_edges = edges.clone();
        rev_edges.reverse();
        if (&rev_order, &rev_edges) < (&order, &edges) {
            HamCycle {
                order: rev_order,
                edges: rev_edges,
            }
        } else {
            HamCycle { order, edges }
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Canonical vertex traversal; `order()[0]` is vertex 0.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    /// Edge traversal aligned with [`order`](HamCycle::order).
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The identity of the cycle: its edge ids in ascending order.
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut set = self.edges.clone();
        set.sort();
        set
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }
}

/// Re-validates a cycle against a graph it may not have been built from.
pub(super) fn revalidate(g: &MultiGraph, h: &HamCycle) -> Result<(), Error> {
    HamCycle::new(g, h.order().to_vec(), h.edges().to_vec()).map(|_| ())
}

/// A spanning subgraph in which every vertex has degree exactly 2 — what
/// remains of a 4-regular multigraph when a Hamiltonian cycle is removed.
/// Components may be proper cycles, parallel-edge digons, or single-vertex
/// loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    components: Vec<(Vec<VertexId>, Vec<EdgeId>)>,
}

impl TwoFactor {
    /// Validates an edge-id set as a 2-factor of `g` and splits it into
    /// cyclic components. Components are listed by their minimum vertex, each
    /// traversed from that vertex along its lowest incident factor edge, with
    /// `edges[i]` joining `order[i]` to `order[(i + 1) % len]`.
    pub fn from_edges(g: &MultiGraph, edge_set: &[EdgeId]) -> Result<TwoFactor, Error> {
        let mut in_factor = vec![false; g.m()];
        let mut degree = vec![0usize; g.n()];
        for &e in edge_set {
            if e.0 >= g.m() {
                return Err(Error::InvalidCycle(format!("edge {e} out of range")));
            }
            if in_factor[e.0] {
                return Err(Error::InvalidCycle(format!("edge {e} repeats")));
            }
            in_factor[e.0] = true;
            let (a, b) = g.endpoints(e);
            degree[a.0] += 1;
            degree[b.0] += 1;
        }
        for v in g.vertices() {
            if degree[v.0] != 2 {
                return Err(Error::InvalidCycle(format!(
                    "vertex {v} has degree {} in the factor, not 2",
                    degree[v.0]
                )));
            }
        }

        let mut components = Vec::new();
        let mut visited = vec![false; g.n()];
        for start in g.vertices() {
            if visited[start.0] {
                continue;
            }
            let mut order = Vec::new();
            let mut edges = Vec::new();
            let mut at = start;
            loop {
                visited[at.0] = true;
                order.push(at);
                let inc = g
                    .incidences(at)
                    .iter()
                    .find(|inc| in_factor[inc.edge.0])
                    .expect("factor degree 2 leaves an unused edge at every arrival");
                in_factor[inc.edge.0] = false;
                edges.push(inc.edge);
                at = g.other_end(at, inc.edge);
                if at == start {
                    break;
                }
            }
            components.push((order, edges));
        }
        Ok(TwoFactor { components })
    }

    /// The cyclic components, ordered by minimum vertex.
    pub fn components(&self) -> &[(Vec<VertexId>, Vec<EdgeId>)] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// All factor edges, ascending.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self
            .components
            .iter()
            .flat_map(|(_, edges)| edges.iter().copied())
            .collect();
        all.sort();
        all
    }

    /// The factor as a Hamiltonian cycle of `g`, when it is one: a single
    /// component spanning all vertices (length at least 3).
    pub fn to_ham_cycle(&self, g: &MultiGraph) -> Option<HamCycle> {
        if self.components.len() != 1 {
            return None;
        }
        let (order, edges) = &self.components[0];
        if order.len() != g.n() || order.len() < 3 {
            return None;
        }
        Some(
            HamCycle::new(g, order.clone(), edges.clone())
                .expect("a single spanning component is a Hamiltonian cycle"),
        )
    }
}

/// The complement of a Hamiltonian cycle in a 4-regular multigraph: the
/// 2-factor on all edges the cycle does not use.
pub fn complement_cycle(g: &MultiGraph, h: &HamCycle) -> Result<TwoFactor, Error> {
    if let Some((vertex, degree)) = g.k_regular_violation(4) {
        return Err(Error::NotKRegular {
            vertex,
            degree,
            expected: 4,
        });
    }
    revalidate(g, h)?;
    let mut on_cycle = vec![false; g.m()];
    for &e in h.edges() {
        on_cycle[e.0] = true;
    }
    let rest: Vec<EdgeId> = g.edge_ids().filter(|e| !on_cycle[e.0]).collect();
    TwoFactor::from_edges(g, &rest)
}
