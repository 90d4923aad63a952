//! Undirected multigraphs with dense integer ids.
//!
//! Vertices are `0..n`; edges carry dense [`EdgeId`]s in insertion order, so
//! parallel edges stay distinct and every algorithm downstream can tie-break
//! on ids. A loop is stored once in the edge table but appears twice in its
//! vertex's incidence list, once per end.

use std::collections::HashSet;
use std::fmt;

use crate::Error;

/// Index of a vertex; ids are dense in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge; ids are dense in `[0, m)` in insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which end of an edge an incidence-list entry represents. The two ends of a
/// loop are distinguished so that a loop contributes two entries (and two to
/// the degree) at its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeEnd {
    First,
    Second,
}

/// One entry of a vertex's incidence list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub edge: EdgeId,
    pub end: EdgeEnd,
}

/// An undirected multigraph. Loops and parallel edges are allowed.
///
/// Endpoint pairs are normalized to `(min, max)` at construction, so two
/// graphs compare equal exactly when they have the same vertex count and the
/// same edge table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<Incidence>>,
}

impl MultiGraph {
    /// Builds a graph on `n` vertices from an edge list. Endpoints must lie in
    /// `[0, n)`; edge ids are assigned in list order.
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut edges = Vec::new();
        let mut adj: Vec<Vec<Incidence>> = vec![Vec::new(); n];
        for (idx, (u, v)) in edge_list.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            let e = EdgeId(idx);
            edges.push((VertexId(a), VertexId(b)));
            adj[a].push(Incidence {
                edge: e,
                end: EdgeEnd::First,
            });
            adj[b].push(Incidence {
                edge: e,
                end: EdgeEnd::Second,
            });
        }
        Ok(MultiGraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Endpoints of an edge, normalized so the first id is the smaller one.
    ///
    /// Panics if `e` is out of range.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    pub fn has_loop(&self) -> bool {
        self.edge_ids().any(|e| self.is_loop(e))
    }

    /// Incidence list of `v`, ascending by edge id; a loop at `v` appears
    /// twice (once per end).
    ///
    /// Panics if `v` is out of range.
    pub fn incidences(&self, v: VertexId) -> &[Incidence] {
        &self.adj[v.0]
    }

    /// Number of edge ends at `v`; loops count twice.
    ///
    /// Panics if `v` is out of range.
    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v.0 < self.n, "vertex {v} out of range (n = {})", self.n);
        self.adj[v.0].len()
    }

    /// The endpoint of `e` other than `v` (which is `v` itself for a loop).
    ///
    /// Panics if `v` is not an endpoint of `e`.
    pub fn other_end(&self, v: VertexId, e: EdgeId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if v == a {
            b
        } else if v == b {
            a
        } else {
            panic!("vertex {v} is not an endpoint of edge {e}");
        }
    }

    /// Number of edges joining `u` and `v`; for `u == v` this counts loops
    /// (one per loop edge, not per end).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edges.iter().filter(|&&pair| pair == (a, b)).count()
    }

    /// Ids of the edges joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edge_ids()
            .filter(|&e| self.endpoints(e) == (a, b))
            .collect()
    }

    /// Multiset of neighbors of `v`, sorted; a loop contributes `v` twice.
    pub fn neighbor_multiset(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.adj[v.0]
            .iter()
            .map(|inc| {
                let (a, b) = self.endpoints(inc.edge);
                match inc.end {
                    EdgeEnd::First => b,
                    EdgeEnd::Second => a,
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == k)
    }

    /// First vertex whose degree differs from `k`, if any.
    pub fn k_regular_violation(&self, k: usize) -> Option<(VertexId, usize)> {
        self.vertices()
            .map(|v| (v, self.degree(v)))
            .find(|&(_, d)| d != k)
    }

    /// True when every vertex is reachable from vertex 0 (vacuously true for
    /// the empty graph and singletons).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for inc in &self.adj[v.0] {
                let w = self.other_end(v, inc.edge);
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Proper 2-coloring of the vertices, if one exists. Components are
    /// colored independently (each component's minimum vertex goes to the
    /// first side), and the side containing vertex 0 is reported first. Both
    /// sides are ascending. Loops and odd closed walks make this `None`.
    pub fn bipartition(&self) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(true);
            let mut queue = std::collections::VecDeque::from([VertexId(root)]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v.0].unwrap();
                for inc in &self.adj[v.0] {
                    let w = self.other_end(v, inc.edge);
                    if w == v {
                        return None; // loop
                    }
                    match color[w.0] {
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                        None => {
                            color[w.0] = Some(!cv);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let mut first = Vec::new();
        let mut second = Vec::new();
        for v in 0..self.n {
            if color[v] == Some(true) {
                first.push(VertexId(v));
            } else {
                second.push(VertexId(v));
            }
        }
        Some((first, second))
    }

    /// Line graph of a simple graph: one vertex per edge (same ids), one edge
    /// per unordered pair of adjacent edges. Loops or parallel edges in the
    /// input are rejected, naming an offending edge.
    pub fn line_graph(&self) -> Result<MultiGraph, Error> {
        let mut seen = HashSet::new();
        for e in self.edge_ids() {
            let (u, v) = self.endpoints(e);
            if u == v || !seen.insert((u, v)) {
                return Err(Error::NotSimple { edge: e });
            }
        }
        let mut edges = Vec::new();
        for v in self.vertices() {
            let inc = &self.adj[v.0];
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    edges.push((inc[i].edge.0, inc[j].edge.0));
                }
            }
        }
        MultiGraph::new(self.m(), edges)
    }

    /// Deletes a vertex along with its incident edges, re-densifying both id
    /// spaces. Returns the new graph together with the vertex relabeling
    /// (`old id -> Some(new id)`, `None` for the deleted vertex). Edges keep
    /// their relative order.
    ///
    /// Panics if `v` is out of range.
    pub fn delete_vertex(&self, v: VertexId) -> (MultiGraph, Vec<Option<VertexId>>) {
        assert!(v.0 < self.n, "vertex {v} out of range (n = {})", self.n);
        let mut relabel: Vec<Option<VertexId>> = Vec::with_capacity(self.n);
        let mut next = 0;
        for old in 0..self.n {
            if old == v.0 {
                relabel.push(None);
            } else {
                relabel.push(Some(VertexId(next)));
                next += 1;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel[a.0].unwrap().0, relabel[b.0].unwrap().0))
            .collect();
        let g = MultiGraph::new(self.n - 1, edges).expect("relabeled endpoints are in range");
        (g, relabel)
    }
}

/// Multiplicity matrix: `mat[u][v]` = number of edges joining `u` and `v`
/// (diagonal counts loops once per loop).
fn multiplicity_matrix(g: &MultiGraph) -> Vec<Vec<u32>> {
    let mut mat = vec![vec![0u32; g.n()]; g.n()];
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        mat[u.0][v.0] += 1;
        if u != v {
            mat[v.0][u.0] += 1;
        }
    }
    mat
}

/// Per-vertex invariant used to prune the isomorphism search: degree, loop
/// count, sorted multiplicities to distinct neighbors, and the sorted degree
/// multiset of neighbors.
fn vertex_invariant(g: &MultiGraph, mat: &[Vec<u32>], v: usize) -> (usize, u32, Vec<u32>, Vec<usize>) {
    let mut mults: Vec<u32> = (0..g.n())
        .filter(|&w| w != v && mat[v][w] > 0)
        .map(|w| mat[v][w])
        .collect();
    mults.sort_unstable();
    let mut nbr_degs: Vec<usize> = (0..g.n())
        .filter(|&w| w != v && mat[v][w] > 0)
        .map(|w| g.degree(VertexId(w)))
        .collect();
    nbr_degs.sort_unstable();
    (g.degree(VertexId(v)), mat[v][v], mults, nbr_degs)
}

/// Exact isomorphism test for multigraphs (edge multiplicities and loops must
/// match). Backtracking with degree and neighborhood-multiset pruning; may be
/// slow on large or highly symmetric inputs.
pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let ma = multiplicity_matrix(a);
    let mb = multiplicity_matrix(b);
    let inv_a: Vec<_> = (0..n).map(|v| vertex_invariant(a, &ma, v)).collect();
    let inv_b: Vec<_> = (0..n).map(|v| vertex_invariant(b, &mb, v)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }

    // Order `a`'s vertices so each one (after the first in its component) has
    // as many already-placed neighbors as possible.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = (0..n)
                    .filter(|&u| placed[u] && ma[v][u] > 0)
                    .count();
                (anchored, std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut image = vec![usize::MAX; n]; // a-vertex -> b-vertex
    let mut used = vec![false; n];

    fn search(
        depth: usize,
        order: &[usize],
        inv_a: &[(usize, u32, Vec<u32>, Vec<usize>)],
        inv_b: &[(usize, u32, Vec<u32>, Vec<usize>)],
        ma: &[Vec<u32>],
        mb: &[Vec<u32>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..used.len() {
            if used[w] || inv_a[v] != inv_b[w] {
                continue;
            }
            for &u in &order[..depth] {
                if ma[v][u] != mb[w][image[u]] {
                    continue 'cand;
                }
            }
            image[v] = w;
            used[w] = true;
            if search(depth + 1, order, inv_a, inv_b, ma, mb, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    search(0, &order, &inv_a, &inv_b, &ma, &mb, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn k5() -> MultiGraph {
        generators::complete(5).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let g = MultiGraph::new(3, [(2, 0), (1, 1), (0, 2)]).unwrap();
        assert_eq!(g.endpoints(EdgeId(0)), (VertexId(0), VertexId(2)));
        assert!(g.is_loop(EdgeId(1)));
        assert_eq!(
            MultiGraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degree_counts_loops_twice() {
        let b2 = generators::bouquet(2);
        assert_eq!(b2.degree(VertexId(0)), 4);
        assert!(b2.is_k_regular(4));
        let single = MultiGraph::new(1, []).unwrap();
        assert_eq!(single.degree(VertexId(0)), 0);
    }

    #[test]
    fn handshake_on_small_fixtures() {
        for g in [
            k5(),
            generators::bouquet(3),
            generators::dipole(4).unwrap(),
            generators::doubled_cycle(3).unwrap(),
        ] {
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.m());
        }
    }

    #[test]
    fn incidence_lists_are_ascending_and_loop_aware() {
        let g = MultiGraph::new(2, [(0, 1), (0, 0), (1, 0)]).unwrap();
        let inc: Vec<usize> = g.incidences(VertexId(0)).iter().map(|i| i.edge.0).collect();
        assert_eq!(inc, vec![0, 1, 1, 2]);
        assert_eq!(g.multiplicity(VertexId(0), VertexId(1)), 2);
        assert_eq!(g.multiplicity(VertexId(0), VertexId(0)), 1);
        assert_eq!(
            g.edges_between(VertexId(1), VertexId(0)),
            vec![EdgeId(0), EdgeId(2)]
        );
    }

    #[test]
    fn neighbor_multiset_includes_loops_twice() {
        let g = MultiGraph::new(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(
            g.neighbor_multiset(VertexId(0)),
            vec![VertexId(0), VertexId(0), VertexId(1)]
        );
    }

    #[test]
    fn k_regular_checks() {
        assert!(k5().is_k_regular(4));
        assert!(generators::petersen().is_k_regular(3));
        assert_eq!(
            generators::petersen().k_regular_violation(4),
            Some((VertexId(0), 3))
        );
    }

    #[test]
    fn connectivity() {
        assert!(k5().is_connected());
        assert!(generators::bouquet(2).is_connected());
        let two_triangles =
            MultiGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert!(MultiGraph::new(0, []).unwrap().is_connected());
    }

    #[test]
    fn bipartition_basics() {
        let edge = MultiGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            edge.bipartition(),
            Some((vec![VertexId(0)], vec![VertexId(1)]))
        );
        assert!(k5().bipartition().is_none());
        assert!(generators::bouquet(1).bipartition().is_none());
        // Parallel edges alone do not break bipartiteness.
        assert!(generators::dipole(4).unwrap().bipartition().is_some());
    }

    #[test]
    fn bipartition_is_componentwise_with_side_zero_first() {
        let g = MultiGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let (first, second) = g.bipartition().unwrap();
        assert!(first.contains(&VertexId(0)));
        assert_eq!(first, vec![VertexId(0), VertexId(2)]);
        assert_eq!(second, vec![VertexId(1), VertexId(3)]);
    }

    #[test]
    fn line_graph_of_k4_is_4_regular_on_6_vertices() {
        let k4 = generators::complete(4).unwrap();
        let lg = k4.line_graph().unwrap();
        assert_eq!(lg.n(), 6);
        assert_eq!(lg.m(), 12);
        assert!(lg.is_k_regular(4));
        // The line graph of K4 is the octahedron.
        assert!(are_isomorphic(&lg, &generators::octahedron()));
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let c3 = generators::cycle(3).unwrap();
        let lg = c3.line_graph().unwrap();
        assert!(are_isomorphic(&lg, &c3));
    }

    #[test]
    fn line_graph_of_petersen_counts() {
        let lg = generators::petersen().line_graph().unwrap();
        assert_eq!(lg.n(), 15);
        assert_eq!(lg.m(), 30);
        assert!(lg.is_k_regular(4));
    }

    #[test]
    fn line_graph_rejects_loops_and_parallels() {
        let loopy = MultiGraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(loopy.line_graph(), Err(Error::NotSimple { edge: EdgeId(0) }));
        let parallel = MultiGraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            parallel.line_graph(),
            Err(Error::NotSimple { edge: EdgeId(1) })
        );
    }

    #[test]
    fn delete_vertex_redensifies() {
        let (g, relabel) = k5().delete_vertex(VertexId(2));
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert!(are_isomorphic(&g, &generators::complete(4).unwrap()));
        assert_eq!(relabel[2], None);
        assert_eq!(relabel[3], Some(VertexId(2)));
        assert_eq!(relabel[0], Some(VertexId(0)));
    }

    #[test]
    fn isomorphism_accepts_relabelings_and_rejects_structure_changes() {
        let g = generators::doubled_cycle(3).unwrap();
        // Relabel vertices by the permutation (0 1 2).
        let h = MultiGraph::new(3, [(1, 2), (1, 2), (2, 0), (2, 0), (0, 1), (0, 1)]).unwrap();
        assert!(are_isomorphic(&g, &h));
        let c6 = generators::cycle(6).unwrap();
        assert!(!are_isomorphic(&g, &c6)); // same degree sequence, different n
        let c3 = generators::cycle(3).unwrap();
        let path = MultiGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!are_isomorphic(&c3, &path));
    }

    #[test]
    fn isomorphism_distinguishes_multiplicity_patterns() {
        // Both have 3 vertices and 4 edges with degree sequence (2, 3, 3).
        let a = MultiGraph::new(3, [(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let b = MultiGraph::new(3, [(0, 1), (0, 2), (1, 2), (1, 2)]).unwrap();
        assert!(are_isomorphic(&a, &b));
        let c = MultiGraph::new(3, [(0, 1), (0, 1), (0, 1), (0, 2)]).unwrap();
        assert!(!are_isomorphic(&a, &c));
        // Loops vs parallel edges.
        let loop1 = MultiGraph::new(2, [(0, 0), (0, 1)]).unwrap();
        let par = MultiGraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(!are_isomorphic(&loop1, &par));
    }

    #[test]
    fn isomorphism_on_empty_and_trivial_graphs() {
        let e0 = MultiGraph::new(0, []).unwrap();
        assert!(are_isomorphic(&e0, &MultiGraph::new(0, []).unwrap()));
        let v1 = MultiGraph::new(1, []).unwrap();
        assert!(!are_isomorphic(&e0, &v1));
        assert!(are_isomorphic(
            &generators::bouquet(2),
            &generators::bouquet(2)
        ));
        assert!(!are_isomorphic(
            &generators::bouquet(2),
            &generators::bouquet(1)
        ));
    }
}
