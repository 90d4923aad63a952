//! The subdivided-double construction, its recognition, and condensation.
//!
//! The subdivided double of a 4-regular multigraph subdivides every edge with
//! a new vertex and then splits every original vertex into a pair of
//! non-adjacent twins sharing the same four subdivision neighbors. The result
//! is 4-regular and bipartite (twins on one side, subdivision vertices on the
//! other). Conversely, a graph is such a double exactly when it is 4-regular,
//! bipartite, and one side can be perfectly paired into equal-neighborhood
//! twins; condensing each twin pair back to a single vertex and turning each
//! vertex of the other side into an edge recovers the underlying multigraph.

use std::collections::BTreeMap;
use std::fmt;

use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::Error;

/// Role of a vertex of a subdivided double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SdLabel {
    /// One of the two twins of a source vertex; `copy` is 0 or 1.
    Twin { source: VertexId, copy: u8 },
    /// The subdivision vertex of a source edge.
    Subdivision { source: EdgeId },
}

/// A subdivided double together with its vertex labeling and the source
/// multigraph it was built from (or reconstructed to).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdGraph {
    graph: MultiGraph,
    labels: Vec<SdLabel>,
    source: MultiGraph,
    twin_ids: Vec<[VertexId; 2]>, // per source vertex
    sub_ids: Vec<VertexId>,       // per source edge
}

impl SdGraph {
    /// Rebuilds an [`SdGraph`] from a graph plus per-vertex labels (say, read
    /// back from a file), validating that the labeling really describes a
    /// subdivided double and reconstructing the source multigraph from it.
    pub fn from_parts(graph: MultiGraph, labels: Vec<SdLabel>) -> Result<SdGraph, Error> {
        if labels.len() != graph.n() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.n()
            )));
        }
        if let Some((vertex, degree)) = graph.k_regular_violation(4) {
            return Err(Error::InvalidLabels(format!(
                "vertex {vertex} has degree {degree}, expected 4"
            )));
        }

        let n_src = labels
            .iter()
            .filter_map(|l| match l {
                SdLabel::Twin { source, .. } => Some(source.0 + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        let m_src = labels
            .iter()
            .filter_map(|l| match l {
                SdLabel::Subdivision { source } => Some(source.0 + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0);

        let mut twin_ids = vec![[VertexId(usize::MAX); 2]; n_src];
        let mut sub_ids = vec![VertexId(usize::MAX); m_src];
        for (i, label) in labels.iter().enumerate() {
            let v = VertexId(i);
            match *label {
                SdLabel::Twin { source, copy } => {
                    if copy > 1 {
                        return Err(Error::InvalidLabels(format!(
                            "twin copy {copy} at vertex {v} (must be 0 or 1)"
                        )));
                    }
                    let slot = &mut twin_ids[source.0][copy as usize];
                    if *slot != VertexId(usize::MAX) {
                        return Err(Error::InvalidLabels(format!(
                            "duplicate twin label ({source}, {copy})"
                        )));
                    }
                    *slot = v;
                }
                SdLabel::Subdivision { source } => {
                    let slot = &mut sub_ids[source.0];
                    if *slot != VertexId(usize::MAX) {
                        return Err(Error::InvalidLabels(format!(
                            "duplicate subdivision label {source}"
                        )));
                    }
                    *slot = v;
                }
            }
        }
        for (v, pair) in twin_ids.iter().enumerate() {
            if pair.iter().any(|&t| t == VertexId(usize::MAX)) {
                return Err(Error::InvalidLabels(format!(
                    "missing twin label for source vertex {v}"
                )));
            }
        }
        for (e, &s) in sub_ids.iter().enumerate() {
            if s == VertexId(usize::MAX) {
                return Err(Error::InvalidLabels(format!(
                    "missing subdivision label for source edge {e}"
                )));
            }
        }

        // Every edge must join a twin to a subdivision vertex.
        for e in graph.edge_ids() {
            let (a, b) = graph.endpoints(e);
            let twin_ends = [a, b]
                .iter()
                .filter(|&&x| matches!(labels[x.0], SdLabel::Twin { .. }))
                .count();
            if twin_ends != 1 {
                return Err(Error::InvalidLabels(format!(
                    "edge {e} does not join a twin to a subdivision vertex"
                )));
            }
        }

        // Each subdivision vertex must see both twins of each of its source
        // endpoints equally; reconstruct the source edge from that.
        let mut src_edges = Vec::with_capacity(m_src);
        for (e, &s) in sub_ids.iter().enumerate() {
            let mut seen: BTreeMap<(VertexId, u8), usize> = BTreeMap::new();
            for w in graph.neighbor_multiset(s) {
                match labels[w.0] {
                    SdLabel::Twin { source, copy } => *seen.entry((source, copy)).or_insert(0) += 1,
                    SdLabel::Subdivision { .. } => unreachable!("edge sides already validated"),
                }
            }
            let mut by_source: BTreeMap<VertexId, usize> = BTreeMap::new();
            for (&(source, copy), &count) in &seen {
                let other = seen.get(&(source, 1 - copy)).copied().unwrap_or(0);
                if count != other {
                    return Err(Error::InvalidLabels(format!(
                        "subdivision vertex {s} sees the twins of source vertex {source} unequally"
                    )));
                }
                *by_source.entry(source).or_insert(0) += count;
            }
            let sources: Vec<(VertexId, usize)> =
                by_source.into_iter().collect();
            let endpoints = match sources.as_slice() {
                [(u, 2), (v, 2)] => (u.0, v.0),
                [(u, 4)] => (u.0, u.0),
                _ => {
                    return Err(Error::InvalidLabels(format!(
                        "subdivision vertex {s} does not see exactly two twin pairs (edge {e})"
                    )))
                }
            };
            src_edges.push(endpoints);
        }

        let source = MultiGraph::new(n_src, src_edges)?;
        Ok(SdGraph {
            graph,
            labels,
            source,
            twin_ids,
            sub_ids,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn source(&self) -> &MultiGraph {
        &self.source
    }

    pub fn labels(&self) -> &[SdLabel] {
        &self.labels
    }

    /// Label of a vertex of the double. Panics if out of range.
    pub fn label(&self, v: VertexId) -> SdLabel {
        self.labels[v.0]
    }

    /// The twin vertex `copy` (0 or 1) of a source vertex.
    pub fn twin_vertex(&self, source_v: VertexId, copy: u8) -> VertexId {
        self.twin_ids[source_v.0][copy as usize]
    }

    /// The subdivision vertex of a source edge.
    pub fn subdivision_vertex(&self, source_e: EdgeId) -> VertexId {
        self.sub_ids[source_e.0]
    }
}

/// Builds the subdivided double of a 4-regular multigraph.
///
/// Canonical layout: source vertex `v` becomes twins `2v` (copy 0) and
/// `2v + 1` (copy 1); source edge `e` becomes subdivision vertex `2n + e`.
/// For each source edge `(u, v)` the four new edges appear in the order
/// `(2u, s), (2u+1, s), (2v, s), (2v+1, s)`; a loop therefore yields two
/// parallel edges to each twin, lower id first.
pub fn subdivided_double(g: &MultiGraph) -> Result<SdGraph, Error> {
    if let Some((vertex, degree)) = g.k_regular_violation(4) {
        return Err(Error::NotKRegular {
            vertex,
            degree,
            expected: 4,
        });
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(4 * g.m());
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let s = 2 * n + e.0;
        edges.push((2 * u.0, s));
        edges.push((2 * u.0 + 1, s));
        edges.push((2 * v.0, s));
        edges.push((2 * v.0 + 1, s));
    }
    let mut labels = Vec::with_capacity(2 * n + g.m());
    for v in 0..n {
        labels.push(SdLabel::Twin {
            source: VertexId(v),
            copy: 0,
        });
        labels.push(SdLabel::Twin {
            source: VertexId(v),
            copy: 1,
        });
    }
    for e in g.edge_ids() {
        labels.push(SdLabel::Subdivision { source: e });
    }
    let sd = SdGraph::from_parts(MultiGraph::new(2 * n + g.m(), edges)?, labels)?;
    debug_assert_eq!(sd.source, *g);
    Ok(sd)
}

/// Why recognition declined an input. `code` gives the stable
/// machine-readable reason string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecognizeFailure {
    NotFourRegular { vertex: VertexId },
    NotBipartite,
    NoTwinPairing,
}

impl RecognizeFailure {
    pub fn code(&self) -> &'static str {
        match self {
            RecognizeFailure::NotFourRegular { .. } => "not-4-regular",
            RecognizeFailure::NotBipartite => "not-bipartite",
            RecognizeFailure::NoTwinPairing => "no-twin-pairing",
        }
    }
}

impl fmt::Display for RecognizeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizeFailure::NotFourRegular { vertex } => {
                write!(f, "not-4-regular (vertex {vertex})")
            }
            RecognizeFailure::NotBipartite => write!(f, "not-bipartite"),
            RecognizeFailure::NoTwinPairing => write!(f, "no-twin-pairing"),
        }
    }
}

/// Proof that a graph is a subdivided double.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdCertificate {
    /// Vertices playing the twin role, ascending.
    pub twin_side: Vec<VertexId>,
    /// Twin pairs `(a, b)` with `a < b`, sorted by first member. Pair `i`
    /// condenses to underlying vertex `i`.
    pub pairing: Vec<(VertexId, VertexId)>,
    /// Subdivision vertices ascending, each mapped to the underlying edge id
    /// it condenses to (dense, in that order).
    pub subdivision_map: Vec<(VertexId, EdgeId)>,
    /// The condensed underlying multigraph.
    pub underlying: MultiGraph,
}

/// Tests whether a multigraph is a subdivided double, producing one canonical
/// certificate on success. Checks run in a fixed order — 4-regularity,
/// bipartiteness, twin pairing — and the first failing check is reported.
///
/// For each connected component, the side containing the component's minimum
/// vertex is tried first; a side pairs up exactly when each class of vertices
/// with identical neighbor multisets has even size, and classes are then
/// paired in ascending id order. Disconnected inputs succeed only if every
/// component does.
pub fn recognize(g: &MultiGraph) -> Result<SdCertificate, RecognizeFailure> {
    if let Some((vertex, _)) = g.k_regular_violation(4) {
        return Err(RecognizeFailure::NotFourRegular { vertex });
    }
    let (side_a, side_b) = g.bipartition().ok_or(RecognizeFailure::NotBipartite)?;

    // Component index per vertex.
    let mut comp = vec![usize::MAX; g.n()];
    let mut comp_count = 0;
    for root in 0..g.n() {
        if comp[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![VertexId(root)];
        comp[root] = comp_count;
        while let Some(v) = stack.pop() {
            for inc in g.incidences(v) {
                let w = g.other_end(v, inc.edge);
                if comp[w.0] == usize::MAX {
                    comp[w.0] = comp_count;
                    stack.push(w);
                }
            }
        }
        comp_count += 1;
    }

    let try_pair = |side: &[VertexId]| -> Option<Vec<(VertexId, VertexId)>> {
        let mut classes: BTreeMap<Vec<VertexId>, Vec<VertexId>> = BTreeMap::new();
        for &v in side {
            classes.entry(g.neighbor_multiset(v)).or_default().push(v);
        }
        let mut pairs = Vec::new();
        for class in classes.values() {
            if class.len() % 2 != 0 {
                return None;
            }
            for duo in class.chunks(2) {
                pairs.push((duo[0], duo[1]));
            }
        }
        Some(pairs)
    };

    let mut pairing = Vec::new();
    for c in 0..comp_count {
        let in_comp = |v: &&VertexId| comp[v.0] == c;
        let a_side: Vec<VertexId> = side_a.iter().filter(in_comp).copied().collect();
        let b_side: Vec<VertexId> = side_b.iter().filter(in_comp).copied().collect();
        let pairs = try_pair(&a_side)
            .or_else(|| try_pair(&b_side))
            .ok_or(RecognizeFailure::NoTwinPairing)?;
        pairing.extend(pairs);
    }
    pairing.sort();

    let mut is_twin = vec![false; g.n()];
    for &(a, b) in &pairing {
        is_twin[a.0] = true;
        is_twin[b.0] = true;
    }
    let twin_side: Vec<VertexId> = g.vertices().filter(|v| is_twin[v.0]).collect();
    let subdivision_map: Vec<(VertexId, EdgeId)> = g
        .vertices()
        .filter(|v| !is_twin[v.0])
        .enumerate()
        .map(|(i, s)| (s, EdgeId(i)))
        .collect();

    let underlying = condensed_graph(g, &pairing, &subdivision_map)
        .expect("pairing produced by recognition always condenses");
    Ok(SdCertificate {
        twin_side,
        pairing,
        subdivision_map,
        underlying,
    })
}

/// Builds the condensed multigraph for a given pairing: one vertex per twin
/// pair, one edge per subdivision vertex joining the pairs it sees (a loop
/// when it sees only one pair).
fn condensed_graph(
    g: &MultiGraph,
    pairing: &[(VertexId, VertexId)],
    subdivision_map: &[(VertexId, EdgeId)],
) -> Result<MultiGraph, Error> {
    let mut pair_index = vec![usize::MAX; g.n()];
    for (i, &(a, b)) in pairing.iter().enumerate() {
        pair_index[a.0] = i;
        pair_index[b.0] = i;
    }
    let mut edges = Vec::with_capacity(subdivision_map.len());
    for &(s, _) in subdivision_map {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for w in g.neighbor_multiset(s) {
            let p = pair_index[w.0];
            if p == usize::MAX {
                return Err(Error::InvalidCertificate(format!(
                    "subdivision vertex {s} is adjacent to unpaired vertex {w}"
                )));
            }
            *counts.entry(p).or_insert(0) += 1;
        }
        let flat: Vec<(usize, usize)> = counts.into_iter().collect();
        let endpoints = match flat.as_slice() {
            [(p, 2), (q, 2)] => (*p, *q),
            [(p, 4)] => (*p, *p),
            _ => {
                return Err(Error::InvalidCertificate(format!(
                    "subdivision vertex {s} does not see exactly two twin pairs"
                )))
            }
        };
        edges.push(endpoints);
    }
    MultiGraph::new(pairing.len(), edges)
}

/// Condenses a graph along a certificate, validating the certificate against
/// the graph in full and returning the underlying multigraph.
pub fn condense(g: &MultiGraph, cert: &SdCertificate) -> Result<MultiGraph, Error> {
    let fail = |msg: String| Err(Error::InvalidCertificate(msg));

    if let Some((vertex, degree)) = g.k_regular_violation(4) {
        return fail(format!("vertex {vertex} has degree {degree}, expected 4"));
    }
    let mut role = vec![0u8; g.n()]; // 1 = twin, 2 = subdivision
    for &(a, b) in &cert.pairing {
        if a >= b {
            return fail(format!("pair ({a}, {b}) is not ascending"));
        }
        for v in [a, b] {
            if v.0 >= g.n() {
                return fail(format!("vertex {v} out of range"));
            }
            if role[v.0] != 0 {
                return fail(format!("vertex {v} appears in two pairs"));
            }
            role[v.0] = 1;
        }
        if g.neighbor_multiset(a) != g.neighbor_multiset(b) {
            return fail(format!("pair ({a}, {b}) has unequal neighborhoods"));
        }
        if g.multiplicity(a, b) > 0 {
            return fail(format!("pair ({a}, {b}) is adjacent"));
        }
    }
    let twin_side: Vec<VertexId> = g.vertices().filter(|v| role[v.0] == 1).collect();
    if twin_side != cert.twin_side {
        return fail("twin_side does not match the pairing".into());
    }
    let subs: Vec<VertexId> = g.vertices().filter(|v| role[v.0] == 0).collect();
    let expected_map: Vec<(VertexId, EdgeId)> = subs
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, EdgeId(i)))
        .collect();
    if expected_map != cert.subdivision_map {
        return fail("subdivision_map is not the ascending dense enumeration".into());
    }
    let underlying = condensed_graph(g, &cert.pairing, &cert.subdivision_map)?;
    if underlying != cert.underlying {
        return fail("underlying graph does not match the certificate".into());
    }
    Ok(underlying)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::multigraph::are_isomorphic;

    #[test]
    fn sd_of_k5_has_folkman_counts() {
        let sd = subdivided_double(&generators::complete(5).unwrap()).unwrap();
        assert_eq!(sd.graph().n(), 20);
        assert_eq!(sd.graph().m(), 40);
        assert!(sd.graph().is_k_regular(4));
        let (first, second) = sd.graph().bipartition().unwrap();
        assert_eq!((first.len(), second.len()), (10, 10));
        // Vertex 0 is a twin, so the first side is exactly the twin side.
        assert!(first
            .iter()
            .all(|&v| matches!(sd.label(v), SdLabel::Twin { .. })));
        assert!(second
            .iter()
            .all(|&v| matches!(sd.label(v), SdLabel::Subdivision { .. })));
    }

    #[test]
    fn sd_size_is_4n_and_8n_on_the_corpus() {
        for g in [
            generators::bouquet(2),
            generators::dipole(4).unwrap(),
            generators::doubled_cycle(3).unwrap(),
            generators::doubled_cycle(4).unwrap(),
            generators::complete(5).unwrap(),
            generators::octahedron(),
        ] {
            let sd = subdivided_double(&g).unwrap();
            assert_eq!(sd.graph().n(), 4 * g.n());
            assert_eq!(sd.graph().m(), 8 * g.n());
            assert!(sd.graph().is_k_regular(4));
            assert!(sd.graph().bipartition().is_some());
        }
    }

    #[test]
    fn twins_share_neighborhoods_and_are_nonadjacent() {
        for g in [
            generators::bouquet(2),
            generators::doubled_cycle(3).unwrap(),
            generators::complete(5).unwrap(),
        ] {
            let sd = subdivided_double(&g).unwrap();
            for v in g.vertices() {
                let t0 = sd.twin_vertex(v, 0);
                let t1 = sd.twin_vertex(v, 1);
                assert_eq!(
                    sd.graph().neighbor_multiset(t0),
                    sd.graph().neighbor_multiset(t1)
                );
                assert_eq!(sd.graph().multiplicity(t0, t1), 0);
            }
        }
    }

    #[test]
    fn sd_rejects_non_4_regular_sources() {
        let err = subdivided_double(&generators::petersen()).unwrap_err();
        assert_eq!(
            err,
            Error::NotKRegular {
                vertex: VertexId(0),
                degree: 3,
                expected: 4
            }
        );
    }

    #[test]
    fn sd_of_dipole_is_k44() {
        let sd = subdivided_double(&generators::dipole(4).unwrap()).unwrap();
        assert!(are_isomorphic(
            sd.graph(),
            &generators::complete_bipartite(4, 4).unwrap()
        ));
    }

    #[test]
    fn sd_of_bouquet_is_doubled_square() {
        let sd = subdivided_double(&generators::bouquet(2)).unwrap();
        assert!(are_isomorphic(
            sd.graph(),
            &generators::doubled_cycle(4).unwrap()
        ));
    }

    #[test]
    fn from_parts_round_trips_and_validates() {
        let g = generators::doubled_cycle(3).unwrap();
        let sd = subdivided_double(&g).unwrap();
        let rebuilt =
            SdGraph::from_parts(sd.graph().clone(), sd.labels().to_vec()).unwrap();
        assert_eq!(rebuilt.source(), &g);
        assert_eq!(rebuilt.graph(), sd.graph());

        // Tampered labels: swap a twin and a subdivision label.
        let mut bad = sd.labels().to_vec();
        bad.swap(0, sd.graph().n() - 1);
        assert!(SdGraph::from_parts(sd.graph().clone(), bad).is_err());

        // Wrong length.
        assert!(SdGraph::from_parts(sd.graph().clone(), vec![]).is_err());
    }

    #[test]
    fn recognize_accepts_the_canonical_double() {
        let g = generators::complete(5).unwrap();
        let sd = subdivided_double(&g).unwrap();
        let cert = recognize(sd.graph()).unwrap();
        assert_eq!(cert.pairing.len(), 5);
        assert_eq!(cert.subdivision_map.len(), 10);
        assert!(are_isomorphic(&cert.underlying, &g));
        // In the canonical layout the twins of v are 2v and 2v + 1.
        assert_eq!(cert.pairing[0], (VertexId(0), VertexId(1)));
        assert_eq!(condense(sd.graph(), &cert).unwrap(), cert.underlying);
    }

    #[test]
    fn recognize_failure_reasons_are_ordered() {
        assert_eq!(
            recognize(&generators::petersen()),
            Err(RecognizeFailure::NotFourRegular {
                vertex: VertexId(0)
            })
        );
        assert_eq!(
            recognize(&generators::complete(5).unwrap()),
            Err(RecognizeFailure::NotBipartite)
        );
        // Steps 1 and 8 on 18 vertices give odd closed walks.
        assert_eq!(
            recognize(&generators::circulant(18, &[1, 8]).unwrap()),
            Err(RecognizeFailure::NotBipartite)
        );
        assert_eq!(
            RecognizeFailure::NoTwinPairing.code(),
            "no-twin-pairing"
        );
    }

    #[test]
    fn recognize_reports_no_twin_pairing_when_neighborhoods_differ() {
        // 4-regular and bipartite, but no two vertices share a neighborhood.
        let c12 = generators::circulant(12, &[1, 3]).unwrap();
        assert!(c12.bipartition().is_some());
        assert_eq!(recognize(&c12), Err(RecognizeFailure::NoTwinPairing));
    }

    #[test]
    fn recognize_circulant_16_pairs_opposite_vertices() {
        let c16 = generators::circulant(16, &[1, 7]).unwrap();
        let cert = recognize(&c16).unwrap();
        for &(a, b) in &cert.pairing {
            assert_eq!(b.0, a.0 + 8); // the twin of a vertex is its antipode
        }
        assert!(are_isomorphic(
            &cert.underlying,
            &generators::doubled_cycle(4).unwrap()
        ));
    }

    #[test]
    fn recognize_condense_round_trip_on_the_corpus() {
        for g in [
            generators::bouquet(2),
            generators::dipole(4).unwrap(),
            generators::doubled_cycle(3).unwrap(),
            generators::doubled_cycle(4).unwrap(),
            generators::complete(5).unwrap(),
            generators::octahedron(),
        ] {
            let sd = subdivided_double(&g).unwrap();
            let cert = recognize(sd.graph()).unwrap();
            assert!(are_isomorphic(&cert.underlying, &g));
            assert_eq!(condense(sd.graph(), &cert).unwrap(), cert.underlying);
        }
    }

    #[test]
    fn recognize_handles_disconnected_unions() {
        // Disjoint union of SD(K5) and SD(doubled C3).
        let a = subdivided_double(&generators::complete(5).unwrap()).unwrap();
        let b = subdivided_double(&generators::doubled_cycle(3).unwrap()).unwrap();
        let shift = a.graph().n();
        let mut edges: Vec<(usize, usize)> = a
            .graph()
            .edges()
            .iter()
            .map(|&(u, v)| (u.0, v.0))
            .collect();
        edges.extend(
            b.graph()
                .edges()
                .iter()
                .map(|&(u, v)| (u.0 + shift, v.0 + shift)),
        );
        let union = MultiGraph::new(shift + b.graph().n(), edges).unwrap();
        let cert = recognize(&union).unwrap();
        assert_eq!(cert.pairing.len(), 8); // 5 + 3 twin pairs
        assert_eq!(cert.underlying.m(), 16); // 10 + 6 edges
        assert!(!cert.underlying.is_connected());
    }

    #[test]
    fn pairing_exists_iff_all_neighborhood_classes_are_even() {
        // Check the even-class criterion explicitly against recognition on
        // both a success and the no-pairing failure case.
        for (g, expect) in [
            (
                subdivided_double(&generators::complete(5).unwrap())
                    .unwrap()
                    .graph()
                    .clone(),
                true,
            ),
            (generators::circulant(12, &[1, 3]).unwrap(), false),
        ] {
            let (side_a, side_b) = g.bipartition().unwrap();
            let even_classes = |side: &[VertexId]| {
                let mut classes: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
                for &v in side {
                    *classes.entry(g.neighbor_multiset(v)).or_default() += 1;
                }
                classes.values().all(|c| c % 2 == 0)
            };
            let any_side = even_classes(&side_a) || even_classes(&side_b);
            assert_eq!(any_side, expect);
            assert_eq!(recognize(&g).is_ok(), expect);
        }
    }

    #[test]
    fn condense_rejects_tampered_certificates() {
        let sd = subdivided_double(&generators::doubled_cycle(3).unwrap()).unwrap();
        let cert = recognize(sd.graph()).unwrap();

        let mut swapped = cert.clone();
        // Cross-wire two pairs; neighborhoods then disagree.
        let (a0, b0) = swapped.pairing[0];
        let (a1, b1) = swapped.pairing[1];
        swapped.pairing[0] = (a0, b1);
        swapped.pairing[1] = (a1, b0);
        swapped.pairing.sort();
        assert!(condense(sd.graph(), &swapped).is_err());

        let mut wrong_underlying = cert.clone();
        wrong_underlying.underlying = generators::bouquet(2);
        assert!(condense(sd.graph(), &wrong_underlying).is_err());

        // A certificate for a different graph fails on the original.
        let other = subdivided_double(&generators::dipole(4).unwrap()).unwrap();
        assert!(condense(other.graph(), &cert).is_err());
    }
}
