//! Exhaustive Hamiltonian-cycle enumeration and the pairing reports built on
//! it. This is the brute-force oracle the rest of the crate is verified
//! against, so it stays as plain as possible: depth-first extension from
//! vertex 0 with two sound prunes, and a final deterministic sort.

use std::thread;

use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::Error;

use super::cycle::{complement_cycle, HamCycle};

/// All Hamiltonian cycles of a multigraph, in lexicographic order of their
/// sorted edge-id sets. Parallel edges give distinct cycles; loops never
/// participate (a Hamiltonian cycle has length at least 3). The empty list
/// means the graph is not Hamiltonian.
pub fn enumerate_ham_cycles(g: &MultiGraph) -> Vec<HamCycle> {
    enumerate_ham_cycles_threads(g, 1)
}

/// [`enumerate_ham_cycles`] with the search space split across `threads`
/// workers. The result is identical — not merely equivalent — for every
/// worker count: cycles are found in disjoint search subtrees and the final
/// sort imposes one total order.
pub fn enumerate_ham_cycles_threads(g: &MultiGraph, threads: usize) -> Vec<HamCycle> {
    let threads = threads.max(1);
    let mut cycles = if g.n() < 3 {
        Vec::new()
    } else {
        let seeds = seeds(g);
        if threads == 1 || seeds.len() <= 1 {
            let mut out = Vec::new();
            for &seed in &seeds {
                run_seed(g, seed, &mut out);
            }
            out
        } else {
            let seeds = &seeds;
            let buckets: Vec<Vec<HamCycle>> = thread::scope(|scope| {
                let handles: Vec<_> = (0..threads)
                    .map(|w| {
                        scope.spawn(move || {
                            let mut out = Vec::new();
                            let mut i = w;
                            while i < seeds.len() {
                                run_seed(g, seeds[i], &mut out);
                                i += threads;
                            }
                            out
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("enumeration workers do not panic"))
                    .collect()
            });
            buckets.into_iter().flatten().collect()
        }
    };
    cycles.sort_by_key(|c| c.edge_set());
    cycles
}

/// Independent two-edge path stubs `0 → v1 → v2` rooted at vertex 0; each is
/// the start of a disjoint search subtree, so they can be handed to workers
/// in any split without changing the union of results.
fn seeds(g: &MultiGraph) -> Vec<(EdgeId, EdgeId)> {
    let zero = VertexId(0);
    let mut out = Vec::new();
    let mut prev0 = None;
    for inc0 in g.incidences(zero) {
        if prev0 == Some(inc0.edge) {
            continue;
        }
        prev0 = Some(inc0.edge);
        let v1 = g.other_end(zero, inc0.edge);
        if v1 == zero {
            continue; // loop
        }
        let mut prev1 = None;
        for inc1 in g.incidences(v1) {
            if inc1.edge == inc0.edge || prev1 == Some(inc1.edge) {
                continue;
            }
            prev1 = Some(inc1.edge);
            let v2 = g.other_end(v1, inc1.edge);
            if v2 == v1 || v2 == zero {
                continue; // loop, or a premature return to the root
            }
            out.push((inc0.edge, inc1.edge));
        }
    }
    out
}

fn run_seed(g: &MultiGraph, (e0, e1): (EdgeId, EdgeId), out: &mut Vec<HamCycle>) {
    let zero = VertexId(0);
    let v1 = g.other_end(zero, e0);
    let v2 = g.other_end(v1, e1);
    let mut visited = vec![false; g.n()];
    visited[zero.0] = true;
    visited[v1.0] = true;
    visited[v2.0] = true;
    let mut path = vec![zero, v1, v2];
    let mut path_edges = vec![e0, e1];
    extend(g, &mut path, &mut path_edges, &mut visited, out);
}

fn extend(
    g: &MultiGraph,
    path: &mut Vec<VertexId>,
    path_edges: &mut Vec<EdgeId>,
    visited: &mut [bool],
    out: &mut Vec<HamCycle>,
) {
    let head = *path.last().expect("the path is never empty");
    if path.len() == g.n() {
        // Close the cycle. Of a cycle's two traversals from vertex 0, accept
        // the one whose first edge id is below its closing edge id, so each
        // cycle is emitted exactly once.
        let first = path_edges[0];
        for c in g.edges_between(head, VertexId(0)) {
            if c > first {
                let mut edges = path_edges.clone();
                edges.push(c);
                out.push(
                    HamCycle::new(g, path.clone(), edges)
                        .expect("the search constructs valid cycles"),
                );
            }
        }
        return;
    }
    if !completable(g, visited, head) {
        return;
    }
    let mut prev = None;
    for inc in g.incidences(head) {
        if prev == Some(inc.edge) {
            continue;
        }
        prev = Some(inc.edge);
        let w = g.other_end(head, inc.edge);
        if w == head || visited[w.0] {
            continue;
        }
        visited[w.0] = true;
        path.push(w);
        path_edges.push(inc.edge);
        extend(g, path, path_edges, visited, out);
        path_edges.pop();
        path.pop();
        visited[w.0] = false;
    }
}

/// Sound pruning: a partial path can only close into a Hamiltonian cycle if,
/// within the graph induced on the unvisited vertices plus the path's head
/// and vertex 0, (a) the head reaches every unvisited vertex and vertex 0,
/// (b) every unvisited vertex has two distinct possible cycle neighbors, and
/// (c) vertex 0 still has an unvisited neighbor to close from.
fn completable(g: &MultiGraph, visited: &[bool], head: VertexId) -> bool {
    let zero = VertexId(0);
    let open = |v: VertexId| !visited[v.0] || v == head || v == zero;

    let mut zero_has_unvisited_neighbor = false;
    for v in g.vertices() {
        if visited[v.0] {
            continue;
        }
        let mut distinct = Vec::with_capacity(4);
        for inc in g.incidences(v) {
            let w = g.other_end(v, inc.edge);
            if w != v && open(w) && !distinct.contains(&w) {
                distinct.push(w);
            }
            if w == zero {
                zero_has_unvisited_neighbor = true;
            }
        }
        if distinct.len() < 2 {
            return false;
        }
    }
    if !zero_has_unvisited_neighbor {
        return false;
    }

    // Reachability of every unvisited vertex and vertex 0 from the head.
    let mut seen = vec![false; g.n()];
    seen[head.0] = true;
    let mut stack = vec![head];
    while let Some(v) = stack.pop() {
        for inc in g.incidences(v) {
            let w = g.other_end(v, inc.edge);
            if open(w) && !seen[w.0] {
                seen[w.0] = true;
                stack.push(w);
            }
        }
    }
    if !seen[zero.0] {
        return false;
    }
    g.vertices().all(|v| visited[v.0] || seen[v.0])
}

/// Summary of the complement-pairing status of a 4-regular multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    /// Number of Hamiltonian cycles.
    pub cycle_count: usize,
    /// Number of unordered decompositions {H, complement(H)} with both
    /// halves Hamiltonian.
    pub decomposition_count: usize,
    /// True when the graph is Hamiltonian and every cycle's complement is
    /// again a Hamiltonian cycle.
    pub paired: bool,
    /// The first cycle (in enumeration order) whose complement is not a
    /// Hamiltonian cycle, if any.
    pub counterexample: Option<HamCycle>,
}

/// Enumerates all Hamiltonian cycles and checks every complement, using
/// `threads` enumeration workers. Errors unless the graph is 4-regular.
pub fn pairing_report(g: &MultiGraph, threads: usize) -> Result<PairingReport, Error> {
    if let Some((vertex, degree)) = g.k_regular_violation(4) {
        return Err(Error::NotKRegular {
            vertex,
            degree,
            expected: 4,
        });
    }
    let cycles = enumerate_ham_cycles_threads(g, threads);
    let mut paired_cycles = 0;
    let mut counterexample = None;
    for h in &cycles {
        let factor = complement_cycle(g, h).expect("enumerated cycles complement cleanly");
        if factor.to_ham_cycle(g).is_some() {
            paired_cycles += 1;
        } else if counterexample.is_none() {
            counterexample = Some(h.clone());
        }
    }
    // Complementation is an involution without fixed points (a cycle and its
    // complement share no edge), so cycles with Hamiltonian complements come
    // in pairs.
    assert!(
        paired_cycles % 2 == 0,
        "cycles with Hamiltonian complements must pair up"
    );
    Ok(PairingReport {
        cycle_count: cycles.len(),
        decomposition_count: paired_cycles / 2,
        paired: !cycles.is_empty() && counterexample.is_none(),
        counterexample,
    })
}

/// Whether the graph is Hamiltonian with every Hamiltonian cycle's complement
/// again Hamiltonian; on failure the second component carries the first
/// offending cycle (or nothing, when the graph has no Hamiltonian cycle at
/// all). Errors unless the graph is 4-regular.
pub fn is_hamiltonian_paired(g: &MultiGraph) -> Result<(bool, Option<HamCycle>), Error> {
    is_hamiltonian_paired_threads(g, 1)
}

/// [`is_hamiltonian_paired`] with a worker count for the enumeration.
pub fn is_hamiltonian_paired_threads(
    g: &MultiGraph,
    threads: usize,
) -> Result<(bool, Option<HamCycle>), Error> {
    let report = pairing_report(g, threads)?;
    Ok((report.paired, report.counterexample))
}

/// Number of unordered Hamiltonian decompositions: pairs {H, complement(H)}
/// with both halves Hamiltonian cycles. Errors unless the graph is 4-regular.
pub fn count_ham_decompositions(g: &MultiGraph) -> Result<usize, Error> {
    count_ham_decompositions_threads(g, 1)
}

/// [`count_ham_decompositions`] with a worker count for the enumeration.
pub fn count_ham_decompositions_threads(g: &MultiGraph, threads: usize) -> Result<usize, Error> {
    Ok(pairing_report(g, threads)?.decomposition_count)
}
