//! Euler tours: validation, deterministic construction, and exhaustive
//! enumeration.

use crate::multigraph::{MultiGraph, VertexId};
use crate::multigraph::EdgeId;
use crate::Error;

/// One step of a closed walk: the vertex being left and the edge taken out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TourStep {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

/// A closed walk using every edge of a multigraph exactly once.
///
/// A tour is a cyclic object, but the representation fixes a start index:
/// step 0 is distinguished, and "first visit" questions (as asked by lifting)
/// are answered by scanning from it. [`rotated`](EulerTour::rotated) re-roots
/// the same cyclic walk at another step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerTour {
    steps: Vec<TourStep>,
}

impl EulerTour {
    /// Validates a step sequence as an Euler tour of `g`: every edge used
    /// exactly once, consecutive steps connected, walk closed.
    pub fn new(g: &MultiGraph, steps: Vec<TourStep>) -> Result<EulerTour, Error> {
        validate_steps(g, &steps)?;
        Ok(EulerTour { steps })
    }

    pub fn steps(&self) -> &[TourStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertex the tour starts (and ends) at.
    pub fn start(&self) -> VertexId {
        self.steps[0].vertex
    }

    /// The same cyclic walk re-rooted to start at step `k` of this one.
    pub fn rotated(&self, k: usize) -> EulerTour {
        let mut steps = self.steps.clone();
        let l = steps.len();
        steps.rotate_left(k % l);
        EulerTour { steps }
    }
}

/// Shared validation for externally supplied step sequences.
pub(super) fn validate_steps(g: &MultiGraph, steps: &[TourStep]) -> Result<(), Error> {
    if steps.len() != g.m() {
        return Err(Error::InvalidTour(format!(
            "tour has {} steps but the graph has {} edges",
            steps.len(),
            g.m()
        )));
    }
    if steps.is_empty() {
        return Err(Error::InvalidTour("tour is empty".into()));
    }
    let mut used = vec![false; g.m()];
    let mut at = steps[0].vertex;
    for step in steps {
        if step.vertex != at {
            return Err(Error::InvalidTour(format!(
                "a step leaves {} but the walk is at {at}",
                step.vertex
            )));
        }
        if step.edge.0 >= g.m() {
            return Err(Error::InvalidTour(format!("edge {} out of range", step.edge)));
        }
        if used[step.edge.0] {
            return Err(Error::InvalidTour(format!("edge {} used twice", step.edge)));
        }
        used[step.edge.0] = true;
        let (a, b) = g.endpoints(step.edge);
        if a != at && b != at {
            return Err(Error::InvalidTour(format!(
                "edge {} is not incident to {at}",
                step.edge
            )));
        }
        at = g.other_end(at, step.edge);
    }
    if at != steps[0].vertex {
        return Err(Error::InvalidTour(
            "the walk does not return to its start".into(),
        ));
    }
    Ok(())
}

fn check_eulerian(g: &MultiGraph) -> Result<(), Error> {
    if g.m() == 0 {
        return Err(Error::EulerNoEdges);
    }
    for v in g.vertices() {
        let degree = g.degree(v);
        if degree % 2 != 0 {
            return Err(Error::EulerOddDegree { vertex: v, degree });
        }
    }
    if !g.is_connected() {
        return Err(Error::EulerDisconnected);
    }
    Ok(())
}

/// Walks greedily from `start`, always taking the lowest-id unused edge,
/// until stuck. With all degrees even the walk necessarily closes at `start`.
fn walk_circuit(g: &MultiGraph, used: &mut [bool], start: VertexId) -> Vec<TourStep> {
    let mut circuit = Vec::new();
    let mut at = start;
    loop {
        let Some(inc) = g.incidences(at).iter().find(|inc| !used[inc.edge.0]) else {
            break;
        };
        used[inc.edge.0] = true;
        circuit.push(TourStep {
            vertex: at,
            edge: inc.edge,
        });
        at = g.other_end(at, inc.edge);
    }
    debug_assert_eq!(at, start, "even degrees force the circuit to close");
    circuit
}

/// Builds one Euler tour deterministically: Hierholzer's algorithm starting
/// at vertex 0, always taking the lowest unused edge id, splicing subcircuits
/// at the earliest position that still has unused incident edges.
pub fn euler_tour(g: &MultiGraph) -> Result<EulerTour, Error> {
    check_eulerian(g)?;
    let mut used = vec![false; g.m()];
    let mut steps = walk_circuit(g, &mut used, VertexId(0));
    let mut pos = 0;
    while steps.len() < g.m() {
        while pos < steps.len() {
            let v = steps[pos].vertex;
            if g.incidences(v).iter().any(|inc| !used[inc.edge.0]) {
                break;
            }
            pos += 1;
        }
        debug_assert!(pos < steps.len(), "connectivity guarantees a splice point");
        let sub = walk_circuit(g, &mut used, steps[pos].vertex);
        let tail = steps.split_off(pos);
        steps.extend(sub);
        steps.extend(tail);
    }
    debug_assert!(validate_steps(g, &steps).is_ok());
    Ok(EulerTour { steps })
}

/// Enumerates every Euler tour, one representative per closed walk: all tours
/// are rooted at vertex 0 with the lowest edge id at vertex 0 as their first
/// step (quotienting rotations), and of the two traversal directions of each
/// walk exactly one is kept. Tours appear in depth-first order of the
/// lowest-edge-id-first search; `limit` truncates the enumeration.
pub fn all_euler_tours(g: &MultiGraph, limit: Option<usize>) -> Result<Vec<EulerTour>, Error> {
    check_eulerian(g)?;
    let mut tours = Vec::new();
    if limit == Some(0) {
        return Ok(tours);
    }
    let start = VertexId(0);
    let first = g.incidences(start)[0].edge;
    let mut used = vec![false; g.m()];
    used[first.0] = true;
    let mut steps = vec![TourStep {
        vertex: start,
        edge: first,
    }];
    search_tours(
        g,
        g.other_end(start, first),
        &mut used,
        &mut steps,
        &mut tours,
        limit,
    );
    Ok(tours)
}

fn search_tours(
    g: &MultiGraph,
    at: VertexId,
    used: &mut [bool],
    steps: &mut Vec<TourStep>,
    tours: &mut Vec<EulerTour>,
    limit: Option<usize>,
) -> bool {
    if steps.len() == g.m() {
        if at == steps[0].vertex && is_canonical_direction(g, steps) {
            tours.push(EulerTour {
                steps: steps.clone(),
            });
            if limit.is_some_and(|l| tours.len() >= l) {
                return true;
            }
        }
        return false;
    }
    let mut prev = None;
    for inc in g.incidences(at) {
        // A loop appears twice in the incidence list; branch on it once.
        if used[inc.edge.0] || prev == Some(inc.edge) {
            continue;
        }
        prev = Some(inc.edge);
        used[inc.edge.0] = true;
        steps.push(TourStep {
            vertex: at,
            edge: inc.edge,
        });
        let stop = search_tours(g, g.other_end(at, inc.edge), used, steps, tours, limit);
        steps.pop();
        used[inc.edge.0] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Keeps exactly one of the two traversal directions of each closed walk:
/// the walk is kept when it is lexicographically no larger than its reversal
/// re-rooted at the same first edge. When that first edge is not a loop the
/// reversal leaves it from the other endpoint, the comparison is decided at
/// step 0, and every walk is kept — rooting already separated the directions.
/// When it is a loop, both directions produce walks rooted identically and
/// this rule picks one of the two.
fn is_canonical_direction(g: &MultiGraph, steps: &[TourStep]) -> bool {
    let l = steps.len();
    let mut mirror = Vec::with_capacity(l);
    for j in 0..l {
        let i = l - 1 - j;
        let arrived = g.other_end(steps[i].vertex, steps[i].edge);
        mirror.push(TourStep {
            vertex: arrived,
            edge: steps[i].edge,
        });
    }
    let pos = mirror
        .iter()
        .position(|s| s.edge == steps[0].edge)
        .expect("every edge occurs in the walk");
    mirror.rotate_left(pos);
    steps <= mirror.as_slice()
}
