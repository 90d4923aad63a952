//! Lifting Euler tours of a source multigraph to Hamiltonian cycles of its
//! subdivided double, reconstructing the bijection from a lifted cycle,
//! finding hairpins, and projecting hairpin-free cycles back to tours.

use std::fmt;

use crate::multigraph::{EdgeId, VertexId};
use crate::subdouble::{SdGraph, SdLabel};
use crate::Error;

use super::cycle::{revalidate, HamCycle};
use super::euler::{validate_steps, EulerTour, TourStep};

/// One bit per source vertex, assigning the two tour visits of each vertex to
/// its two twins: bit `v` false sends the first visit of `v` (scanning from
/// the tour's start) to twin copy 0 and the second to copy 1; true swaps
/// them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BijectionVector {
    bits: Vec<bool>,
}

impl BijectionVector {
    pub fn new(bits: Vec<bool>) -> BijectionVector {
        BijectionVector { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The bit for a source vertex. Panics if out of range.
    pub fn bit(&self, v: VertexId) -> bool {
        self.bits[v.0]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// All `2^n` vectors, in counting order: vector `k` has bit `v` set when
    /// bit `v` of `k` is set.
    pub fn all(n: usize) -> impl Iterator<Item = BijectionVector> {
        assert!(n < 63, "bijection enumeration is a desk-scale tool");
        (0..(1u64 << n)).map(move |k| {
            BijectionVector::new((0..n).map(|v| (k >> v) & 1 == 1).collect())
        })
    }
}

impl fmt::Display for BijectionVector {
    /// Bitstring with the bit of vertex `v` at position `v`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A hairpin: two consecutive cycle edges whose outer endpoints are the two
/// twins of one source vertex, meeting at the subdivision vertex between
/// them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hairpin {
    /// The source vertex whose twins form the hairpin's endpoints.
    pub source_vertex: VertexId,
    /// Those twins, copy 0 first.
    pub twins: (VertexId, VertexId),
    /// The subdivision vertex in the middle.
    pub middle: VertexId,
}

/// Lifts an Euler tour of `sd.source()` to a Hamiltonian cycle of
/// `sd.graph()`.
///
/// Scanning the tour from its start, the first visit of source vertex `v`
/// becomes twin `(v, b[v])` and the second becomes the other twin; each tour
/// step through source edge `e` becomes the two-edge path joining those twins
/// through the subdivision vertex of `e`. When `e` is a loop there are two
/// parallel copies on each side of its subdivision vertex, and the walk
/// enters on the lower-id copy and leaves on the higher-id copy — this keeps
/// distinct bijections lifting to distinct cycles even on loops.
pub fn lift_tour(
    sd: &SdGraph,
    tour: &EulerTour,
    b: &BijectionVector,
) -> Result<HamCycle, Error> {
    let src = sd.source();
    if b.len() != src.n() {
        return Err(Error::BijectionLength {
            expected: src.n(),
            got: b.len(),
        });
    }
    validate_steps(src, tour.steps())?;
    let m = src.m();
    let mut visits = vec![0u8; src.n()];
    let mut twin_seq = Vec::with_capacity(m);
    for step in tour.steps() {
        let v = step.vertex;
        debug_assert!(visits[v.0] < 2, "a 4-regular tour visits each vertex twice");
        let first = visits[v.0] == 0;
        visits[v.0] += 1;
        let copy = if first { b.bit(v) } else { !b.bit(v) };
        twin_seq.push(sd.twin_vertex(v, u8::from(copy)));
    }
    let mut order = Vec::with_capacity(2 * m);
    let mut edges = Vec::with_capacity(2 * m);
    for (i, step) in tour.steps().iter().enumerate() {
        let sub = sd.subdivision_vertex(step.edge);
        let twin_in = twin_seq[i];
        let twin_out = twin_seq[(i + 1) % m];
        let between_in = sd.graph().edges_between(twin_in, sub);
        let between_out = sd.graph().edges_between(twin_out, sub);
        let enter = *between_in.first().expect("twin is adjacent to its subdivision vertex");
        let exit = *between_out.last().expect("twin is adjacent to its subdivision vertex");
        order.push(twin_in);
        order.push(sub);
        edges.push(enter);
        edges.push(exit);
    }
    HamCycle::new(sd.graph(), order, edges)
}

/// Reconstructs the bijection vector from a lifted cycle: the unique `b` with
/// `lift_tour(sd, tour, b) == h`, or an error when `h` is not a lift of this
/// tour.
///
/// For each source vertex the tour fixes the (arrival, departure) edge pair
/// of each visit; in the cycle, the twin sitting at the first visit is the
/// one whose two cycle neighbors are exactly the subdivision vertices of that
/// first pair. Only when both visits have the same unordered pair (possible
/// only in two-edge tours) is a vertex ambiguous, and the remaining
/// candidates are disambiguated by re-lifting.
pub fn unlift(sd: &SdGraph, tour: &EulerTour, h: &HamCycle) -> Result<BijectionVector, Error> {
    let src = sd.source();
    validate_steps(src, tour.steps())?;
    revalidate(sd.graph(), h)?;

    let m = src.m();
    let steps = tour.steps();
    // (arrival, departure) edge pairs per vertex, in visit order.
    let mut visit_pairs: Vec<Vec<(EdgeId, EdgeId)>> = vec![Vec::new(); src.n()];
    for (i, step) in steps.iter().enumerate() {
        let arrival = steps[(i + m - 1) % m].edge;
        visit_pairs[step.vertex.0].push((arrival, step.edge));
    }

    // Cycle neighbors of every vertex of the double.
    let order = h.order();
    let l = order.len();
    let mut neighbors: Vec<(VertexId, VertexId)> = vec![(VertexId(0), VertexId(0)); l];
    for i in 0..l {
        let prev = order[(i + l - 1) % l];
        let next = order[(i + 1) % l];
        neighbors[order[i].0] = (prev, next);
    }

    let sub_pair = |(arrival, departure): (EdgeId, EdgeId)| {
        sorted(sd.subdivision_vertex(arrival), sd.subdivision_vertex(departure))
    };
    let mut bits = vec![false; src.n()];
    let mut ambiguous = Vec::new();
    for v in src.vertices() {
        let pairs = &visit_pairs[v.0];
        debug_assert_eq!(pairs.len(), 2);
        let first = sub_pair(pairs[0]);
        let second = sub_pair(pairs[1]);
        let seen0 = {
            let (a, b) = neighbors[sd.twin_vertex(v, 0).0];
            sorted(a, b)
        };
        let seen1 = {
            let (a, b) = neighbors[sd.twin_vertex(v, 1).0];
            sorted(a, b)
        };
        match ((seen0, seen1) == (first, second), (seen1, seen0) == (first, second)) {
            (true, true) => ambiguous.push(v),
            (true, false) => bits[v.0] = false,
            (false, true) => bits[v.0] = true,
            (false, false) => {
                return Err(Error::NotALift(format!(
                    "no assignment of the twins of {v} matches the tour's visits"
                )))
            }
        }
    }

    // Try every completion of the ambiguous bits (in practice at most one
    // vertex) and keep the one that re-lifts to the cycle exactly.
    assert!(ambiguous.len() < 20, "ambiguity is bounded by desk scale");
    for mask in 0u64..(1 << ambiguous.len()) {
        for (i, &v) in ambiguous.iter().enumerate() {
            bits[v.0] = (mask >> i) & 1 == 1;
        }
        let candidate = BijectionVector::new(bits.clone());
        if lift_tour(sd, tour, &candidate)? == *h {
            return Ok(candidate);
        }
    }
    Err(Error::NotALift(
        "the cycle does not arise from this tour under any bijection".into(),
    ))
}

fn sorted(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All hairpins of a Hamiltonian cycle of the double, in cycle order: each
/// position whose subdivision vertex sits between the two twins of one
/// source vertex.
pub fn hairpins_of(sd: &SdGraph, h: &HamCycle) -> Result<Vec<Hairpin>, Error> {
    revalidate(sd.graph(), h)?;
    let order = h.order();
    let l = order.len();
    let mut out = Vec::new();
    for i in 0..l {
        let middle = order[i];
        let SdLabel::Subdivision { .. } = sd.label(middle) else {
            continue;
        };
        let prev = order[(i + l - 1) % l];
        let next = order[(i + 1) % l];
        let (SdLabel::Twin { source: a, .. }, SdLabel::Twin { source: b, .. }) =
            (sd.label(prev), sd.label(next))
        else {
            continue;
        };
        if a == b {
            out.push(Hairpin {
                source_vertex: a,
                twins: (sd.twin_vertex(a, 0), sd.twin_vertex(a, 1)),
                middle,
            });
        }
    }
    Ok(out)
}

/// Projects a hairpin-free Hamiltonian cycle of the double back to the Euler
/// tour of the source it lifts from (the other direction of the lifting
/// equivalence). Returns `None` when the cycle has a hairpin. Sources with
/// loops are outside this equivalence and are refused.
///
/// The tour is returned in a canonical rooting: of the two reading
/// directions, each rooted at its step through source edge 0, the
/// lexicographically smaller step sequence.
pub fn project_to_tour(sd: &SdGraph, h: &HamCycle) -> Result<Option<EulerTour>, Error> {
    let src = sd.source();
    if let Some(e) = src.edge_ids().find(|&e| src.is_loop(e)) {
        return Err(Error::SourceHasLoop { edge: e });
    }
    if !hairpins_of(sd, h)?.is_empty() {
        return Ok(None);
    }

    let order = h.order();
    let l = order.len();
    let read = |reversed: bool| -> Vec<TourStep> {
        let at = |i: usize| {
            if reversed {
                order[(l - i % l) % l]
            } else {
                order[i % l]
            }
        };
        let mut steps = Vec::with_capacity(l / 2);
        for i in 0..l {
            let SdLabel::Subdivision { source: e } = sd.label(at(i)) else {
                continue;
            };
            let SdLabel::Twin { source: v, .. } = sd.label(at(i + l - 1)) else {
                unreachable!("subdivision vertices neighbor twins");
            };
            steps.push(TourStep { vertex: v, edge: e });
        }
        let pos = steps
            .iter()
            .position(|s| s.edge == EdgeId(0))
            .expect("an Euler tour passes through edge 0");
        steps.rotate_left(pos);
        steps
    };
    let forward = read(false);
    let backward = read(true);
    let steps = if forward <= backward { forward } else { backward };
    EulerTour::new(src, steps).map(Some)
}
