//! Partitioning a graph's edges into two linear forests.

use crate::multigraph::{EdgeId, MultiGraph};

/// Splits the edge set into two linear forests — subgraphs in which every
/// vertex has degree at most 2 and no cycle exists — or reports that no such
/// partition exists.
///
/// Intended for simple desk-scale graphs (vertex-deleted 4-regular graphs and
/// the like). Edges are 2-colored in id order by backtracking, pruning on
/// per-class degrees and acyclicity; the first edge is pinned to the first
/// class, and the first satisfying assignment is returned as two ascending
/// edge-id lists. A loop can never be placed (it is a cycle by itself), so
/// loopy inputs always return `None`.
pub fn linear_arboricity_two(g: &MultiGraph) -> Option<(Vec<EdgeId>, Vec<EdgeId>)> {
    let mut state = State {
        degree: [vec![0; g.n()], vec![0; g.n()]],
        forest: [Dsu::new(g.n()), Dsu::new(g.n())],
        color: vec![0u8; g.m()],
    };
    if !assign(g, 0, &mut state) {
        return None;
    }
    let mut classes = (Vec::new(), Vec::new());
    for e in g.edge_ids() {
        match state.color[e.0] {
            0 => classes.0.push(e),
            _ => classes.1.push(e),
        }
    }
    Some(classes)
}

struct State {
    degree: [Vec<usize>; 2],
    forest: [Dsu; 2],
    color: Vec<u8>,
}

fn assign(g: &MultiGraph, e: usize, state: &mut State) -> bool {
    if e == g.m() {
        return true;
    }
    let (u, v) = g.endpoints(EdgeId(e));
    // Pinning the first edge to class 0 halves the search; the two classes
    // are interchangeable.
    let choices: &[u8] = if e == 0 { &[0] } else { &[0, 1] };
    for &class in choices {
        let c = class as usize;
        if u == v {
            continue; // a loop closes a cycle in either class
        }
        if state.degree[c][u.0] >= 2 || state.degree[c][v.0] >= 2 {
            continue;
        }
        let Some(rollback) = state.forest[c].union(u.0, v.0) else {
            continue; // u and v already connected in this class: a cycle
        };
        state.degree[c][u.0] += 1;
        state.degree[c][v.0] += 1;
        state.color[e] = class;
        if assign(g, e + 1, state) {
            return true;
        }
        state.degree[c][u.0] -= 1;
        state.degree[c][v.0] -= 1;
        state.forest[c].rollback(rollback);
    }
    false
}

/// Union-find with explicit rollback (no path compression, union by size).
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

/// Undo record: the child root that was attached and its new parent.
struct Union {
    child: usize,
    parent: usize,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the components of `a` and `b`; `None` when already joined.
    fn union(&mut self, a: usize, b: usize) -> Option<Union> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (child, parent) = if self.size[ra] < self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = parent;
        self.size[parent] += self.size[child];
        Some(Union { child, parent })
    }

    fn rollback(&mut self, u: Union) {
        self.size[u.parent] -= self.size[u.child];
        self.parent[u.child] = u.child;
    }
}
