//! On-disk JSON schemas and their conversions to library types.
//!
//! Serialization is canonical: fixed key order (struct declaration order),
//! pretty-printed, newline-terminated. Writing the same value twice always
//! produces identical bytes.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use hampair::eulerham::{EulerTour, HamCycle, TourStep};
use hampair::subdouble::{SdCertificate, SdGraph, SdLabel};
use hampair::{EdgeId, MultiGraph, VertexId};

use crate::Failure;

/// Graph file: `{n, edges, labels?}`. Edge array order defines edge ids;
/// `labels` (one entry per vertex) is present exactly for subdivided doubles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelEntry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LabelEntry {
    Twin { vertex: usize, copy: u8 },
    Subdivision { edge: usize },
}

impl GraphFile {
    pub fn from_graph(g: &MultiGraph) -> GraphFile {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u.0, v.0]).collect(),
            labels: None,
        }
    }

    pub fn from_sd(sd: &SdGraph) -> GraphFile {
        let labels = sd
            .labels()
            .iter()
            .map(|l| match *l {
                SdLabel::Twin { source, copy } => LabelEntry::Twin {
                    vertex: source.0,
                    copy,
                },
                SdLabel::Subdivision { source } => LabelEntry::Subdivision { edge: source.0 },
            })
            .collect();
        GraphFile {
            labels: Some(labels),
            ..GraphFile::from_graph(sd.graph())
        }
    }

    pub fn to_graph(&self) -> Result<MultiGraph, Failure> {
        Ok(MultiGraph::new(
            self.n,
            self.edges.iter().map(|&[u, v]| (u, v)),
        )?)
    }

    /// Rebuilds the labeled subdivided double; requires the labels block.
    pub fn to_sd(&self) -> Result<SdGraph, Failure> {
        let labels = self.labels.as_ref().ok_or_else(|| {
            Failure::usage("this command needs a subdivided-double file with a labels block")
        })?;
        let labels = labels
            .iter()
            .map(|l| match *l {
                LabelEntry::Twin { vertex, copy } => SdLabel::Twin {
                    source: VertexId(vertex),
                    copy,
                },
                LabelEntry::Subdivision { edge } => SdLabel::Subdivision {
                    source: EdgeId(edge),
                },
            })
            .collect();
        Ok(SdGraph::from_parts(self.to_graph()?, labels)?)
    }
}

/// Euler tour file: `{steps: [[vertex, edge], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TourFile {
    pub steps: Vec<[usize; 2]>,
}

impl TourFile {
    pub fn from_tour(t: &EulerTour) -> TourFile {
        TourFile {
            steps: t.steps().iter().map(|s| [s.vertex.0, s.edge.0]).collect(),
        }
    }

    pub fn to_tour(&self, g: &MultiGraph) -> Result<EulerTour, Failure> {
        let steps = self
            .steps
            .iter()
            .map(|&[v, e]| TourStep {
                vertex: VertexId(v),
                edge: EdgeId(e),
            })
            .collect();
        Ok(EulerTour::new(g, steps)?)
    }
}

/// Hamiltonian cycle file: `{order, edges}` in the canonical traversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleFile {
    pub order: Vec<usize>,
    pub edges: Vec<usize>,
}

impl CycleFile {
    pub fn from_cycle(h: &HamCycle) -> CycleFile {
        CycleFile {
            order: h.order().iter().map(|v| v.0).collect(),
            edges: h.edges().iter().map(|e| e.0).collect(),
        }
    }

    pub fn to_cycle(&self, g: &MultiGraph) -> Result<HamCycle, Failure> {
        let order = self.order.iter().map(|&v| VertexId(v)).collect();
        let edges = self.edges.iter().map(|&e| EdgeId(e)).collect();
        Ok(HamCycle::new(g, order, edges)?)
    }
}

/// Recognition certificate: twin side, twin pairing, subdivision vertex to
/// condensed edge map, and the condensed underlying graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertFile {
    pub twin_side: Vec<usize>,
    pub pairing: Vec<[usize; 2]>,
    pub subdivision_map: Vec<[usize; 2]>,
    pub underlying: GraphFile,
}

impl CertFile {
    pub fn from_cert(cert: &SdCertificate) -> CertFile {
        CertFile {
            twin_side: cert.twin_side.iter().map(|v| v.0).collect(),
            pairing: cert.pairing.iter().map(|&(a, b)| [a.0, b.0]).collect(),
            subdivision_map: cert
                .subdivision_map
                .iter()
                .map(|&(v, e)| [v.0, e.0])
                .collect(),
            underlying: GraphFile::from_graph(&cert.underlying),
        }
    }
}

/// Canonical JSON bytes for any serializable value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization cannot fail");
    s.push('\n');
    s
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed {}: {e}", path.display())))
}
