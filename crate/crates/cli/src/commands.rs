//! One function per subcommand. Each returns the process exit code on
//! success and a [`Failure`] (message + exit code) otherwise.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use hampair::eulerham::{
    all_euler_tours, count_ham_decompositions_threads, enumerate_ham_cycles_threads, euler_tour,
    lift_tour, linear_arboricity_two, pairing_report, BijectionVector, EulerTour, HamCycle,
};
use hampair::generators::FamilySpec;
use hampair::subdouble::{recognize as recognize_graph, subdivided_double};
use hampair::{EdgeId, MultiGraph};

use crate::formats::{
    read_json, to_canonical_json, CertFile, CycleFile, GraphFile, LabelEntry, TourFile,
};
use crate::Failure;

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<(GraphFile, MultiGraph), Failure> {
    let file: GraphFile = read_json(path)?;
    let graph = file.to_graph()?;
    Ok((file, graph))
}

fn check_threads(threads: usize) -> Result<(), Failure> {
    if threads == 0 {
        Err(Failure::usage("--threads must be at least 1"))
    } else {
        Ok(())
    }
}

pub fn gen(spec: &str, out: Option<&Path>) -> Result<u8, Failure> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    emit(out, &to_canonical_json(&GraphFile::from_graph(&g)))?;
    Ok(0)
}

pub fn sd(input: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let (_, g) = read_graph(input)?;
    let sd = subdivided_double(&g)?;
    emit(out, &to_canonical_json(&GraphFile::from_sd(&sd)))?;
    Ok(0)
}

#[derive(Serialize)]
struct RecognizeReport {
    recognized: bool,
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertFile>,
}

pub fn recognize(
    input: &Path,
    emit_cert: bool,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let (_, g) = read_graph(input)?;
    match recognize_graph(&g) {
        Ok(cert) => {
            let cert_file = CertFile::from_cert(&cert);
            let text = if json {
                to_canonical_json(&RecognizeReport {
                    recognized: true,
                    reason: None,
                    certificate: emit_cert.then_some(cert_file),
                })
            } else if emit_cert {
                to_canonical_json(&cert_file)
            } else {
                format!(
                    "recognized: {} twin pairs over an underlying graph with {} vertices and {} edges\n",
                    cert_file.pairing.len(),
                    cert_file.underlying.n,
                    cert_file.underlying.edges.len()
                )
            };
            emit(out, &text)?;
            Ok(0)
        }
        Err(failure) => {
            let text = if json {
                to_canonical_json(&RecognizeReport {
                    recognized: false,
                    reason: Some(failure.code()),
                    certificate: None,
                })
            } else {
                format!("not a subdivided double: {failure}\n")
            };
            emit(out, &text)?;
            Ok(1)
        }
    }
}

fn tour_line(t: &EulerTour) -> String {
    let mut line = String::from("tour:");
    for step in t.steps() {
        write!(line, " {}({})", step.vertex.0, step.edge.0).unwrap();
    }
    line.push('\n');
    line
}

#[derive(Serialize)]
struct TourListReport {
    count: usize,
    tours: Vec<TourFile>,
}

pub fn euler(
    input: &Path,
    all: bool,
    limit: Option<usize>,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let (_, g) = read_graph(input)?;
    let text = if all {
        let tours = all_euler_tours(&g, limit)?;
        if json {
            to_canonical_json(&TourListReport {
                count: tours.len(),
                tours: tours.iter().map(TourFile::from_tour).collect(),
            })
        } else {
            let mut s = format!("{} tours\n", tours.len());
            for t in &tours {
                s.push_str(&tour_line(t));
            }
            s
        }
    } else {
        let t = euler_tour(&g)?;
        if json {
            to_canonical_json(&TourFile::from_tour(&t))
        } else {
            tour_line(&t)
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn cycle_line(h: &HamCycle) -> String {
    let mut line = String::from("cycle:");
    for v in h.order() {
        write!(line, " {}", v.0).unwrap();
    }
    line.push('\n');
    line
}

#[derive(Serialize)]
struct CycleListReport {
    count: usize,
    cycles: Vec<CycleFile>,
}

/// Sources with more than this many vertices make `lift --all` explode
/// (2^n cycles); refuse rather than letting the process appear to hang.
const MAX_ALL_BITS: usize = 20;

pub fn lift(
    input: &Path,
    bits: Option<&str>,
    all: bool,
    tour: Option<&Path>,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let file: GraphFile = read_json(input)?;
    let sd = file.to_sd()?;
    let tour = match tour {
        Some(path) => {
            let tf: TourFile = read_json(path)?;
            tf.to_tour(sd.source())?
        }
        None => euler_tour(sd.source())?,
    };
    let text = if all {
        let n = sd.source().n();
        if n > MAX_ALL_BITS {
            return Err(Failure::usage(format!(
                "--all lifts 2^n cycles and the source has n = {n} > {MAX_ALL_BITS} vertices"
            )));
        }
        let cycles = BijectionVector::all(n)
            .map(|b| lift_tour(&sd, &tour, &b))
            .collect::<Result<Vec<_>, _>>()?;
        if json {
            to_canonical_json(&CycleListReport {
                count: cycles.len(),
                cycles: cycles.iter().map(CycleFile::from_cycle).collect(),
            })
        } else {
            let mut s = format!("{} cycles\n", cycles.len());
            for h in &cycles {
                s.push_str(&cycle_line(h));
            }
            s
        }
    } else {
        let bits = bits.expect("clap requires bits unless --all is given");
        let parsed = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Failure::usage(format!(
                    "bit strings use only 0 and 1, found {other:?}"
                ))),
            })
            .collect::<Result<Vec<bool>, Failure>>()?;
        let h = lift_tour(&sd, &tour, &BijectionVector::new(parsed))?;
        if json {
            to_canonical_json(&CycleFile::from_cycle(&h))
        } else {
            cycle_line(&h)
        }
    };
    emit(out, &text)?;
    Ok(0)
}

pub fn enumerate(
    input: &Path,
    threads: usize,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    check_threads(threads)?;
    let (_, g) = read_graph(input)?;
    let cycles = enumerate_ham_cycles_threads(&g, threads);
    let text = if json {
        to_canonical_json(&CycleListReport {
            count: cycles.len(),
            cycles: cycles.iter().map(CycleFile::from_cycle).collect(),
        })
    } else {
        let mut s = format!("{} Hamiltonian cycles\n", cycles.len());
        for h in &cycles {
            s.push_str(&cycle_line(h));
        }
        s
    };
    emit(out, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct PairedReport {
    paired: bool,
    cycle_count: usize,
    decomposition_count: usize,
    decomposition_parity_even: bool,
    counterexample: Option<CycleFile>,
}

pub fn verify_paired(
    input: &Path,
    threads: usize,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    check_threads(threads)?;
    let (_, g) = read_graph(input)?;
    let report = pairing_report(&g, threads)?;
    let parity_even = report.decomposition_count % 2 == 0;
    let code = if report.paired { 0 } else { 1 };
    let text = if json {
        to_canonical_json(&PairedReport {
            paired: report.paired,
            cycle_count: report.cycle_count,
            decomposition_count: report.decomposition_count,
            decomposition_parity_even: parity_even,
            counterexample: report.counterexample.as_ref().map(CycleFile::from_cycle),
        })
    } else {
        let mut s = String::new();
        writeln!(s, "{}", if report.paired { "PAIRED" } else { "NOT-PAIRED" }).unwrap();
        writeln!(s, "cycles: {}", report.cycle_count).unwrap();
        writeln!(s, "decompositions: {}", report.decomposition_count).unwrap();
        writeln!(
            s,
            "decomposition parity: {}",
            if parity_even { "even" } else { "odd" }
        )
        .unwrap();
        if let Some(ce) = &report.counterexample {
            let json_line = serde_json::to_string(&CycleFile::from_cycle(ce))
                .expect("in-memory serialization cannot fail");
            writeln!(s, "counterexample: {json_line}").unwrap();
        }
        s
    };
    emit(out, &text)?;
    Ok(code)
}

#[derive(Serialize)]
struct DecompReport {
    decompositions: usize,
}

pub fn decomp(
    input: &Path,
    threads: usize,
    json: bool,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    check_threads(threads)?;
    let (_, g) = read_graph(input)?;
    let count = count_ham_decompositions_threads(&g, threads)?;
    let text = if json {
        to_canonical_json(&DecompReport {
            decompositions: count,
        })
    } else {
        format!("decompositions: {count}\n")
    };
    emit(out, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct LinarbReport {
    splittable: bool,
    forest1: Option<Vec<usize>>,
    forest2: Option<Vec<usize>>,
}

pub fn linarb2(input: &Path, json: bool, out: Option<&Path>) -> Result<u8, Failure> {
    let (_, g) = read_graph(input)?;
    match linear_arboricity_two(&g) {
        Some((a, b)) => {
            let text = if json {
                to_canonical_json(&LinarbReport {
                    splittable: true,
                    forest1: Some(a.iter().map(|e| e.0).collect()),
                    forest2: Some(b.iter().map(|e| e.0).collect()),
                })
            } else {
                let ids = |v: &[EdgeId]| {
                    v.iter()
                        .map(|e| e.0.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                format!("splittable\nforest 1: {}\nforest 2: {}\n", ids(&a), ids(&b))
            };
            emit(out, &text)?;
            Ok(0)
        }
        None => {
            let text = if json {
                to_canonical_json(&LinarbReport {
                    splittable: false,
                    forest1: None,
                    forest2: None,
                })
            } else {
                "not splittable into two linear forests\n".to_string()
            };
            emit(out, &text)?;
            Ok(1)
        }
    }
}

pub fn export_dot(input: &Path, cycle: Option<&Path>, out: Option<&Path>) -> Result<u8, Failure> {
    let (file, g) = read_graph(input)?;
    let cycle_edges: Option<HashSet<EdgeId>> = match cycle {
        Some(path) => {
            let cf: CycleFile = read_json(path)?;
            let h = cf.to_cycle(&g)?;
            Some(h.edges().iter().copied().collect())
        }
        None => None,
    };
    let mut dot = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let label = match file.labels.as_ref().map(|l| l[v]) {
            Some(LabelEntry::Twin { vertex, copy }) => {
                format!("{}{}", vertex, if copy == 0 { 'a' } else { 'b' })
            }
            Some(LabelEntry::Subdivision { edge }) => format!("e{edge}"),
            None => v.to_string(),
        };
        writeln!(dot, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let style = match &cycle_edges {
            Some(set) if set.contains(&EdgeId(id)) => " [style=bold]",
            Some(_) => " [penwidth=0.5]",
            None => "",
        };
        writeln!(dot, "  {} -- {}{style};", u.0, v.0).unwrap();
    }
    dot.push_str("}\n");
    emit(out, &dot)?;
    Ok(0)
}
