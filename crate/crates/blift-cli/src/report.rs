//! Report records and their two renderings.
//!
//! Machine format is line-delimited JSON, one record per line, and every
//! line round-trips through [`parse_machine_line`]. Text format carries the
//! same fields in a human layout; commands whose text output is itself a
//! graph/matroid file put the header into `#` comments so the output stays
//! parseable.

use blift::exminor::{ExclusionCertificate, ScanItem, ScanOutcome};
use blift::graph::{render_graph, Multigraph};
use blift::lift::{ClassVerdict, Witness, WitnessKind};
use blift::matroid::{render_matroid, Connectivity, Matroid};
use blift::paperlab::LemmaReport;
use blift::SearchCaps;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Header {
        tool: String,
        version: String,
        command: String,
        input: String,
        caps: SearchCaps,
        seed: u64,
        format: String,
    },
    Verdict {
        check: String,
        input: String,
        member: bool,
        search_exhausted: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessRecord>,
    },
    Certificate(CertificateRecord),
    /// A graph or matroid emitted in its text format.
    Artifact {
        kind: String,
        text: String,
    },
    GraphInfo(GraphInfoRecord),
    MatroidInfo(MatroidInfoRecord),
    Lemma(LemmaReport),
    ScanItem(ScanRecord),
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub graph: String,
    pub map: Vec<usize>,
}

impl WitnessRecord {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessRecord {
            kind: w.kind,
            graph: render_graph(&w.graph),
            map: w.map.as_slice().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateRecord {
    pub matroid: String,
    pub connectivity: String,
    pub not_member_exhausted: bool,
    pub per_element: Vec<PerElementRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency_finding: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PerElementRecord {
    pub element: usize,
    pub deletion: VerdictSummary,
    pub contraction: VerdictSummary,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerdictSummary {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

impl VerdictSummary {
    fn from_verdict(v: &ClassVerdict) -> Self {
        VerdictSummary {
            member: v.member,
            witness: v.witness.as_ref().map(WitnessRecord::from_witness),
        }
    }
}

impl CertificateRecord {
    pub fn from_certificate(c: &ExclusionCertificate) -> Self {
        CertificateRecord {
            matroid: render_matroid(&c.matroid),
            connectivity: c.connectivity.label().to_string(),
            not_member_exhausted: c.not_member.search_exhausted,
            per_element: c
                .per_element
                .iter()
                .map(|pe| PerElementRecord {
                    element: pe.element,
                    deletion: VerdictSummary::from_verdict(&pe.deletion),
                    contraction: VerdictSummary::from_verdict(&pe.contraction),
                })
                .collect(),
            consistency_finding: c.consistency_finding.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphInfoRecord {
    pub input: String,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub cycles: usize,
    pub cut_edges: Vec<usize>,
    pub loops: Vec<usize>,
    pub parallel_classes: Vec<Vec<usize>>,
    pub series_classes: Vec<Vec<usize>>,
    pub simplified: String,
    pub cosimplified: String,
    pub subdivision_profile: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatroidInfoRecord {
    pub input: String,
    pub elements: usize,
    pub rank: usize,
    pub corank: usize,
    pub circuits: usize,
    pub connectivity: String,
    pub loops: Vec<usize>,
    pub coloops: Vec<usize>,
    pub parallel_classes: Vec<Vec<usize>>,
    pub series_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ScanRecord {
    pub index: usize,
    pub line: usize,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duplicate_of: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
}

impl ScanRecord {
    pub fn from_item(item: &ScanItem) -> Self {
        let (outcome, duplicate_of, reason, certificate) = match &item.outcome {
            ScanOutcome::Certificate(c) => (
                "certificate",
                None,
                None,
                Some(CertificateRecord::from_certificate(c)),
            ),
            ScanOutcome::Member => ("member", None, None, None),
            ScanOutcome::NotMinimal => ("not_minimal", None, None, None),
            ScanOutcome::Duplicate { of } => ("duplicate", Some(*of), None, None),
            ScanOutcome::Skipped { reason } => ("skipped", None, Some(reason.clone()), None),
        };
        ScanRecord {
            index: item.index,
            line: item.line,
            outcome: outcome.to_string(),
            duplicate_of,
            reason,
            certificate,
        }
    }
}

/// Parses one machine-format line back into a typed record.
pub fn parse_machine_line(line: &str) -> Result<Record, serde_json::Error> {
    serde_json::from_str(line)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

pub struct Reporter {
    pub format: Format,
    lines: Vec<String>,
}

impl Reporter {
    pub fn new(format: Format) -> Self {
        Reporter {
            format,
            lines: Vec::new(),
        }
    }

    pub fn emit(&mut self, record: &Record) {
        match self.format {
            Format::Machine => self
                .lines
                .push(serde_json::to_string(record).expect("serializable record")),
            Format::Text => self.lines.push(render_text(record)),
        }
    }

    pub fn finish(self) -> String {
        let mut out = self.lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}

fn render_text(record: &Record) -> String {
    match record {
        Record::Header {
            tool,
            version,
            command,
            input,
            caps,
            seed,
            format,
        } => format!(
            "# {tool} {version} | {command} {input}\n# caps: max_vertices={} max_edges={} max_parallel={} node_budget={} | seed={seed} format={format}",
            caps.max_vertices, caps.max_edges, caps.max_parallel, caps.node_budget
        ),
        Record::Verdict {
            check,
            input,
            member,
            search_exhausted,
            witness,
        } => {
            let mut s = format!(
                "{check} {input}: {}{}",
                if *member { "member" } else { "not a member" },
                if *search_exhausted {
                    " (search exhausted)"
                } else {
                    ""
                }
            );
            if let Some(w) = witness {
                s.push_str(&format!(
                    "\nwitness ({:?}) map={:?}\n{}",
                    w.kind,
                    w.map,
                    w.graph.trim_end()
                ));
            }
            s
        }
        Record::Certificate(c) => {
            let mut s = format!(
                "excluded-minor certificate ({} elements, connectivity {})",
                c.per_element.len(),
                c.connectivity
            );
            if let Some(f) = &c.consistency_finding {
                s.push_str(&format!("\nconsistency finding: {f}"));
            }
            for pe in &c.per_element {
                s.push_str(&format!(
                    "\n  element {}: deletion member, contraction member",
                    pe.element
                ));
            }
            s.push('\n');
            s.push_str(c.matroid.trim_end());
            s
        }
        Record::Artifact { text, .. } => text.trim_end().to_string(),
        Record::GraphInfo(i) => format!(
            "graph {}: {} vertices, {} edges, {} components\ncycles: {}\ncut edges: {:?}\nloops: {:?}\nparallel classes: {:?}\nseries classes: {:?}\nsubdivision profile: {}\nsi(G):\n{}co(G):\n{}",
            i.input,
            i.vertices,
            i.edges,
            i.components,
            i.cycles,
            i.cut_edges,
            i.loops,
            i.parallel_classes,
            i.series_classes,
            i.subdivision_profile,
            i.simplified,
            i.cosimplified.trim_end()
        ),
        Record::MatroidInfo(i) => format!(
            "matroid {}: {} elements, rank {}, corank {}, {} circuits\nconnectivity: {}\nloops: {:?}\ncoloops: {:?}\nparallel classes: {:?}\nseries classes: {:?}",
            i.input,
            i.elements,
            i.rank,
            i.corank,
            i.circuits,
            i.connectivity,
            i.loops,
            i.coloops,
            i.parallel_classes,
            i.series_classes
        ),
        Record::Lemma(r) => {
            let params: Vec<String> = r
                .family_params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{}: {} | instances={} counterexamples={} elapsed_ms={}\n  family: {}{}",
                r.lemma_id,
                if r.counterexamples.is_empty() {
                    "pass"
                } else {
                    "FAIL"
                },
                r.instances_checked,
                r.counterexamples.len(),
                r.elapsed_ms,
                params.join("; "),
                r.counterexamples
                    .iter()
                    .map(|c| format!("\n  counterexample: {c}"))
                    .collect::<String>()
            )
        }
        Record::ScanItem(s) => {
            let mut line = format!("item {} (line {}): {}", s.index, s.line, s.outcome);
            if let Some(of) = s.duplicate_of {
                line.push_str(&format!(" of item {of}"));
            }
            if let Some(reason) = &s.reason {
                line.push_str(&format!(" ({reason})"));
            }
            if let Some(cert) = &s.certificate {
                line.push_str(&format!(
                    "\n{}",
                    render_text(&Record::Certificate(cert.clone()))
                ));
            }
            line
        }
        Record::Error { message } => format!("error: {message}"),
    }
}

/// Bundles the values an info command reports about a graph.
pub fn graph_info_record(input: &str, g: &Multigraph) -> GraphInfoRecord {
    let classes = g.edge_classes();
    let (si, _) = g.simplify();
    let (co, _) = g.cosimplify();
    GraphInfoRecord {
        input: input.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        components: g.components(),
        cycles: g.cycles().len(),
        cut_edges: g.cut_edges().iter().collect(),
        loops: classes.loops.iter().collect(),
        parallel_classes: classes
            .parallel
            .iter()
            .map(|c| c.iter().collect())
            .collect(),
        series_classes: classes.series.iter().map(|c| c.iter().collect()).collect(),
        simplified: render_graph(&si),
        cosimplified: render_graph(&co),
        subdivision_profile: format!("{:?}", g.subdivision_profile()),
    }
}

pub fn matroid_info_record(
    input: &str,
    m: &Matroid,
    connectivity: &Connectivity,
) -> MatroidInfoRecord {
    let classes = m.element_classes();
    MatroidInfoRecord {
        input: input.to_string(),
        elements: m.ground_size(),
        rank: m.rank(),
        corank: m.corank(),
        circuits: m.circuits().len(),
        connectivity: connectivity.label().to_string(),
        loops: classes.loops.iter().collect(),
        coloops: classes.coloops.iter().collect(),
        parallel_classes: classes
            .parallel
            .iter()
            .map(|c| c.iter().collect())
            .collect(),
        series_classes: classes.series.iter().map(|c| c.iter().collect()).collect(),
    }
}
