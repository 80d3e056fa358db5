//! Stored embedding certificates: minimal-surface embedding schemes for the
//! small complete graphs and for the upper ideal graphs whose exact genus or
//! crosscap computation rests on a found embedding. Certificates are only
//! evidence — every load re-traces the scheme against the graph, so a stale
//! or corrupted file fails loudly.

use super::scheme::{trace_faces, EmbeddingScheme, SchemeError, Surface};
use crate::catalog::parse_ring_expr;
use crate::graph::{upper_ideal_graph, SimpleGraph};
use serde::Serialize;

enum Source {
    Ring(&'static str),
    Complete(usize),
}

struct Entry {
    name: &'static str,
    source: Source,
    surface: Surface,
    text: &'static str,
}

macro_rules! cert {
    ($name:literal, $source:expr, $surface:expr) => {
        Entry {
            name: $name,
            source: $source,
            surface: $surface,
            text: include_str!(concat!("../../certificates/", $name, ".emb")),
        }
    };
}

const CORPUS: &[Entry] = &[
    cert!("fig1", Source::Ring("Z2*Z2*Z2"), Surface::Orientable(0)),
    cert!("fig2a", Source::Ring("Z2*Z4"), Surface::Orientable(0)),
    cert!("fig2b", Source::Ring("Z2*Z2[x]/(x^2)"), Surface::Orientable(0)),
    cert!("fig3a", Source::Ring("Z3*Z4"), Surface::Orientable(1)),
    cert!("fig3b", Source::Ring("Z3*Z2[x]/(x^2)"), Surface::Orientable(1)),
    cert!("fig4", Source::Ring("Z2*Z2*Z3"), Surface::Orientable(2)),
    cert!("fig5", Source::Ring("F4*Z5"), Surface::NonOrientable(1)),
    cert!("fig6a", Source::Ring("Z3*Z4"), Surface::NonOrientable(1)),
    cert!("fig6b", Source::Ring("Z3*Z2[x]/(x^2)"), Surface::NonOrientable(1)),
    cert!("k5_s1", Source::Complete(5), Surface::Orientable(1)),
    cert!("k5_n1", Source::Complete(5), Surface::NonOrientable(1)),
    cert!("k6_s1", Source::Complete(6), Surface::Orientable(1)),
    cert!("k6_n1", Source::Complete(6), Surface::NonOrientable(1)),
    cert!("k7_s1", Source::Complete(7), Surface::Orientable(1)),
    cert!("k7_n3", Source::Complete(7), Surface::NonOrientable(3)),
    cert!("k8_s2", Source::Complete(8), Surface::Orientable(2)),
    cert!("k8_n4", Source::Complete(8), Surface::NonOrientable(4)),
];

fn certificate_graph(source: &Source) -> SimpleGraph {
    match source {
        Source::Ring(expr) => upper_ideal_graph(&parse_ring_expr(expr).expect("corpus expr")),
        Source::Complete(n) => SimpleGraph::complete(*n),
    }
}

fn describe(source: &Source) -> String {
    match source {
        Source::Ring(expr) => (*expr).to_string(),
        Source::Complete(n) => format!("K{n}"),
    }
}

/// Names of all stored certificates, in corpus order.
pub fn certificate_names() -> Vec<&'static str> {
    CORPUS.iter().map(|e| e.name).collect()
}

/// What a re-traced certificate established.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub name: String,
    pub graph: String,
    pub v: usize,
    pub e: usize,
    pub faces: usize,
    pub surface: Surface,
}

/// Parse and re-trace the named certificate against its graph. Errors if the
/// name is unknown, the scheme is malformed, the traced surface differs from
/// the declared one, or the file's surface differs from the corpus target.
pub fn verify_certificate(name: &str) -> Result<CertificateReport, SchemeError> {
    let entry = CORPUS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| SchemeError::MissingCertificate(name.to_string()))?;
    let scheme = EmbeddingScheme::parse(entry.text)?;
    if scheme.surface != entry.surface {
        return Err(SchemeError::SurfaceMismatch {
            declared: scheme.surface,
            traced: entry.surface,
        });
    }
    let g = certificate_graph(&entry.source);
    let trace = trace_faces(&g, &scheme)?;
    Ok(CertificateReport {
        name: entry.name.to_string(),
        graph: describe(&entry.source),
        v: g.v(),
        e: g.e(),
        faces: trace.faces,
        surface: trace.surface,
    })
}
