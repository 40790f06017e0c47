//! Deterministic text encodings: edge lists, DOT, and JSON certificates.
//!
//! Each encoder emits byte-identical output for the same input. Certificates
//! are re-verified on decode, so a decoded certificate is always a true one.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::{ASequence, ASequenceError, HamiltonCycle};
use crate::graph::{DpGraph, GraphParams, ParamError, Vertex};
use crate::verify::{verify_hamilton, VerificationReport};

/// Which procedure produced a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    EvenLadder,
    OddPqrs,
    BruteForce,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Construction::EvenLadder => "even_ladder",
            Construction::OddPqrs => "odd_pqrs",
            Construction::BruteForce => "brute_force",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("cycle lists {got} vertex ids, expected {expected}")]
    CycleLength { expected: usize, got: usize },
    #[error("vertex id {id} is out of range [0, {limit})")]
    SerialOutOfRange { id: usize, limit: usize },
    #[error("construction {0} does not carry an a_sequence")]
    UnexpectedASequence(Construction),
    #[error("construction odd_pqrs requires an a_sequence")]
    MissingASequence,
    #[error(transparent)]
    ASequence(#[from] ASequenceError),
    #[error("cycle fails verification: {0}")]
    Verification(VerificationReport),
}

impl FormatError {
    /// True for errors about the shape of the data itself, as opposed to a
    /// well-formed certificate whose claims do not hold.
    pub fn is_malformed(&self) -> bool {
        !matches!(self, FormatError::ASequence(_) | FormatError::Verification(_))
    }
}

/// Header line "n t", then one line "a b" per edge with a < b, in sorted
/// serial order: 6n lines after the header.
pub fn encode_edge_list(g: &DpGraph) -> String {
    let n = g.n();
    let mut out = format!("{} {}\n", n, g.t());
    for (a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", a.serial(n), b.serial(n)));
    }
    out
}

/// Undirected DOT description with x0-style labels. When a cycle is given
/// its edges carry a highlight attribute; a cycle that does not verify
/// against `g` is rejected.
pub fn encode_dot(g: &DpGraph, cycle: Option<&HamiltonCycle>) -> Result<String, FormatError> {
    let n = g.n();
    let mut highlighted: HashSet<(usize, usize)> = HashSet::new();
    if let Some(c) = cycle {
        let report = verify_hamilton(g, c.vertices());
        if !report.ok() {
            return Err(FormatError::Verification(report));
        }
        let vs = c.vertices();
        for pos in 0..vs.len() {
            let a = vs[pos].serial(n);
            let b = vs[(pos + 1) % vs.len()].serial(n);
            highlighted.insert((a.min(b), a.max(b)));
        }
    }
    let mut out = format!("graph dp_{}_{} {{\n", n, g.t());
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b) in g.edges() {
        let pair = (a.serial(n), b.serial(n));
        if highlighted.contains(&pair) {
            out.push_str(&format!("  {a} -- {b} [color=red];\n"));
        } else {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// A self-contained, re-checkable record of one Hamilton cycle: the
/// parameters, how the cycle was obtained, the offsets when the odd
/// construction was used, and the cycle as serial ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleCertificate {
    n: usize,
    t: usize,
    construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a_sequence: Option<Vec<usize>>,
    cycle: Vec<usize>,
}

impl CycleCertificate {
    /// Assembles a certificate, checking that the cycle verifies against `g`
    /// and that the offsets are present exactly for the odd construction.
    pub fn new(
        g: &DpGraph,
        construction: Construction,
        a: Option<&ASequence>,
        cycle: &HamiltonCycle,
    ) -> Result<CycleCertificate, FormatError> {
        match (construction, a) {
            (Construction::OddPqrs, None) => return Err(FormatError::MissingASequence),
            (Construction::OddPqrs, Some(_)) => {}
            (other, Some(_)) => return Err(FormatError::UnexpectedASequence(other)),
            (_, None) => {}
        }
        let report = verify_hamilton(g, cycle.vertices());
        if !report.ok() {
            return Err(FormatError::Verification(report));
        }
        let n = g.n();
        Ok(CycleCertificate {
            n,
            t: g.t(),
            construction,
            a_sequence: a.map(|a| a.entries().to_vec()),
            cycle: cycle.vertices().iter().map(|v| v.serial(n)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn a_sequence(&self) -> Option<&[usize]> {
        self.a_sequence.as_deref()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// The cycle as vertices. Valid by the decode and construction checks.
    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        self.cycle
            .iter()
            .map(|&id| Vertex::from_serial(self.n, id).expect("checked on construction"))
            .collect()
    }
}

/// Pretty JSON with a fixed field order; byte-deterministic.
pub fn encode_certificate(cert: &CycleCertificate) -> String {
    let mut out = serde_json::to_string_pretty(cert).expect("certificate serialization");
    out.push('\n');
    out
}

/// Parses and fully re-checks a certificate: parameter validity, id range,
/// offset validity, and that the cycle is a verifier-accepted Hamilton
/// cycle of DP(n, t). Shape errors and claim failures are distinct; see
/// [`FormatError::is_malformed`].
pub fn decode_certificate(text: &str) -> Result<CycleCertificate, FormatError> {
    let cert: CycleCertificate =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let params = GraphParams::new(cert.n, cert.t)?;
    let g = DpGraph::new(params);
    let expected = g.vertex_count();
    if cert.cycle.len() != expected {
        return Err(FormatError::CycleLength { expected, got: cert.cycle.len() });
    }
    for &id in &cert.cycle {
        if id >= expected {
            return Err(FormatError::SerialOutOfRange { id, limit: expected });
        }
    }
    match (cert.construction, &cert.a_sequence) {
        (Construction::OddPqrs, None) => return Err(FormatError::MissingASequence),
        (Construction::OddPqrs, Some(entries)) => {
            ASequence::new(params, entries.clone())?;
        }
        (other, Some(_)) => return Err(FormatError::UnexpectedASequence(other)),
        (_, None) => {}
    }
    let vertices = cert.cycle_vertices();
    let report = verify_hamilton(&g, &vertices);
    if !report.ok() {
        return Err(FormatError::Verification(report));
    }
    Ok(cert)
}
