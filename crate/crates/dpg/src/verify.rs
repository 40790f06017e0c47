//! Independent checking of Hamilton cycles and of the structures behind the
//! odd-n construction.
//!
//! Nothing here trusts the construction code: adjacency is re-derived from
//! the edge rules by case analysis on layer pairs, and reports collect every
//! violation instead of stopping at the first.

use std::collections::HashMap;
use std::fmt;

use crate::construct::{path_p, path_q, path_r, path_s, ASequence, ConstructError};
use crate::graph::{DpGraph, Layer, Vertex};

/// One verification failure, naming the check and where it fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    WrongLength { expected: usize, got: usize },
    Duplicate { vertex: Vertex, first: usize, second: usize },
    NotAdjacent { position: usize, from: Vertex, to: Vertex },
    NotClosed { last: Vertex, first: Vertex },
    ForeignVertex { position: usize, vertex: Vertex },
    NotCovered { vertex: Vertex },
    CoveredTwice { vertex: Vertex },
    NotDisjoint { subscript: usize, vertex: Vertex },
    UnionMismatch { subscript: usize, vertex: Vertex },
    InnerCycleSize { subscript: usize, expected: usize, got: usize },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::WrongLength { expected, got } => {
                write!(f, "length: expected {expected} vertices, got {got}")
            }
            Finding::Duplicate { vertex, first, second } => {
                write!(f, "duplication: {vertex} appears at positions {first} and {second}")
            }
            Finding::NotAdjacent { position, from, to } => {
                write!(f, "adjacency: {from} and {to} at position {position} are not neighbors")
            }
            Finding::NotClosed { last, first } => {
                write!(f, "closure: {last} is not adjacent to {first}")
            }
            Finding::ForeignVertex { position, vertex } => {
                write!(f, "range: {vertex} at position {position} is outside this graph")
            }
            Finding::NotCovered { vertex } => write!(f, "coverage: {vertex} is never visited"),
            Finding::CoveredTwice { vertex } => {
                write!(f, "coverage: {vertex} is claimed more than once")
            }
            Finding::NotDisjoint { subscript, vertex } => {
                write!(f, "disjointness: R_{subscript} and S_{subscript} share {vertex}")
            }
            Finding::UnionMismatch { subscript, vertex } => {
                write!(f, "union: R_{subscript} + S_{subscript} and C_{subscript} differ at {vertex}")
            }
            Finding::InnerCycleSize { subscript, expected, got } => {
                write!(f, "inner cycle C_{subscript}: expected {expected} vertices, got {got}")
            }
        }
    }
}

/// All failures found by a verification pass; empty means accepted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn findings(&self) -> &[Finding] {
        &self.findings
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return write!(f, "ok");
        }
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{finding}")?;
        }
        Ok(())
    }
}

/// Adjacency straight from the edge rules, by case analysis on the layer
/// pair and the index difference. Kept separate from `DpGraph::neighbors` on
/// purpose: the two implementations cross-check each other.
fn rule_adjacent(n: usize, t: usize, a: Vertex, b: Vertex) -> bool {
    use Layer::{U, V, X, Y};
    let d = (b.index() + n - a.index() % n) % n;
    match (a.layer(), b.layer()) {
        (X, X) | (Y, Y) => d == 1 || d == n - 1,
        (X, U) | (U, X) | (Y, V) | (V, Y) => d == 0,
        (U, V) | (V, U) => d == t || d == n - t,
        _ => false,
    }
}

/// Checks whether `candidate` is a Hamilton cycle of `g`: correct length, no
/// repeats, consecutive vertices adjacent, and closed. Accepts arbitrary
/// sequences, including vertices that belong to a different DP graph.
pub fn verify_hamilton(g: &DpGraph, candidate: &[Vertex]) -> VerificationReport {
    let n = g.n();
    let t = g.t();
    let mut findings = Vec::new();
    let expected = g.vertex_count();
    if candidate.len() != expected {
        findings.push(Finding::WrongLength { expected, got: candidate.len() });
    }

    let foreign = candidate.iter().any(|v| v.index() >= n);
    if foreign {
        for (position, v) in candidate.iter().enumerate() {
            if v.index() >= n {
                findings.push(Finding::ForeignVertex { position, vertex: *v });
            }
        }
        // Serial ids collide for out-of-range indices, so fall back to a map.
        let mut first_at: HashMap<Vertex, usize> = HashMap::new();
        for (pos, v) in candidate.iter().enumerate() {
            if let Some(&first) = first_at.get(v) {
                findings.push(Finding::Duplicate { vertex: *v, first, second: pos });
            } else {
                first_at.insert(*v, pos);
            }
        }
    } else {
        let mut first_at = vec![usize::MAX; expected];
        for (pos, v) in candidate.iter().enumerate() {
            let s = v.serial(n);
            if first_at[s] != usize::MAX {
                findings.push(Finding::Duplicate { vertex: *v, first: first_at[s], second: pos });
            } else {
                first_at[s] = pos;
            }
        }
    }

    for (position, pair) in candidate.windows(2).enumerate() {
        if !rule_adjacent(n, t, pair[0], pair[1]) {
            findings.push(Finding::NotAdjacent { position, from: pair[0], to: pair[1] });
        }
    }
    if candidate.len() >= 2 {
        let last = candidate[candidate.len() - 1];
        let first = candidate[0];
        if !rule_adjacent(n, t, last, first) {
            findings.push(Finding::NotClosed { last, first });
        }
    }
    VerificationReport { findings }
}

/// One inner cycle of an odd-n graph.
///
/// C_i visits the 2p inner vertices whose index is congruent to i mod 2k+1:
/// u_i v_{i+t} u_{i+2t} ... u_{i+(p-1)t} followed by v_i u_{i+t} ... back to
/// u_i, closing because pt is a multiple of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCycle {
    subscript: usize,
    vertices: Vec<Vertex>,
}

impl InnerCycle {
    pub fn subscript(&self) -> usize {
        self.subscript
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Builds C_i for i in Z_{2k+1}; only defined for odd n.
pub fn inner_cycle(g: &DpGraph, i: usize) -> Result<InnerCycle, ConstructError> {
    let params = g.params();
    let p = params.p().ok_or(ConstructError::RequiresOddN { n: params.n() })?;
    let t = params.t();
    let i = i % params.g();
    let mut vertices = Vec::with_capacity(2 * p);
    for j in 0..p {
        let idx = i + j * t;
        vertices.push(if j % 2 == 0 { g.u(idx) } else { g.v(idx) });
    }
    for j in 0..p {
        let idx = i + j * t;
        vertices.push(if j % 2 == 0 { g.v(idx) } else { g.u(idx) });
    }
    Ok(InnerCycle { subscript: i, vertices })
}

/// The five structural facts the odd-n construction rests on, checked
/// directly against the generated pieces:
///
/// 1. the x-vertices of the P paths partition the x rim,
/// 2. the y-vertices of the Q paths partition the y rim,
/// 3. the R and S walks together cover every inner vertex exactly once,
/// 4. for each subscript, R_i and S_i are disjoint and fill C_i exactly,
/// 5. each C_i really has 2p distinct vertices.
pub fn check_proof_partitions(
    g: &DpGraph,
    a: &ASequence,
) -> Result<VerificationReport, ConstructError> {
    let n = g.n();
    let p = g.params().p().ok_or(ConstructError::RequiresOddN { n })?;
    let order = a.order();
    let mut findings = Vec::new();

    let mut rim_counts = |layer: Layer, counts: &[u32]| {
        for (idx, &c) in counts.iter().enumerate() {
            if c == 0 {
                findings.push(Finding::NotCovered { vertex: g.vertex(layer, idx) });
            } else if c > 1 {
                findings.push(Finding::CoveredTwice { vertex: g.vertex(layer, idx) });
            }
        }
    };

    let mut x_counts = vec![0u32; n];
    for i in 0..order {
        for v in path_p(g, a, i)?.vertices() {
            if v.layer() == Layer::X {
                x_counts[v.index()] += 1;
            }
        }
    }
    rim_counts(Layer::X, &x_counts);

    let mut y_counts = vec![0u32; n];
    for i in 0..order {
        for v in path_q(g, a, i)?.vertices() {
            if v.layer() == Layer::Y {
                y_counts[v.index()] += 1;
            }
        }
    }
    rim_counts(Layer::Y, &y_counts);

    // Checks 3 to 5 walk the inner layers; count u at slot index, v at n+index.
    let slot = |v: &Vertex| match v.layer() {
        Layer::U => v.index(),
        Layer::V => n + v.index(),
        _ => unreachable!("R, S, and C contain only inner vertices"),
    };

    let mut inner_counts = vec![0u32; 2 * n];
    for i in 0..order {
        let r = path_r(g, a, i)?;
        let s = path_s(g, a, i)?;

        let mut membership = vec![0u8; 2 * n];
        for v in r.vertices() {
            inner_counts[slot(v)] += 1;
            membership[slot(v)] |= 1;
        }
        for v in s.vertices() {
            inner_counts[slot(v)] += 1;
            if membership[slot(v)] & 1 != 0 {
                findings.push(Finding::NotDisjoint { subscript: i, vertex: *v });
            }
            membership[slot(v)] |= 2;
        }

        let cycle = inner_cycle(g, i)?;
        let mut distinct = 0usize;
        let mut in_cycle = vec![false; 2 * n];
        for v in cycle.vertices() {
            if !in_cycle[slot(v)] {
                in_cycle[slot(v)] = true;
                distinct += 1;
            }
        }
        if distinct != 2 * p {
            findings.push(Finding::InnerCycleSize { subscript: i, expected: 2 * p, got: distinct });
        }
        for idx in 0..2 * n {
            if (membership[idx] != 0) != in_cycle[idx] {
                let vertex = if idx < n { g.u(idx) } else { g.v(idx - n) };
                findings.push(Finding::UnionMismatch { subscript: i, vertex });
            }
        }
    }
    for idx in 0..2 * n {
        let vertex = if idx < n { g.u(idx) } else { g.v(idx - n) };
        if inner_counts[idx] == 0 {
            findings.push(Finding::NotCovered { vertex });
        } else if inner_counts[idx] > 1 {
            findings.push(Finding::CoveredTwice { vertex });
        }
    }

    Ok(VerificationReport { findings })
}
