//! Explicit Hamilton cycles for every DP(n, t).
//!
//! Even n: n/2 ladder paths, each picking up two consecutive positions on
//! both rims, chained end to end through the inner layers.
//!
//! Odd n: with g = gcd(n, t) = 2k + 1 and p = n/g, the rims are cut into
//! 2k + 1 arcs each (paths P_i on the x rim, Q_i on the y rim) and the inner
//! vertices are covered by alternating u/v walks (R_i forward, S_i backward),
//! two per inner cycle. An offset sequence a_0..a_2k fixes where the arcs
//! start; any sequence satisfying the residue and interleaving conditions
//! yields a Hamilton cycle when the pieces are glued in the order
//! (S_0 P_0)(R_1 Q_1)(S_2 P_2)...(S_2k P_2k)(R_0 Q_0)(S_1 P_1)...(R_2k Q_2k).

use crate::graph::{DpGraph, GraphParams, Layer, ParamError, Vertex};

/// Errors from cycle construction. The junction, walk, and cycle variants
/// indicate internal integrity failures: they cannot occur for validated
/// inputs and exist so that a defect trips loudly instead of propagating.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    ASequence(#[from] ASequenceError),
    #[error("construction needs even n, got n = {n}")]
    RequiresEvenN { n: usize },
    #[error("construction needs odd n, got n = {n}")]
    RequiresOddN { n: usize },
    #[error("path is empty")]
    EmptyPath,
    #[error("path steps from {from} to non-neighbor {to} at position {position}")]
    PathNotAdjacent { position: usize, from: Vertex, to: Vertex },
    #[error("path repeats {vertex} at positions {first} and {second}")]
    PathRepeats { vertex: Vertex, first: usize, second: usize },
    #[error("piece {position} starts at {start}, expected the previous end {end}")]
    JunctionMismatch { position: usize, end: Vertex, start: Vertex },
    #[error("walk from {start} missed {target} within {limit} steps")]
    WalkOverrun { start: Vertex, target: Vertex, limit: usize },
    #[error("cycle has {got} vertices, expected {expected}")]
    CycleWrongLength { expected: usize, got: usize },
    #[error("cycle repeats {vertex} at positions {first} and {second}")]
    CycleRepeats { vertex: Vertex, first: usize, second: usize },
    #[error("cycle steps from {from} to non-neighbor {to} at position {position}")]
    CycleNotAdjacent { position: usize, from: Vertex, to: Vertex },
    #[error("cycle does not close: {last} is not adjacent to {first}")]
    CycleNotClosed { last: Vertex, first: Vertex },
}

/// Why a would-be offset sequence is not valid for its parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ASequenceError {
    #[error("offset sequences exist only for odd n, got n = {n}")]
    EvenN { n: usize },
    #[error("expected 2k+1 = {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("a_{position} = {value} is out of range [0, {n})")]
    OutOfRange { position: usize, value: usize, n: usize },
    #[error("a_{position} = {value} must be congruent to {position} mod {modulus}")]
    WrongResidue { position: usize, value: usize, modulus: usize },
    #[error("interleaving violated: a_{left} = {left_value} must be below a_{right} = {right_value}")]
    OrderViolation { left: usize, right: usize, left_value: usize, right_value: usize },
}

/// The offsets a_0..a_2k steering the odd-n construction.
///
/// Validity means: a_i is in [0, n), a_i is congruent to i mod 2k+1, and the
/// entries interleave as a_0 < a_2 < ... < a_2k < a_1 < a_3 < ... < a_{2k-1}.
/// A value of this type always satisfies all three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASequence {
    entries: Vec<usize>,
}

impl ASequence {
    /// Validates `entries` against `params` and takes ownership of them.
    pub fn new(params: GraphParams, entries: Vec<usize>) -> Result<ASequence, ASequenceError> {
        let n = params.n();
        if !params.n_is_odd() {
            return Err(ASequenceError::EvenN { n });
        }
        let g = params.g();
        if entries.len() != g {
            return Err(ASequenceError::WrongLength { expected: g, got: entries.len() });
        }
        for (i, &a) in entries.iter().enumerate() {
            if a >= n {
                return Err(ASequenceError::OutOfRange { position: i, value: a, n });
            }
            if a % g != i % g {
                return Err(ASequenceError::WrongResidue { position: i, value: a, modulus: g });
            }
        }
        // The required order reads the even subscripts first, then the odd.
        let chain: Vec<usize> = (0..g).step_by(2).chain((1..g).step_by(2)).collect();
        for w in chain.windows(2) {
            let (l, r) = (w[0], w[1]);
            if entries[l] >= entries[r] {
                return Err(ASequenceError::OrderViolation {
                    left: l,
                    right: r,
                    left_value: entries[l],
                    right_value: entries[r],
                });
            }
        }
        Ok(ASequence { entries })
    }

    /// The canonical instance a_{2j} = 2j, a_{2j-1} = 2k + 2j. It is valid
    /// for every odd n because 4k < 3g <= n.
    pub fn canonical(params: GraphParams) -> Result<ASequence, ASequenceError> {
        if !params.n_is_odd() {
            return Err(ASequenceError::EvenN { n: params.n() });
        }
        let k = params.k().unwrap();
        let mut entries = vec![0; 2 * k + 1];
        for j in 0..=k {
            entries[2 * j] = 2 * j;
        }
        for j in 1..=k {
            entries[2 * j - 1] = 2 * k + 2 * j;
        }
        ASequence::new(params, entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// 2k + 1.
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// a_{i mod 2k+1}; subscripts wrap like the construction expects.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i % self.entries.len()]
    }
}

/// A simple path: pairwise distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath {
    vertices: Vec<Vertex>,
}

impl VertexPath {
    pub fn new(g: &DpGraph, vertices: Vec<Vertex>) -> Result<VertexPath, ConstructError> {
        if vertices.is_empty() {
            return Err(ConstructError::EmptyPath);
        }
        for (pos, pair) in vertices.windows(2).enumerate() {
            if !g.adjacent(pair[0], pair[1]) {
                return Err(ConstructError::PathNotAdjacent {
                    position: pos,
                    from: pair[0],
                    to: pair[1],
                });
            }
        }
        let mut first_at = vec![usize::MAX; g.vertex_count()];
        for (pos, v) in vertices.iter().enumerate() {
            let s = v.serial(g.n());
            if first_at[s] != usize::MAX {
                return Err(ConstructError::PathRepeats {
                    vertex: *v,
                    first: first_at[s],
                    second: pos,
                });
            }
            first_at[s] = pos;
        }
        Ok(VertexPath { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A Hamilton cycle in canonical form: the sequence starts at x_0 and runs
/// toward whichever of x_0's two cycle neighbors has the smaller serial id.
/// Every vertex appears exactly once and consecutive vertices (including
/// last back to first) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    vertices: Vec<Vertex>,
}

impl HamiltonCycle {
    /// Checks the cycle conditions and canonicalizes the representation.
    /// Rotation and reversal do not change the cycle, so canonicalizing here
    /// loses nothing and makes equal cycles compare equal.
    pub fn new(g: &DpGraph, mut vertices: Vec<Vertex>) -> Result<HamiltonCycle, ConstructError> {
        let n = g.n();
        let expected = g.vertex_count();
        if vertices.len() != expected {
            return Err(ConstructError::CycleWrongLength { expected, got: vertices.len() });
        }
        let mut first_at = vec![usize::MAX; expected];
        for (pos, v) in vertices.iter().enumerate() {
            let s = v.serial(n);
            if first_at[s] != usize::MAX {
                return Err(ConstructError::CycleRepeats {
                    vertex: *v,
                    first: first_at[s],
                    second: pos,
                });
            }
            first_at[s] = pos;
        }
        for pos in 0..expected {
            let from = vertices[pos];
            let to = vertices[(pos + 1) % expected];
            if !g.adjacent(from, to) {
                return Err(if pos + 1 == expected {
                    ConstructError::CycleNotClosed { last: from, first: to }
                } else {
                    ConstructError::CycleNotAdjacent { position: pos, from, to }
                });
            }
        }
        // Full coverage guarantees x_0 is present.
        let anchor = first_at[g.x(0).serial(n)];
        vertices.rotate_left(anchor);
        if vertices[expected - 1].serial(n) < vertices[1].serial(n) {
            vertices[1..].reverse();
        }
        Ok(HamiltonCycle { vertices })
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

/// Ladder path i of the even-n construction, for i in Z_{n/2}:
/// u_{2i} x_{2i} x_{2i+1} u_{2i+1} v_{2i+1-t} y_{2i+1-t} y_{2i+2-t}
/// v_{2i+2-t} u_{2i+2}. Consecutive paths share their u endpoint.
pub fn even_ladder_path(g: &DpGraph, i: usize) -> Result<VertexPath, ConstructError> {
    let n = g.n();
    let t = g.t();
    if n % 2 == 1 {
        return Err(ConstructError::RequiresEvenN { n });
    }
    let b = 2 * (i % (n / 2));
    VertexPath::new(
        g,
        vec![
            g.u(b),
            g.x(b),
            g.x(b + 1),
            g.u(b + 1),
            g.v(b + 1 + n - t),
            g.y(b + 1 + n - t),
            g.y(b + 2 + n - t),
            g.v(b + 2 + n - t),
            g.u(b + 2),
        ],
    )
}

/// Hamilton cycle for even n: the n/2 ladder paths glued in index order.
pub fn even_hamilton(g: &DpGraph) -> Result<HamiltonCycle, ConstructError> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(ConstructError::RequiresEvenN { n });
    }
    let paths = (0..n / 2)
        .map(|i| even_ladder_path(g, i))
        .collect::<Result<Vec<_>, _>>()?;
    HamiltonCycle::new(g, glue_closed(&paths)?)
}

/// P_i: the x-rim arc from x_{a_i + t} up to x_{a_{i+2} + t - 1}, with a u
/// spoke attached at each end. When k = 0 the arc is the whole rim.
pub fn path_p(g: &DpGraph, a: &ASequence, i: usize) -> Result<VertexPath, ConstructError> {
    let n = g.n();
    let t = g.t();
    require_matching(g, a)?;
    let (from, run) = arc(n, a.at(i), a.at(i + 2));
    let mut verts = Vec::with_capacity(run + 2);
    verts.push(g.u(from + t));
    for j in 0..run {
        verts.push(g.x(from + t + j));
    }
    verts.push(g.u(a.at(i + 2) + t + n - 1));
    VertexPath::new(g, verts)
}

/// Q_i: the y-rim arc from y_{a_i} up to y_{a_{i+2} - 1}, with a v spoke
/// attached at each end.
pub fn path_q(g: &DpGraph, a: &ASequence, i: usize) -> Result<VertexPath, ConstructError> {
    let n = g.n();
    require_matching(g, a)?;
    let (from, run) = arc(n, a.at(i), a.at(i + 2));
    let mut verts = Vec::with_capacity(run + 2);
    verts.push(g.v(from));
    for j in 0..run {
        verts.push(g.y(from + j));
    }
    verts.push(g.v(a.at(i + 2) + n - 1));
    VertexPath::new(g, verts)
}

/// R_i: from u_{a_{i+1} + t - 1}, keep adding t while alternating between
/// the u and v layers, and stop the first time v_{a_i} is reached. The walk
/// runs inside one inner cycle, so it must hit its target within 2p steps;
/// overrunning that bound is an integrity failure.
pub fn path_r(g: &DpGraph, a: &ASequence, i: usize) -> Result<VertexPath, ConstructError> {
    let n = g.n();
    let t = g.t();
    require_matching(g, a)?;
    let start = g.u(a.at(i + 1) + t + n - 1);
    let target = g.v(a.at(i));
    VertexPath::new(g, first_hit_walk(g, start, target, t)?)
}

/// S_i: the backward counterpart of R_i, from v_{a_{i+1} - 1} subtracting t
/// each step until u_{a_i + t} is reached.
pub fn path_s(g: &DpGraph, a: &ASequence, i: usize) -> Result<VertexPath, ConstructError> {
    let n = g.n();
    let t = g.t();
    require_matching(g, a)?;
    let start = g.v(a.at(i + 1) + n - 1);
    let target = g.u(a.at(i) + t);
    VertexPath::new(g, first_hit_walk(g, start, target, n - t)?)
}

/// Hamilton cycle for odd n under the given offsets. The two gluing blocks
/// swap the roles of (S P) and (R Q) between even and odd subscripts; every
/// junction is checked while gluing.
pub fn odd_hamilton(g: &DpGraph, a: &ASequence) -> Result<HamiltonCycle, ConstructError> {
    let n = g.n();
    if n % 2 == 0 {
        return Err(ConstructError::RequiresOddN { n });
    }
    let order = a.order();
    let mut paths = Vec::with_capacity(4 * order);
    for j in 0..order {
        if j % 2 == 0 {
            paths.push(path_s(g, a, j)?);
            paths.push(path_p(g, a, j)?);
        } else {
            paths.push(path_r(g, a, j)?);
            paths.push(path_q(g, a, j)?);
        }
    }
    for j in 0..order {
        if j % 2 == 0 {
            paths.push(path_r(g, a, j)?);
            paths.push(path_q(g, a, j)?);
        } else {
            paths.push(path_s(g, a, j)?);
            paths.push(path_p(g, a, j)?);
        }
    }
    HamiltonCycle::new(g, glue_closed(&paths)?)
}

/// The Hamilton cycle of DP(n, t): ladders for even n, the canonical offset
/// sequence for odd n.
pub fn hamilton_cycle(n: usize, t: usize) -> Result<HamiltonCycle, ConstructError> {
    let params = GraphParams::new(n, t)?;
    let g = DpGraph::new(params);
    if n % 2 == 0 {
        even_hamilton(&g)
    } else {
        odd_hamilton(&g, &ASequence::canonical(params)?)
    }
}

/// Rim arc bookkeeping: starting index and length of the climb from a_i to
/// a_{i+2}. A zero difference only happens for k = 0, where the arc is the
/// whole rim.
fn arc(n: usize, from: usize, to: usize) -> (usize, usize) {
    let run = (to + n - from) % n;
    (from, if run == 0 { n } else { run })
}

fn require_matching(g: &DpGraph, a: &ASequence) -> Result<(), ConstructError> {
    if !g.params().n_is_odd() {
        return Err(ConstructError::RequiresOddN { n: g.n() });
    }
    debug_assert_eq!(a.order(), g.params().g());
    Ok(())
}

/// Alternating u/v walk with a fixed index step, cut at the first visit to
/// `target`. The start and target always lie on the same inner cycle, which
/// has 2p vertices, hence the overrun bound.
fn first_hit_walk(
    g: &DpGraph,
    start: Vertex,
    target: Vertex,
    step: usize,
) -> Result<Vec<Vertex>, ConstructError> {
    let limit = 2 * g.params().p().expect("walks only exist for odd n");
    let mut verts = vec![start];
    let mut cur = start;
    while cur != target {
        if verts.len() > limit {
            return Err(ConstructError::WalkOverrun { start, target, limit });
        }
        cur = match cur.layer() {
            Layer::U => g.v(cur.index() + step),
            Layer::V => g.u(cur.index() + step),
            _ => unreachable!("walks stay on the inner layers"),
        };
        verts.push(cur);
    }
    Ok(verts)
}

/// Concatenates paths whose endpoints chain together, dropping each shared
/// endpoint, and checks that the last path returns to the start.
fn glue_closed(paths: &[VertexPath]) -> Result<Vec<Vertex>, ConstructError> {
    let mut out = paths[0].vertices().to_vec();
    for (position, path) in paths.iter().enumerate().skip(1) {
        let end = *out.last().unwrap();
        if path.first() != end {
            return Err(ConstructError::JunctionMismatch { position, end, start: path.first() });
        }
        out.extend_from_slice(&path.vertices()[1..]);
    }
    let first = out[0];
    let last = *out.last().unwrap();
    if first != last {
        return Err(ConstructError::JunctionMismatch {
            position: paths.len(),
            end: last,
            start: first,
        });
    }
    out.pop();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, t: usize) -> DpGraph {
        DpGraph::build(n, t).unwrap()
    }

    /// "u3 x3 x4" and friends, for readable expectations.
    fn verts(g: &DpGraph, labels: &str) -> Vec<Vertex> {
        labels
            .split_whitespace()
            .map(|s| {
                let (c, idx) = s.split_at(1);
                let layer = match c {
                    "x" => Layer::X,
                    "u" => Layer::U,
                    "v" => Layer::V,
                    "y" => Layer::Y,
                    _ => panic!("bad label {s}"),
                };
                g.vertex(layer, idx.parse().unwrap())
            })
            .collect()
    }

    #[test]
    fn ladder_paths_dp_4_1() {
        let g = graph(4, 1);
        let p0 = even_ladder_path(&g, 0).unwrap();
        assert_eq!(p0.vertices(), verts(&g, "u0 x0 x1 u1 v0 y0 y1 v1 u2"));
        let p1 = even_ladder_path(&g, 1).unwrap();
        assert_eq!(p1.vertices(), verts(&g, "u2 x2 x3 u3 v2 y2 y3 v3 u0"));
        assert_eq!(p0.last(), p1.first());
    }

    #[test]
    fn ladder_path_rejects_odd_n() {
        let g = graph(7, 3);
        assert_eq!(even_ladder_path(&g, 0), Err(ConstructError::RequiresEvenN { n: 7 }));
    }

    #[test]
    fn even_hamilton_small_cases() {
        for (n, t) in [(4, 1), (6, 2), (8, 3), (10, 2)] {
            let g = graph(n, t);
            let c = even_hamilton(&g).unwrap();
            assert_eq!(c.len(), 4 * n, "DP({n},{t})");
        }
    }

    #[test]
    fn canonical_sequences() {
        let a = ASequence::canonical(GraphParams::new(9, 3).unwrap()).unwrap();
        assert_eq!(a.entries(), &[0, 4, 2]);
        let a = ASequence::canonical(GraphParams::new(7, 3).unwrap()).unwrap();
        assert_eq!(a.entries(), &[0]);
        let a = ASequence::canonical(GraphParams::new(25, 5).unwrap()).unwrap();
        assert_eq!(a.entries(), &[0, 6, 2, 8, 4]);
        assert_eq!(
            ASequence::canonical(GraphParams::new(8, 3).unwrap()),
            Err(ASequenceError::EvenN { n: 8 })
        );
    }

    #[test]
    fn sequence_validation_pinpoints_the_violation() {
        let params = GraphParams::new(9, 3).unwrap();
        assert!(ASequence::new(params, vec![0, 4, 2]).is_ok());
        assert_eq!(
            ASequence::new(params, vec![0, 2, 4]),
            Err(ASequenceError::WrongResidue { position: 1, value: 2, modulus: 3 })
        );
        assert_eq!(
            ASequence::new(params, vec![0, 4, 5]),
            Err(ASequenceError::OrderViolation {
                left: 2,
                right: 1,
                left_value: 5,
                right_value: 4
            })
        );
        assert_eq!(
            ASequence::new(params, vec![0, 4]),
            Err(ASequenceError::WrongLength { expected: 3, got: 2 })
        );
        assert_eq!(
            ASequence::new(params, vec![0, 4, 11]),
            Err(ASequenceError::OutOfRange { position: 2, value: 11, n: 9 })
        );
    }

    #[test]
    fn any_offset_works_when_k_is_zero() {
        // With g = 1 the residue and order conditions are vacuous.
        let params = GraphParams::new(7, 3).unwrap();
        for a0 in 0..7 {
            let a = ASequence::new(params, vec![a0]).unwrap();
            let c = odd_hamilton(&graph(7, 3), &a).unwrap();
            assert_eq!(c.len(), 28);
        }
    }

    #[test]
    fn rim_paths_dp_9_3() {
        let g = graph(9, 3);
        let a = ASequence::canonical(g.params()).unwrap();
        assert_eq!(path_p(&g, &a, 0).unwrap().vertices(), verts(&g, "u3 x3 x4 u4"));
        assert_eq!(
            path_q(&g, &a, 1).unwrap().vertices(),
            verts(&g, "v4 y4 y5 y6 y7 y8 v8")
        );
    }

    #[test]
    fn rim_paths_dp_7_3_wrap_the_whole_rim() {
        let g = graph(7, 3);
        let a = ASequence::canonical(g.params()).unwrap();
        assert_eq!(
            path_p(&g, &a, 0).unwrap().vertices(),
            verts(&g, "u3 x3 x4 x5 x6 x0 x1 x2 u2")
        );
        assert_eq!(
            path_q(&g, &a, 0).unwrap().vertices(),
            verts(&g, "v0 y0 y1 y2 y3 y4 y5 y6 v6")
        );
    }

    #[test]
    fn inner_walks_stop_at_first_hit() {
        let g = graph(9, 3);
        let a = ASequence::canonical(g.params()).unwrap();
        assert_eq!(path_r(&g, &a, 0).unwrap().vertices(), verts(&g, "u6 v0"));
        assert_eq!(path_s(&g, &a, 0).unwrap().vertices(), verts(&g, "v3 u0 v6 u3"));

        let g = graph(7, 3);
        let a = ASequence::canonical(g.params()).unwrap();
        assert_eq!(
            path_r(&g, &a, 0).unwrap().vertices(),
            verts(&g, "u2 v5 u1 v4 u0 v3 u6 v2 u5 v1 u4 v0")
        );
        // S_0 could continue around the inner cycle but must cut at u_3.
        assert_eq!(path_s(&g, &a, 0).unwrap().vertices(), verts(&g, "v6 u3"));
    }

    #[test]
    fn junctions_chain_s_p_r_q() {
        let g = graph(25, 10);
        let a = ASequence::canonical(g.params()).unwrap();
        let order = a.order();
        for i in 0..order {
            let t = g.t();
            // end(S_i) = start(P_i) = u_{a_i + t}
            assert_eq!(path_s(&g, &a, i).unwrap().last(), g.u(a.at(i) + t));
            assert_eq!(path_p(&g, &a, i).unwrap().first(), g.u(a.at(i) + t));
            // end(P_i) = start(R_{i+1}) = u_{a_{i+2} + t - 1}
            assert_eq!(
                path_p(&g, &a, i).unwrap().last(),
                path_r(&g, &a, i + 1).unwrap().first()
            );
            // end(R_i) = start(Q_i) = v_{a_i}
            assert_eq!(path_r(&g, &a, i).unwrap().last(), g.v(a.at(i)));
            assert_eq!(path_q(&g, &a, i).unwrap().first(), g.v(a.at(i)));
            // end(Q_i) = start(S_{i+1}) = v_{a_{i+2} - 1}
            assert_eq!(
                path_q(&g, &a, i).unwrap().last(),
                path_s(&g, &a, i + 1).unwrap().first()
            );
        }
    }

    #[test]
    fn odd_hamilton_small_cases() {
        for (n, t) in [(7, 3), (9, 3), (15, 5), (15, 6), (25, 10), (21, 9)] {
            let g = graph(n, t);
            let a = ASequence::canonical(g.params()).unwrap();
            let c = odd_hamilton(&g, &a).unwrap();
            assert_eq!(c.len(), 4 * n, "DP({n},{t})");
        }
    }

    #[test]
    fn canonical_cycle_dp_7_3() {
        let g = graph(7, 3);
        let c = hamilton_cycle(7, 3).unwrap();
        assert_eq!(
            c.vertices(),
            verts(
                &g,
                "x0 x1 x2 u2 v5 u1 v4 u0 v3 u6 v2 u5 v1 u4 v0 \
                 y0 y1 y2 y3 y4 y5 y6 v6 u3 x3 x4 x5 x6"
            )
        );
    }

    #[test]
    fn cycles_start_at_x0_toward_the_smaller_serial() {
        for (n, t) in [(4, 1), (5, 2), (7, 3), (9, 3), (12, 5)] {
            let c = hamilton_cycle(n, t).unwrap();
            let vs = c.vertices();
            assert_eq!(vs[0].to_string(), "x0");
            assert!(vs[1].serial(n) < vs[vs.len() - 1].serial(n));
        }
    }

    #[test]
    fn canonicalization_is_rotation_and_reversal_invariant() {
        let g = graph(9, 3);
        let c = hamilton_cycle(9, 3).unwrap();
        let mut turned = c.vertices().to_vec();
        turned.rotate_left(7);
        assert_eq!(HamiltonCycle::new(&g, turned.clone()).unwrap(), c);
        turned.reverse();
        assert_eq!(HamiltonCycle::new(&g, turned).unwrap(), c);
    }

    #[test]
    fn dp_5_2_has_a_20_vertex_cycle() {
        let c = hamilton_cycle(5, 2).unwrap();
        assert_eq!(c.len(), 20);
    }

    #[test]
    fn hamilton_cycle_rejects_bad_params() {
        assert!(matches!(
            hamilton_cycle(4, 2),
            Err(ConstructError::Params(ParamError::TTooLarge { n: 4, t: 2 }))
        ));
    }

    #[test]
    fn cycle_constructor_rejects_defects() {
        let g = graph(4, 1);
        let good = hamilton_cycle(4, 1).unwrap().vertices().to_vec();

        let mut short = good.clone();
        short.pop();
        assert!(matches!(
            HamiltonCycle::new(&g, short),
            Err(ConstructError::CycleWrongLength { expected: 16, got: 15 })
        ));

        let mut dup = good.clone();
        dup[5] = dup[2];
        assert!(matches!(
            HamiltonCycle::new(&g, dup),
            Err(ConstructError::CycleRepeats { .. })
        ));

        let mut swapped = good.clone();
        swapped.swap(3, 9);
        assert!(matches!(
            HamiltonCycle::new(&g, swapped),
            Err(ConstructError::CycleNotAdjacent { .. })
        ));
    }

    #[test]
    fn path_constructor_rejects_defects() {
        let g = graph(7, 3);
        assert_eq!(VertexPath::new(&g, vec![]), Err(ConstructError::EmptyPath));
        assert!(matches!(
            VertexPath::new(&g, verts(&g, "x0 x2")),
            Err(ConstructError::PathNotAdjacent { position: 0, .. })
        ));
        assert!(matches!(
            VertexPath::new(&g, verts(&g, "x0 x1 x0")),
            Err(ConstructError::PathRepeats { first: 0, second: 2, .. })
        ));
    }
}
