//! The double generalized Petersen graph DP(n, t) and arithmetic on its
//! vertices.
//!
//! DP(n, t) has 4n vertices arranged in four layers indexed over Z_n. The
//! graph is never materialized; adjacency is computed from the edge rules on
//! demand.

use std::fmt;

/// The four vertex layers, in serial-id order.
///
/// X and Y are the two outer rims, U and V the two inner layers. X_i serials
/// come first, then U, V, Y, so the declaration order here is load-bearing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    X,
    U,
    V,
    Y,
}

impl Layer {
    pub const ALL: [Layer; 4] = [Layer::X, Layer::U, Layer::V, Layer::Y];

    fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Layer::X => 'x',
            Layer::U => 'u',
            Layer::V => 'v',
            Layer::Y => 'y',
        };
        write!(f, "{c}")
    }
}

/// One vertex: a layer plus a position in Z_n.
///
/// The index is always reduced modulo n; the only constructors are the
/// layer methods on [`DpGraph`] and [`Vertex::from_serial`], both of which
/// enforce that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    layer: Layer,
    index: usize,
}

impl Vertex {
    pub fn layer(self) -> Layer {
        self.layer
    }

    pub fn index(self) -> usize {
        self.index
    }

    /// Flat id in [0, 4n): X_i -> i, U_i -> n+i, V_i -> 2n+i, Y_i -> 3n+i.
    pub fn serial(self, n: usize) -> usize {
        self.layer.rank() * n + self.index
    }

    /// Inverse of [`Vertex::serial`]; `None` when the id is not below 4n.
    pub fn from_serial(n: usize, id: usize) -> Option<Vertex> {
        if id >= 4 * n {
            return None;
        }
        Some(Vertex {
            layer: Layer::ALL[id / n],
            index: id % n,
        })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.layer, self.index)
    }
}

/// Why a pair (n, t) does not describe a DP graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("n must be at least 3, got n = {n}")]
    NTooSmall { n: usize },
    #[error("t must be at least 1")]
    TTooSmall,
    #[error("2t must be less than n, got n = {n}, t = {t}")]
    TTooLarge { n: usize, t: usize },
}

/// A validated parameter pair together with the quantities derived from it.
///
/// g = gcd(n, t) throughout. When n is odd, g is odd as well and is written
/// 2k + 1, and p = n / g is odd with p >= 3; those two only exist in the odd
/// case and drive the odd-n construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphParams {
    n: usize,
    t: usize,
    g: usize,
}

impl GraphParams {
    pub fn new(n: usize, t: usize) -> Result<GraphParams, ParamError> {
        if n < 3 {
            return Err(ParamError::NTooSmall { n });
        }
        if t < 1 {
            return Err(ParamError::TTooSmall);
        }
        if 2 * t >= n {
            return Err(ParamError::TTooLarge { n, t });
        }
        let g = gcd(n, t);
        if n % 2 == 1 {
            // g divides odd n, and p > 2 because g <= t < n/2.
            debug_assert!(g % 2 == 1 && (n / g) % 2 == 1 && n / g >= 3);
        }
        Ok(GraphParams { n, t, g })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn t(self) -> usize {
        self.t
    }

    /// gcd(n, t).
    pub fn g(self) -> usize {
        self.g
    }

    pub fn n_is_odd(self) -> bool {
        self.n % 2 == 1
    }

    /// k with g = 2k + 1; only defined for odd n.
    pub fn k(self) -> Option<usize> {
        self.n_is_odd().then_some((self.g - 1) / 2)
    }

    /// p = n / g, the half-length of each inner cycle; only defined for odd n.
    pub fn p(self) -> Option<usize> {
        self.n_is_odd().then_some(self.n / self.g)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The graph DP(n, t).
///
/// Edges, with all position arithmetic modulo n:
/// x_i x_{i+1} and y_i y_{i+1} (rims), x_i u_i and y_i v_i (spokes),
/// u_i v_{i+t} and v_i u_{i+t} (crossings). 2t < n keeps the two crossing
/// families from collapsing into a double edge, so the graph is simple and
/// 3-regular with 6n edges.
#[derive(Debug, Clone, Copy)]
pub struct DpGraph {
    params: GraphParams,
}

impl DpGraph {
    pub fn new(params: GraphParams) -> DpGraph {
        DpGraph { params }
    }

    /// Shorthand for validating (n, t) and wrapping the result.
    pub fn build(n: usize, t: usize) -> Result<DpGraph, ParamError> {
        GraphParams::new(n, t).map(DpGraph::new)
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn t(&self) -> usize {
        self.params.t
    }

    pub fn vertex_count(&self) -> usize {
        4 * self.params.n
    }

    pub fn edge_count(&self) -> usize {
        6 * self.params.n
    }

    /// X_{i mod n}. The reduction makes forward formulas like `x(i + n - t)`
    /// safe to write without extra bookkeeping.
    pub fn x(&self, i: usize) -> Vertex {
        self.vertex(Layer::X, i)
    }

    pub fn u(&self, i: usize) -> Vertex {
        self.vertex(Layer::U, i)
    }

    pub fn v(&self, i: usize) -> Vertex {
        self.vertex(Layer::V, i)
    }

    pub fn y(&self, i: usize) -> Vertex {
        self.vertex(Layer::Y, i)
    }

    pub fn vertex(&self, layer: Layer, i: usize) -> Vertex {
        Vertex {
            layer,
            index: i % self.params.n,
        }
    }

    /// The three neighbors of `w`.
    pub fn neighbors(&self, w: Vertex) -> [Vertex; 3] {
        let n = self.params.n;
        let t = self.params.t;
        let i = w.index;
        match w.layer {
            Layer::X => [self.x(i + n - 1), self.x(i + 1), self.u(i)],
            Layer::Y => [self.y(i + n - 1), self.y(i + 1), self.v(i)],
            Layer::U => [self.x(i), self.v(i + t), self.v(i + n - t)],
            Layer::V => [self.y(i), self.u(i + t), self.u(i + n - t)],
        }
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).contains(&b)
    }

    /// All 4n vertices in serial-id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(|id| Vertex::from_serial(self.params.n, id).unwrap())
    }

    /// The n vertices of one layer, by increasing index.
    pub fn layer_vertices(&self, layer: Layer) -> Vec<Vertex> {
        (0..self.params.n).map(|i| self.vertex(layer, i)).collect()
    }

    /// Every edge exactly once as a serial-ordered pair, the whole list
    /// sorted; this is the canonical edge order used by the text encoders.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.params.n;
        let mut out = Vec::with_capacity(self.edge_count());
        for a in self.vertices() {
            for b in self.neighbors(a) {
                if a.serial(n) < b.serial(n) {
                    out.push((a, b));
                }
            }
        }
        out.sort_by_key(|(a, b)| (a.serial(n), b.serial(n)));
        out
    }
}
