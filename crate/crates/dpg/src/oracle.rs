//! Exhaustive Hamilton cycle search, independent of the constructions.
//!
//! Backtracking over serial ids, anchored at x_0 with branches explored in
//! increasing serial order, so the first cycle found is deterministic. A
//! budget caps both graph size and search steps; blowing the step budget is
//! reported as its own error, distinct from a completed search that found
//! nothing.

use crate::construct::{ConstructError, HamiltonCycle};
use crate::graph::{DpGraph, ParamError, Vertex};
use crate::verify::verify_hamilton;

/// Caps for the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_steps: u64,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { max_vertices: 48, max_steps: 100_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, over the search cap of {max}")]
    TooLarge { vertices: usize, max: usize },
    #[error("search stopped after exhausting its budget of {max_steps} steps")]
    BudgetExhausted { max_steps: u64 },
    #[error("seed is not a simple path from x0")]
    BadSeed,
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

struct Search {
    adj: Vec<[usize; 3]>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    steps: u64,
    max_steps: u64,
}

impl Search {
    /// Extends the path depth-first; true means the path is a full cycle.
    fn run(&mut self) -> Result<bool, OracleError> {
        let size = self.adj.len();
        if self.path.len() == size {
            let last = *self.path.last().unwrap();
            return Ok(self.adj[last].contains(&0));
        }
        let cur = *self.path.last().unwrap();
        for i in 0..3 {
            let next = self.adj[cur][i];
            if self.on_path[next] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.max_steps {
                return Err(OracleError::BudgetExhausted { max_steps: self.max_steps });
            }
            self.path.push(next);
            self.on_path[next] = true;
            if self.feasible() && self.run()? {
                return Ok(true);
            }
            self.on_path[next] = false;
            self.path.pop();
        }
        Ok(false)
    }

    /// Degree pruning: once a vertex is unvisited, it still needs two usable
    /// connections, where usable means an unvisited neighbor or one of the
    /// path's two ends (the anchor x_0 and the current end).
    fn feasible(&self) -> bool {
        let end = *self.path.last().unwrap();
        for v in 0..self.adj.len() {
            if self.on_path[v] {
                continue;
            }
            let mut usable = 0;
            for &w in &self.adj[v] {
                if !self.on_path[w] || w == 0 || w == end {
                    usable += 1;
                }
            }
            if usable < 2 {
                return false;
            }
        }
        true
    }
}

fn search_setup(g: &DpGraph, budget: &SearchBudget) -> Result<Search, OracleError> {
    let size = g.vertex_count();
    if size > budget.max_vertices {
        return Err(OracleError::TooLarge { vertices: size, max: budget.max_vertices });
    }
    let n = g.n();
    let adj: Vec<[usize; 3]> = g
        .vertices()
        .map(|v| {
            let mut ids = g.neighbors(v).map(|w| w.serial(n));
            ids.sort_unstable();
            ids
        })
        .collect();
    Ok(Search {
        adj,
        on_path: vec![false; size],
        path: Vec::with_capacity(size),
        steps: 0,
        max_steps: budget.max_steps,
    })
}

fn finish(g: &DpGraph, search: Search, found: bool) -> Result<Option<HamiltonCycle>, OracleError> {
    if !found {
        return Ok(None);
    }
    let n = g.n();
    let vertices: Vec<Vertex> = search
        .path
        .iter()
        .map(|&id| Vertex::from_serial(n, id).unwrap())
        .collect();
    Ok(Some(HamiltonCycle::new(g, vertices)?))
}

/// Searches for any Hamilton cycle of `g` by exhaustive backtracking.
/// `Ok(None)` means the search completed and none exists.
pub fn brute_force_hamilton(
    g: &DpGraph,
    budget: &SearchBudget,
) -> Result<Option<HamiltonCycle>, OracleError> {
    let mut search = search_setup(g, budget)?;
    search.path.push(0);
    search.on_path[0] = true;
    let found = search.run()?;
    finish(g, search, found)
}

/// Same search, but starting from an existing simple path out of x_0. A full
/// Hamilton cycle fed as the seed is recognized without any branching, which
/// couples the oracle to the constructions as a sanity check.
pub fn brute_force_from_seed(
    g: &DpGraph,
    budget: &SearchBudget,
    seed: &[Vertex],
) -> Result<Option<HamiltonCycle>, OracleError> {
    let n = g.n();
    let mut search = search_setup(g, budget)?;
    if seed.is_empty() || seed[0] != g.x(0) || seed.iter().any(|v| v.index() >= n) {
        return Err(OracleError::BadSeed);
    }
    for pair in seed.windows(2) {
        if !g.adjacent(pair[0], pair[1]) {
            return Err(OracleError::BadSeed);
        }
    }
    for v in seed {
        let id = v.serial(n);
        if search.on_path[id] {
            return Err(OracleError::BadSeed);
        }
        search.on_path[id] = true;
        search.path.push(id);
    }
    let found = search.run()?;
    finish(g, search, found)
}

/// True iff the explicit construction for DP(n, t) passes verification and
/// the exhaustive search independently finds a Hamilton cycle.
pub fn agreement_check(n: usize, t: usize, budget: &SearchBudget) -> Result<bool, OracleError> {
    let g = DpGraph::build(n, t)?;
    let constructed = crate::construct::hamilton_cycle(n, t)?;
    let report = verify_hamilton(&g, constructed.vertices());
    let found = brute_force_hamilton(&g, budget)?;
    Ok(report.ok() && found.is_some())
}
