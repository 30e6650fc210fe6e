//! Exact search for locating colorings.
//!
//! Depth-first search over vertices in descending-degree order (ties by
//! index). A vertex may take color `c + 1` only once color `c` has been used,
//! which removes the color-permutation symmetry. Branches are cut when
//!
//! * an edge becomes monochromatic,
//! * two twins share a color, or
//! * two equally colored vertices have *settled* codes that coincide.
//!
//! A code entry `d(v, Cᵢ)` is settled once some vertex of color `i` has been
//! seen at distance `d` and every vertex strictly closer than `d` (and every
//! vertex at distance `d` itself, if none is colored `i`) is assigned; later
//! assignments cannot change it. Comparing only fully settled codes keeps the
//! cut sound even though partial codes are not monotone.

use serde::{Deserialize, Serialize};

use super::bounds::{locating_lower_bound, twin_classes_with};
use super::coloring::{require_connected, verify, Coloring};
use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        coloring: Coloring,
        nodes: u64,
    },
    /// The search space was exhausted: no locating `k`-coloring exists.
    Infeasible {
        nodes: u64,
    },
    /// The node budget ran out before the question was decided.
    BudgetExhausted {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match *self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::Infeasible { nodes }
            | SearchOutcome::BudgetExhausted { nodes } => nodes,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SearchOutcome::Found { coloring, .. } => Some(coloring),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SearchOutcome::Infeasible { .. })
    }
}

/// Result of [`chi_l`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ChiL {
    Resolved {
        value: usize,
        certificate: Coloring,
    },
    /// Every `k` below `lower` was refuted; `lower` itself was not decided.
    Indeterminate {
        lower: usize,
        upper: usize,
    },
}

impl ChiL {
    pub fn value(&self) -> Option<usize> {
        match *self {
            ChiL::Resolved { value, .. } => Some(value),
            ChiL::Indeterminate { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Coloring> {
        match self {
            ChiL::Resolved { certificate, .. } => Some(certificate),
            ChiL::Indeterminate { .. } => None,
        }
    }

    /// `(lower, upper)`; equal when resolved.
    pub fn interval(&self) -> (usize, usize) {
        match *self {
            ChiL::Resolved { value, .. } => (value, value),
            ChiL::Indeterminate { lower, upper } => (lower, upper),
        }
    }

    /// The exact value, or an [`Error::Indeterminate`] naming `what`.
    pub fn require(&self, what: &str) -> Result<usize> {
        self.value().ok_or_else(|| {
            let (lo, hi) = self.interval();
            Error::Indeterminate(format!("χ_L of {what} only narrowed to [{lo}, {hi}]"))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// Searches for a locating coloring of `g` with exactly `k` colors, visiting
/// at most `budget` search nodes. The result is deterministic; when a
/// coloring exists, the one returned is the first in search order.
pub fn find_locating_coloring(g: &Graph, k: usize, budget: u64) -> Result<SearchOutcome> {
    require_connected(g, "locating coloring search")?;
    if k == 0 || k > g.order() {
        return Err(Error::InvalidInput(format!(
            "color count {k} outside 1..={}",
            g.order()
        )));
    }
    let mut search = Search::new(g, k, budget);
    let outcome = match search.dfs(0, 0) {
        Step::Found => {
            let coloring = Coloring::new(k, search.colors.iter().map(|&c| c as usize).collect())?;
            if !verify(g, &coloring)?.is_locating() {
                return Err(Error::Internal(
                    "solver produced a coloring the verifier rejects".into(),
                ));
            }
            SearchOutcome::Found {
                coloring,
                nodes: search.nodes,
            }
        }
        Step::Exhausted => SearchOutcome::BudgetExhausted {
            nodes: search.nodes,
        },
        Step::Dead => SearchOutcome::Infeasible {
            nodes: search.nodes,
        },
    };
    Ok(outcome)
}

/// The locating-chromatic number: the least `k` admitting a locating
/// `k`-coloring. Each `k` from [`locating_lower_bound`] upward is decided
/// independently; `budget` is shared across all of them.
pub fn chi_l(g: &Graph, budget: u64) -> Result<ChiL> {
    require_connected(g, "χ_L")?;
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition(
            "χ_L needs at least two vertices".into(),
        ));
    }
    let start = locating_lower_bound(g)?.value;
    let mut left = budget;
    for k in start..=n {
        match find_locating_coloring(g, k, left)? {
            SearchOutcome::Found { coloring, .. } => {
                return Ok(ChiL::Resolved {
                    value: k,
                    certificate: coloring,
                })
            }
            SearchOutcome::Infeasible { nodes } => left = left.saturating_sub(nodes),
            SearchOutcome::BudgetExhausted { .. } => {
                return Ok(ChiL::Indeterminate { lower: k, upper: n })
            }
        }
    }
    // the all-distinct coloring is locating, so k = n always succeeds
    Err(Error::Internal(format!(
        "no locating coloring found with up to {n} colors"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Dead,
    Exhausted,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    order: Vec<usize>,
    dist: Vec<u32>,
    /// all vertices sorted by distance from each vertex
    by_dist: Vec<Vec<usize>>,
    twins: Vec<Vec<usize>>,
    colors: Vec<u8>,
    nodes: u64,
    budget: u64,
    // scratch
    codes: Vec<u32>,
    settled: Vec<usize>,
}

const UNSET: u32 = u32::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, budget: u64) -> Self {
        let n = g.order();
        assert!(k <= u8::MAX as usize, "color count must fit in a byte");
        let dm = all_pairs_distances(g);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let by_dist = (0..n)
            .map(|v| {
                let mut row: Vec<usize> = (0..n).collect();
                row.sort_by_key(|&w| (dm.get(v, w), w));
                row
            })
            .collect();
        let mut twins = vec![Vec::new(); n];
        for class in twin_classes_with(g, &dm) {
            for &v in &class {
                twins[v] = class.iter().copied().filter(|&w| w != v).collect();
            }
        }
        let dist = (0..n).flat_map(|v| dm.row(v).to_vec()).collect();
        Search {
            g,
            n,
            k,
            order,
            dist,
            by_dist,
            twins,
            colors: vec![0; n],
            nodes: 0,
            budget,
            codes: vec![UNSET; n * k],
            settled: Vec::with_capacity(n),
        }
    }

    fn dfs(&mut self, depth: usize, used: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::Exhausted;
        }
        if depth == self.n {
            // every code is settled here, so the last cut already compared them all
            return if used == self.k {
                Step::Found
            } else {
                Step::Dead
            };
        }
        let v = self.order[depth];
        let after = self.n - depth - 1;
        for c in 1..=(used + 1).min(self.k) {
            let next_used = used.max(c);
            if after < self.k - next_used {
                continue;
            }
            let c8 = c as u8;
            if self.g.neighbors(v).iter().any(|&w| self.colors[w] == c8)
                || self.twins[v].iter().any(|&w| self.colors[w] == c8)
            {
                continue;
            }
            self.colors[v] = c8;
            if !self.settled_collision() {
                match self.dfs(depth + 1, next_used) {
                    Step::Dead => {}
                    other => return other,
                }
            }
            self.colors[v] = 0;
        }
        Step::Dead
    }

    /// Computes every fully settled code and reports whether two vertices of
    /// the same color share one.
    fn settled_collision(&mut self) -> bool {
        let k = self.k;
        self.settled.clear();
        for v in 0..self.n {
            if self.colors[v] == 0 {
                continue;
            }
            let code = &mut self.codes[v * k..(v + 1) * k];
            code.fill(UNSET);
            let mut found = 0;
            let mut frontier = UNSET;
            for &w in &self.by_dist[v] {
                let d = self.dist[v * self.n + w];
                if d > frontier {
                    break;
                }
                let cw = self.colors[w];
                if cw == 0 {
                    frontier = d;
                    continue;
                }
                let slot = &mut code[cw as usize - 1];
                if *slot == UNSET {
                    *slot = d;
                    found += 1;
                    if found == k {
                        break;
                    }
                }
            }
            if found == k {
                let cv = self.colors[v];
                for &u in &self.settled {
                    if self.colors[u] == cv
                        && self.codes[u * k..(u + 1) * k] == self.codes[v * k..(v + 1) * k]
                    {
                        return true;
                    }
                }
                self.settled.push(v);
            }
        }
        false
    }
}
