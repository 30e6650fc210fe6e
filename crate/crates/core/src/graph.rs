//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph with vertices labeled `0..n`.
///
/// Neighbor lists are kept sorted and free of duplicates, so two graphs
/// compare equal exactly when they have the same order and edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Vertices of degree one.
    pub fn endpoints(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&v| self.degree(v) == 1)
    }

    /// Connected components, each sorted ascending, listed by their smallest
    /// vertex. This is the canonical component order used throughout.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = vec![start];
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.order() {
                return Err(Error::InvalidInput(format!("vertex {v} out of range")));
            }
            if local[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    /// `H + K₁`: a new vertex with the highest index, adjacent to every
    /// existing vertex.
    pub fn join_with_k1(&self) -> Graph {
        let apex = self.order();
        let mut adj = self.adj.clone();
        for list in &mut adj {
            list.push(apex);
        }
        adj.push((0..apex).collect());
        Graph { adj }
    }

    pub fn generate(family: Family) -> Result<Graph> {
        match family {
            Family::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::new(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidInput(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(n, &edges)
            }
            Family::Star(n) => {
                if n < 2 {
                    return Err(Error::InvalidInput(format!(
                        "star needs at least 2 vertices, got {n}"
                    )));
                }
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                Graph::new(n, &edges)
            }
            Family::Complete(n) => {
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        edges.push((a, b));
                    }
                }
                Graph::new(n, &edges)
            }
            Family::Empty(n) => Ok(Graph::empty(n)),
            Family::DoubleStar(a, b) => {
                if a < 1 || b < 1 {
                    return Err(Error::InvalidInput(format!(
                        "double star needs at least one endpoint per center, got {a} and {b}"
                    )));
                }
                // centers 0 and 1; endpoints of 0 first, then of 1
                let mut edges = vec![(0, 1)];
                edges.extend((0..a).map(|i| (0, 2 + i)));
                edges.extend((0..b).map(|i| (1, 2 + a + i)));
                Graph::new(2 + a + b, &edges)
            }
        }
    }
}

/// Named graph families understood by [`Graph::generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// One center adjacent to `n - 1` endpoints.
    Star(usize),
    Complete(usize),
    /// The edgeless graph, `K̄ₙ`.
    Empty(usize),
    /// Two adjacent centers carrying `a` and `b` endpoints.
    DoubleStar(usize, usize),
}

impl Family {
    /// Parses a family name plus its integer parameters, e.g.
    /// `("double_star", [2, 3])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let one = |f: fn(usize) -> Family| match params {
            [n] => Ok(f(*n)),
            _ => Err(Error::InvalidInput(format!(
                "family `{name}` takes exactly one parameter"
            ))),
        };
        match name {
            "path" => one(Family::Path),
            "cycle" => one(Family::Cycle),
            "star" => one(Family::Star),
            "complete" => one(Family::Complete),
            "empty" => one(Family::Empty),
            "double_star" | "double-star" => match params {
                [a, b] => Ok(Family::DoubleStar(*a, *b)),
                _ => Err(Error::InvalidInput(
                    "family `double_star` takes exactly two parameters".into(),
                )),
            },
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::serialize_graph(self))
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::format::parse_graph(s)
    }
}
