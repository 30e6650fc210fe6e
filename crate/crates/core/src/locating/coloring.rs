use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total, surjective assignment of colors `1..=k` to the vertices of a
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        let mut used = vec![false; k];
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} has color {c}, outside 1..={k}"
                )));
            }
            used[c - 1] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidInput(format!(
                "color {} is never used; colorings must be surjective",
                missing + 1
            )));
        }
        Ok(Coloring { k, colors })
    }

    /// Colors `1..=k` in the order they first appear, so vertex `0` gets
    /// color 1. Useful when the input labels are arbitrary.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Coloring {
        let mut names = HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = names.len() + 1;
                *names.entry(l).or_insert(next)
            })
            .collect();
        Coloring {
            k: names.len(),
            colors,
        }
    }

    /// Every vertex gets its own color; always locating on a connected graph.
    pub fn all_distinct(n: usize) -> Coloring {
        Coloring {
            k: n,
            colors: (1..=n).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes `C₁..C_k`; entry `i` holds the vertices of color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    /// Exchanges the names of colors `a` and `b`.
    pub fn swap_colors(&self, a: usize, b: usize) -> Coloring {
        assert!((1..=self.k).contains(&a) && (1..=self.k).contains(&b));
        let colors = self
            .colors
            .iter()
            .map(|&c| match c {
                c if c == a => b,
                c if c == b => a,
                c => c,
            })
            .collect();
        Coloring { k: self.k, colors }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Coloring> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("coloring JSON: {e}")))
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() != g.order() {
            return Err(Error::InvalidInput(format!(
                "coloring has {} entries for a graph of order {}",
                self.len(),
                g.order()
            )));
        }
        Ok(())
    }
}

/// Row `v` is the color code of `v`: its distance to each color class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorCodeMatrix {
    rows: Vec<Vec<u32>>,
}

impl ColorCodeMatrix {
    pub fn code(&self, v: usize) -> &[u32] {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// First pair `u < v` (lexicographic) with identical codes.
    pub fn first_collision(&self) -> Option<(usize, usize)> {
        let mut first_seen: HashMap<&[u32], usize> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        for (v, row) in self.rows.iter().enumerate() {
            if let Some(&u) = first_seen.get(row.as_slice()) {
                if best.is_none_or(|(bu, _)| u < bu) {
                    best = Some((u, v));
                }
            } else {
                first_seen.insert(row, v);
            }
        }
        best
    }
}

pub(crate) fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} requires a connected graph")))
    }
}

/// `d(v, Cᵢ)` for every vertex and color, by one multi-source BFS per class.
pub fn color_codes(g: &Graph, c: &Coloring) -> Result<ColorCodeMatrix> {
    require_connected(g, "color codes")?;
    c.check_against(g)?;
    let n = g.order();
    let mut rows = vec![vec![0u32; c.k()]; n];
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for (i, class) in c.classes().iter().enumerate() {
        dist.fill(u32::MAX);
        for &s in class {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (row, &d) in rows.iter_mut().zip(&dist) {
            row[i] = d;
        }
    }
    Ok(ColorCodeMatrix { rows })
}

/// Why a coloring fails to be locating.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    MonochromaticEdge { u: usize, v: usize, color: usize },
    CodeCollision { u: usize, v: usize, code: Vec<u32> },
}

impl Witness {
    /// Re-checks the violation from scratch with per-vertex BFS, sharing no
    /// code with [`verify`].
    pub fn recheck(&self, g: &Graph, c: &Coloring) -> bool {
        match *self {
            Witness::MonochromaticEdge { u, v, color } => {
                g.has_edge(u, v) && c.color(u) == color && c.color(v) == color
            }
            Witness::CodeCollision { u, v, ref code } => {
                let cu = code_by_bfs(g, c, u);
                u != v && c.color(u) == c.color(v) && cu == code_by_bfs(g, c, v) && &cu == code
            }
        }
    }
}

fn code_by_bfs(g: &Graph, c: &Coloring, src: usize) -> Vec<u32> {
    let dist = crate::distance::all_pairs_distances(g);
    let mut code = vec![u32::MAX; c.k()];
    for w in 0..g.order() {
        let slot = &mut code[c.color(w) - 1];
        *slot = (*slot).min(dist.get(src, w));
    }
    code
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub proper: bool,
    pub locating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn is_locating(&self) -> bool {
        self.verdict.locating
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checks that `c` is proper and that all color codes are pairwise distinct.
/// A failing report names the first offending edge or colliding pair.
pub fn verify(g: &Graph, c: &Coloring) -> Result<VerificationReport> {
    require_connected(g, "verification")?;
    c.check_against(g)?;
    if let Some((u, v)) = g
        .edges()
        .into_iter()
        .find(|&(u, v)| c.color(u) == c.color(v))
    {
        return Ok(VerificationReport {
            verdict: Verdict {
                proper: false,
                locating: false,
            },
            witness: Some(Witness::MonochromaticEdge {
                u,
                v,
                color: c.color(u),
            }),
        });
    }
    let codes = color_codes(g, c)?;
    let witness = codes
        .first_collision()
        .map(|(u, v)| Witness::CodeCollision {
            u,
            v,
            code: codes.code(u).to_vec(),
        });
    Ok(VerificationReport {
        verdict: Verdict {
            proper: true,
            locating: witness.is_none(),
        },
        witness,
    })
}
