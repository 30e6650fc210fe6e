//! The corona product `G ⊙ H` and the provenance of its vertices.
//!
//! Vertex numbering is fixed: the `n` centers come first in `G`'s order,
//! then the copies `H(u)` for `u = 0..n`. Inside a copy, vertices are
//! grouped by component of `H` (canonical component order) and, within a
//! component, follow `H`'s own order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a vertex of `G ⊙ H` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// The copy of vertex `u` of `G`.
    Center(usize),
    /// Vertex `h` of `H`, lying in component `t`, inside the copy `H(g)`.
    Satellite { g: usize, t: usize, h: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaMap {
    labels: Vec<VertexLabel>,
    components: Vec<Vec<usize>>,
    g_order: usize,
    h_order: usize,
    /// position of each `H` vertex inside a copy
    slot: Vec<usize>,
}

impl CoronaMap {
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> VertexLabel {
        self.labels[p]
    }

    /// Components `H₁..H_k` of `H`, in canonical order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn center(&self, u: usize) -> usize {
        assert!(u < self.g_order, "center {u} out of range");
        u
    }

    /// Product index of the copy of `H`-vertex `h` attached to center `u`.
    pub fn satellite(&self, u: usize, h: usize) -> usize {
        assert!(
            u < self.g_order && h < self.h_order,
            "satellite out of range"
        );
        self.g_order + u * self.h_order + self.slot[h]
    }

    /// Product indices of the copy `H_t(u)`.
    pub fn copy_component(&self, u: usize, t: usize) -> Vec<usize> {
        self.components[t]
            .iter()
            .map(|&h| self.satellite(u, h))
            .collect()
    }

    /// The serializable form: `{"centers": [...], "satellites": [{"g", "t", "h", "idx"}, ...]}`.
    pub fn record(&self) -> CoronaMapRecord {
        CoronaMapRecord::from(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("corona map serializes")
    }

    /// Rebuilds a map from its JSON form, checking it against the layout
    /// `corona` would produce for `G` of order `g_order` and the given `H`.
    pub fn from_json(text: &str, h: &Graph) -> Result<CoronaMap> {
        let raw: CoronaMapRecord = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("corona map JSON: {e}")))?;
        let expected = layout(raw.centers.len(), h);
        if CoronaMapRecord::from(&expected) != raw {
            return Err(Error::InvalidInput(
                "corona map does not match the canonical layout".into(),
            ));
        }
        Ok(expected)
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaMapRecord {
    pub centers: Vec<usize>,
    pub satellites: Vec<SatelliteRecord>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatelliteRecord {
    pub g: usize,
    pub t: usize,
    pub h: usize,
    pub idx: usize,
}

impl From<&CoronaMap> for CoronaMapRecord {
    fn from(map: &CoronaMap) -> Self {
        let mut centers = Vec::new();
        let mut satellites = Vec::new();
        for (idx, label) in map.labels.iter().enumerate() {
            match *label {
                VertexLabel::Center(_) => centers.push(idx),
                VertexLabel::Satellite { g, t, h } => {
                    satellites.push(SatelliteRecord { g, t, h, idx })
                }
            }
        }
        CoronaMapRecord {
            centers,
            satellites,
        }
    }
}

fn layout(g_order: usize, h: &Graph) -> CoronaMap {
    let components = h.connected_components();
    let mut slot = vec![0; h.order()];
    let mut copy_labels = Vec::with_capacity(h.order());
    for (t, comp) in components.iter().enumerate() {
        for &v in comp {
            slot[v] = copy_labels.len();
            copy_labels.push((t, v));
        }
    }
    let mut labels: Vec<VertexLabel> = (0..g_order).map(VertexLabel::Center).collect();
    for u in 0..g_order {
        labels.extend(
            copy_labels
                .iter()
                .map(|&(t, v)| VertexLabel::Satellite { g: u, t, h: v }),
        );
    }
    CoronaMap {
        labels,
        components,
        g_order,
        h_order: h.order(),
        slot,
    }
}

/// `G ⊙ H`: one copy of `G` and `|V(G)|` copies of `H`, the `i`-th vertex of
/// `G` joined to every vertex of the `i`-th copy.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaMap)> {
    if g.order() == 0 {
        return Err(Error::InvalidInput("corona needs a non-empty G".into()));
    }
    let map = layout(g.order(), h);
    let mut edges = g.edges();
    let h_edges = h.edges();
    for u in 0..g.order() {
        for &(a, b) in &h_edges {
            edges.push((map.satellite(u, a), map.satellite(u, b)));
        }
        for v in 0..h.order() {
            edges.push((u, map.satellite(u, v)));
        }
    }
    let product = Graph::new(map.labels.len(), &edges)?;
    Ok((product, map))
}
