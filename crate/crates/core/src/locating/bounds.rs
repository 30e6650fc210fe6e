//! Lower bounds on the locating-chromatic number and the report type that
//! carries bounds together with the rule that produced each of them.

use serde::{Deserialize, Serialize};

use super::coloring::require_connected;
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundTag {
    /// A vertex adjacent to `k` endpoints forces `k + 1` colors.
    #[serde(rename = "endpoint-corollary")]
    EndpointCorollary,
    /// Twins must get pairwise distinct colors.
    #[serde(rename = "twin-class")]
    TwinClass,
    /// Largest `χ_L(H_t + K₁)` over the components of `H`.
    #[serde(rename = "join-component-max")]
    JoinComponentMax,
    /// Every graph with at least two vertices needs two colors.
    #[serde(rename = "trivial-order")]
    TrivialOrder,
    /// `χ_L(G) + Σ (χ_L(H_t + K₁) − 1)`, realised by the offset construction.
    #[serde(rename = "construction-lemma4")]
    ConstructionLemma4,
    /// `χ_L(T) + m` for a tree `T` and `K̄_m`.
    #[serde(rename = "chiL-plus-m")]
    ChiLPlusM,
    /// `m + 1` for `G ⊙ K̄_m`.
    #[serde(rename = "m-plus-1")]
    MPlus1,
}

impl BoundTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundTag::EndpointCorollary => "endpoint-corollary",
            BoundTag::TwinClass => "twin-class",
            BoundTag::JoinComponentMax => "join-component-max",
            BoundTag::TrivialOrder => "trivial-order",
            BoundTag::ConstructionLemma4 => "construction-lemma4",
            BoundTag::ChiLPlusM => "chiL-plus-m",
            BoundTag::MPlus1 => "m-plus-1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedBound {
    pub side: BoundSide,
    pub rule: BoundTag,
    pub value: usize,
}

/// Lower and upper bounds with every contributing rule.
///
/// `lower` is the largest lower-side value among `tags`, `upper` the
/// smallest upper-side value. `indeterminate` is set when some exact value
/// the bounds depend on could not be resolved within budget; the bounds are
/// then still valid but possibly loose.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub tags: Vec<TaggedBound>,
    pub indeterminate: bool,
}

impl BoundsReport {
    pub fn new(tags: Vec<TaggedBound>, indeterminate: bool) -> BoundsReport {
        let lower = tags
            .iter()
            .filter(|t| t.side == BoundSide::Lower)
            .map(|t| t.value)
            .max()
            .unwrap_or(0);
        let upper = tags
            .iter()
            .filter(|t| t.side == BoundSide::Upper)
            .map(|t| t.value)
            .min()
            .unwrap_or(usize::MAX);
        BoundsReport {
            lower,
            upper,
            tags,
            indeterminate,
        }
    }

    /// The first rule attaining the lower bound.
    pub fn lower_rule(&self) -> Option<BoundTag> {
        self.binding(BoundSide::Lower, self.lower)
    }

    /// The first rule attaining the upper bound.
    pub fn upper_rule(&self) -> Option<BoundTag> {
        self.binding(BoundSide::Upper, self.upper)
    }

    pub fn value_of(&self, rule: BoundTag) -> Option<usize> {
        self.tags.iter().find(|t| t.rule == rule).map(|t| t.value)
    }

    fn binding(&self, side: BoundSide, value: usize) -> Option<BoundTag> {
        self.tags
            .iter()
            .find(|t| t.side == side && t.value == value)
            .map(|t| t.rule)
    }

    pub fn merge(&self, other: &BoundsReport) -> BoundsReport {
        let mut tags = self.tags.clone();
        tags.extend(other.tags.iter().copied());
        BoundsReport::new(tags, self.indeterminate || other.indeterminate)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bounds serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: usize,
    pub tag: BoundTag,
}

/// Classes of mutual twins: `u` and `v` are twins when every other vertex
/// is equally far from both. Twin classes must be rainbow in any locating
/// coloring. Classes are listed by smallest member.
pub fn twin_classes(g: &Graph) -> Result<Vec<Vec<usize>>> {
    require_connected(g, "twin classes")?;
    Ok(twin_classes_with(g, &all_pairs_distances(g)))
}

pub(crate) fn twin_classes_with(g: &Graph, dist: &DistanceMatrix) -> Vec<Vec<usize>> {
    let n = g.order();
    let twins =
        |u: usize, v: usize| (0..n).all(|w| w == u || w == v || dist.get(u, w) == dist.get(v, w));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        // twinhood is an equivalence relation, so the first member decides
        match classes.iter_mut().find(|c| twins(c[0], v)) {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// The strongest of: two colors for any graph of order at least two; one
/// more than the largest number of endpoints on a single vertex; and the
/// largest twin class, plus one when some other vertex is adjacent to the
/// whole class.
///
/// On ties the endpoint rule is reported first, then the twin rule.
pub fn locating_lower_bound(g: &Graph) -> Result<LowerBound> {
    require_connected(g, "locating lower bound")?;
    if g.order() < 2 {
        return Err(Error::Precondition(
            "locating lower bound needs at least two vertices".into(),
        ));
    }
    let endpoint = (0..g.order())
        .map(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 1).count())
        .max()
        .unwrap_or(0)
        + 1;
    let dist = all_pairs_distances(g);
    let twin = twin_classes_with(g, &dist)
        .iter()
        .filter(|class| class.len() > 1)
        .map(|class| {
            let dominated = (0..g.order())
                .filter(|v| !class.contains(v))
                .any(|v| class.iter().all(|&w| g.has_edge(v, w)));
            class.len() + usize::from(dominated)
        })
        .max()
        .unwrap_or(0);

    let candidates = [
        (endpoint, BoundTag::EndpointCorollary),
        (twin, BoundTag::TwinClass),
        (2, BoundTag::TrivialOrder),
    ];
    let best = candidates.iter().map(|&(v, _)| v).max().expect("non-empty");
    let tag = candidates
        .iter()
        .find(|&&(v, _)| v == best)
        .map(|&(_, t)| t)
        .expect("max is attained");
    Ok(LowerBound { value: best, tag })
}
