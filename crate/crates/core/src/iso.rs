//! Non-induced subgraph containment for small patterns.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_PATTERN_ORDER: usize = 64;

/// True iff `host` contains a (not necessarily induced) subgraph isomorphic
/// to `pattern`.
pub fn subgraph_isomorphic(pattern: &Graph, host: &Graph) -> Result<bool> {
    if pattern.order() > MAX_PATTERN_ORDER {
        return Err(Error::SizeLimit {
            what: "pattern order",
            limit: MAX_PATTERN_ORDER,
            actual: pattern.order(),
        });
    }
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(false);
    }
    let mut pd: Vec<usize> = (0..pattern.order()).map(|v| pattern.degree(v)).collect();
    let mut hd: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
    pd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return Ok(false);
    }

    let order = match_order(pattern);
    let mut m = Matcher {
        pattern,
        host,
        order: &order,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
    };
    Ok(m.extend(0))
}

/// Pattern vertices in an order where every vertex after the first in its
/// component has an earlier neighbor. Each component starts from its
/// highest-degree vertex.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let mut comps = pattern.connected_components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut placed = vec![false; pattern.order()];
    let mut order = Vec::with_capacity(pattern.order());
    for comp in comps {
        let root = *comp
            .iter()
            .max_by_key(|&&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("components are non-empty");
        placed[root] = true;
        order.push(root);
        // grow by the unplaced vertex with most placed neighbors
        for _ in 1..comp.len() {
            let next = comp
                .iter()
                .copied()
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (links, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("component still has unplaced vertices");
            placed[next] = true;
            order.push(next);
        }
    }
    order
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let anchor = self
            .pattern
            .neighbors(p)
            .iter()
            .find(|&&q| self.map[q] != usize::MAX)
            .map(|&q| self.map[q]);
        let candidates: Vec<usize> = match anchor {
            Some(a) => self.host.neighbors(a).to_vec(),
            None => (0..self.host.order()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < self.pattern.degree(p) {
                continue;
            }
            let consistent = self.pattern.neighbors(p).iter().all(|&q| {
                let mq = self.map[q];
                mq == usize::MAX || self.host.has_edge(h, mq)
            });
            if !consistent {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[p] = usize::MAX;
            self.used[h] = false;
        }
        false
    }
}
