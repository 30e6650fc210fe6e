//! Test corpora: random graphs, every connected labeled graph of a small
//! order, and all trees of a given order up to isomorphism.

use std::collections::BTreeMap;

use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// A random spanning tree (each vertex attached to a uniformly chosen
/// earlier vertex) plus every other pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// Every connected labeled graph on `n ≤ 6` vertices, in edge-bitmask order.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "labeled enumeration is limited to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("pairs are in range")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Every tree on `n` vertices up to isomorphism, in a deterministic order.
///
/// Enumerates all labeled trees through Prüfer sequences and keeps one
/// representative per canonical form, so it is only meant for small `n`.
pub fn all_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::empty(1)],
        2 => return vec![Graph::new(2, &[(0, 1)]).expect("valid edge")],
        _ => {}
    }
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let tree = from_pruefer(n, &seq);
        seen.entry(tree_canonical_form(&tree)).or_insert(tree);
        // odometer increment
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
    seen.into_values().collect()
}

fn from_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a simple graph")
}

/// Isomorphism-invariant string for a tree: the smaller of the AHU
/// encodings rooted at its one or two centers.
pub fn tree_canonical_form(tree: &Graph) -> String {
    assert!(tree.is_tree(), "canonical form is defined for trees only");
    centers(tree)
        .into_iter()
        .map(|c| ahu(tree, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn ahu(tree: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(tree, w, v))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}
