//! Exhaustive oracle for tiny graphs.
//!
//! Deliberately naive and independent of the solver: Floyd–Warshall
//! distances and a plain odometer over all `kⁿ` assignments.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_BRUTE_FORCE_ORDER: usize = 8;

pub fn brute_force_chi_l(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::SizeLimit {
            what: "graph order",
            limit: MAX_BRUTE_FORCE_ORDER,
            actual: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Domain(
            "brute-force χ_L requires a connected graph".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Precondition("brute-force χ_L needs a vertex".into()));
    }
    let dist = floyd_warshall(g);
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if is_locating(g, &dist, k, &colors) {
                return Ok(k);
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("the all-distinct coloring is locating")
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                if d[a][m] + d[m][b] < d[a][b] {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    d
}

/// `colors` are 0-based here.
fn is_locating(g: &Graph, dist: &[Vec<usize>], k: usize, colors: &[usize]) -> bool {
    let n = colors.len();
    let mut used = vec![false; k];
    for &c in colors {
        used[c] = true;
    }
    if used.contains(&false) {
        return false;
    }
    if g.edges().iter().any(|&(a, b)| colors[a] == colors[b]) {
        return false;
    }
    let codes: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..k)
                .map(|c| {
                    (0..n)
                        .filter(|&w| colors[w] == c)
                        .map(|w| dist[v][w])
                        .min()
                        .unwrap()
                })
                .collect()
        })
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            if codes[a] == codes[b] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn examples() {
        assert_eq!(
            brute_force_chi_l(&Graph::generate(Family::Path(4)).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            brute_force_chi_l(&Graph::generate(Family::Cycle(3)).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            brute_force_chi_l(&Graph::generate(Family::Path(2)).unwrap()).unwrap(),
            2
        );
        assert_eq!(brute_force_chi_l(&Graph::empty(1)).unwrap(), 1);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            brute_force_chi_l(&Graph::generate(Family::Path(9)).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            brute_force_chi_l(&Graph::empty(2)),
            Err(Error::Domain(_))
        ));
    }
}
