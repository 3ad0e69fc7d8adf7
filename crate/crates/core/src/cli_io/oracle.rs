//! Brute-force isomorphism and automorphism search, and exhaustive
//! enumeration of small connected planar graphs. Independent of the
//! decomposition pipeline; used as a reference in tests and `selftest`.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph_model::{planar_embed, Graph, Vertex};

pub const DEFAULT_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the brute-force bound {bound}")]
    TooLarge { n: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub isomorphic: bool,
    /// `witness[v]` is the image of vertex `v` of the first graph.
    pub witness: Option<Vec<Vertex>>,
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    colors: bool,
    order: Vec<Vertex>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn new<'a>(g: &'a Graph, h: &'a Graph, colors: bool) -> Search<'a> {
        // Visit vertices so that each one has as many mapped neighbors as possible.
        let n = g.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut weight = vec![0usize; n];
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            placed[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                weight[w] += 1;
            }
        }
        Search {
            g,
            h,
            colors,
            order,
            map: vec![None; n],
            used: vec![false; n],
        }
    }

    fn fits(&self, v: Vertex, x: Vertex) -> bool {
        if self.used[x] || self.g.degree(v) != self.h.degree(x) {
            return false;
        }
        if self.colors && self.g.color(v) != self.h.color(x) {
            return false;
        }
        self.order
            .iter()
            .filter_map(|&u| self.map[u].map(|y| (u, y)))
            .all(|(u, y)| self.g.has_edge(u, v) == self.h.has_edge(y, x))
    }

    /// Visits every complete mapping; stops when `f` returns `false`.
    fn run(&mut self, depth: usize, f: &mut dyn FnMut(&[Option<Vertex>]) -> bool) -> bool {
        if depth == self.order.len() {
            return f(&self.map);
        }
        let v = self.order[depth];
        for x in 0..self.h.vertex_count() {
            if !self.fits(v, x) {
                continue;
            }
            self.map[v] = Some(x);
            self.used[x] = true;
            let go_on = self.run(depth + 1, f);
            self.used[x] = false;
            self.map[v] = None;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn check_bound(n: usize, bound: usize) -> Result<(), OracleError> {
    if n > bound {
        return Err(OracleError::TooLarge { n, bound });
    }
    Ok(())
}

/// Decides isomorphism by backtracking, for graphs up to `bound` vertices.
pub fn brute_force_iso_bounded(
    g: &Graph,
    h: &Graph,
    respect_colors: bool,
    bound: usize,
) -> Result<OracleResult, OracleError> {
    check_bound(g.vertex_count().max(h.vertex_count()), bound)?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(OracleResult {
            isomorphic: false,
            witness: None,
        });
    }
    let mut witness = None;
    Search::new(g, h, respect_colors).run(0, &mut |m| {
        witness = Some(m.iter().map(|x| x.unwrap()).collect());
        false
    });
    Ok(OracleResult {
        isomorphic: witness.is_some(),
        witness,
    })
}

pub fn brute_force_iso(
    g: &Graph,
    h: &Graph,
    respect_colors: bool,
) -> Result<OracleResult, OracleError> {
    brute_force_iso_bounded(g, h, respect_colors, DEFAULT_BOUND)
}

/// All color-preserving automorphisms, as vertex maps.
pub fn automorphisms(g: &Graph, bound: usize) -> Result<Vec<Vec<Vertex>>, OracleError> {
    check_bound(g.vertex_count(), bound)?;
    let mut out = Vec::new();
    Search::new(g, g, true).run(0, &mut |m| {
        out.push(m.iter().map(|x| x.unwrap()).collect());
        true
    });
    Ok(out)
}

/// Number of color-preserving automorphisms.
pub fn brute_force_aut_count(g: &Graph) -> Result<u64, OracleError> {
    check_bound(g.vertex_count(), DEFAULT_BOUND)?;
    let mut count = 0u64;
    Search::new(g, g, true).run(0, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// Cheap isomorphism invariant used to bucket graphs before brute force.
fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            let mut r: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            r.sort_unstable();
            r.insert(0, g.degree(v));
            r.push(g.color(v) as usize);
            r
        })
        .collect();
    rows.sort();
    rows
}

/// Whether `g` is 3-connected: at least four vertices and connected after
/// removing any two of them.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !g.is_connected() {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.component_labels(&[u, v]).1 == 1))
}

/// Walks every connected planar graph on `2..=max_n` vertices obtained by
/// joining a new vertex to a nonempty subset of a class representative on
/// one vertex fewer. `visit(g, class, new)` receives each such graph with
/// the index of its isomorphism class among graphs of the same order.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so this reaches every class.
pub fn enumerate_connected_planar(
    max_n: usize,
    mut visit: impl FnMut(&Graph, usize, bool),
) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); max_n + 1];
    if max_n == 0 {
        return levels;
    }
    let single = Graph::new(1);
    visit(&single, 0, true);
    levels[1].push(single);
    for n in 2..=max_n {
        let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
        let mut found: Vec<Graph> = Vec::new();
        for base in &levels[n - 1] {
            for mask in 1u32..(1 << (n - 1)) {
                let mut g = base.clone();
                let v = g.add_vertex();
                for u in 0..n - 1 {
                    if mask & (1 << u) != 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                if planar_embed(&g).is_err() {
                    continue;
                }
                let bucket = buckets.entry(invariant(&g)).or_default();
                let known = bucket.iter().copied().find(|&i| {
                    brute_force_iso_bounded(&found[i], &g, true, usize::MAX)
                        .unwrap()
                        .isomorphic
                });
                match known {
                    Some(i) => visit(&g, i, false),
                    None => {
                        bucket.push(found.len());
                        visit(&g, found.len(), true);
                        found.push(g);
                    }
                }
            }
        }
        levels[n] = found;
    }
    levels
}

/// One representative per isomorphism class of connected planar graphs,
/// indexed by vertex count `0..=max_n` (index 0 is empty).
pub fn connected_planar_classes(max_n: usize) -> Vec<Vec<Graph>> {
    enumerate_connected_planar(max_n, |_, _, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn identity_witness() {
        let g = cycle(5);
        let r = brute_force_iso(&g, &g, true).unwrap();
        assert!(r.isomorphic);
        let w = r.witness.unwrap();
        for (u, v) in g.edges() {
            assert!(g.has_edge(w[u], w[v]));
        }
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!brute_force_iso(&cycle(6), &two, false).unwrap().isomorphic);
    }

    #[test]
    fn k4_automorphisms() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_force_aut_count(&k4).unwrap(), 24);
        let marked = k4.with_colors(vec![1, 0, 0, 0]).unwrap();
        assert_eq!(brute_force_aut_count(&marked).unwrap(), 6);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            brute_force_aut_count(&cycle(11)),
            Err(OracleError::TooLarge {
                n: 11,
                bound: DEFAULT_BOUND
            })
        );
    }

    #[test]
    fn three_connectivity() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_three_connected(&k4));
        assert!(!is_three_connected(&cycle(5)));
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = connected_planar_classes(5).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 1, 1, 2, 6, 20]);
    }
}
