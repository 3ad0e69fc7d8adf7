//! Helpers shared by the integration tests: fixtures, sample corpora and
//! brute-force checks written independently of the library internals.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::path::PathBuf;

use planar_canon::cli_io::{parse_edge_list, random_planar, Profile};
use planar_canon::decompose::{BiconTree, TreeNode, TriconTree};
use planar_canon::graph_model::{Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Graph {
    parse_edge_list(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether `t` can reach `s` avoiding `removed` vertices and the edge `skip`.
pub fn reaches(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    removed: &[Vertex],
    skip: Option<(Vertex, Vertex)>,
) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for &r in removed {
        seen[r] = true;
    }
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            return true;
        }
        for &w in g.neighbors(v) {
            let skipped = skip.is_some_and(|(a, b)| (a, b) == (v, w) || (b, a) == (v, w));
            if !skipped && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Whether removing `removed` leaves the rest of `g` connected.
pub fn connected_without(g: &Graph, removed: &[Vertex]) -> bool {
    let rest: Vec<Vertex> = (0..g.vertex_count())
        .filter(|v| !removed.contains(v))
        .collect();
    rest.iter().all(|&v| reaches(g, rest[0], v, removed, None))
}

/// Every pair `{a, b}` whose removal disconnects `g` and which is joined by
/// three vertex-disjoint paths, found by exhaustive search over cut sets.
pub fn brute_three_connected_pairs(g: &Graph) -> BTreeSet<(Vertex, Vertex)> {
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if connected_without(g, &[a, b]) {
                continue;
            }
            let others: Vec<Vertex> = (0..n).filter(|&v| v != a && v != b).collect();
            let three_paths = if g.has_edge(a, b) {
                // The edge is one path; two more must survive any single cut.
                others.iter().all(|&w| reaches(g, a, b, &[w], Some((a, b))))
            } else {
                others
                    .iter()
                    .all(|&w| others.iter().all(|&x| reaches(g, a, b, &[w, x], None)))
            };
            if three_paths {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Whether pairs `p` and `q` interleave along the cyclic sequence `cycle`.
pub fn interleaved(cycle: &[Vertex], p: (Vertex, Vertex), q: (Vertex, Vertex)) -> bool {
    let pos = |v: Vertex| cycle.iter().position(|&x| x == v).unwrap();
    if [q.0, q.1].iter().any(|&v| v == p.0 || v == p.1) {
        return false;
    }
    let (lo, hi) = {
        let (x, y) = (pos(p.0), pos(p.1));
        (x.min(y), x.max(y))
    };
    let inside = |v: Vertex| (lo + 1..hi).contains(&pos(v));
    inside(q.0) != inside(q.1)
}

/// Independent check of a triconnected component tree: a tree whose edges
/// join pair nodes to component nodes, whose leaves are components, and in
/// which every leaf lies at odd depth from every pair node.
pub fn check_tricon_shape(t: &TriconTree) -> Result<(), String> {
    let count = t.node_count();
    let adj = t.adjacency();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if count == 0 || edges + 1 != count {
        return Err(format!("{count} nodes and {edges} edges is not a tree"));
    }
    let is_pair = |i: usize| matches!(t.node_at(i), TreeNode::Pair(_));
    for (i, ns) in adj.iter().enumerate() {
        if ns.iter().any(|&j| is_pair(j) == is_pair(i)) {
            return Err(format!("node {i} is adjacent to a node of its own kind"));
        }
        if ns.len() <= 1 && is_pair(i) && count > 1 {
            return Err(format!("pair node {i} is a leaf"));
        }
    }
    for root in (0..count).filter(|&i| is_pair(i)) {
        let mut depth = vec![usize::MAX; count];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err("tree is disconnected".into());
        }
        for leaf in (0..count).filter(|&i| adj[i].len() == 1) {
            if depth[leaf] % 2 == 0 {
                return Err(format!("leaf {leaf} at even depth from pair node {root}"));
            }
        }
    }
    Ok(())
}

pub fn check_bicon_shape(tree: &BiconTree) -> Result<(), String> {
    let k = tree.articulation_points().len();
    let adj = tree.adjacency();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != adj.len() {
        return Err("block tree is not a tree".into());
    }
    for (i, ns) in adj.iter().enumerate() {
        if ns.iter().any(|&j| (j < k) == (i < k)) {
            return Err(format!("block tree node {i} is adjacent to its own kind"));
        }
        if i < k && ns.len() < 2 {
            return Err(format!(
                "articulation point node {i} has fewer than two blocks"
            ));
        }
    }
    for block in tree.blocks() {
        if let Some(t) = block.tricon() {
            check_tricon_shape(t)?;
        }
    }
    Ok(())
}

/// Mixed-profile sample with `n` cycling through `1..=max_n`.
pub fn mixed_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let profile = Profile::ALL[i % 3];
            let n = 1 + (i * 7 + seed as usize) % max_n;
            random_planar(
                n,
                seed.wrapping_mul(1_000_003).wrapping_add(i as u64),
                profile,
            )
        })
        .collect()
}

pub fn biconnected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(3..=max_n);
            let profile = if i % 4 == 3 {
                Profile::ThreeConnected
            } else {
                Profile::Biconnected
            };
            random_planar(n, r.gen(), profile)
        })
        .collect()
}

/// Small rooted gadgets hung on block vertices; vertex 0 is the attachment point.
fn gadget(kind: usize) -> Graph {
    let edges: &[(Vertex, Vertex)] = match kind {
        0 => &[(0, 1)],
        1 => &[(0, 1), (1, 2)],
        2 => &[(0, 1), (1, 2), (2, 0)],
        3 => &[(0, 1), (0, 2)],
        _ => &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)],
    };
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

/// Glues `h` onto `g`, identifying vertex 0 of `h` with `at`.
pub fn attach(g: &Graph, at: Vertex, h: &Graph) -> Graph {
    let base = g.vertex_count();
    let name = |v: Vertex| if v == 0 { at } else { base + v - 1 };
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (name(u), name(v))));
    Graph::from_edges(base + h.vertex_count() - 1, edges).unwrap()
}

/// Biconnected or 3-connected blocks on at most `max_block` vertices with
/// gadgets hung on some vertices, often repeated so that sibling subtrees
/// fall into equal classes. Returns each graph with its block's order.
pub fn embedded_blocks(count: usize, max_block: usize, seed: u64) -> Vec<(Graph, usize)> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(3..=max_block);
            let profile = if i % 2 == 0 {
                Profile::ThreeConnected
            } else {
                Profile::Biconnected
            };
            let mut g = random_planar(n, r.gen(), profile);
            let palette = r.gen_range(1..=3);
            for v in 0..n {
                if r.gen_bool(0.6) {
                    g = attach(&g, v, &gadget(r.gen_range(0..palette)));
                }
            }
            if r.gen_bool(0.5) {
                let v = r.gen_range(0..n);
                g = attach(&g, v, &gadget(4));
            }
            (g, n)
        })
        .collect()
}
