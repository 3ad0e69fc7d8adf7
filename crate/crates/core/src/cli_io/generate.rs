//! Seeded random planar graphs for tests and benchmarks.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::is_three_connected;
use crate::graph_model::{planar_embed, Graph, Vertex};

/// Shape of the generated graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Many articulation points: bridges, short cycles and small blocks.
    TreeIsh,
    /// A single block with many separating pairs.
    Biconnected,
    /// A 3-connected graph (a cycle or smaller for `n < 4`).
    ThreeConnected,
}

impl Profile {
    pub const ALL: [Profile; 3] = [
        Profile::TreeIsh,
        Profile::Biconnected,
        Profile::ThreeConnected,
    ];
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::TreeIsh => "tree-ish",
            Profile::Biconnected => "biconnected",
            Profile::ThreeConnected => "3-connected",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tree-ish" => Ok(Profile::TreeIsh),
            "biconnected" => Ok(Profile::Biconnected),
            "3-connected" => Ok(Profile::ThreeConnected),
            _ => Err(format!(
                "unknown profile `{s}` (expected tree-ish, biconnected or 3-connected)"
            )),
        }
    }
}

/// A random planar graph on `n` vertices, deterministic in `(n, seed, profile)`.
pub fn random_planar(n: usize, seed: u64, profile: Profile) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match n {
        0 | 1 => Graph::new(n),
        2 => Graph::from_edges(2, [(0, 1)]).unwrap(),
        _ => match profile {
            Profile::TreeIsh => tree_ish(n, &mut rng),
            Profile::Biconnected => biconnected(n, &mut rng),
            Profile::ThreeConnected if n == 3 => cycle(3),
            Profile::ThreeConnected => three_connected(n, &mut rng),
        },
    };
    debug_assert!(planar_embed(&g).is_ok());
    g
}

/// `random_planar` with every vertex colored uniformly from `0..palette`.
pub fn random_colored_planar(n: usize, seed: u64, profile: Profile, palette: u32) -> Graph {
    let g = random_planar(n, seed, profile);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let colors = (0..n).map(|_| rng.gen_range(0..palette.max(1))).collect();
    g.with_colors(colors).expect("one color per vertex")
}

/// A uniformly random relabeling of `g`; returns the graph and the map
/// sending each old vertex to its new name.
pub fn shuffled(g: &Graph, rng: &mut impl Rng) -> (Graph, Vec<Vertex>) {
    let mut perm: Vec<Vertex> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    (g.relabeled(&perm), perm)
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Adds `u v` if the result stays planar.
fn try_edge(g: &mut Graph, u: Vertex, v: Vertex) -> bool {
    if u == v || g.has_edge(u, v) {
        return false;
    }
    let mut h = g.clone();
    h.add_edge(u, v).unwrap();
    if planar_embed(&h).is_err() {
        return false;
    }
    *g = h;
    true
}

/// Vertices of a random face of the current embedding, without repeats.
fn random_face(g: &Graph, rng: &mut impl Rng) -> Vec<Vertex> {
    let faces = planar_embed(g)
        .expect("generator keeps graphs planar")
        .faces();
    let mut face: Vec<Vertex> = faces
        .choose(rng)
        .expect("a graph with edges has a face")
        .vertices()
        .collect();
    let mut seen = vec![false; g.vertex_count()];
    face.retain(|&v| !std::mem::replace(&mut seen[v], true));
    face
}

/// Blocks hung on random vertices: bridges, short cycles and cycles with a chord.
fn tree_ish(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(1);
    while g.vertex_count() < n {
        let room = n - g.vertex_count();
        let at = rng.gen_range(0..g.vertex_count());
        let roll: f64 = rng.gen();
        let len = if roll < 0.5 || room < 2 {
            1
        } else {
            rng.gen_range(2..=room.min(5))
        };
        let mut prev = at;
        let first = g.vertex_count();
        for _ in 0..len {
            let v = g.add_vertex();
            g.add_edge(prev, v).unwrap();
            prev = v;
        }
        if len >= 2 {
            g.add_edge(prev, at).unwrap();
            if len >= 3 && roll > 0.85 {
                g.add_edge(at, first + 1).unwrap();
            }
        }
    }
    for _ in 0..n / 6 {
        let u = rng.gen_range(0..n);
        let Some(&w) = g.neighbors(u).choose(rng) else {
            continue;
        };
        if let Some(&v) = g.neighbors(w).to_vec().choose(rng) {
            try_edge(&mut g, u, v);
        }
    }
    g
}

/// A cycle grown by ears placed in faces, plus a few chords.
fn biconnected(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = cycle(rng.gen_range(3..=n.min(6)));
    while g.vertex_count() < n {
        let face = random_face(&g, rng);
        let ends: Vec<Vertex> = face.choose_multiple(rng, 2).copied().collect();
        let len = rng.gen_range(1..=(n - g.vertex_count()).min(3));
        let mut prev = ends[0];
        for _ in 0..len {
            let v = g.add_vertex();
            g.add_edge(prev, v).unwrap();
            prev = v;
        }
        g.add_edge(prev, ends[1]).unwrap();
    }
    for _ in 0..rng.gen_range(0..=n / 4) {
        let face = random_face(&g, rng);
        if face.len() > 3 {
            let ends: Vec<Vertex> = face.choose_multiple(rng, 2).copied().collect();
            try_edge(&mut g, ends[0], ends[1]);
        }
    }
    g
}

/// K4 grown by vertices joined to at least three vertices of a face, then
/// thinned by deleting edges while 3-connectivity holds.
fn three_connected(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    while g.vertex_count() < n {
        let face = random_face(&g, rng);
        let k = rng.gen_range(3..=face.len());
        let picks: Vec<Vertex> = face.choose_multiple(rng, k).copied().collect();
        let v = g.add_vertex();
        for u in picks {
            g.add_edge(u, v).unwrap();
        }
    }
    let mut edges = g.edges();
    edges.shuffle(rng);
    for (u, v) in edges.into_iter().take(rng.gen_range(0..=n)) {
        if g.degree(u) <= 3 || g.degree(v) <= 3 {
            continue;
        }
        let kept: Vec<(Vertex, Vertex)> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
        let h = Graph::from_edges(n, kept).unwrap();
        if is_three_connected(&h) {
            g = h;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for p in Profile::ALL {
            assert_eq!(random_planar(1, 3, p).vertex_count(), 1);
            assert_eq!(random_planar(2, 3, p).edge_count(), 1);
        }
    }

    #[test]
    fn profiles_hold() {
        for seed in 0..30 {
            for n in 3..20 {
                for p in Profile::ALL {
                    let g = random_planar(n, seed, p);
                    assert_eq!(g.vertex_count(), n);
                    assert!(g.is_connected());
                    assert!(planar_embed(&g).is_ok());
                    match p {
                        Profile::Biconnected => {
                            assert!(g.blocks().articulation.iter().all(|&a| !a))
                        }
                        Profile::ThreeConnected if n >= 4 => assert!(is_three_connected(&g)),
                        _ => {}
                    }
                }
            }
        }
    }

    #[test]
    fn seed_stability() {
        for p in Profile::ALL {
            assert_eq!(
                random_planar(17, 5, p).edges(),
                random_planar(17, 5, p).edges()
            );
        }
    }

    #[test]
    fn profile_names_round_trip() {
        for p in Profile::ALL {
            assert_eq!(p.to_string().parse::<Profile>(), Ok(p));
        }
        assert!("planar".parse::<Profile>().is_err());
    }
}
