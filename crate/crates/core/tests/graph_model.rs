mod common;

use std::collections::VecDeque;

use common::*;
use planar_canon::cli_io::{is_three_connected, random_planar, shuffled, Profile};
use planar_canon::decompose::biconnected_decompose;
use planar_canon::graph_model::{eccentricities, planar_embed, tree_center, Graph, PlaneGraph};
use proptest::prelude::*;

fn bfs_ecc(adj: &[Vec<usize>], s: usize) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().max().unwrap()
}

#[test]
fn center_of_single_node_and_path() {
    assert_eq!(tree_center(&[vec![]]), Ok(0));
    let path = vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 4], vec![3]];
    assert_eq!(tree_center(&path), Ok(2));
}

#[test]
fn center_of_two_pair_tree_minimizes_eccentricity() {
    let tree = biconnected_decompose(&fixture("two_pairs.txt")).unwrap();
    let t = tree.block(0).tricon().unwrap();
    let adj = t.adjacency();
    let brute: Vec<usize> = (0..adj.len()).map(|v| bfs_ecc(&adj, v)).collect();
    let best = *brute.iter().min().unwrap();
    let centers: Vec<usize> = (0..adj.len()).filter(|&v| brute[v] == best).collect();
    assert_eq!(centers.len(), 1);
    assert_eq!(tree_center(&adj), Ok(centers[0]));
    assert_eq!(eccentricities(&adj), brute);
}

#[test]
fn each_two_pair_fixture_pair_spans_a_face() {
    let g = fixture("two_pairs.txt");
    let pg = planar_embed(&g).unwrap();
    let faces: Vec<Vec<usize>> = pg.faces().iter().map(|f| f.vertices().collect()).collect();
    assert_eq!(faces.len(), 2 + g.edge_count() - g.vertex_count());
    for (a, b) in [(0, 1), (2, 3)] {
        assert!(
            faces.iter().any(|f| f.contains(&a) && f.contains(&b)),
            "pair {a},{b}"
        );
    }
    // The block on {a, b, c, d} is K4, so no face holds all four vertices.
    assert!(!faces
        .iter()
        .any(|f| [0, 1, 2, 3].iter().all(|v| f.contains(v))));
}

#[test]
fn articulation_points_match_vertex_deletion() {
    for seed in 0..60 {
        let n = 2 + seed as usize % 8;
        let g = random_planar(n, seed, Profile::TreeIsh);
        let brute: Vec<usize> = (0..n).filter(|&v| !connected_without(&g, &[v])).collect();
        let tree = biconnected_decompose(&g).unwrap();
        assert_eq!(
            tree.articulation_points(),
            brute.as_slice(),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn two_triangles_share_an_articulation_point() {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let tree = biconnected_decompose(&g).unwrap();
    assert_eq!(tree.articulation_points(), &[2]);
    assert_eq!(tree.blocks().len(), 2);
    assert_eq!(tree.blocks_at(0).len(), 2);
}

fn face_lengths(pg: &PlaneGraph) -> Vec<usize> {
    let mut lens: Vec<usize> = pg.faces().iter().map(|f| f.len()).collect();
    lens.sort_unstable();
    lens
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotation_and_inverse_satisfy_euler(n in 1usize..25, seed in any::<u64>(), p in 0usize..3) {
        let g = random_planar(n, seed, Profile::ALL[p]);
        let pg = planar_embed(&g).unwrap();
        prop_assert!(pg.euler_holds());
        prop_assert!(pg.mirrored().euler_holds());
        let darts: usize = pg.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(darts, 2 * g.edge_count());
    }

    #[test]
    fn face_lengths_are_relabeling_invariant_for_3_connected(n in 4usize..20, seed in any::<u64>()) {
        let g = random_planar(n, seed, Profile::ThreeConnected);
        prop_assume!(is_three_connected(&g));
        let (h, _) = shuffled(&g, &mut rng(seed));
        prop_assert_eq!(face_lengths(&planar_embed(&g).unwrap()), face_lengths(&planar_embed(&h).unwrap()));
    }

    #[test]
    fn embedding_is_deterministic(n in 1usize..25, seed in any::<u64>(), p in 0usize..3) {
        let g = random_planar(n, seed, Profile::ALL[p]);
        let a = planar_embed(&g).unwrap();
        let b = planar_embed(&g).unwrap();
        prop_assert_eq!(a.faces(), b.faces());
    }
}
