//! Two graphs that differ only in how one subtree is attached to a
//! separating pair. Their pair-rooted trees have equal children but
//! different orientation counters, so they are not isomorphic.

use planar_canon::decompose::triconnected_decompose;
use planar_canon::graph_model::{planar_embed, Graph};
use planar_canon::tree_order::{compare_at_pair, RootedTricon};

/// Pair (0, 1) with two copies of a path 0-u-v-1 plus a triangle on (0, u);
/// `flip` hangs the second copy from 1 instead.
fn build(flip: bool) -> Graph {
    let (a, b) = if flip { (1, 0) } else { (0, 1) };
    Graph::from_edges(
        8,
        [
            (0, 1),
            (0, 2),
            (2, 3),
            (3, 1),
            (0, 4),
            (4, 2),
            (a, 5),
            (5, 6),
            (6, b),
            (a, 7),
            (7, 5),
        ],
    )
    .unwrap()
}

fn main() {
    let (g, h) = (build(false), build(true));
    let tg = triconnected_decompose(&planar_embed(&g).unwrap()).unwrap();
    let th = triconnected_decompose(&planar_embed(&h).unwrap()).unwrap();
    let root = |t| RootedTricon {
        tree: t,
        root: t.pair_index(0, 1).unwrap(),
        colors: None,
    };
    let r = compare_at_pair(&root(&tg), &root(&th));
    for (name, side) in [("g", &r.left), ("h", &r.right)] {
        let counters: Vec<String> = side
            .counters
            .iter()
            .map(|c| format!("({},{})", c.with_reference, c.against_reference))
            .collect();
        println!(
            "{name}: reference={:?} counters={}",
            side.reference,
            counters.join(" ")
        );
    }
    println!("g compared to h: {:?}", r.ordering);
}
