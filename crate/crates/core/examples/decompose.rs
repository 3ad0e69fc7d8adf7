//! Separating pairs and triconnected components of a small graph: a K4 on
//! a, b, c, d with a triangle hung on (a, b) and another on (c, d).

use planar_canon::decompose::{three_connected_separating_pairs, triconnected_decompose};
use planar_canon::graph_model::{planar_embed, Graph};

fn main() {
    let names = ['a', 'b', 'c', 'd', 'e', 'f'];
    let g = Graph::from_edges(
        6,
        [
            (0, 5),
            (5, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (4, 3),
        ],
    )
    .unwrap();
    let pg = planar_embed(&g).unwrap();

    for face in pg.faces() {
        let vs: String = face.vertices().map(|v| names[v]).collect();
        println!("face {vs}");
    }
    for p in three_connected_separating_pairs(&pg).unwrap() {
        let (x, y) = p.endpoints();
        println!("separating pair ({}, {})", names[x], names[y]);
    }
    let tree = triconnected_decompose(&pg).unwrap();
    for (i, c) in tree.components().iter().enumerate() {
        let vs: String = c.vertices.iter().map(|&v| names[v]).collect();
        println!("component {i}: {:?} on {vs}", c.kind);
    }
    for (p, pair) in tree.pairs().iter().enumerate() {
        let (x, y) = pair.endpoints();
        println!(
            "pair ({}, {}) joins components {:?}",
            names[x],
            names[y],
            tree.components_at(p)
        );
    }
}
