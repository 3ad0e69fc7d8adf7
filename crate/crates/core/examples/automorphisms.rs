//! Orbits of vertices under automorphisms, read off from canons: two
//! vertices lie in one orbit when coloring either gives the same canon.

use planar_canon::canonizer::canon_planar;
use planar_canon::cli_io::brute_force_aut_count;
use planar_canon::graph_model::Graph;

fn orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let marked: Vec<_> = (0..n)
        .map(|v| {
            let colors = (0..n).map(|w| u32::from(w == v)).collect();
            canon_planar(&g.clone().with_colors(colors).unwrap()).unwrap()
        })
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match out.iter_mut().find(|o| marked[o[0]] == marked[v]) {
            Some(o) => o.push(v),
            None => out.push(vec![v]),
        }
    }
    out
}

fn main() {
    // A cube and a triangular prism with one extra chord.
    let cube = Graph::from_edges(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap();
    let prism = Graph::from_edges(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
            (0, 4),
        ],
    )
    .unwrap();
    for (name, g) in [("cube", &cube), ("prism with chord", &prism)] {
        println!(
            "{name}: {} automorphisms, orbits {:?}",
            brute_force_aut_count(g).unwrap(),
            orbits(g)
        );
    }
}
