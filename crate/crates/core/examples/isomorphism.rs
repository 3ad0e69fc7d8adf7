//! Isomorphism testing by comparing canons, with the vertex map that the
//! label orders give.

use planar_canon::canonizer::{canon_planar_with, CanonOptions};
use planar_canon::cli_io::{random_planar, shuffled, Profile};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = random_planar(16, 42, Profile::Biconnected);
    let (h, _) = shuffled(&g, &mut ChaCha8Rng::seed_from_u64(7));
    let other = random_planar(16, 43, Profile::Biconnected);

    let opts = CanonOptions::default();
    let rg = canon_planar_with(&g, &opts).unwrap();
    let rh = canon_planar_with(&h, &opts).unwrap();
    let ro = canon_planar_with(&other, &opts).unwrap();
    println!(
        "g vs shuffled g: {}",
        if rg.canon == rh.canon {
            "isomorphic"
        } else {
            "different"
        }
    );
    println!(
        "g vs other:      {}",
        if rg.canon == ro.canon {
            "isomorphic"
        } else {
            "different"
        }
    );

    // Vertices with equal labels correspond.
    let mut map = vec![0; g.vertex_count()];
    for (&x, &y) in rg.order.iter().zip(&rh.order) {
        map[x] = y;
    }
    let preserved = g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]));
    println!("label map preserves edges: {preserved}");
}
