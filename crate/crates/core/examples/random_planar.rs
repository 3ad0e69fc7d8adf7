//! Random planar graphs of each profile, checked for planarity and
//! canonized after a random relabeling.

use planar_canon::canonizer::canon_planar;
use planar_canon::cli_io::{random_planar, shuffled, Profile};
use planar_canon::decompose::biconnected_decompose;
use planar_canon::graph_model::planar_embed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for profile in Profile::ALL {
        for seed in 0..3 {
            let g = random_planar(40, seed, profile);
            let pg = planar_embed(&g).expect("generator output is planar");
            let blocks = biconnected_decompose(&g).unwrap().blocks().len();
            let (h, _) = shuffled(&g, &mut rng);
            let stable = canon_planar(&g).unwrap() == canon_planar(&h).unwrap();
            println!(
                "{profile} seed={seed} n={} m={} faces={} blocks={blocks} canon stable={stable}",
                g.vertex_count(),
                g.edge_count(),
                pg.faces().len()
            );
        }
    }
}
