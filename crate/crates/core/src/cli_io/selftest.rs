//! Exhaustive agreement check between canons and the brute-force oracle.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::generate::shuffled;
use super::oracle::enumerate_connected_planar;
use crate::canonizer::{canon_planar, Canon};

#[derive(Debug, Clone, Default)]
pub struct SelftestReport {
    /// Number of isomorphism classes for each order `0..=max_n`.
    pub classes: Vec<usize>,
    /// Graphs canonized, counting relabelings.
    pub graphs: usize,
    pub mismatches: Vec<String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Canonizes every connected planar graph visited by the enumeration up
/// to `max_n` vertices, plus `relabelings` random relabelings of each class
/// representative. Graphs in one oracle class must share a canon and
/// different classes must have different canons.
pub fn selftest(max_n: usize, relabelings: usize, seed: u64) -> SelftestReport {
    let mut report = SelftestReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_class: HashMap<(usize, usize), Canon> = HashMap::new();
    let mut by_canon: HashMap<Canon, (usize, usize)> = HashMap::new();
    let levels = enumerate_connected_planar(max_n, |g, class, new| {
        let n = g.vertex_count();
        let key = (n, class);
        let mut check = |report: &mut SelftestReport, g: &crate::graph_model::Graph, what: &str| {
            report.graphs += 1;
            let canon = match canon_planar(g) {
                Ok(c) => c,
                Err(e) => {
                    report
                        .mismatches
                        .push(format!("n={n} class={class} {what}: {e}"));
                    return;
                }
            };
            match by_class.get(&key) {
                Some(c) if *c != canon => report.mismatches.push(format!(
                    "n={n} class={class} {what}: canon differs within the class"
                )),
                Some(_) => {}
                None => {
                    if let Some(&(m, other)) = by_canon.get(&canon) {
                        report.mismatches.push(format!(
                            "n={n} class={class} {what}: canon equals that of n={m} class={other}"
                        ));
                    }
                    by_canon.insert(canon.clone(), key);
                    by_class.insert(key, canon);
                }
            }
        };
        check(&mut report, g, "representative");
        if new {
            for _ in 0..relabelings {
                let (h, _) = shuffled(g, &mut rng);
                check(&mut report, &h, "relabeling");
            }
        }
    });
    report.classes = levels.iter().map(Vec::len).collect();
    report
}
