//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use common::*;
use planar_canon::canonizer::{canon_planar, canon_planar_with, CanonOptions};
use planar_canon::cli_io::{
    brute_force_aut_count, brute_force_iso, cli, connected_planar_classes, is_three_connected,
    parse_canon, random_planar, selftest, shuffled, Profile,
};
use planar_canon::decompose::{
    biconnected_decompose, three_connected_separating_pairs, BiconTree, ComponentKind, TriconTree,
};
use planar_canon::graph_model::{planar_embed, Graph, Vertex};
use planar_canon::tree_order::{BiconEval, RootStrategy};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn tricon(g: &Graph) -> TriconTree {
    let tree = biconnected_decompose(g).expect("biconnected planar input");
    assert_eq!(tree.blocks().len(), 1);
    tree.block(0)
        .tricon()
        .expect("more than two vertices")
        .clone()
}

fn exhaustive_oracle() -> Outcome {
    let report = selftest(7, 2, 11);
    let expected = vec![0, 1, 1, 2, 6, 20, 99, 646];
    if report.classes != expected {
        return Err(format!(
            "class counts {:?}, expected {expected:?}",
            report.classes
        ));
    }
    if !report.passed() {
        return Err(format!(
            "{} mismatches, first: {}",
            report.mismatches.len(),
            report.mismatches[0]
        ));
    }
    let total: usize = report.classes.iter().sum();
    Ok(format!(
        "{total} classes up to n=7, {} graphs canonized, 0 mismatches",
        report.graphs
    ))
}

fn permutation_invariance() -> Outcome {
    let mut r = rng(2);
    let corpus = mixed_corpus(500, 30, 2);
    let mut checked = 0;
    for (i, g) in corpus.iter().enumerate() {
        let text = canon_planar(g)
            .map_err(|e| format!("graph {i}: {e}"))?
            .to_text();
        for _ in 0..100 {
            let (h, perm) = shuffled(g, &mut r);
            let other = canon_planar(&h)
                .map_err(|e| format!("graph {i}: {e}"))?
                .to_text();
            if other != text {
                return Err(format!(
                    "graph {i} edges {:?} differs under relabeling {perm:?}",
                    g.edges()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{} graphs, {checked} relabelings, all byte-identical",
        corpus.len()
    ))
}

fn two_pair_fixture() -> Outcome {
    let t = tricon(&fixture("two_pairs.txt"));
    let pairs: BTreeSet<(Vertex, Vertex)> = t.pairs().iter().map(|p| p.endpoints()).collect();
    let comps: BTreeSet<(ComponentKind, Vec<Vertex>)> = t
        .components()
        .iter()
        .map(|c| (c.kind, c.vertices.clone()))
        .collect();
    let want_pairs = BTreeSet::from([(0, 1), (2, 3)]);
    let want_comps = BTreeSet::from([
        (ComponentKind::Cycle, vec![0, 1, 5]),
        (ComponentKind::ThreeConnected, vec![0, 1, 2, 3]),
        (ComponentKind::ThreeBond, vec![2, 3]),
        (ComponentKind::Cycle, vec![2, 3, 4]),
    ]);
    if pairs != want_pairs || comps != want_comps || t.components().len() != 4 {
        return Err(format!("pairs {pairs:?} components {comps:?}"));
    }
    Ok("pairs {a,b},{c,d}; components {a,b,f}, {a,b,c,d}, 3-bond {c,d}, {c,d,e}".into())
}

fn orientation_counter_fixture() -> Outcome {
    let (g, h) = (fixture("counters_g.txt"), fixture("counters_h.txt"));
    if brute_force_iso(&g, &h, true).unwrap().isomorphic {
        return Err("oracle finds the fixtures isomorphic".into());
    }
    if canon_planar(&g).unwrap() == canon_planar(&h).unwrap() {
        return Err("canons are equal".into());
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let paths = [
        fixture_path("counters_g.txt"),
        fixture_path("counters_h.txt"),
    ];
    let args = [
        "planar-canon",
        "--trace",
        "iso",
        paths[0].to_str().unwrap(),
        paths[1].to_str().unwrap(),
    ];
    let code = cli::run(args, &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    let err = String::from_utf8(err).unwrap();
    if code != 1 || out.trim() != "NOT-ISOMORPHIC" {
        return Err(format!("iso exited {code} with `{}`", out.trim()));
    }
    for line in [
        "graph=1 block=0 root=0-1 class=2 counter=(2,0)",
        "graph=2 block=0 root=0-1 class=2 counter=(1,1)",
    ] {
        if !err.lines().any(|l| l == line) {
            return Err(format!("trace lacks `{line}`"));
        }
    }
    Ok("NOT-ISOMORPHIC; second class counters (2,0) vs (1,1)".into())
}

fn face_pairs_disjoint() -> Outcome {
    let mut violations = Vec::new();
    let mut faces_checked = 0;
    for (i, g) in biconnected_corpus(200, 12, 5).iter().enumerate() {
        let pg = planar_embed(g).unwrap();
        let found: BTreeSet<(Vertex, Vertex)> = three_connected_separating_pairs(&pg)
            .unwrap()
            .iter()
            .map(|p| p.endpoints())
            .collect();
        if found != brute_three_connected_pairs(g) {
            violations.push(format!(
                "graph {i}: detected pairs differ from exhaustive search"
            ));
        }
        for face in pg.faces() {
            faces_checked += 1;
            let cycle: Vec<Vertex> = face.vertices().collect();
            let on: Vec<&(Vertex, Vertex)> = found
                .iter()
                .filter(|(a, b)| cycle.contains(a) && cycle.contains(b))
                .collect();
            for (x, p) in on.iter().enumerate() {
                for q in &on[x + 1..] {
                    if interleaved(&cycle, **p, **q) {
                        violations.push(format!(
                            "graph {i}: pairs {p:?} and {q:?} cross on face {cycle:?}"
                        ));
                    }
                }
            }
        }
    }
    match violations.first() {
        None => Ok(format!("200 graphs, {faces_checked} faces, 0 violations")),
        Some(v) => Err(format!("{} violations, first: {v}", violations.len())),
    }
}

fn separating_pair_exists() -> Outcome {
    let mut samples: Vec<Graph> = connected_planar_classes(7)
        .into_iter()
        .flatten()
        .filter(|g| g.vertex_count() >= 3 && g.blocks().articulation.iter().all(|&a| !a))
        .collect();
    samples.extend(biconnected_corpus(200, 12, 6));
    let mut relevant = 0;
    for g in &samples {
        let is_cycle =
            g.edge_count() == g.vertex_count() && (0..g.vertex_count()).all(|v| g.degree(v) == 2);
        if is_cycle || is_three_connected(g) {
            continue;
        }
        relevant += 1;
        let pg = planar_embed(g).unwrap();
        if three_connected_separating_pairs(&pg).unwrap().is_empty() {
            return Err(format!("no pair detected in {:?}", g.edges()));
        }
    }
    Ok(format!(
        "{relevant} biconnected graphs that are neither cycles nor 3-connected, 0 violations"
    ))
}

fn colored_automorphism_bounds() -> Outcome {
    let mut r = rng(7);
    let mut tightest = (0u64, 0usize);
    let mut fixed_max = 0;
    for i in 0..200 {
        let n = 4 + i % 7;
        let g = random_planar(n, r.gen(), Profile::ThreeConnected);
        let mut order: Vec<Vertex> = (0..n).collect();
        order.shuffle(&mut r);

        // One distinct vertex, every other class of size at least two.
        let classes = r.gen_range(1..=(n - 1) / 2);
        let mut colors = vec![0u32; n];
        colors[order[0]] = 1;
        for (j, &v) in order[1..].iter().enumerate() {
            colors[v] = 2 + if j < 2 * classes {
                (j / 2) as u32
            } else {
                r.gen_range(0..classes as u32)
            };
        }
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &colors[..] {
            *sizes.entry(c).or_default() += 1;
        }
        let k = sizes
            .iter()
            .filter(|(&c, _)| c != 1)
            .map(|(_, &s)| s)
            .min()
            .unwrap();
        let count = brute_force_aut_count(&g.clone().with_colors(colors).unwrap()).unwrap();
        if count > 4 * k as u64 {
            return Err(format!(
                "{count} automorphisms with smallest class {k} in {:?}",
                g.edges()
            ));
        }
        if count * (tightest.1 as u64) > tightest.0 * (k as u64) || tightest.1 == 0 {
            tightest = (count, k);
        }

        // Three distinct vertices.
        let mut colors = vec![0u32; n];
        for (j, &v) in order[..3].iter().enumerate() {
            colors[v] = 1 + j as u32;
        }
        let count = brute_force_aut_count(&g.with_colors(colors).unwrap()).unwrap();
        if count > 2 {
            return Err(format!("{count} automorphisms with three fixed vertices"));
        }
        fixed_max = fixed_max.max(count);
    }
    Ok(format!(
        "200 graphs; largest ratio {} automorphisms for k={}; at most {fixed_max} with three fixed vertices",
        tightest.0, tightest.1
    ))
}

fn limited_roots_match_exhaustive() -> Outcome {
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for (i, (g, _)) in embedded_blocks(200, 10, 8).iter().enumerate() {
        let limited = canon_planar(g).unwrap().to_text();
        let opts = CanonOptions {
            strategy: RootStrategy::Exhaustive,
            trace: false,
        };
        let exhaustive = canon_planar_with(g, &opts).unwrap().canon.to_text();
        if limited != exhaustive {
            return Err(format!(
                "graph {i} {:?}: limited and exhaustive canons differ",
                g.edges()
            ));
        }
        let tree = biconnected_decompose(g).unwrap();
        let colors: Vec<u32> = (0..g.vertex_count()).map(|v| g.color(v)).collect();
        let mut ev = BiconEval::new(&tree, colors, RootStrategy::Limited);
        for b in 0..tree.blocks().len() {
            for &a in tree.articulations_in(b) {
                let state = ev.block(b, Some(a));
                let name = format!("{:?}", state.case);
                *cases
                    .entry(name.split([' ', '{']).next().unwrap().to_string())
                    .or_default() += 1;
                if let Some(bound) = state.case.candidate_bound() {
                    if state.tried.len() > bound {
                        return Err(format!(
                            "graph {i} block {b}: {} candidates exceed the bound {bound} of {:?}",
                            state.tried.len(),
                            state.case
                        ));
                    }
                }
            }
        }
    }
    let seen: Vec<String> = cases.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Ok(format!(
        "200 graphs byte-identical, candidate bounds hold; cases {}",
        seen.join(" ")
    ))
}

fn shape_invariants() -> Outcome {
    let mut graphs: Vec<Graph> = connected_planar_classes(7).into_iter().flatten().collect();
    graphs.extend(mixed_corpus(500, 30, 2));
    graphs.push(fixture("two_pairs.txt"));
    graphs.push(fixture("counters_g.txt"));
    graphs.push(fixture("counters_h.txt"));
    graphs.extend(biconnected_corpus(200, 12, 5));
    graphs.extend(biconnected_corpus(200, 12, 6));
    graphs.extend((0..200).map(|i| random_planar(4 + i % 7, i as u64, Profile::ThreeConnected)));
    graphs.extend(embedded_blocks(200, 10, 8).into_iter().map(|(g, _)| g));
    graphs.extend(mixed_corpus(200, 30, 10));
    let mut trees = 0;
    for g in &graphs {
        if g.vertex_count() < 2 {
            continue;
        }
        let tree: BiconTree = biconnected_decompose(g).map_err(|e| e.to_string())?;
        check_bicon_shape(&tree).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        trees += 1 + tree
            .blocks()
            .iter()
            .filter(|b| b.tricon().is_some())
            .count();
    }
    Ok(format!(
        "{} graphs, {trees} trees, 0 violations",
        graphs.len()
    ))
}

fn reconstruction_fixed_point() -> Outcome {
    let mut r = rng(10);
    let mut iso_checked = 0;
    for (i, g) in mixed_corpus(200, 30, 10).into_iter().enumerate() {
        let g = if i % 2 == 1 {
            let colors = (0..g.vertex_count()).map(|_| r.gen_range(0..3)).collect();
            g.with_colors(colors).unwrap()
        } else {
            g
        };
        let text = canon_planar(&g).unwrap().to_text();
        let rebuilt = parse_canon(&text).map_err(|e| e.to_string())?.to_graph();
        if canon_planar(&rebuilt).unwrap().to_text() != text {
            return Err(format!("graph {i} is not a fixed point"));
        }
        if g.vertex_count() <= 10 {
            iso_checked += 1;
            if !brute_force_iso(&g, &rebuilt, true).unwrap().isomorphic {
                return Err(format!("graph {i}: reconstruction is not isomorphic"));
            }
        }
    }
    Ok(format!(
        "200 samples are fixed points; {iso_checked} small ones isomorphic to their reconstruction"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("exhaustive oracle equivalence", exhaustive_oracle),
        ("randomized permutation invariance", permutation_invariance),
        ("two-pair decomposition fixture", two_pair_fixture),
        ("orientation counter fixture", orientation_counter_fixture),
        ("face-spanning pairs do not cross", face_pairs_disjoint),
        ("separating pair existence", separating_pair_exists),
        ("colored automorphism bounds", colored_automorphism_bounds),
        (
            "limited roots match exhaustive roots",
            limited_roots_match_exhaustive,
        ),
        ("tree shape invariants", shape_invariants),
        ("reconstruction fixed point", reconstruction_fixed_point),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
