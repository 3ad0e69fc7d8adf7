mod common;

use std::collections::BTreeSet;

use common::*;
use planar_canon::cli_io::{brute_force_iso, random_planar, shuffled, Profile};
use planar_canon::component_canon::{all_starts, candidate_codes, code, cycle_code, Code};
use planar_canon::decompose::{triconnected_decompose, ComponentKind, EdgeKind, TriconTree};
use planar_canon::graph_model::{planar_embed, Graph, Vertex};
use proptest::prelude::*;

fn tree_of(g: &Graph) -> TriconTree {
    triconnected_decompose(&planar_embed(g).unwrap()).unwrap()
}

fn darts(c: &Code) -> Vec<(Vertex, Vertex)> {
    c.entries.iter().map(|e| (e.tail, e.head)).collect()
}

#[test]
fn triangle_traversals() {
    let t = tree_of(&Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap());
    let c = t.component(0);
    assert_eq!(
        darts(&cycle_code(c, (0, 1)).unwrap()),
        vec![(0, 1), (1, 2), (2, 0)]
    );
    assert_eq!(
        darts(&cycle_code(c, (1, 0)).unwrap()),
        vec![(1, 0), (0, 2), (2, 1)]
    );
}

#[test]
fn four_cycle_directions_are_reverses() {
    let t = tree_of(&Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
    let forward = cycle_code(t.component(0), (0, 1)).unwrap();
    let backward = cycle_code(t.component(0), (1, 0)).unwrap();
    let tails: Vec<Vertex> = darts(&forward).iter().map(|d| d.0).collect();
    let walk: Vec<Vertex> = (0..4).map(|i| tails[(5 - i) % 4]).collect();
    assert_eq!(
        darts(&backward).iter().map(|d| d.0).collect::<Vec<_>>(),
        walk
    );
    assert_eq!(walk, vec![1, 0, 3, 2]);
    assert_eq!(forward.numbered(), backward.numbered());
    assert_eq!(forward.numbered(), vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
}

#[test]
fn k4_component_of_two_pair_fixture_has_two_codes_from_ab() {
    let t = tree_of(&fixture("two_pairs.txt"));
    let c = t.component(0);
    assert_eq!(c.kind, ComponentKind::ThreeConnected);
    let plain = code(c, (0, 1), false).unwrap();
    let flipped = code(c, (0, 1), true).unwrap();
    let entries = |k: &Code| {
        k.entries
            .iter()
            .map(|e| (e.tail, e.head, e.kind))
            .collect::<Vec<_>>()
    };
    use EdgeKind::*;
    assert_eq!(
        entries(&plain),
        vec![
            (0, 1, Virtual(0)),
            (0, 3, Real),
            (0, 2, Real),
            (1, 2, Real),
            (1, 3, Real),
            (3, 2, Virtual(1))
        ]
    );
    assert_eq!(
        entries(&flipped),
        vec![
            (0, 1, Virtual(0)),
            (0, 2, Real),
            (0, 3, Real),
            (1, 3, Real),
            (1, 2, Real),
            (2, 3, Virtual(1))
        ]
    );
}

#[test]
fn candidate_counts_by_kind() {
    let t = tree_of(&fixture("two_pairs.txt"));
    let bond = t
        .components()
        .iter()
        .position(|c| c.kind == ComponentKind::ThreeBond)
        .unwrap();
    let bond_codes = candidate_codes(t.component(bond), (2, 3)).unwrap();
    assert_eq!(bond_codes.len(), 1);
    assert_eq!(darts(&bond_codes[0]), vec![(2, 3)]);
    let cyc = t
        .components()
        .iter()
        .position(|c| c.vertices == vec![2, 3, 4])
        .unwrap();
    assert_eq!(candidate_codes(t.component(cyc), (2, 3)).unwrap().len(), 2);
    assert_eq!(candidate_codes(t.component(0), (0, 1)).unwrap().len(), 4);
}

#[test]
fn codes_cover_every_component_edge_once() {
    for seed in 0..40 {
        let g = random_planar(12, seed, Profile::Biconnected);
        let t = tree_of(&g);
        for c in t.components() {
            let want: BTreeSet<(Vertex, Vertex, EdgeKind)> = c
                .edges
                .iter()
                .map(|e| (e.u.min(e.v), e.u.max(e.v), e.kind))
                .collect();
            for (start, flip) in all_starts(c) {
                let k = code(c, start, flip).unwrap();
                let got: Vec<(Vertex, Vertex, EdgeKind)> = k
                    .entries
                    .iter()
                    .map(|e| (e.tail.min(e.head), e.tail.max(e.head), e.kind))
                    .collect();
                if c.kind == ComponentKind::ThreeBond {
                    assert_eq!(got.len(), 1);
                    continue;
                }
                assert_eq!(got.len(), want.len());
                assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
                assert_eq!(k.entries[0].tail, start.0);
                assert_eq!(k.entries[0].head, start.1);
            }
        }
    }
}

fn code_multiset(g: &Graph) -> Vec<Vec<(u32, u32)>> {
    let t = tree_of(g);
    assert_eq!(t.components().len(), 1);
    let c = t.component(0);
    let mut all: Vec<Vec<(u32, u32)>> = all_starts(c)
        .into_iter()
        .map(|(d, f)| code(c, d, f).unwrap().numbered())
        .collect();
    all.sort();
    all
}

#[test]
fn determinism() {
    let g = random_planar(15, 4, Profile::ThreeConnected);
    assert_eq!(code_multiset(&g), code_multiset(&g));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn code_multisets_decide_isomorphism(n in 4usize..9, s1 in any::<u64>(), s2 in any::<u64>(), relabel in any::<bool>()) {
        let g = random_planar(n, s1, Profile::ThreeConnected);
        let h = if relabel { shuffled(&g, &mut rng(s2)).0 } else { random_planar(n, s2, Profile::ThreeConnected) };
        let iso = brute_force_iso(&g, &h, false).unwrap().isomorphic;
        prop_assert_eq!(code_multiset(&g) == code_multiset(&h), iso);
    }

    #[test]
    fn matching_starts_give_matching_codes(n in 4usize..16, seed in any::<u64>()) {
        let g = random_planar(n, seed, Profile::ThreeConnected);
        let (h, perm) = shuffled(&g, &mut rng(seed ^ 1));
        let (tg, th) = (tree_of(&g), tree_of(&h));
        let (cg, ch) = (tg.component(0), th.component(0));
        for (u, v) in g.edges() {
            let reference = code(cg, (u, v), false).unwrap().numbered();
            let matched = [false, true]
                .iter()
                .any(|&f| code(ch, (perm[u], perm[v]), f).unwrap().numbered() == reference);
            prop_assert!(matched);
        }
    }
}
