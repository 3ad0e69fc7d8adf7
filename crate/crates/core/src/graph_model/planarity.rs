//! Path-addition planarity test (Demoucron, Malgrange and Pertuiset) run
//! block by block. Block rotations are concatenated at cut vertices.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::{EmbedError, Graph, PlaneGraph, RotationScheme, Vertex};

/// Computes a planar rotation scheme, or reports `NonPlanar`.
/// The result depends only on the input encoding.
pub fn planar_embed(g: &Graph) -> Result<PlaneGraph, EmbedError> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(EmbedError::NonPlanar);
    }
    let mut order: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for block in g.blocks().blocks {
        if let [(u, v)] = block[..] {
            order[u].push(v);
            order[v].push(u);
            continue;
        }
        for (v, rot) in embed_block(&block)? {
            order[v].extend(rot);
        }
    }
    PlaneGraph::new(g.clone(), RotationScheme::from_orders(order))
}

enum Fragment {
    Chord(Vertex, Vertex),
    Bridge {
        interior: BTreeSet<Vertex>,
        attachments: BTreeSet<Vertex>,
    },
}

impl Fragment {
    fn attachments(&self) -> Vec<Vertex> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge { attachments, .. } => attachments.iter().copied().collect(),
        }
    }
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

/// Embeds one biconnected block with at least two edges.
fn embed_block(edges: &[(Vertex, Vertex)]) -> Result<BTreeMap<Vertex, Vec<Vertex>>, EmbedError> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for ns in adj.values_mut() {
        ns.sort_unstable();
    }

    // Initial cycle: the first edge closed by a shortest detour.
    let (s, t) = edges[0];
    let detour = shortest_path(&adj, s, |x| x == t, |x, y| key(x, y) != (s, t))
        .expect("a block with two or more edges has a cycle through every edge");
    let cycle = detour;
    let mut embedded_v: HashSet<Vertex> = cycle.iter().copied().collect();
    let mut embedded_e: HashSet<(Vertex, Vertex)> = HashSet::new();
    for i in 0..cycle.len() {
        embedded_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_e.len() < edges.len() {
        let fragments = fragments(&adj, edges, &embedded_v, &embedded_e);
        let face_sets: Vec<HashSet<Vertex>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| att.iter().all(|a| face_sets[i].contains(a)))
                .collect();
            match admissible.len() {
                0 => return Err(EmbedError::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("an unembedded edge implies a fragment");
        let path = match &fragments[fi] {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge {
                interior,
                attachments,
            } => {
                let x = *attachments.iter().next().unwrap();
                shortest_path(
                    &adj,
                    x,
                    |y| y != x && attachments.contains(&y),
                    |a, b| {
                        // Leave x into the interior, then move inside it.
                        (a == x && interior.contains(&b)) || interior.contains(&a)
                    },
                )
                .expect("a bridge has at least two attachments")
            }
        };
        for w in path.windows(2) {
            embedded_e.insert(key(w[0], w[1]));
        }
        embedded_v.extend(path.iter().copied());
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }

    // rho(v -> u) = v -> w for consecutive darts (u, v), (v, w) on a face.
    let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    let mut out = BTreeMap::new();
    for (&v, ns) in &adj {
        let s = &succ[&v];
        let mut rot = vec![ns[0]];
        let mut cur = s[&ns[0]];
        while cur != ns[0] {
            rot.push(cur);
            cur = s[&cur];
            if rot.len() > ns.len() {
                break;
            }
        }
        if rot.len() != ns.len() {
            return Err(EmbedError::InvalidRotation(format!(
                "rotation at {v} is not one cycle"
            )));
        }
        out.insert(v, rot);
    }
    Ok(out)
}

fn fragments(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    edges: &[(Vertex, Vertex)],
    embedded_v: &HashSet<Vertex>,
    embedded_e: &HashSet<(Vertex, Vertex)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &(u, v) in edges {
        if embedded_v.contains(&u) && embedded_v.contains(&v) && !embedded_e.contains(&(u, v)) {
            out.push(Fragment::Chord(u, v));
        }
    }
    let mut seen: HashSet<Vertex> = HashSet::new();
    for &s in adj.keys() {
        if embedded_v.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = BTreeSet::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(x) = queue.pop_front() {
            interior.insert(x);
            for &y in &adj[&x] {
                if embedded_v.contains(&y) {
                    attachments.insert(y);
                } else if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment::Bridge {
            interior,
            attachments,
        });
    }
    out
}

/// BFS path from `s` to the first vertex satisfying `goal`, using only
/// steps allowed by `step`.
fn shortest_path(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    s: Vertex,
    goal: impl Fn(Vertex) -> bool,
    step: impl Fn(Vertex, Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    prev.insert(s, s);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if prev.contains_key(&y) || !step(x, y) {
                continue;
            }
            prev.insert(y, x);
            if goal(y) {
                let mut path = vec![y];
                let mut cur = y;
                while cur != s {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// Splits face `f` (a directed cycle through both ends of `path`) along `path`.
fn split_face(f: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let (x, y) = (path[0], *path.last().unwrap());
    let k = f.len();
    let i = f.iter().position(|&v| v == x).unwrap();
    let j = f.iter().position(|&v| v == y).unwrap();
    let inner = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % k;
            out.push(f[p]);
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
