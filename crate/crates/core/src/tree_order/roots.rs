//! Choice of the root of a block's tricon tree.
//!
//! [`limit_roots`] narrows the candidates following the case analysis on
//! the tree center. [`anchor_key`] is an isomorphism-invariant key computed
//! for any single root; a block's signature is the minimum of
//! `(anchor_key, root signature)`, so the exhaustive and the limited route
//! agree whenever the candidates contain every root of minimum anchor.

use std::collections::BTreeMap;

use super::Size;
use crate::component_canon::{all_starts, code, cycle_code};
use crate::decompose::{ComponentKind, EdgeKind, TreeNode, TriconTree};
use crate::graph_model::{distances, eccentricities, Dart, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootCandidate {
    Pair(usize),
    /// Start dart and embedding flip, for trees with a single component.
    Dart {
        dart: Dart,
        flip: bool,
    },
}

/// Parent articulation point and child articulation points (with subtree
/// sizes) of a block, in the block's vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootContext {
    pub parent: Option<Vertex>,
    pub children: Vec<(Vertex, Size)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootCase {
    /// No parent articulation point: every root is tried.
    Unrestricted,
    CenterPair,
    ParentOutsideCenter,
    CycleCenter,
    Leaf,
    SingleChild,
    /// Some child in the smallest class lies outside the center.
    FarClass {
        k1: usize,
    },
    /// All children in the smallest class lie on the 3-connected center.
    ColoredCenter {
        k1: usize,
        k2: Option<usize>,
    },
}

impl RootCase {
    /// Upper bound on the number of candidates, where the case has one.
    pub fn candidate_bound(&self) -> Option<usize> {
        match *self {
            RootCase::CenterPair | RootCase::ParentOutsideCenter => Some(1),
            RootCase::CycleCenter => Some(2),
            RootCase::FarClass { k1 } => Some(k1),
            RootCase::ColoredCenter { k1: 1, k2: Some(1) } => Some(2),
            RootCase::ColoredCenter {
                k1: 1,
                k2: Some(k2),
            } => Some(4 * k2),
            RootCase::ColoredCenter { k1, .. } => Some(4 * k1),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootLimit {
    pub case: RootCase,
    pub candidates: Vec<RootCandidate>,
}

/// Code of the center with colored vertices: the parent, the child classes
/// by index, and 0 elsewhere. Entries are (tail#, head#, color of a newly
/// numbered head, virtual).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCode {
    pub first: u32,
    pub entries: Vec<(u32, u32, Option<u32>, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnchorTie {
    None,
    Distance(usize),
    Code(ColoredCode),
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnchorKey {
    pub eccentricity: usize,
    pub tie: AnchorTie,
}

impl AnchorKey {
    pub const ANY: AnchorKey = AnchorKey {
        eccentricity: 0,
        tie: AnchorTie::None,
    };
}

/// Every possible root: all pairs, or all starts of the only component.
pub fn all_roots(tree: &TriconTree) -> Vec<RootCandidate> {
    if tree.pairs().is_empty() {
        all_starts(tree.component(0))
            .into_iter()
            .filter(|&(_, flip)| !flip || tree.component(0).kind == ComponentKind::ThreeConnected)
            .map(|(dart, flip)| RootCandidate::Dart { dart, flip })
            .collect()
    } else {
        (0..tree.pairs().len()).map(RootCandidate::Pair).collect()
    }
}

/// Child classes of equal subtree size, ordered by (class size, subtree size).
pub fn size_classes(children: &[(Vertex, Size)]) -> Vec<Vec<Vertex>> {
    let mut by_size: BTreeMap<Size, Vec<Vertex>> = BTreeMap::new();
    for &(v, s) in children {
        by_size.entry(s).or_default().push(v);
    }
    let mut classes: Vec<(usize, Size, Vec<Vertex>)> = by_size
        .into_iter()
        .map(|(s, mut vs)| {
            vs.sort_unstable();
            (vs.len(), s, vs)
        })
        .collect();
    classes.sort();
    classes.into_iter().map(|(_, _, vs)| vs).collect()
}

fn center_component(tree: &TriconTree) -> Option<usize> {
    match tree.center().expect("component trees have a unique center") {
        TreeNode::Component(c) => Some(c),
        TreeNode::Pair(_) => None,
    }
}

pub fn classify(tree: &TriconTree, ctx: &RootContext) -> RootCase {
    let Some(a) = ctx.parent else {
        return RootCase::Unrestricted;
    };
    let Some(c) = center_component(tree) else {
        return RootCase::CenterPair;
    };
    let center = tree.component(c);
    if !center.contains(a) {
        return RootCase::ParentOutsideCenter;
    }
    if center.kind == ComponentKind::Cycle {
        return RootCase::CycleCenter;
    }
    let classes = size_classes(&ctx.children);
    match ctx.children.len() {
        0 => RootCase::Leaf,
        1 => RootCase::SingleChild,
        _ => {
            let k1 = classes[0].len();
            if classes[0].iter().any(|&v| !center.contains(v)) {
                RootCase::FarClass { k1 }
            } else {
                RootCase::ColoredCenter {
                    k1,
                    k2: classes.get(1).map(Vec::len),
                }
            }
        }
    }
}

/// Pair adjacent to the center on the path from the node associated with `v`.
fn pair_toward(tree: &TriconTree, center: usize, v: Vertex) -> usize {
    let adj = tree.adjacency();
    let c = tree.node_index(TreeNode::Component(center));
    let mut parent = vec![usize::MAX; adj.len()];
    let mut dist = vec![usize::MAX; adj.len()];
    dist[c] = 0;
    let mut queue = std::collections::VecDeque::from([c]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut node = tree
        .nodes_containing(v)
        .into_iter()
        .map(|n| tree.node_index(n))
        .min_by_key(|&i| dist[i])
        .expect("vertex lies in the tree");
    while parent[node] != c {
        node = parent[node];
    }
    match tree.node_at(node) {
        TreeNode::Pair(p) => p,
        TreeNode::Component(_) => unreachable!("neighbors of a component are pairs"),
    }
}

fn vertex_colors(tree: &TriconTree, ctx: &RootContext) -> Vec<u32> {
    let mut colors = vec![0; tree.vertex_count()];
    for (j, class) in size_classes(&ctx.children).iter().enumerate() {
        for &v in class {
            colors[v] = j as u32 + 1;
        }
    }
    if let Some(a) = ctx.parent {
        colors[a] = u32::MAX;
    }
    colors
}

/// Colored code of component `c` from `(dart, flip)`, with the pair of its
/// first virtual edge.
pub fn colored_code(
    tree: &TriconTree,
    ctx: &RootContext,
    c: usize,
    dart: Dart,
    flip: bool,
) -> (ColoredCode, Option<usize>) {
    let colors = vertex_colors(tree, ctx);
    let code = code(tree.component(c), dart, flip).expect("start is an edge of the component");
    let mut number: BTreeMap<Vertex, u32> = BTreeMap::from([(dart.0, 1)]);
    let mut first_virtual = None;
    let mut entries = Vec::with_capacity(code.entries.len());
    for e in &code.entries {
        let next = number.len() as u32 + 1;
        let head_new = !number.contains_key(&e.head);
        let head = *number.entry(e.head).or_insert(next);
        let virt = match e.kind {
            EdgeKind::Virtual(p) => {
                first_virtual.get_or_insert(p);
                true
            }
            EdgeKind::Real => false,
        };
        entries.push((
            number[&e.tail],
            head,
            head_new.then(|| colors[e.head]),
            virt,
        ));
    }
    (
        ColoredCode {
            first: colors[dart.0],
            entries,
        },
        first_virtual,
    )
}

fn center_starts(tree: &TriconTree, c: usize) -> Vec<(Dart, bool)> {
    all_starts(tree.component(c))
}

/// Root candidates for the block, following the case analysis.
pub fn limit_roots(tree: &TriconTree, ctx: &RootContext) -> RootLimit {
    let case = classify(tree, ctx);
    let all = || all_roots(tree);
    let mut candidates: Vec<RootCandidate> = match case {
        RootCase::Unrestricted | RootCase::Leaf | RootCase::SingleChild => all(),
        RootCase::CenterPair => match tree.center().unwrap() {
            TreeNode::Pair(p) => vec![RootCandidate::Pair(p)],
            TreeNode::Component(_) => unreachable!(),
        },
        RootCase::ParentOutsideCenter => {
            let c = center_component(tree).unwrap();
            vec![RootCandidate::Pair(pair_toward(
                tree,
                c,
                ctx.parent.unwrap(),
            ))]
        }
        RootCase::CycleCenter => {
            let c = center_component(tree).unwrap();
            let a = ctx.parent.unwrap();
            let comp = tree.component(c);
            comp.neighbors(a)
                .iter()
                .map(|&x| {
                    if tree.pairs().is_empty() {
                        return RootCandidate::Dart {
                            dart: (a, x),
                            flip: false,
                        };
                    }
                    let walk = cycle_code(comp, (a, x)).expect("a lies on the cycle");
                    let p = walk
                        .entries
                        .iter()
                        .find_map(|e| match e.kind {
                            EdgeKind::Virtual(p) => Some(p),
                            EdgeKind::Real => None,
                        })
                        .expect("the center of a larger tree has a virtual edge");
                    RootCandidate::Pair(p)
                })
                .collect()
        }
        RootCase::FarClass { .. } => {
            let c = center_component(tree).unwrap();
            let comp = tree.component(c);
            size_classes(&ctx.children)[0]
                .iter()
                .filter(|&&v| !comp.contains(v))
                .map(|&v| RootCandidate::Pair(pair_toward(tree, c, v)))
                .collect()
        }
        RootCase::ColoredCenter { .. } => {
            let c = center_component(tree).unwrap();
            let codes: Vec<(ColoredCode, Option<usize>, Dart, bool)> = center_starts(tree, c)
                .into_iter()
                .map(|(d, f)| {
                    let (code, p) = colored_code(tree, ctx, c, d, f);
                    (code, p, d, f)
                })
                .collect();
            let min = codes.iter().map(|x| &x.0).min().unwrap().clone();
            codes
                .into_iter()
                .filter(|x| x.0 == min)
                .map(|(_, p, dart, flip)| match p {
                    Some(p) => RootCandidate::Pair(p),
                    None => RootCandidate::Dart { dart, flip },
                })
                .collect()
        }
    };
    candidates.sort_unstable();
    candidates.dedup();
    RootLimit { case, candidates }
}

/// Invariant key of a single root under the block's case.
pub fn anchor_key(
    tree: &TriconTree,
    ctx: &RootContext,
    case: RootCase,
    root: RootCandidate,
) -> AnchorKey {
    let adj = tree.adjacency();
    let node = match root {
        RootCandidate::Pair(p) => Some(tree.node_index(TreeNode::Pair(p))),
        RootCandidate::Dart { .. } => None,
    };
    let ecc = node.map_or(0, |i| eccentricities(&adj)[i]);
    let key = |tie| AnchorKey {
        eccentricity: ecc,
        tie,
    };
    let dist_to = |v: Vertex| -> usize {
        let sources: Vec<usize> = tree
            .nodes_containing(v)
            .into_iter()
            .map(|n| tree.node_index(n))
            .collect();
        node.map_or(0, |i| distances(&adj, &sources)[i])
    };
    match case {
        RootCase::Unrestricted | RootCase::Leaf | RootCase::SingleChild => AnchorKey::ANY,
        RootCase::CenterPair => key(AnchorTie::None),
        RootCase::ParentOutsideCenter => key(AnchorTie::Distance(dist_to(ctx.parent.unwrap()))),
        RootCase::FarClass { .. } => {
            let c = center_component(tree).unwrap();
            let d = size_classes(&ctx.children)[0]
                .iter()
                .filter(|&&v| !tree.component(c).contains(v))
                .map(|&v| dist_to(v))
                .min()
                .unwrap();
            key(AnchorTie::Distance(d))
        }
        RootCase::CycleCenter => {
            let a = ctx.parent.unwrap();
            match root {
                RootCandidate::Dart { dart, .. } => {
                    key(AnchorTie::Distance(usize::from(dart.0 != a)))
                }
                RootCandidate::Pair(p) => {
                    let c = center_component(tree).unwrap();
                    let comp = tree.component(c);
                    let x = comp.neighbors(a)[0];
                    let walk = cycle_code(comp, (a, x)).expect("a lies on the cycle");
                    let len = walk.entries.len();
                    match walk
                        .entries
                        .iter()
                        .position(|e| e.kind == EdgeKind::Virtual(p))
                    {
                        Some(i) => key(AnchorTie::Distance(i.min(len - 1 - i))),
                        None => key(AnchorTie::Unreachable),
                    }
                }
            }
        }
        RootCase::ColoredCenter { .. } => {
            let c = center_component(tree).unwrap();
            match root {
                RootCandidate::Dart { dart, flip } => {
                    key(AnchorTie::Code(colored_code(tree, ctx, c, dart, flip).0))
                }
                RootCandidate::Pair(p) => {
                    let best = center_starts(tree, c)
                        .into_iter()
                        .map(|(d, f)| colored_code(tree, ctx, c, d, f))
                        .filter(|(_, first)| *first == Some(p))
                        .map(|(code, _)| code)
                        .min();
                    key(best.map_or(AnchorTie::Unreachable, AnchorTie::Code))
                }
            }
        }
    }
}
