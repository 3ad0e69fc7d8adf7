//! The isomorphism order on component trees.
//!
//! Every rooted subtree is summarized by a signature whose derived `Ord`
//! is the order itself: two signatures compare equal exactly when the
//! subtrees are isomorphic with their roots fixed.
//!
//! * [`PairSig`]: size, number of children, sorted children, orientation counters.
//! * [`CompSig`]: component kind, then the minimum code entry by entry. A real
//!   edge sorts before a virtual one; virtual edges compare their subtrees,
//!   then whether the traversal runs along the child's reference orientation.
//! * [`ArtSig`] / [`BiconSig`]: the same scheme one level up, with child
//!   articulation points entering component codes as vertex labels.

mod bicon;
mod eval;
mod roots;

use std::cmp::Ordering;
use std::sync::Arc;

use crate::decompose::{ComponentKind, TreeNode, TriconTree};
use crate::graph_model::{Dart, Vertex};

pub use bicon::{compare_bicon, ArtState, BiconEval, BlockState, RootStrategy};
pub use eval::{BlockEval, CompEval, PairEval, RootChoice};
pub use roots::{
    all_roots, anchor_key, classify, colored_code, limit_roots, size_classes, AnchorKey, AnchorTie,
    ColoredCode, RootCandidate, RootCase, RootContext, RootLimit,
};

pub type Size = u64;

/// Vertex label inside a block: its color, plus the subtree hanging at it
/// when it is a child articulation point. The parent articulation point
/// gets a reserved label above all others.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    Plain(u32),
    Child(u32, Arc<ArtSig>),
    Parent,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SigEdge {
    /// The virtual edge of the parent pair (always the first entry).
    Parent,
    Real,
    Virtual {
        child: Arc<PairSig>,
        against_reference: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SigEntry {
    pub tail: u32,
    pub head: u32,
    /// Label of `head` when this entry numbers it for the first time.
    pub label: Option<Label>,
    pub edge: SigEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompSig {
    pub kind: ComponentKind,
    pub code: Vec<SigEntry>,
    /// Determined by the fields above; last so it never decides.
    pub size: Size,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrientationCounter {
    pub with_reference: u32,
    pub against_reference: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairSig {
    pub size: Size,
    pub child_count: usize,
    pub children: Vec<Arc<CompSig>>,
    pub counters: Vec<OrientationCounter>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootSig {
    Pair {
        pair: Arc<PairSig>,
        against_reference: bool,
        first: Label,
        second: Label,
    },
    Component {
        kind: ComponentKind,
        first: Label,
        code: Vec<SigEntry>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BiconSig {
    pub size: Size,
    pub root: RootSig,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArtSig {
    pub size: Size,
    pub child_count: usize,
    pub children: Vec<Arc<BiconSig>>,
}

/// Direction a child subtree gives to its parent pair, relative to the
/// pair's stored endpoints `(a, b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
    Symmetric,
}

impl Orientation {
    pub fn dart(self, (a, b): Dart) -> Option<Dart> {
        match self {
            Orientation::Forward => Some((a, b)),
            Orientation::Backward => Some((b, a)),
            Orientation::Symmetric => None,
        }
    }
}

/// Reference orientation (if any) and counters for an ordered list of
/// isomorphism classes, each given by the orientations of its members.
pub fn orientation_counters(
    classes: &[Vec<Orientation>],
) -> (Option<Orientation>, Vec<OrientationCounter>) {
    let counts: Vec<(u32, u32)> = classes
        .iter()
        .map(|cls| {
            let f = cls.iter().filter(|&&o| o == Orientation::Forward).count() as u32;
            let b = cls.iter().filter(|&&o| o == Orientation::Backward).count() as u32;
            (f, b)
        })
        .collect();
    let reference = counts.iter().find(|(f, b)| f != b).map(|(f, b)| {
        if f > b {
            Orientation::Forward
        } else {
            Orientation::Backward
        }
    });
    let counters = counts
        .into_iter()
        .map(|(f, b)| match reference {
            Some(Orientation::Backward) => OrientationCounter {
                with_reference: b,
                against_reference: f,
            },
            _ => OrientationCounter {
                with_reference: f,
                against_reference: b,
            },
        })
        .collect();
    (reference, counters)
}

/// Reference orientation and counters of one side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationOutcome {
    /// `None` when the subtree is symmetric about its root pair.
    pub reference: Option<Dart>,
    pub counters: Vec<OrientationCounter>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderResult {
    pub ordering: Ordering,
    pub left: OrientationOutcome,
    pub right: OrientationOutcome,
}

/// A tricon tree with vertex colors, rooted at a separating pair.
#[derive(Debug, Clone, Copy)]
pub struct RootedTricon<'t> {
    pub tree: &'t TriconTree,
    pub root: usize,
    pub colors: Option<&'t [u32]>,
}

/// A component subtree hanging below `parent`.
#[derive(Debug, Clone, Copy)]
pub struct ComponentSubtree<'t> {
    pub tree: &'t TriconTree,
    pub component: usize,
    pub parent: usize,
    pub colors: Option<&'t [u32]>,
}

fn plain_eval<'t>(tree: &'t TriconTree, colors: Option<&[u32]>) -> BlockEval<'t> {
    let labels = (0..tree.vertex_count())
        .map(|v| Label::Plain(colors.map_or(0, |c| c[v])))
        .collect();
    BlockEval::new(tree, labels, vec![0; tree.vertex_count()])
}

/// Compares two pair-rooted trees. `Equal` means the graphs are isomorphic
/// by a map sending one root pair onto the other.
pub fn compare_at_pair(s: &RootedTricon<'_>, t: &RootedTricon<'_>) -> OrderResult {
    let side = |r: &RootedTricon<'_>| {
        let mut ev = plain_eval(r.tree, r.colors);
        let (sig, _) = ev.root_sig(RootCandidate::Pair(r.root));
        let pe = ev.pair_eval(r.root, None);
        (
            sig,
            OrientationOutcome {
                reference: pe.reference,
                counters: pe.sig.counters.clone(),
            },
        )
    };
    let (ls, lo) = side(s);
    let (rs, ro) = side(t);
    OrderResult {
        ordering: ls.cmp(&rs),
        left: lo,
        right: ro,
    }
}

/// Compares two component subtrees below their parent pairs. The outcome
/// records the direction each gives to its parent pair.
pub fn compare_at_component(s: &ComponentSubtree<'_>, t: &ComponentSubtree<'_>) -> OrderResult {
    let side = |r: &ComponentSubtree<'_>| {
        let mut ev = plain_eval(r.tree, r.colors);
        let ce = ev.comp_eval(r.component, r.parent);
        let reference = ce.orientation.dart(r.tree.pair(r.parent).endpoints());
        (
            ce.sig.clone(),
            OrientationOutcome {
                reference,
                counters: Vec::new(),
            },
        )
    };
    let (ls, lo) = side(s);
    let (rs, ro) = side(t);
    OrderResult {
        ordering: ls.cmp(&rs),
        left: lo,
        right: ro,
    }
}

/// Where the subtree of an articulation point is attached when the tree is
/// rooted at `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceCopy {
    pub node: TreeNode,
    /// Index of the first entry containing the vertex in the node's chosen
    /// code; `None` for the root pair.
    pub position: Option<usize>,
}

/// Reference copy of `v`: the node nearest to the root pair containing it.
pub fn reference_copy(ev: &mut BlockEval<'_>, root: usize, v: Vertex) -> Option<ReferenceCopy> {
    let tree = ev.tree();
    if tree.pair(root).contains(v) {
        return Some(ReferenceCopy {
            node: TreeNode::Pair(root),
            position: None,
        });
    }
    let adj = tree.adjacency();
    let dist = crate::graph_model::distances(&adj, &[root]);
    let node = tree
        .nodes_containing(v)
        .into_iter()
        .min_by_key(|&n| (dist[tree.node_index(n)], n))?;
    let c = match node {
        TreeNode::Component(c) => c,
        TreeNode::Pair(_) => unreachable!("a pair containing v has closer components containing v"),
    };
    let parent = tree
        .pairs_at(c)
        .iter()
        .copied()
        .min_by_key(|&p| dist[tree.node_index(TreeNode::Pair(p))])
        .expect("a non-root component has a parent pair");
    let code = ev.best_code(c, parent, None);
    let position = code.entries.iter().position(|e| e.tail == v || e.head == v);
    Some(ReferenceCopy { node, position })
}
