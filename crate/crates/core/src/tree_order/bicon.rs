use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::{
    all_roots, anchor_key, classify, limit_roots, AnchorKey, ArtSig, BiconSig, BlockEval, Label,
    RootCandidate, RootCase, RootChoice, RootContext, RootSig, SigEdge, SigEntry, Size,
};
use crate::decompose::{BiconTree, BlockShape, ComponentKind};
use crate::graph_model::Vertex;

/// How the root of each block's tricon tree is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootStrategy {
    /// Candidates from the case analysis on the tree center.
    #[default]
    Limited,
    /// Every separating pair or start dart.
    Exhaustive,
}

/// A block evaluated below a parent articulation point (or as the root).
pub struct BlockState<'g> {
    /// `None` for bridges.
    pub eval: Option<BlockEval<'g>>,
    pub labels: Vec<Label>,
    pub context: RootContext,
    pub case: RootCase,
    /// Roots that were tried, with their anchor keys.
    pub tried: Vec<(RootCandidate, AnchorKey)>,
    pub root: RootChoice,
    pub sig: Arc<BiconSig>,
}

/// An articulation point evaluated below a parent block (or as the root).
#[derive(Debug, Clone)]
pub struct ArtState {
    pub sig: Arc<ArtSig>,
    /// Child blocks in output order.
    pub children: Vec<usize>,
}

/// Memoized evaluation of a block-cut tree.
pub struct BiconEval<'g> {
    tree: &'g BiconTree,
    colors: Vec<u32>,
    strategy: RootStrategy,
    blocks: HashMap<(usize, Option<usize>), BlockState<'g>>,
    arts: HashMap<(usize, Option<usize>), ArtState>,
}

impl<'g> BiconEval<'g> {
    /// `colors` holds the colors of the original graph's vertices.
    pub fn new(tree: &'g BiconTree, colors: Vec<u32>, strategy: RootStrategy) -> Self {
        BiconEval {
            tree,
            colors,
            strategy,
            blocks: HashMap::new(),
            arts: HashMap::new(),
        }
    }

    pub fn tree(&self) -> &'g BiconTree {
        self.tree
    }

    /// Articulation point number `a` rooted below block `parent`.
    pub fn art(&mut self, a: usize, parent: Option<usize>) -> ArtState {
        if let Some(s) = self.arts.get(&(a, parent)) {
            return s.clone();
        }
        let mut children: Vec<(usize, Arc<BiconSig>)> = self
            .tree
            .blocks_at(a)
            .to_vec()
            .into_iter()
            .filter(|&b| Some(b) != parent)
            .map(|b| (b, self.block(b, Some(a)).sig.clone()))
            .collect();
        children.sort_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)));
        let sig = ArtSig {
            size: 1 + children.iter().map(|(_, s)| s.size).sum::<Size>(),
            child_count: children.len(),
            children: children.iter().map(|(_, s)| s.clone()).collect(),
        };
        let state = ArtState {
            sig: Arc::new(sig),
            children: children.into_iter().map(|(b, _)| b).collect(),
        };
        self.arts.insert((a, parent), state.clone());
        state
    }

    /// Block `b` rooted below articulation point number `parent`.
    pub fn block(&mut self, b: usize, parent: Option<usize>) -> &mut BlockState<'g> {
        if !self.blocks.contains_key(&(b, parent)) {
            let state = self.build_block(b, parent);
            self.blocks.insert((b, parent), state);
        }
        self.blocks.get_mut(&(b, parent)).unwrap()
    }

    fn build_block(&mut self, b: usize, parent: Option<usize>) -> BlockState<'g> {
        let tree = self.tree;
        let block = tree.block(b);
        let parent_vertex = parent.map(|a| tree.articulation_points()[a]);
        let mut labels = Vec::with_capacity(block.vertices.len());
        let mut sizes = Vec::with_capacity(block.vertices.len());
        let mut context = RootContext {
            parent: None,
            children: Vec::new(),
        };
        for (local, &v) in block.vertices.iter().enumerate() {
            let color = self.colors[v];
            if Some(v) == parent_vertex {
                context.parent = Some(local);
                labels.push(Label::Parent);
                sizes.push(0);
            } else if let Some(a) = tree.articulation_index(v) {
                let sig = self.art(a, Some(b)).sig;
                context.children.push((local, sig.size));
                sizes.push(sig.size);
                labels.push(Label::Child(color, sig));
            } else {
                labels.push(Label::Plain(color));
                sizes.push(0);
            }
        }
        let label_total: Size = sizes.iter().sum();
        match &block.shape {
            BlockShape::Bridge => {
                let options = [(0usize, 1usize), (1, 0)].map(|(s, t)| {
                    let sig = RootSig::Component {
                        kind: ComponentKind::Edge,
                        first: labels[s].clone(),
                        code: vec![SigEntry {
                            tail: 1,
                            head: 2,
                            label: Some(labels[t].clone()),
                            edge: SigEdge::Real,
                        }],
                    };
                    (
                        sig,
                        RootChoice::Dart {
                            dart: (s, t),
                            flip: false,
                        },
                    )
                });
                let (sig, root) = options.into_iter().min_by(|x, y| x.0.cmp(&y.0)).unwrap();
                let tried = vec![
                    (
                        RootCandidate::Dart {
                            dart: (0, 1),
                            flip: false,
                        },
                        AnchorKey::ANY,
                    ),
                    (
                        RootCandidate::Dart {
                            dart: (1, 0),
                            flip: false,
                        },
                        AnchorKey::ANY,
                    ),
                ];
                BlockState {
                    eval: None,
                    labels,
                    context,
                    case: RootCase::Unrestricted,
                    tried,
                    root,
                    sig: Arc::new(BiconSig {
                        size: 2 + label_total,
                        root: sig,
                    }),
                }
            }
            BlockShape::Tricon(t) => {
                let mut eval = BlockEval::new(t, labels.clone(), sizes);
                let case = classify(t, &context);
                let candidates = match self.strategy {
                    RootStrategy::Limited => limit_roots(t, &context).candidates,
                    RootStrategy::Exhaustive => all_roots(t),
                };
                let mut best: Option<(AnchorKey, RootSig, RootChoice)> = None;
                let mut tried = Vec::with_capacity(candidates.len());
                for cand in candidates {
                    let anchor = anchor_key(t, &context, case, cand);
                    tried.push((cand, anchor.clone()));
                    if best.as_ref().is_some_and(|(k, _, _)| anchor > *k) {
                        continue;
                    }
                    let (sig, choice) = eval.root_sig(cand);
                    let better = match &best {
                        None => true,
                        Some((k, s, _)) => (&anchor, &sig).cmp(&(k, s)) == Ordering::Less,
                    };
                    if better {
                        best = Some((anchor, sig, choice));
                    }
                }
                let (_, sig, root) = best.expect("a tree has at least one root");
                BlockState {
                    eval: Some(eval),
                    labels,
                    context,
                    case,
                    tried,
                    root,
                    sig: Arc::new(BiconSig {
                        size: t.size() + label_total,
                        root: sig,
                    }),
                }
            }
        }
    }
}

/// Compares two connected graphs rooted at articulation points (given by
/// vertex). `Equal` means an isomorphism sends one root onto the other.
pub fn compare_bicon(
    s: (&BiconTree, &[u32], Vertex),
    t: (&BiconTree, &[u32], Vertex),
    strategy: RootStrategy,
) -> Ordering {
    let key = |(tree, colors, v): (&BiconTree, &[u32], Vertex)| {
        let a = tree
            .articulation_index(v)
            .expect("root must be an articulation point");
        let mut ev = BiconEval::new(tree, colors.to_vec(), strategy);
        (colors[v], ev.art(a, None).sig)
    };
    key(s).cmp(&key(t))
}
