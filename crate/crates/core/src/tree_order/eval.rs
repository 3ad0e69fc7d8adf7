use std::collections::HashMap;
use std::sync::Arc;

use super::{
    orientation_counters, CompSig, Label, Orientation, PairSig, RootCandidate, RootSig, SigEdge,
    SigEntry, Size,
};
use crate::component_canon::{code, start_choices, Code};
use crate::decompose::{ComponentKind, EdgeKind, TriconTree};
use crate::graph_model::{Dart, Vertex};

/// A component evaluated below a parent pair.
#[derive(Debug, Clone)]
pub struct CompEval {
    pub sig: Arc<CompSig>,
    pub orientation: Orientation,
    /// Flip reaching the minimum when starting forward / backward along the parent.
    best: [Option<bool>; 2],
}

impl CompEval {
    /// Flip giving the minimum code from start dart `forward ? (a, b) : (b, a)`.
    pub fn best_flip(&self, forward: bool) -> Option<bool> {
        self.best[usize::from(!forward)]
    }
}

/// A pair node evaluated below a parent component (or as the root).
#[derive(Debug, Clone)]
pub struct PairEval {
    pub sig: Arc<PairSig>,
    /// Reference orientation, if the children are not symmetric about the pair.
    pub reference: Option<Dart>,
    /// Children in output order with the orientation each gives.
    pub children: Vec<(usize, Orientation)>,
}

/// Which root a block signature came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootChoice {
    Pair { pair: usize, direction: Dart },
    Dart { dart: Dart, flip: bool },
}

/// Memoized evaluation of one tricon tree under a fixed vertex labeling.
pub struct BlockEval<'t> {
    tree: &'t TriconTree,
    labels: Vec<Label>,
    label_sizes: Vec<Size>,
    comps: HashMap<(usize, usize), Arc<CompEval>>,
    pairs: HashMap<(usize, Option<usize>), Arc<PairEval>>,
}

impl<'t> BlockEval<'t> {
    /// `labels[v]` and `label_sizes[v]` describe vertex `v` of the tree.
    pub fn new(tree: &'t TriconTree, labels: Vec<Label>, label_sizes: Vec<Size>) -> Self {
        BlockEval {
            tree,
            labels,
            label_sizes,
            comps: HashMap::new(),
            pairs: HashMap::new(),
        }
    }

    pub fn tree(&self) -> &'t TriconTree {
        self.tree
    }

    pub fn label(&self, v: Vertex) -> &Label {
        &self.labels[v]
    }

    /// Sum of all label sizes, i.e. the sizes of the subtrees hanging at child
    /// articulation points.
    pub fn label_size_total(&self) -> Size {
        self.label_sizes.iter().sum()
    }

    /// Converts a code into signature entries. With a parent pair the first
    /// entry is the parent edge and its endpoints carry no labels.
    fn code_sig(&mut self, c: usize, code: &Code, parent: Option<usize>) -> (Vec<SigEntry>, Size) {
        let mut number = vec![0u32; self.tree.vertex_count()];
        let mut numbered = 0u32;
        let mut extra = 0;
        let mut out = Vec::with_capacity(code.entries.len());
        for (i, e) in code.entries.iter().enumerate() {
            if number[e.tail] == 0 {
                numbered += 1;
                number[e.tail] = numbered;
            }
            let tail = number[e.tail];
            let head_new = number[e.head] == 0;
            if head_new {
                numbered += 1;
                number[e.head] = numbered;
            }
            let head = number[e.head];
            let label = if head_new && !(i == 0 && parent.is_some()) {
                extra += self.label_sizes[e.head];
                Some(self.labels[e.head].clone())
            } else {
                None
            };
            let edge = if i == 0 && parent.is_some() {
                SigEdge::Parent
            } else {
                match e.kind {
                    EdgeKind::Real => SigEdge::Real,
                    EdgeKind::Virtual(q) => {
                        let pe = self.pair_eval(q, Some(c));
                        extra += pe.sig.size;
                        let against_reference = pe.reference.is_some_and(|r| r != (e.tail, e.head));
                        SigEdge::Virtual {
                            child: pe.sig.clone(),
                            against_reference,
                        }
                    }
                }
            };
            out.push(SigEntry {
                tail,
                head,
                label,
                edge,
            });
        }
        (out, extra)
    }

    /// Evaluates component `c` as a child of pair `parent`.
    pub fn comp_eval(&mut self, c: usize, parent: usize) -> Arc<CompEval> {
        if let Some(e) = self.comps.get(&(c, parent)) {
            return e.clone();
        }
        let comp = self.tree.component(c);
        let eval = if comp.kind == ComponentKind::ThreeBond {
            CompEval {
                sig: Arc::new(CompSig {
                    kind: ComponentKind::ThreeBond,
                    code: Vec::new(),
                    size: 2,
                }),
                orientation: Orientation::Symmetric,
                best: [Some(false), Some(false)],
            }
        } else {
            let (a, b) = self.tree.pair(parent).endpoints();
            let mut best: Option<(Vec<SigEntry>, Size)> = None;
            let mut flips: [Option<bool>; 2] = [None, None];
            for (dart, flip) in start_choices(comp.kind, (a, b)) {
                let code = code(comp, dart, flip).expect("parent pair is an edge of the component");
                let (entries, extra) = self.code_sig(c, &code, Some(parent));
                let dir = usize::from(dart != (a, b));
                let ord = best.as_ref().map(|(b, _)| entries.cmp(b));
                match ord {
                    None | Some(std::cmp::Ordering::Less) => {
                        flips = [None, None];
                        flips[dir] = Some(flip);
                        best = Some((entries, extra));
                    }
                    Some(std::cmp::Ordering::Equal) => {
                        flips[dir].get_or_insert(flip);
                    }
                    Some(std::cmp::Ordering::Greater) => {}
                }
            }
            let (entries, extra) = best.expect("at least one start choice");
            let orientation = match flips {
                [Some(_), Some(_)] => Orientation::Symmetric,
                [Some(_), None] => Orientation::Forward,
                _ => Orientation::Backward,
            };
            CompEval {
                sig: Arc::new(CompSig {
                    kind: comp.kind,
                    code: entries,
                    size: comp.size() as Size + extra,
                }),
                orientation,
                best: flips,
            }
        };
        let eval = Arc::new(eval);
        self.comps.insert((c, parent), eval.clone());
        eval
    }

    /// Evaluates pair `p` with all adjacent components except `parent` as children.
    pub fn pair_eval(&mut self, p: usize, parent: Option<usize>) -> Arc<PairEval> {
        if let Some(e) = self.pairs.get(&(p, parent)) {
            return e.clone();
        }
        let children: Vec<usize> = self
            .tree
            .components_at(p)
            .iter()
            .copied()
            .filter(|&c| Some(c) != parent)
            .collect();
        let mut evals: Vec<(usize, Arc<CompEval>)> = children
            .into_iter()
            .map(|c| (c, self.comp_eval(c, p)))
            .collect();
        evals.sort_by(|x, y| x.1.sig.cmp(&y.1.sig).then(x.0.cmp(&y.0)));
        let mut classes: Vec<Vec<Orientation>> = Vec::new();
        for (i, (_, e)) in evals.iter().enumerate() {
            if i == 0 || evals[i - 1].1.sig != e.sig {
                classes.push(Vec::new());
            }
            classes.last_mut().unwrap().push(e.orientation);
        }
        let (reference, counters) = orientation_counters(&classes);
        let rank = |o: Orientation| match (o, reference) {
            (Orientation::Symmetric, _) => 2,
            (o, Some(r)) if o == r => 0,
            (_, Some(_)) => 1,
            (Orientation::Forward, None) => 0,
            (Orientation::Backward, None) => 1,
        };
        let mut order = evals.clone();
        order.sort_by(|x, y| {
            x.1.sig
                .cmp(&y.1.sig)
                .then(rank(x.1.orientation).cmp(&rank(y.1.orientation)))
                .then(x.0.cmp(&y.0))
        });
        let sig = PairSig {
            size: evals.iter().map(|(_, e)| e.sig.size).sum(),
            child_count: evals.len(),
            children: evals.iter().map(|(_, e)| e.sig.clone()).collect(),
            counters,
        };
        let endpoints = self.tree.pair(p).endpoints();
        let eval = Arc::new(PairEval {
            sig: Arc::new(sig),
            reference: reference.and_then(|o| o.dart(endpoints)),
            children: order.into_iter().map(|(c, e)| (c, e.orientation)).collect(),
        });
        self.pairs.insert((p, parent), eval.clone());
        eval
    }

    /// Signature of the whole tree rooted at `root`, with the direction or
    /// start that realizes it.
    pub fn root_sig(&mut self, root: RootCandidate) -> (RootSig, RootChoice) {
        match root {
            RootCandidate::Pair(p) => {
                let pe = self.pair_eval(p, None);
                let (a, b) = self.tree.pair(p).endpoints();
                [(a, b), (b, a)]
                    .into_iter()
                    .map(|d| {
                        let sig = RootSig::Pair {
                            pair: pe.sig.clone(),
                            against_reference: pe.reference.is_some_and(|r| r != d),
                            first: self.labels[d.0].clone(),
                            second: self.labels[d.1].clone(),
                        };
                        (
                            sig,
                            RootChoice::Pair {
                                pair: p,
                                direction: d,
                            },
                        )
                    })
                    .min_by(|x, y| x.0.cmp(&y.0))
                    .unwrap()
            }
            RootCandidate::Dart { dart, flip } => {
                let comp = self.tree.component(0);
                let code = code(comp, dart, flip).expect("root dart is an edge of the component");
                let (entries, _) = self.code_sig(0, &code, None);
                let sig = RootSig::Component {
                    kind: comp.kind,
                    first: self.labels[dart.0].clone(),
                    code: entries,
                };
                (sig, RootChoice::Dart { dart, flip })
            }
        }
    }

    /// Minimum code of component `c` below `parent`, optionally forced to
    /// start in `direction`.
    pub fn best_code(&mut self, c: usize, parent: usize, direction: Option<Dart>) -> Code {
        let ce = self.comp_eval(c, parent);
        let (a, b) = self.tree.pair(parent).endpoints();
        let forward = match direction {
            Some(d) => d == (a, b),
            None => ce.best_flip(true).is_some(),
        };
        let flip = ce
            .best_flip(forward)
            .expect("direction reaches the minimum");
        let dart = if forward { (a, b) } else { (b, a) };
        code(self.tree.component(c), dart, flip).expect("parent pair is an edge of the component")
    }
}
