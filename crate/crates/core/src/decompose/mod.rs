//! Biconnected and triconnected decomposition.
//!
//! A [`BiconTree`] alternates articulation points and blocks. Every block
//! with three or more vertices carries a [`TriconTree`], which alternates
//! 3-connected separating pairs and triconnected components.

mod biconnected;
mod triconnected;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::graph_model::{tree_center, CenterError, EmbedError, Graph, RotationScheme, Vertex};

pub use biconnected::biconnected_decompose;
pub use triconnected::{
    inseparable_triple, three_connected_separating_pairs, triconnected_decompose, SeparationTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph has fewer than three vertices")]
    TooSmall,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("malformed decomposition: {0}")]
    Malformed(String),
}

impl From<EmbedError> for DecomposeError {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::NonPlanar => DecomposeError::NonPlanar,
            EmbedError::InvalidRotation(s) => DecomposeError::Malformed(s),
        }
    }
}

/// A 3-connected separating pair with the faces it spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingPair {
    /// Endpoints, smaller first.
    pub a: Vertex,
    pub b: Vertex,
    pub spanned_faces: Vec<usize>,
}

impl SeparatingPair {
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v == self.a || v == self.b
    }
}

/// `Edge` only labels bridge blocks; the other kinds follow the type order
/// 3-bond < cycle < 3-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Edge,
    ThreeBond,
    Cycle,
    ThreeConnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Real,
    /// Virtual edge standing for the separating pair with this index.
    Virtual(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone)]
pub struct TriconComponent {
    pub kind: ComponentKind,
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<ComponentEdge>,
    /// Smallest inseparable triple generating the component (the pair for a 3-bond).
    pub key: Vec<Vertex>,
    adjacency: BTreeMap<Vertex, Vec<Vertex>>,
    kinds: HashMap<(Vertex, Vertex), EdgeKind>,
    rotation: Option<RotationScheme>,
}

impl TriconComponent {
    fn new(
        kind: ComponentKind,
        vertices: Vec<Vertex>,
        edges: Vec<ComponentEdge>,
        key: Vec<Vertex>,
        rotation: Option<RotationScheme>,
    ) -> Self {
        let mut adjacency: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        let mut kinds = HashMap::new();
        if kind != ComponentKind::ThreeBond {
            for e in &edges {
                adjacency.entry(e.u).or_default().push(e.v);
                adjacency.entry(e.v).or_default().push(e.u);
                kinds.insert((e.u.min(e.v), e.u.max(e.v)), e.kind);
            }
            for ns in adjacency.values_mut() {
                ns.sort_unstable();
            }
        }
        TriconComponent {
            kind,
            vertices,
            edges,
            key,
            adjacency,
            kinds,
            rotation,
        }
    }

    /// Number of vertices (2 for a 3-bond).
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Neighbors of `v` inside the component. Empty for 3-bonds.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adjacency.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Kind of the edge `{u, v}` (not meaningful for 3-bonds).
    pub fn edge_kind(&self, u: Vertex, v: Vertex) -> Option<EdgeKind> {
        self.kinds.get(&(u.min(v), u.max(v))).copied()
    }

    /// Planar rotation of a 3-connected component, including virtual edges.
    pub fn rotation(&self) -> Option<&RotationScheme> {
        self.rotation.as_ref()
    }

    /// Indices of separating pairs present as virtual edges.
    pub fn virtual_pairs(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Virtual(p) => Some(p),
                EdgeKind::Real => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn real_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Real)
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeNode {
    Pair(usize),
    Component(usize),
}

/// Triconnected component tree of a biconnected plane graph.
#[derive(Debug, Clone)]
pub struct TriconTree {
    vertex_count: usize,
    pairs: Vec<SeparatingPair>,
    components: Vec<TriconComponent>,
    pair_components: Vec<Vec<usize>>,
    component_pairs: Vec<Vec<usize>>,
}

impl TriconTree {
    /// Number of vertices of the decomposed graph.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn pairs(&self) -> &[SeparatingPair] {
        &self.pairs
    }

    pub fn components(&self) -> &[TriconComponent] {
        &self.components
    }

    pub fn pair(&self, p: usize) -> &SeparatingPair {
        &self.pairs[p]
    }

    pub fn component(&self, c: usize) -> &TriconComponent {
        &self.components[c]
    }

    pub fn pair_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.pairs.iter().position(|p| p.endpoints() == key)
    }

    /// Components adjacent to pair `p`.
    pub fn components_at(&self, p: usize) -> &[usize] {
        &self.pair_components[p]
    }

    /// Pairs adjacent to component `c`.
    pub fn pairs_at(&self, c: usize) -> &[usize] {
        &self.component_pairs[c]
    }

    pub fn node_count(&self) -> usize {
        self.pairs.len() + self.components.len()
    }

    /// Dense index of a node: pairs first, then components.
    pub fn node_index(&self, node: TreeNode) -> usize {
        match node {
            TreeNode::Pair(p) => p,
            TreeNode::Component(c) => self.pairs.len() + c,
        }
    }

    pub fn node_at(&self, index: usize) -> TreeNode {
        if index < self.pairs.len() {
            TreeNode::Pair(index)
        } else {
            TreeNode::Component(index - self.pairs.len())
        }
    }

    pub fn neighbors(&self, node: TreeNode) -> Vec<TreeNode> {
        match node {
            TreeNode::Pair(p) => self.pair_components[p]
                .iter()
                .map(|&c| TreeNode::Component(c))
                .collect(),
            TreeNode::Component(c) => self.component_pairs[c]
                .iter()
                .map(|&p| TreeNode::Pair(p))
                .collect(),
        }
    }

    /// Adjacency lists over dense node indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.node_count())
            .map(|i| {
                self.neighbors(self.node_at(i))
                    .into_iter()
                    .map(|n| self.node_index(n))
                    .collect()
            })
            .collect()
    }

    pub fn center(&self) -> Result<TreeNode, CenterError> {
        tree_center(&self.adjacency()).map(|i| self.node_at(i))
    }

    /// Sum of component sizes, a 3-bond counting 2.
    pub fn size(&self) -> u64 {
        self.components.iter().map(|c| c.size() as u64).sum()
    }

    /// Nodes whose vertex set contains `v`.
    pub fn nodes_containing(&self, v: Vertex) -> Vec<TreeNode> {
        let pairs = (0..self.pairs.len())
            .filter(|&p| self.pairs[p].contains(v))
            .map(TreeNode::Pair);
        let comps = (0..self.components.len())
            .filter(|&c| self.components[c].contains(v))
            .map(TreeNode::Component);
        pairs.chain(comps).collect()
    }

    /// Checks the tree shape: connected and acyclic, alternating node kinds,
    /// component leaves, and odd depth when rooted at any pair.
    pub fn check_shape(&self) -> Result<(), String> {
        let adj = self.adjacency();
        let n = adj.len();
        let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        if n == 0 || edges + 1 != n {
            return Err(format!("{n} nodes but {edges} edges"));
        }
        let dist = crate::graph_model::distances(&adj, &[0]);
        if dist.contains(&usize::MAX) {
            return Err("tree is disconnected".into());
        }
        for (i, ns) in adj.iter().enumerate() {
            let is_pair = i < self.pairs.len();
            if ns.iter().any(|&j| (j < self.pairs.len()) == is_pair) {
                return Err(format!("node {i} has a neighbor of its own kind"));
            }
            if is_pair && ns.len() < 2 {
                return Err(format!("pair node {i} is a leaf"));
            }
        }
        for p in 0..self.pairs.len() {
            let depth = crate::graph_model::distances(&adj, &[p])
                .into_iter()
                .max()
                .unwrap_or(0);
            if depth.is_multiple_of(2) {
                return Err(format!("rooted at pair {p} the depth is {depth}"));
            }
        }
        Ok(())
    }

    /// Edges of the decomposed graph recovered by merging components.
    pub fn real_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<(Vertex, Vertex)> = self
            .components
            .iter()
            .flat_map(|c| c.edges.iter().filter(|e| e.kind == EdgeKind::Real))
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone)]
pub enum BlockShape {
    /// A bridge: two vertices, one edge.
    Bridge,
    Tricon(TriconTree),
}

/// A biconnected block with its own local vertex numbering.
#[derive(Debug, Clone)]
pub struct Block {
    /// `vertices[i]` is the original id of local vertex `i`; sorted.
    pub vertices: Vec<Vertex>,
    /// The block over local ids, carrying the original colors.
    pub graph: Graph,
    pub shape: BlockShape,
}

impl Block {
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn tricon(&self) -> Option<&TriconTree> {
        match &self.shape {
            BlockShape::Tricon(t) => Some(t),
            BlockShape::Bridge => None,
        }
    }

    /// Size of the block's tricon tree (2 for a bridge).
    pub fn tree_size(&self) -> u64 {
        self.tricon().map_or(2, TriconTree::size)
    }
}

/// Block-cut tree of a connected graph.
#[derive(Debug, Clone)]
pub struct BiconTree {
    blocks: Vec<Block>,
    articulation_points: Vec<Vertex>,
    art_blocks: Vec<Vec<usize>>,
    block_arts: Vec<Vec<usize>>,
}

impl BiconTree {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &Block {
        &self.blocks[b]
    }

    /// Sorted articulation points (original ids).
    pub fn articulation_points(&self) -> &[Vertex] {
        &self.articulation_points
    }

    pub fn articulation_index(&self, v: Vertex) -> Option<usize> {
        self.articulation_points.binary_search(&v).ok()
    }

    /// Blocks containing articulation point number `a`.
    pub fn blocks_at(&self, a: usize) -> &[usize] {
        &self.art_blocks[a]
    }

    /// Articulation point numbers inside block `b`.
    pub fn articulations_in(&self, b: usize) -> &[usize] {
        &self.block_arts[b]
    }

    /// Adjacency over dense node indices: articulation points first, then blocks.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let k = self.articulation_points.len();
        let mut adj: Vec<Vec<usize>> = self
            .art_blocks
            .iter()
            .map(|bs| bs.iter().map(|b| k + b).collect())
            .collect();
        adj.extend(self.block_arts.iter().cloned());
        adj
    }

    /// Checks that the structure is a tree alternating the two node kinds.
    pub fn check_shape(&self) -> Result<(), String> {
        let adj = self.adjacency();
        let n = adj.len();
        if n == 0 {
            return Ok(());
        }
        let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        if edges + 1 != n {
            return Err(format!("{n} nodes but {edges} edges"));
        }
        if crate::graph_model::distances(&adj, &[0]).contains(&usize::MAX) {
            return Err("block tree is disconnected".into());
        }
        let k = self.articulation_points.len();
        for (i, ns) in adj.iter().enumerate() {
            if ns.iter().any(|&j| (j < k) == (i < k)) {
                return Err(format!("node {i} has a neighbor of its own kind"));
            }
        }
        Ok(())
    }
}
