//! Graphs, rotation schemes, faces and small tree utilities.
//!
//! Vertices are dense indices `0..n`. A dart is an ordered pair `(tail, head)`
//! standing for one direction of an undirected edge.

mod planarity;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use planarity::planar_embed;

pub type Vertex = usize;
pub type Dart = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("expected {expected} colors, got {got}")]
    ColorCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("invalid rotation scheme: {0}")]
    InvalidRotation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("tree has no nodes")]
    Empty,
    #[error("tree has two central nodes")]
    MultipleCenter,
    #[error("adjacency does not describe a tree")]
    NotATree,
}

/// Simple undirected graph with optional vertex colors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    colors: Option<Vec<u32>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            colors: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::OutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        if let Some(c) = self.colors.as_mut() {
            c.push(0);
        }
        self.adj.len() - 1
    }

    pub fn set_colors(&mut self, colors: Vec<u32>) -> Result<(), GraphError> {
        if colors.len() != self.adj.len() {
            return Err(GraphError::ColorCount {
                expected: self.adj.len(),
                got: colors.len(),
            });
        }
        self.colors = if colors.iter().all(|&c| c == 0) {
            None
        } else {
            Some(colors)
        };
        Ok(())
    }

    pub fn with_colors(mut self, colors: Vec<u32>) -> Result<Self, GraphError> {
        self.set_colors(colors)?;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Color of `v`; uncolored graphs report 0 everywhere.
    pub fn color(&self, v: Vertex) -> u32 {
        self.colors.as_ref().map_or(0, |c| c[v])
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[Vertex]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length");
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation stays in range");
        }
        if let Some(c) = &self.colors {
            let mut nc = vec![0; n];
            for v in 0..n {
                nc[perm[v]] = c[v];
            }
            g.colors = Some(nc);
        }
        g
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = index.get(w) {
                    if i < j {
                        g.add_edge(i, j).expect("indices in range");
                    }
                }
            }
        }
        if self.colors.is_some() {
            let c = vertices.iter().map(|&v| self.color(v)).collect();
            g.set_colors(c).expect("color count matches");
        }
        g
    }

    /// Component index of every vertex after deleting `removed`; deleted
    /// vertices get `None`. Also returns the number of components.
    pub fn component_labels(&self, removed: &[Vertex]) -> (Vec<Option<usize>>, usize) {
        let n = self.vertex_count();
        let mut label = vec![None; n];
        let mut gone = vec![false; n];
        for &r in removed {
            gone[r] = true;
        }
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if gone[s] || label[s].is_some() {
                continue;
            }
            label[s] = Some(count);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !gone[w] && label[w].is_none() {
                        label[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let (label, count) = self.component_labels(&[]);
        let mut out = vec![Vec::new(); count];
        for (v, l) in label.into_iter().enumerate() {
            out[l.expect("no vertex removed")].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels(&[]).1 <= 1
    }

    /// Maximum number of internally vertex-disjoint `s`–`t` paths, capped at
    /// `limit`. A direct edge counts as one path.
    pub fn vertex_disjoint_paths(&self, s: Vertex, t: Vertex, limit: usize) -> usize {
        // Vertex v splits into v_in = 2v and v_out = 2v+1.
        let n = self.vertex_count();
        let mut cap: HashMap<(usize, usize), i32> = HashMap::new();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
        let mut arc = |a: usize, b: usize, c: i32, cap: &mut HashMap<(usize, usize), i32>| {
            if !cap.contains_key(&(a, b)) {
                out[a].push(b);
                out[b].push(a);
                cap.entry((b, a)).or_insert(0);
            }
            *cap.entry((a, b)).or_insert(0) += c;
        };
        for v in 0..n {
            let c = if v == s || v == t { limit as i32 } else { 1 };
            arc(2 * v, 2 * v + 1, c, &mut cap);
        }
        for (u, v) in self.edges() {
            arc(2 * u + 1, 2 * v, 1, &mut cap);
            arc(2 * v + 1, 2 * u, 1, &mut cap);
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit {
            let mut prev = vec![usize::MAX; 2 * n];
            prev[src] = src;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for &y in &out[x] {
                    if prev[y] == usize::MAX && cap[&(x, y)] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[dst] == usize::MAX {
                break;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                *cap.get_mut(&(x, y)).unwrap() -= 1;
                *cap.get_mut(&(y, x)).unwrap() += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Biconnected blocks (as edge lists) and the articulation flags.
    pub fn blocks(&self) -> BlockSplit {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_art = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, parent, i) = stack[top];
                if i < self.adj[v].len() {
                    let w = self.adj[v][i];
                    stack[top].2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent == usize::MAX {
                        continue;
                    }
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        if parent != root {
                            is_art[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
            if root_children > 1 {
                is_art[root] = true;
            }
        }
        BlockSplit {
            blocks,
            articulation: is_art,
        }
    }
}

/// Output of [`Graph::blocks`].
#[derive(Debug, Clone)]
pub struct BlockSplit {
    pub blocks: Vec<Vec<(Vertex, Vertex)>>,
    pub articulation: Vec<bool>,
}

/// Cyclic order of neighbors around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationScheme {
    order: Vec<Vec<Vertex>>,
    position: Vec<HashMap<Vertex, usize>>,
}

impl RotationScheme {
    pub fn from_orders(order: Vec<Vec<Vertex>>) -> Self {
        let position = order
            .iter()
            .map(|o| o.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        RotationScheme { order, position }
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.order[v]
    }

    /// Head of the dart following `v -> w` in the rotation at `v`.
    pub fn next(&self, v: Vertex, w: Vertex) -> Vertex {
        let o = &self.order[v];
        o[(self.position[v][&w] + 1) % o.len()]
    }

    /// Head of the dart preceding `v -> w` in the rotation at `v`.
    pub fn prev(&self, v: Vertex, w: Vertex) -> Vertex {
        let o = &self.order[v];
        o[(self.position[v][&w] + o.len() - 1) % o.len()]
    }

    pub fn inverse(&self) -> RotationScheme {
        RotationScheme::from_orders(
            self.order
                .iter()
                .map(|o| o.iter().rev().copied().collect())
                .collect(),
        )
    }

    /// Next dart on the face to the left of `(u, v)`.
    pub fn face_successor(&self, (u, v): Dart) -> Dart {
        (v, self.next(v, u))
    }
}

/// A face given by its boundary darts in tracing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Boundary vertices in tracing order (with repetitions if the face is not a cycle).
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.boundary.iter().map(|d| d.0)
    }
}

/// A graph together with a planar rotation scheme.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: RotationScheme,
}

impl PlaneGraph {
    /// Checks that `rotation` permutes each neighborhood and passes Euler's formula.
    pub fn new(graph: Graph, rotation: RotationScheme) -> Result<Self, EmbedError> {
        if rotation.vertex_count() != graph.vertex_count() {
            return Err(EmbedError::InvalidRotation("vertex count mismatch".into()));
        }
        for v in 0..graph.vertex_count() {
            let mut o = rotation.rotation(v).to_vec();
            o.sort_unstable();
            if o != graph.neighbors(v) {
                return Err(EmbedError::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        let pg = PlaneGraph { graph, rotation };
        if !pg.euler_holds() {
            return Err(EmbedError::NonPlanar);
        }
        Ok(pg)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationScheme {
        &self.rotation
    }

    /// The mirror embedding.
    pub fn mirrored(&self) -> PlaneGraph {
        PlaneGraph {
            graph: self.graph.clone(),
            rotation: self.rotation.inverse(),
        }
    }

    /// All faces; each dart lies on exactly one of them.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashMap<Dart, ()> = HashMap::new();
        let mut out = Vec::new();
        for (u, v) in self.graph.edges() {
            for start in [(u, v), (v, u)] {
                if seen.contains_key(&start) {
                    continue;
                }
                let mut boundary = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d, ());
                    boundary.push(d);
                    d = self.rotation.face_successor(d);
                    if d == start {
                        break;
                    }
                }
                out.push(Face { boundary });
            }
        }
        out
    }

    /// `n - m + f == 2` on every connected component.
    pub fn euler_holds(&self) -> bool {
        let (label, count) = self.graph.component_labels(&[]);
        let mut n = vec![0i64; count];
        let mut m = vec![0i64; count];
        let mut f = vec![0i64; count];
        for l in label.iter() {
            n[l.unwrap()] += 1;
        }
        for (u, _) in self.graph.edges() {
            m[label[u].unwrap()] += 1;
        }
        for face in self.faces() {
            f[label[face.boundary[0].0].unwrap()] += 1;
        }
        (0..count).all(|c| {
            let faces = if m[c] == 0 { 1 } else { f[c] };
            n[c] - m[c] + faces == 2
        })
    }
}

/// Unique node of minimum eccentricity of a tree given by adjacency lists.
pub fn tree_center(adj: &[Vec<usize>]) -> Result<usize, CenterError> {
    let n = adj.len();
    if n == 0 {
        return Err(CenterError::Empty);
    }
    let edge_ends: usize = adj.iter().map(Vec::len).sum();
    if edge_ends != 2 * (n - 1) {
        return Err(CenterError::NotATree);
    }
    let bfs = |s: usize| -> Vec<usize> {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        dist
    };
    let d0 = bfs(0);
    if d0.contains(&usize::MAX) {
        return Err(CenterError::NotATree);
    }
    let far = |d: &[usize]| {
        (0..n)
            .max_by_key(|&i| (d[i], std::cmp::Reverse(i)))
            .unwrap()
    };
    let u = far(&d0);
    let du = bfs(u);
    let v = far(&du);
    let diameter = du[v];
    if diameter % 2 == 1 {
        return Err(CenterError::MultipleCenter);
    }
    let dv = bfs(v);
    Ok((0..n)
        .find(|&x| du[x] == diameter / 2 && dv[x] == diameter / 2)
        .unwrap())
}

/// Eccentricities of all nodes of a tree.
pub fn eccentricities(adj: &[Vec<usize>]) -> Vec<usize> {
    (0..adj.len())
        .map(|s| distances(adj, &[s]).into_iter().max().unwrap_or(0))
        .collect()
}

/// Distances from the nearest of `sources` in an unweighted graph given by adjacency lists.
pub fn distances(adj: &[Vec<usize>], sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut q = VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        q.push_back(s);
    }
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    dist
}
