//! Canonical lists and canons.
//!
//! A canonical list is a bracketed token stream following the tree order.
//! Relabeling vertices by first occurrence and dropping virtual edges and
//! brackets yields the canon. Connected graphs take the minimum over all
//! articulation points as roots; disconnected graphs sort the canons of
//! their components.

use std::fmt;

use thiserror::Error;

use crate::decompose::{
    biconnected_decompose, ComponentKind, DecomposeError, EdgeKind, TriconTree,
};
use crate::graph_model::{Dart, Graph, Vertex};
use crate::tree_order::{
    BiconEval, BlockEval, Label, Orientation, RootCandidate, RootChoice, RootStrategy,
};

/// Color given to a distinguished vertex; user colors must stay below it.
pub const RESERVED_COLOR: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("canonical list has unbalanced brackets")]
    UnbalancedList,
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<DecomposeError> for CanonError {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::NonPlanar => CanonError::NonPlanar,
            DecomposeError::NotBiconnected | DecomposeError::TooSmall => CanonError::NotBiconnected,
            other => CanonError::Internal(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Open,
    Close,
    Edge {
        tail: Vertex,
        head: Vertex,
        kind: EdgeKind,
    },
    /// Marks an articulation point at the head of its subtree.
    Art(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CanonicalList {
    pub tokens: Vec<Token>,
}

impl fmt::Display for CanonicalList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.tokens {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match t {
                Token::Open => f.write_str("[")?,
                Token::Close => f.write_str("]")?,
                Token::Edge {
                    tail,
                    head,
                    kind: EdgeKind::Real,
                } => write!(f, "({tail},{head})")?,
                Token::Edge {
                    tail,
                    head,
                    kind: EdgeKind::Virtual(_),
                } => write!(f, "({tail},{head})v")?,
                Token::Art(v) => write!(f, "({v})")?,
            }
        }
        Ok(())
    }
}

/// Canon of a graph: directed edges over labels `1..=n`, vertex colors by
/// label, and the edge positions where a new connected component starts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Canon {
    pub vertex_count: usize,
    pub edges: Vec<(u32, u32)>,
    /// `colors[i]` is the color of label `i + 1`.
    pub colors: Vec<u32>,
    /// Edge index at which each component after the first begins.
    pub separators: Vec<usize>,
}

impl Canon {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Concatenates component canons in the given order.
    pub fn join(parts: &[Canon]) -> Canon {
        let mut out = Canon::default();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                out.separators.push(out.edges.len());
            }
            let off = out.vertex_count as u32;
            out.edges
                .extend(p.edges.iter().map(|&(u, v)| (u + off, v + off)));
            out.colors.extend(&p.colors);
            out.vertex_count += p.vertex_count;
        }
        out
    }

    /// The graph described by the canon (label `i` becomes vertex `i - 1`).
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::from_edges(
            self.vertex_count,
            self.edges
                .iter()
                .map(|&(u, v)| (u as usize - 1, v as usize - 1)),
        )
        .expect("canon labels are in range");
        g.set_colors(self.colors.clone())
            .expect("one color per vertex");
        g
    }

    /// Text form: a header, one `u v` line per edge, `--` between
    /// components and `c v k` lines for nonzero colors.
    pub fn to_text(&self) -> String {
        use fmt::Write;
        let mut s = format!(
            "planar-canon v1 n={} m={}\n",
            self.vertex_count,
            self.edges.len()
        );
        let mut seps = self.separators.iter().peekable();
        for (i, (u, v)) in self.edges.iter().enumerate() {
            while seps.next_if(|&&at| at == i).is_some() {
                s.push_str("--\n");
            }
            writeln!(s, "{u} {v}").unwrap();
        }
        for _ in seps {
            s.push_str("--\n");
        }
        for (i, &c) in self.colors.iter().enumerate() {
            if c != 0 {
                writeln!(s, "c {} {c}", i + 1).unwrap();
            }
        }
        s
    }
}

impl fmt::Display for Canon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Relabels by first occurrence and drops brackets and virtual edges.
/// Also returns the original vertex of every label.
pub fn relabel(list: &CanonicalList) -> Result<(Canon, Vec<Vertex>), CanonError> {
    let mut label: std::collections::HashMap<Vertex, u32> = std::collections::HashMap::new();
    let mut order = Vec::new();
    let mut depth = 0usize;
    let mut edges = Vec::new();
    let mut name = |v: Vertex, order: &mut Vec<Vertex>| {
        *label.entry(v).or_insert_with(|| {
            order.push(v);
            order.len() as u32
        })
    };
    for t in &list.tokens {
        match *t {
            Token::Open => depth += 1,
            Token::Close => depth = depth.checked_sub(1).ok_or(CanonError::UnbalancedList)?,
            Token::Art(v) => {
                name(v, &mut order);
            }
            Token::Edge { tail, head, kind } => {
                let u = name(tail, &mut order);
                let v = name(head, &mut order);
                if kind == EdgeKind::Real {
                    edges.push((u, v));
                }
            }
        }
    }
    if depth != 0 {
        return Err(CanonError::UnbalancedList);
    }
    let canon = Canon {
        vertex_count: order.len(),
        edges,
        colors: vec![0; order.len()],
        separators: Vec::new(),
    };
    Ok((canon, order))
}

pub fn relabel_and_strip(list: &CanonicalList) -> Result<Canon, CanonError> {
    relabel(list).map(|(c, _)| c)
}

fn edge(map: &[Vertex], (u, v): Dart, kind: EdgeKind) -> Token {
    Token::Edge {
        tail: map[u],
        head: map[v],
        kind,
    }
}

/// Emits the subtree of pair `p` (below `parent`), traversed as `dir`.
fn emit_pair(
    ev: &mut BlockEval<'_>,
    map: &[Vertex],
    p: usize,
    parent: Option<usize>,
    dir: Dart,
    out: &mut Vec<Token>,
) {
    let pe = ev.pair_eval(p, parent);
    let endpoints = ev.tree().pair(p).endpoints();
    let mut children = pe.children.clone();
    if pe.reference.is_none() && dir != endpoints {
        // Without a reference orientation, children giving the traversal
        // direction come first within their class.
        let mut keyed = Vec::with_capacity(children.len());
        let mut class = 0;
        for (i, &(c, o)) in children.iter().enumerate() {
            let sig = ev.comp_eval(c, p).sig.clone();
            if i > 0 && ev.comp_eval(children[i - 1].0, p).sig != sig {
                class += 1;
            }
            let rank = match o {
                Orientation::Backward => 0,
                Orientation::Forward => 1,
                Orientation::Symmetric => 2,
            };
            keyed.push(((class, rank), (c, o)));
        }
        keyed.sort_by_key(|(k, _)| *k);
        children = keyed.into_iter().map(|(_, x)| x).collect();
    }
    out.push(Token::Open);
    out.push(edge(map, dir, EdgeKind::Virtual(p)));
    for &(c, o) in &children {
        emit_component(ev, map, c, p, o.dart(endpoints).unwrap_or(dir), out);
    }
    out.push(Token::Close);
}

fn emit_component(
    ev: &mut BlockEval<'_>,
    map: &[Vertex],
    c: usize,
    p: usize,
    dir: Dart,
    out: &mut Vec<Token>,
) {
    out.push(Token::Open);
    if ev.tree().component(c).kind == ComponentKind::ThreeBond {
        out.push(edge(map, dir, EdgeKind::Real));
        out.push(Token::Close);
        return;
    }
    let code = ev.best_code(c, p, Some(dir));
    let mut children = Vec::new();
    for (i, e) in code.entries.iter().enumerate() {
        match e.kind {
            EdgeKind::Real => out.push(edge(map, (e.tail, e.head), EdgeKind::Real)),
            EdgeKind::Virtual(q) if i == 0 => out.push(edge(map, dir, EdgeKind::Virtual(q))),
            EdgeKind::Virtual(q) => {
                let qe = ev.pair_eval(q, Some(c));
                let d = qe.reference.unwrap_or((e.tail, e.head));
                out.push(edge(map, d, EdgeKind::Virtual(q)));
                children.push((q, d));
            }
        }
    }
    for (q, d) in children {
        emit_pair(ev, map, q, Some(c), d, out);
    }
    out.push(Token::Close);
}

/// Tokens for a whole tricon tree from the chosen root.
fn emit_tricon(ev: &mut BlockEval<'_>, map: &[Vertex], root: RootChoice, out: &mut Vec<Token>) {
    match root {
        RootChoice::Pair { pair, direction } => emit_pair(ev, map, pair, None, direction, out),
        RootChoice::Dart { dart, flip } => {
            let comp = ev.tree().component(0);
            let code =
                crate::component_canon::code(comp, dart, flip).expect("root start is an edge");
            out.push(Token::Open);
            out.extend(
                code.entries
                    .iter()
                    .map(|e| edge(map, (e.tail, e.head), e.kind)),
            );
            out.push(Token::Close);
        }
    }
}

/// Canonical list of a tricon tree rooted at pair `root`.
pub fn canonical_list_tricon(
    tree: &TriconTree,
    root: usize,
    colors: Option<&[u32]>,
) -> CanonicalList {
    let labels = (0..tree.vertex_count())
        .map(|v| Label::Plain(colors.map_or(0, |c| c[v])))
        .collect();
    let mut ev = BlockEval::new(tree, labels, vec![0; tree.vertex_count()]);
    let (_, choice) = ev.root_sig(RootCandidate::Pair(root));
    let identity: Vec<Vertex> = (0..tree.vertex_count()).collect();
    let mut tokens = Vec::new();
    emit_tricon(&mut ev, &identity, choice, &mut tokens);
    CanonicalList { tokens }
}

fn emit_block(bev: &mut BiconEval<'_>, b: usize, parent: Option<usize>, out: &mut Vec<Token>) {
    let tree = bev.tree();
    let block = tree.block(b);
    let mut tokens = Vec::new();
    {
        let state = bev.block(b, parent);
        let root = state.root;
        match state.eval.as_mut() {
            Some(ev) => emit_tricon(ev, &block.vertices, root, &mut tokens),
            None => {
                let RootChoice::Dart { dart, .. } = root else {
                    unreachable!("bridges use dart roots")
                };
                tokens.extend([
                    Token::Open,
                    edge(&block.vertices, dart, EdgeKind::Real),
                    Token::Close,
                ]);
            }
        }
    }
    out.push(Token::Open);
    out.extend(&tokens);
    let parent_vertex = parent.map(|a| tree.articulation_points()[a]);
    let mut done = std::collections::HashSet::new();
    for t in &tokens {
        if let Token::Edge { tail, head, .. } = *t {
            for v in [tail, head] {
                if Some(v) == parent_vertex || !done.insert(v) {
                    continue;
                }
                if let Some(a) = tree.articulation_index(v) {
                    emit_art(bev, a, Some(b), out);
                }
            }
        }
    }
    out.push(Token::Close);
}

fn emit_art(bev: &mut BiconEval<'_>, a: usize, parent: Option<usize>, out: &mut Vec<Token>) {
    let state = bev.art(a, parent);
    out.push(Token::Open);
    out.push(Token::Art(bev.tree().articulation_points()[a]));
    for b in state.children {
        emit_block(bev, b, Some(a), out);
    }
    out.push(Token::Close);
}

/// Options for [`canon_planar_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonOptions {
    pub strategy: RootStrategy,
    /// Collect `key=value` trace lines.
    pub trace: bool,
}

/// A canon with its trace lines.
#[derive(Debug, Clone, Default)]
pub struct CanonReport {
    pub canon: Canon,
    /// `order[i]` is the input vertex that received label `i + 1`.
    pub order: Vec<Vertex>,
    pub trace: Vec<String>,
}

fn finish(list: &CanonicalList, colors: &[u32]) -> Result<(Canon, Vec<Vertex>), CanonError> {
    let (mut canon, order) = relabel(list)?;
    canon.colors = order.iter().map(|&v| colors[v]).collect();
    Ok((canon, order))
}

fn trace_blocks(bev: &mut BiconEval<'_>, keys: &[(usize, Option<usize>)], out: &mut Vec<String>) {
    let tree = bev.tree();
    for &(b, parent) in keys {
        let block = tree.block(b);
        let state = bev.block(b, parent);
        let parent_name = parent.map_or("none".to_string(), |a| {
            tree.articulation_points()[a].to_string()
        });
        out.push(format!(
            "block={b} parent={parent_name} case={:?} candidates={} size={}",
            state.case,
            state.tried.len(),
            state.sig.size
        ));
        let tried = state.tried.clone();
        let Some(ev) = state.eval.as_mut() else {
            continue;
        };
        for (cand, anchor) in tried {
            match cand {
                RootCandidate::Pair(p) => {
                    let (x, y) = ev.tree().pair(p).endpoints();
                    let root = format!("{}-{}", block.vertices[x], block.vertices[y]);
                    let pe = ev.pair_eval(p, None);
                    let reference = pe.reference.map_or("none".to_string(), |(s, t)| {
                        format!("{}-{}", block.vertices[s], block.vertices[t])
                    });
                    out.push(format!(
                        "block={b} root={root} eccentricity={} size={} children={} reference={reference}",
                        anchor.eccentricity, pe.sig.size, pe.sig.child_count
                    ));
                    for (j, c) in pe.sig.counters.iter().enumerate() {
                        out.push(format!(
                            "block={b} root={root} class={} counter=({},{})",
                            j + 1,
                            c.with_reference,
                            c.against_reference
                        ));
                    }
                }
                RootCandidate::Dart { dart, flip } => out.push(format!(
                    "block={b} root={}->{} flip={flip}",
                    block.vertices[dart.0], block.vertices[dart.1]
                )),
            }
        }
    }
}

fn canon_connected(
    g: &Graph,
    opts: &CanonOptions,
    trace: &mut Vec<String>,
) -> Result<(Canon, Vec<Vertex>), CanonError> {
    let colors: Vec<u32> = (0..g.vertex_count()).map(|v| g.color(v)).collect();
    if g.vertex_count() == 1 {
        return Ok((
            Canon {
                vertex_count: 1,
                edges: Vec::new(),
                colors,
                separators: Vec::new(),
            },
            vec![0],
        ));
    }
    let tree = biconnected_decompose(g)?;
    let mut bev = BiconEval::new(&tree, colors.clone(), opts.strategy);
    if tree.articulation_points().is_empty() {
        let mut tokens = Vec::new();
        emit_block(&mut bev, 0, None, &mut tokens);
        if opts.trace {
            trace_blocks(&mut bev, &[(0, None)], trace);
        }
        return finish(&CanonicalList { tokens }, &colors);
    }
    let mut best: Option<(Canon, Vec<Vertex>)> = None;
    for (a, &v) in tree.articulation_points().iter().enumerate() {
        let mut tokens = Vec::new();
        emit_art(&mut bev, a, None, &mut tokens);
        let (canon, order) = finish(&CanonicalList { tokens }, &colors)?;
        if opts.trace {
            trace.push(format!(
                "root=articulation vertex={v} edges={}",
                canon.edges.len()
            ));
        }
        if best.as_ref().is_none_or(|(b, _)| canon < *b) {
            best = Some((canon, order));
        }
    }
    if opts.trace {
        let keys: Vec<(usize, Option<usize>)> = (0..tree.blocks().len())
            .flat_map(|b| tree.articulations_in(b).iter().map(move |&a| (b, Some(a))))
            .collect();
        trace_blocks(&mut bev, &keys, trace);
    }
    Ok(best.expect("at least one articulation point"))
}

/// Canon of a planar graph, with optional trace output.
pub fn canon_planar_with(g: &Graph, opts: &CanonOptions) -> Result<CanonReport, CanonError> {
    let mut trace = Vec::new();
    let comps = g.components();
    if comps.len() <= 1 {
        if g.vertex_count() == 0 {
            return Ok(CanonReport::default());
        }
        let (canon, order) = canon_connected(g, opts, &mut trace)?;
        return Ok(CanonReport {
            canon,
            order,
            trace,
        });
    }
    let mut parts = Vec::with_capacity(comps.len());
    for (i, comp) in comps.iter().enumerate() {
        if opts.trace {
            trace.push(format!("component={i} vertices={}", comp.len()));
        }
        let (canon, local) = canon_connected(&g.induced(comp), opts, &mut trace)?;
        parts.push((
            canon,
            local.into_iter().map(|v| comp[v]).collect::<Vec<Vertex>>(),
        ));
    }
    parts.sort();
    let canons: Vec<Canon> = parts.iter().map(|(c, _)| c.clone()).collect();
    let order = parts.into_iter().flat_map(|(_, o)| o).collect();
    Ok(CanonReport {
        canon: Canon::join(&canons),
        order,
        trace,
    })
}

/// Canon of a planar graph: equal for two graphs exactly when they are isomorphic.
pub fn canon_planar(g: &Graph) -> Result<Canon, CanonError> {
    canon_planar_with(g, &CanonOptions::default()).map(|r| r.canon)
}

/// Canon of a biconnected planar graph; `parent`, if given, is colored
/// with the reserved color first.
pub fn canon_biconnected(g: &Graph, parent: Option<Vertex>) -> Result<Canon, CanonError> {
    if g.vertex_count() < 2 {
        return Err(CanonError::NotBiconnected);
    }
    let mut colored = g.clone();
    if let Some(v) = parent {
        let mut colors: Vec<u32> = (0..g.vertex_count()).map(|u| g.color(u)).collect();
        colors[v] = RESERVED_COLOR;
        colored.set_colors(colors).expect("same length");
    }
    let tree = biconnected_decompose(&colored).map_err(|e| match e {
        DecomposeError::Disconnected => CanonError::NotBiconnected,
        other => other.into(),
    })?;
    if !tree.articulation_points().is_empty() {
        return Err(CanonError::NotBiconnected);
    }
    canon_connected(&colored, &CanonOptions::default(), &mut Vec::new()).map(|(c, _)| c)
}
