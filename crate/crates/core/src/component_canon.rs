//! Codes of single triconnected components relative to a directed start edge.
//!
//! A cycle is walked around from the start dart. A 3-connected component is
//! explored breadth first: at each vertex the incident edges are scanned in
//! rotation order (or its inverse when `flip` is set) starting after the
//! dart through which the vertex was reached.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::decompose::{ComponentKind, EdgeKind, TriconComponent};
use crate::graph_model::{Dart, RotationScheme, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("edge {0:?} is not in the component")]
    EdgeNotInComponent(Dart),
    #[error("component is not 3-connected")]
    Not3Connected,
    #[error("component is not a cycle")]
    NotACycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeEntry {
    pub tail: Vertex,
    pub head: Vertex,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    pub entries: Vec<CodeEntry>,
    pub start: Dart,
    pub flip: bool,
}

impl Code {
    /// Vertices in order of first appearance.
    pub fn visit_order(&self) -> Vec<Vertex> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for e in &self.entries {
            for v in [e.tail, e.head] {
                if seen.insert(v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Entries as pairs of 1-based visit numbers.
    pub fn numbered(&self) -> Vec<(u32, u32)> {
        let index: HashMap<Vertex, u32> = self
            .visit_order()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i as u32 + 1))
            .collect();
        self.entries
            .iter()
            .map(|e| (index[&e.tail], index[&e.head]))
            .collect()
    }
}

fn edge_kind(c: &TriconComponent, (u, v): Dart) -> Result<EdgeKind, CodeError> {
    c.edge_kind(u, v)
        .ok_or(CodeError::EdgeNotInComponent((u, v)))
}

pub fn cycle_code(c: &TriconComponent, start: Dart) -> Result<Code, CodeError> {
    if c.kind != ComponentKind::Cycle {
        return Err(CodeError::NotACycle);
    }
    let mut entries = vec![CodeEntry {
        tail: start.0,
        head: start.1,
        kind: edge_kind(c, start)?,
    }];
    let (mut prev, mut cur) = start;
    while cur != start.0 {
        let ns = c.neighbors(cur);
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        entries.push(CodeEntry {
            tail: cur,
            head: next,
            kind: edge_kind(c, (cur, next))?,
        });
        prev = cur;
        cur = next;
    }
    Ok(Code {
        entries,
        start,
        flip: false,
    })
}

pub fn threeconn_code(
    c: &TriconComponent,
    rotation: &RotationScheme,
    start: Dart,
    flip: bool,
) -> Result<Code, CodeError> {
    if c.kind != ComponentKind::ThreeConnected {
        return Err(CodeError::Not3Connected);
    }
    edge_kind(c, start)?;
    let mut numbered: HashSet<Vertex> = HashSet::from([start.0]);
    let mut emitted: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut entries = Vec::with_capacity(c.edges.len());
    // (vertex, neighbor the scan starts from)
    let mut queue = VecDeque::from([(start.0, start.1)]);
    while let Some((v, reference)) = queue.pop_front() {
        let mut w = reference;
        for _ in 0..rotation.rotation(v).len() {
            if emitted.insert((v.min(w), v.max(w))) {
                entries.push(CodeEntry {
                    tail: v,
                    head: w,
                    kind: edge_kind(c, (v, w))?,
                });
                if numbered.insert(w) {
                    queue.push_back((w, v));
                }
            }
            w = if flip {
                rotation.prev(v, w)
            } else {
                rotation.next(v, w)
            };
        }
    }
    Ok(Code {
        entries,
        start,
        flip,
    })
}

/// Code of a 3-bond: its single real edge.
pub fn bond_code(c: &TriconComponent, start: Dart) -> Result<Code, CodeError> {
    let (a, b) = (c.vertices[0], c.vertices[1]);
    if (start.0.min(start.1), start.0.max(start.1)) != (a, b) {
        return Err(CodeError::EdgeNotInComponent(start));
    }
    Ok(Code {
        entries: vec![CodeEntry {
            tail: start.0,
            head: start.1,
            kind: EdgeKind::Real,
        }],
        start,
        flip: false,
    })
}

/// Code for any component kind and start choice. `flip` is ignored for
/// cycles and 3-bonds.
pub fn code(c: &TriconComponent, start: Dart, flip: bool) -> Result<Code, CodeError> {
    match c.kind {
        ComponentKind::ThreeBond | ComponentKind::Edge => bond_code(c, start),
        ComponentKind::Cycle => cycle_code(c, start),
        ComponentKind::ThreeConnected => threeconn_code(
            c,
            c.rotation().ok_or(CodeError::Not3Connected)?,
            start,
            flip,
        ),
    }
}

/// Start choices (dart, flip) through the edge `{a, b}`: one for a 3-bond,
/// two for a cycle, four for a 3-connected component.
pub fn start_choices(kind: ComponentKind, (a, b): Dart) -> Vec<(Dart, bool)> {
    match kind {
        ComponentKind::ThreeBond | ComponentKind::Edge => vec![((a, b), false)],
        ComponentKind::Cycle => vec![((a, b), false), ((b, a), false)],
        ComponentKind::ThreeConnected => {
            vec![
                ((a, b), false),
                ((a, b), true),
                ((b, a), false),
                ((b, a), true),
            ]
        }
    }
}

/// All candidate codes with the parent edge `{a, b}` as start.
pub fn candidate_codes(c: &TriconComponent, parent: Dart) -> Result<Vec<Code>, CodeError> {
    start_choices(c.kind, parent)
        .into_iter()
        .map(|(d, f)| code(c, d, f))
        .collect()
}

/// Every (dart, flip) start of a component without a parent edge.
pub fn all_starts(c: &TriconComponent) -> Vec<(Dart, bool)> {
    let mut out = Vec::new();
    for e in &c.edges {
        if c.kind == ComponentKind::ThreeBond {
            return start_choices(c.kind, (e.u, e.v));
        }
        out.extend(start_choices(c.kind, (e.u, e.v)));
    }
    out
}
