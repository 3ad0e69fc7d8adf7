use std::collections::BTreeMap;

use super::{
    ComponentEdge, ComponentKind, DecomposeError, EdgeKind, SeparatingPair, TriconComponent,
    TriconTree,
};
use crate::graph_model::{planar_embed, Graph, PlaneGraph, RotationScheme, Vertex};

fn check_biconnected(g: &Graph) -> Result<(), DecomposeError> {
    if !g.is_connected() || g.blocks().articulation.iter().any(|&a| a) {
        return Err(DecomposeError::NotBiconnected);
    }
    Ok(())
}

/// Pairs `{u, v}` sharing a face whose removal disconnects the graph and
/// which are joined by three vertex-disjoint paths.
pub fn three_connected_separating_pairs(
    pg: &PlaneGraph,
) -> Result<Vec<SeparatingPair>, DecomposeError> {
    let g = pg.graph();
    check_biconnected(g)?;
    let mut candidates: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (fi, face) in pg.faces().iter().enumerate() {
        let mut vs: Vec<Vertex> = face.vertices().collect();
        vs.sort_unstable();
        vs.dedup();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                candidates.entry((a, b)).or_default().push(fi);
            }
        }
    }
    Ok(candidates
        .into_iter()
        .filter(|&((a, b), _)| {
            g.component_labels(&[a, b]).1 >= 2 && g.vertex_disjoint_paths(a, b, 3) >= 3
        })
        .map(|((a, b), spanned_faces)| SeparatingPair {
            a,
            b,
            spanned_faces,
        })
        .collect())
}

/// Component labels of the graph minus each separating pair.
#[derive(Debug, Clone)]
pub struct SeparationTable {
    labels: Vec<Vec<Option<usize>>>,
}

impl SeparationTable {
    pub fn new(g: &Graph, pairs: &[SeparatingPair]) -> Self {
        SeparationTable {
            labels: pairs
                .iter()
                .map(|p| g.component_labels(&[p.a, p.b]).0)
                .collect(),
        }
    }

    /// No pair puts two vertices of `set` into different components.
    pub fn inseparable(&self, set: &[Vertex]) -> bool {
        self.labels.iter().all(|lab| {
            let mut seen = None;
            set.iter()
                .filter_map(|&v| lab[v])
                .all(|l| *seen.get_or_insert(l) == l)
        })
    }
}

/// Whether `triple` is inseparable with respect to `pairs`.
pub fn inseparable_triple(pg: &PlaneGraph, pairs: &[SeparatingPair], triple: [Vertex; 3]) -> bool {
    SeparationTable::new(pg.graph(), pairs).inseparable(&triple)
}

/// Splits a biconnected plane graph into 3-bonds, cycles and 3-connected
/// components, and links them through their separating pairs.
pub fn triconnected_decompose(pg: &PlaneGraph) -> Result<TriconTree, DecomposeError> {
    let g = pg.graph();
    let n = g.vertex_count();
    if n < 3 {
        return Err(DecomposeError::TooSmall);
    }
    check_biconnected(g)?;
    let pairs = three_connected_separating_pairs(pg)?;
    let table = SeparationTable::new(g, &pairs);

    let mut sets: Vec<(Vec<Vertex>, Vec<Vertex>)> = Vec::new();
    let mut member: Vec<Vec<bool>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if member.iter().any(|m| m[i] && m[j] && m[k]) || !table.inseparable(&[i, j, k]) {
                    continue;
                }
                let set: Vec<Vertex> = (0..n)
                    .filter(|&x| table.inseparable(&[i, j, k, x]))
                    .collect();
                let mut m = vec![false; n];
                for &x in &set {
                    m[x] = true;
                }
                member.push(m);
                sets.push((set, vec![i, j, k]));
            }
        }
    }

    let is_pair = |u: Vertex, v: Vertex| {
        pairs
            .iter()
            .position(|p| p.endpoints() == (u.min(v), u.max(v)))
    };
    let mut components = Vec::new();
    for (set, key) in sets {
        let inside = |v: Vertex| set.binary_search(&v).is_ok();
        let mut edges: Vec<ComponentEdge> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| inside(u) && inside(v) && is_pair(u, v).is_none())
            .map(|(u, v)| ComponentEdge {
                u,
                v,
                kind: EdgeKind::Real,
            })
            .collect();
        for (p, sp) in pairs.iter().enumerate() {
            if inside(sp.a) && inside(sp.b) {
                edges.push(ComponentEdge {
                    u: sp.a,
                    v: sp.b,
                    kind: EdgeKind::Virtual(p),
                });
            }
        }
        edges.sort_by_key(|e| (e.u, e.v));
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let kind = if edges.len() == set.len() && set.iter().all(|&v| degree[v] == 2) {
            ComponentKind::Cycle
        } else {
            ComponentKind::ThreeConnected
        };
        let rotation = match kind {
            ComponentKind::ThreeConnected => Some(component_rotation(n, &set, &edges)?),
            _ => None,
        };
        components.push(TriconComponent::new(kind, set, edges, key, rotation));
    }
    let bond_start = components.len();
    for (p, sp) in pairs.iter().enumerate() {
        if g.has_edge(sp.a, sp.b) {
            let edges = vec![
                ComponentEdge {
                    u: sp.a,
                    v: sp.b,
                    kind: EdgeKind::Real,
                },
                ComponentEdge {
                    u: sp.a,
                    v: sp.b,
                    kind: EdgeKind::Virtual(p),
                },
                ComponentEdge {
                    u: sp.a,
                    v: sp.b,
                    kind: EdgeKind::Virtual(p),
                },
            ];
            components.push(TriconComponent::new(
                ComponentKind::ThreeBond,
                vec![sp.a, sp.b],
                edges,
                vec![sp.a, sp.b],
                None,
            ));
        }
    }

    let mut pair_components = vec![Vec::new(); pairs.len()];
    let mut component_pairs = vec![Vec::new(); components.len()];
    for (c, comp) in components.iter().enumerate() {
        let adjacent: Vec<usize> = if c >= bond_start {
            vec![is_pair(comp.vertices[0], comp.vertices[1]).unwrap()]
        } else {
            (0..pairs.len())
                .filter(|&p| comp.contains(pairs[p].a) && comp.contains(pairs[p].b))
                .collect()
        };
        for &p in &adjacent {
            pair_components[p].push(c);
        }
        component_pairs[c] = adjacent;
    }
    let tree = TriconTree {
        vertex_count: n,
        pairs,
        components,
        pair_components,
        component_pairs,
    };
    tree.check_shape().map_err(DecomposeError::Malformed)?;
    Ok(tree)
}

/// Embeds a 3-connected component (virtual edges included) and lifts the
/// rotation back to the ids of the decomposed graph.
fn component_rotation(
    n: usize,
    set: &[Vertex],
    edges: &[ComponentEdge],
) -> Result<RotationScheme, DecomposeError> {
    let local = |v: Vertex| set.binary_search(&v).unwrap();
    let h = Graph::from_edges(set.len(), edges.iter().map(|e| (local(e.u), local(e.v))))
        .map_err(|e| DecomposeError::Malformed(e.to_string()))?;
    if h.edge_count() != edges.len() {
        return Err(DecomposeError::Malformed(
            "parallel edges inside a component".into(),
        ));
    }
    let pg = planar_embed(&h)?;
    let mut order = vec![Vec::new(); n];
    for (i, &v) in set.iter().enumerate() {
        order[v] = pg.rotation().rotation(i).iter().map(|&w| set[w]).collect();
    }
    Ok(RotationScheme::from_orders(order))
}
