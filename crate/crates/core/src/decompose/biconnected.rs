use super::{BiconTree, Block, BlockShape, DecomposeError};
use crate::graph_model::{planar_embed, Graph, Vertex};

use super::triconnected::triconnected_decompose;

/// Splits a connected planar graph into blocks and decomposes each block
/// with three or more vertices further.
pub fn biconnected_decompose(g: &Graph) -> Result<BiconTree, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let split = g.blocks();
    let mut vertex_sets: Vec<Vec<Vertex>> = split
        .blocks
        .iter()
        .map(|edges| {
            let mut vs: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    vertex_sets.sort();

    let mut blocks = Vec::with_capacity(vertex_sets.len());
    for vertices in vertex_sets {
        let graph = g.induced(&vertices);
        let shape = if vertices.len() == 2 {
            BlockShape::Bridge
        } else {
            BlockShape::Tricon(triconnected_decompose(&planar_embed(&graph)?)?)
        };
        blocks.push(Block {
            vertices,
            graph,
            shape,
        });
    }

    let articulation_points: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| split.articulation[v])
        .collect();
    let mut art_blocks = vec![Vec::new(); articulation_points.len()];
    let mut block_arts = vec![Vec::new(); blocks.len()];
    for (b, block) in blocks.iter().enumerate() {
        for (a, &v) in articulation_points.iter().enumerate() {
            if block.local(v).is_some() {
                art_blocks[a].push(b);
                block_arts[b].push(a);
            }
        }
    }
    let tree = BiconTree {
        blocks,
        articulation_points,
        art_blocks,
        block_arts,
    };
    tree.check_shape().map_err(DecomposeError::Malformed)?;
    Ok(tree)
}
