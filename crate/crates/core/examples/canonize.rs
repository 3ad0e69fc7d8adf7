//! Canonical form of a graph read from an edge list.
//!
//! Run with `cargo run --example canonize [FILE]`; without a file a small
//! built-in graph is used.

use planar_canon::canonizer::canon_planar;
use planar_canon::cli_io::parse_edge_list;

const DEFAULT: &str = "\
# two triangles joined at vertex 2, plus a pendant edge
6 7
0 1
1 2
2 0
2 3
3 4
4 2
4 5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let g = parse_edge_list(&text)?;
    let canon = canon_planar(&g)?;
    print!("{canon}");
    Ok(())
}
