//! Two-colored plane maps: parse one from text, run every check, then
//! summarise the exhaustive family on seven vertices.

use std::collections::BTreeMap;

use hamsphere::planar::{check_map, exhaustive_maps, generate_random_colored_map, white_triangle_count};
use hamsphere::planar::{Color, EmbeddedColoredGraph};

const NESTED: &str = "\
# a triangle inside the inner face of another
0: 1 2
1: 2 0
2: 0 1
3: 4 5
4: 5 3
5: 3 4
comp 1 in comp 0 face 0 outer 1
color face 0 white
color face 1 black
color face 2 black
";

fn main() -> hamsphere::Result<()> {
    let g: EmbeddedColoredGraph = NESTED.parse()?;
    println!(
        "parsed: m={} edges={} faces={} components={}",
        g.vertex_count(),
        g.edge_count(),
        g.face_count(),
        g.component_count()
    );
    for (f, data) in g.faces().iter().enumerate() {
        println!(
            "  face {f}: {} l_f={} boundary={:?}",
            data.color, data.components, data.boundary
        );
    }
    let alloc: Vec<u64> = g
        .faces()
        .iter()
        .map(|f| u64::from(f.color == Color::White))
        .collect();
    let t = white_triangle_count(&g, &alloc)?;
    println!(
        "  white triangles {} with |C_B| = {}: {}",
        t.triangles, t.surrounded_by_white, t.outcome
    );

    let g = generate_random_colored_map(24, 5)?;
    let checks = check_map(&g, &[1; 24], &vec![0; g.face_count()])?;
    println!(
        "\nrandom map on 24 vertices: {:?} -> {}",
        checks,
        checks.outcome()
    );

    let maps = exhaustive_maps(7)?;
    let mut by_shape: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for g in &maps {
        *by_shape.entry((g.component_count(), g.face_count())).or_default() += 1;
    }
    println!("\n{} maps on 7 vertices, by (components, faces):", maps.len());
    for ((r, f), count) in by_shape {
        println!("  ({r}, {f}): {count}");
    }
    Ok(())
}
