//! Planar graphs embedded in the sphere with a proper black/white face
//! coloring, and exact checks of the counting lemmas about them.

pub mod checks;
pub mod generate;
pub mod map;

pub use checks::{
    bw_deficit_check, check_map, mckay_check, mckay_check_map, planar_estimates_check, weighted_cayley_check,
    white_triangle_count,
};
pub use generate::{exhaustive_maps, generate_random_colored_map, PlaneTriangulation};
pub use map::{trace_faces, Color, EmbeddedColoredGraph, FaceData, Placement};
