//! The combinatorial sphere recognizer on a few classic triangulations.

use hamsphere::complex::{check_closed_surface, known, vertex_link};

fn main() -> hamsphere::Result<()> {
    let cases = [
        ("tetrahedron", known::tetrahedron()),
        ("bipyramid", known::bipyramid(5, [3, 4], [0, 1, 2])),
        ("octahedron", known::octahedron()),
        ("icosahedron", known::icosahedron()),
        ("Csaszar torus", known::csaszar_torus()),
        ("projective plane", known::projective_plane()),
        ("pinched spheres", known::pinched_spheres()),
    ];
    for (name, c) in &cases {
        let r = check_closed_surface(c);
        let verdict = match &r.failure_reason {
            None => "sphere".to_string(),
            Some(why) => why.to_string(),
        };
        println!(
            "{name:<17} V={:<2} E={:<2} F={:<2} chi={:<2} {verdict}",
            r.vertices_used, r.edges, r.faces, r.euler_characteristic
        );
    }

    let link = vertex_link(&known::octahedron(), 0)?;
    println!(
        "\nlink of vertex 0 in the octahedron is a cycle: {}",
        link.is_cycle()
    );
    Ok(())
}
