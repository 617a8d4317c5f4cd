//! Weighted Cayley formula over all labeled trees, via Prüfer sequences.

use hamsphere::planar::checks::{prufer_decode, weighted_cayley_check};

fn main() -> hamsphere::Result<()> {
    println!(
        "tree for Prüfer sequence [3, 3, 0] on 5 vertices: {:?}",
        prufer_decode(&[3, 3, 0], 5)
    );
    for x in [
        vec![1, 1, 1],
        vec![1, 1, 1, 1],
        vec![2, 1, 1, 1],
        vec![3, 1, 4, 1, 5, 9, 2],
    ] {
        let r = weighted_cayley_check(&x)?;
        println!(
            "x={x:?}: tree sum {} = {} ({})",
            r.tree_sum, r.closed_form, r.outcome
        );
    }
    Ok(())
}
