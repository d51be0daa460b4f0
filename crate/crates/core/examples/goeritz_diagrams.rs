//! Goeritz matrices of the builtin checkerboard graphs, and the two-bridge family.

use dehn_obstruct::goeritz::{builtin_diagrams, det_h1_order, family_2odd_2odd, fig3_black, goeritz_matrix};

fn main() -> Result<(), dehn_obstruct::Error> {
    for (name, graph) in builtin_diagrams() {
        let g = goeritz_matrix(&graph, 0)?;
        println!("{name}: {} vertices, {} edges, |det| = {}", graph.vertex_count(), graph.edges().len(), det_h1_order(&g));
        print!("{graph}");
    }

    println!();
    for (a0, a1, b0, b1) in [(1, 2, 1, 2), (2, 3, 1, 4), (1, 5, 3, 2)] {
        let g = goeritz_matrix(&fig3_black(a0, a1, b0, b1)?, 0)?;
        let (p, q, r, s) = (a0 * a1 + 1, a1, b0 * b1 + 1, b1);
        println!("Y(T({p},{q}), T({r},{s})): rank {}, |det| = {} = {}", g.rank(), det_h1_order(&g), p * q * r * s - 1);
    }
    let g = family_2odd_2odd(2, 3)?;
    println!("\nfamily (2,3):\n{g}");
    Ok(())
}
