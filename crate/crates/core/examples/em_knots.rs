//! Toroidal surgeries on Eudave-Muñoz knots: slopes, SU(2)-cyclicity, splice forms, and the
//! representation witnesses for the non-cyclic `k(l, m, 0, p)`.

use dehn_obstruct::manifolds::{
    em_slope, em_splice_form, em_su2_cyclic, twisted_torus_braid, twisted_torus_knot, EmKnot,
};
use dehn_obstruct::repvar::{irrep_witness, IrrepVerdict};

fn main() -> Result<(), dehn_obstruct::Error> {
    for (l, m, n, p) in [(2, 2, 0, 0), (2, 2, 1, 0), (2, 2, 2, 0), (3, 2, 0, 1), (3, 2, 0, 2), (5, 2, 0, 2), (2, 3, 0, -1)] {
        let k = EmKnot::new(l, m, n, p)?;
        let cyclic = em_su2_cyclic(&k);
        print!("{k}: slope {}, cyclic {cyclic}", em_slope(&k));
        if cyclic {
            match em_splice_form(&k)? {
                Some(y) => print!(", ±{y}"),
                None => print!(", not a splice"),
            }
        } else if n == 0 {
            if let IrrepVerdict::Witness(w) = irrep_witness(l, m, p)? {
                print!(", φ/π = {} (D = {}, q = {})", w.phi_over_pi, w.d, w.q);
            }
        }
        println!();
    }

    println!();
    for q in 1..=3 {
        let b = twisted_torus_braid(q)?;
        let k = twisted_torus_knot(q)?;
        println!(
            "q = {q}: {} strands, word length {}, T{:?}, slope {}",
            b.strands,
            b.word.len(),
            b.torus_parameters,
            -em_slope(&k)
        );
    }
    Ok(())
}
