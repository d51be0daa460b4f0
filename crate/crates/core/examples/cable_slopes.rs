//! SU(2)-cyclic surgeries on torus knots and their cables, with the surgered manifolds.

use dehn_obstruct::manifolds::{cable_su2_cyclic_slopes, torus_knot_surgery, IteratedTorusKnot, Slope};

fn main() -> Result<(), dehn_obstruct::Error> {
    for text in ["T(2,3)", "T(3,5)", "T(-2,5)", "C(13,2);T(2,3)", "C(11,2);T(2,3)", "C(7,2);T(2,3)", "C(5,2);C(13,2);T(2,3)"] {
        let k: IteratedTorusKnot = text.parse()?;
        println!("{k}");
        for row in cable_su2_cyclic_slopes(&k) {
            println!("    {:>8}  {}", row.slopes.to_string(), row.manifold_text());
            if row.is_family() {
                for m in [-1, 1, 2] {
                    let (s, man) = row.at(m)?;
                    println!("      m = {m:>2}: {s} gives {man}");
                }
            }
        }
    }

    println!();
    for r in ["7", "6", "5", "13/2", "11/3"] {
        let slope: Slope = r.parse()?;
        println!("{r} on T(2,3): {}", torus_knot_surgery(2, 3, slope)?);
    }
    Ok(())
}
