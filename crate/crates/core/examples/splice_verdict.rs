//! Runs the full obstruction pipeline on a few splices, or on `a b c d` from the command line.

use dehn_obstruct::manifolds::{not_surgery_verdict, Overall, Splice};

fn main() -> Result<(), dehn_obstruct::Error> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let splices = match args.as_slice() {
        &[a, b, c, d] => vec![(a, b, c, d)],
        _ => vec![(2, 3, 2, -3), (2, 3, 2, 3), (3, 4, -3, 4), (3, 5, -3, 5), (2, 5, 3, 4), (3, 7, -3, 7)],
    };
    for (a, b, c, d) in splices {
        let y = Splice::from_ints(a, b, c, d)?;
        let v = not_surgery_verdict(&y, true)?;
        let overall = match &v.overall {
            Overall::HalfIntegralSurgery { slope } => format!("surgery with slope ±{slope}"),
            Overall::NotAnySurgery => "not a surgery".into(),
            Overall::Undecided { open_slopes } => {
                let open: Vec<String> = open_slopes.iter().map(|s| s.to_string()).collect();
                format!("integral slopes still open: {}", open.join(", "))
            }
        };
        println!("{y}: |H1| = {}, {overall}", v.h1_order);
        if let Some(m) = v.shortcuts.mirror_pair {
            println!("    ab = {}, in S: {}", m.ab, m.in_s);
        }
        if let Some(e) = v.shortcuts.equal_pair {
            println!("    ab = {}, in S': {}", e.ab, e.in_sprime);
        }
    }
    Ok(())
}
