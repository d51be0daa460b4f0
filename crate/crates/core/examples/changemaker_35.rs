//! The changemaker obstruction for `Y(T(3,5), T(-3,5))` at slope 226.
//!
//! Builds the Goeritz form from the white graph, checks a hand-written embedding, then runs the
//! exhaustive search over every length-7 changemaker of norm 226.

use dehn_obstruct::goeritz::{builtin_diagram, det_h1_order, goeritz_matrix};
use dehn_obstruct::lattice::{
    changemaker_obstruction, enumerate_changemakers, genus_from_changemaker, ChangemakerVerdict, Changemaker,
    Embedding, ObstructionOptions,
};

fn main() -> Result<(), dehn_obstruct::Error> {
    let graph = builtin_diagram("L35-white").expect("builtin");
    let gram = goeritz_matrix(&graph, 0)?;
    println!("Goeritz form, |det| = {}:\n{gram}", det_h1_order(&gram));

    // a basis of the orthogonal complement, one vector per row of the form
    let sigma = Changemaker::new(vec![1, 2, 2, 4, 4, 8, 11])?;
    let basis = vec![
        vec![1, 0, 0, 0, -1, -1, 1],
        vec![-2, 0, 1, 0, 0, 0, 0],
        vec![1, 0, 1, 1, 1, 0, -1],
        vec![0, 0, 0, -1, -1, 1, 0],
        vec![0, -1, -1, 1, 0, 0, 0],
        vec![0, 1, -1, 0, 0, 0, 0],
    ];
    match Embedding::new(&gram, sigma.clone(), basis) {
        Ok(_) => println!("hand-written embedding for σ = {:?} verifies", sigma.entries()),
        Err(e) => println!("hand-written embedding rejected: {e}"),
    }
    println!("genus forced by σ: {}", genus_from_changemaker(&sigma));

    let total = enumerate_changemakers(7, 226).len();
    let options = ObstructionOptions { all: true, ..Default::default() };
    let (verdict, stats) = changemaker_obstruction(&gram, 226, options)?;
    let found = match verdict {
        ChangemakerVerdict::Obstructed => Vec::new(),
        ChangemakerVerdict::Witness(e) => e,
    };
    println!("{total} changemakers of norm 226, {} admit an embedding ({} search nodes)", found.len(), stats.nodes);
    for e in &found {
        println!("  σ = {:?}", e.sigma.entries());
        for v in &e.vectors {
            println!("    {v:?}");
        }
    }
    Ok(())
}
