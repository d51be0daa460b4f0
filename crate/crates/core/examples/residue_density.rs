//! The sets S and S' that escape the residue obstructions, their densities, and the periodic
//! sets S_k, T_k bounding them.

use dehn_obstruct::numtheory::{
    chi8m, density, in_s, in_sprime, product_bound, sk_period_count, BoundKind, ResiduePredicateSet,
};

fn main() -> Result<(), dehn_obstruct::Error> {
    let small_s: Vec<i64> = (1..=60).filter(|&n| in_s(n).unwrap_or(false)).collect();
    let small_sp: Vec<i64> = (2..=60).filter(|&n| in_sprime(n).unwrap_or(false)).collect();
    println!("S  ∩ [1,60]: {small_s:?}");
    println!("S' ∩ [2,60]: {small_sp:?}");

    for limit in [100, 10_000, 1_000_000] {
        println!("density(S, {limit}) = {}", density(ResiduePredicateSet::S, limit)?);
    }
    for k in 0..=4 {
        let (period, count) = sk_period_count(k.min(3));
        println!(
            "k = {k}: bound S_k {}, T_k {}{}",
            product_bound(BoundKind::Sk, k),
            product_bound(BoundKind::Tk, k),
            if k <= 3 { format!(", S_k has {count} of every {period}") } else { String::new() }
        );
    }

    let chi: Vec<i8> = [1, 3, 5, 7].iter().map(|&m| chi8m(4 * m - 1, m)).collect::<Result<_, _>>()?;
    println!("χ(4m−1) for m = 1, 3, 5, 7: {chi:?}");
    Ok(())
}
