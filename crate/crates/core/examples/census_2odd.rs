//! Which of `Y(T(2a+1,2), T(2b+1,2))` survive the changemaker test at slope `-|H1|`.
//!
//! `cargo run --release --example census_2odd -- 341`

use dehn_obstruct::report::census_2odd;

fn main() -> Result<(), dehn_obstruct::Error> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(341);
    let rows = census_2odd(bound)?;
    println!("{:>3} {:>3} {:>6}  verdict", "a", "b", "slope");
    for r in &rows {
        let verdict = match &r.witness {
            Some(s) => format!("changemaker {s:?}"),
            None => "obstructed".to_string(),
        };
        println!("{:>3} {:>3} {:>6}  {verdict}", r.a, r.b, -r.n);
    }
    let survivors: Vec<(i64, i64)> = rows.iter().filter(|r| r.witness.is_some()).map(|r| (r.a, r.b)).collect();
    println!("\n{} pairs, survivors {survivors:?}", rows.len());
    Ok(())
}
