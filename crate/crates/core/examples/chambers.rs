//! Walls `W_{I,d_I}` in the space of linearizations and the chambers they cut out.

use stablemap_git::chambers::{
    normalize_to_simplex, on_any_wall, same_chamber, sample_chambers, wall_enumerate,
};
use stablemap_git::{Linearization, Side};

fn main() -> stablemap_git::Result<()> {
    let (n, d) = (3, 2);
    let walls = wall_enumerate(n, d);
    println!("{} walls for n={n}, d={d}:", walls.len());
    for w in &walls {
        print!(" {w}");
    }
    println!();

    let ones = Linearization::ones(n, d);
    let heavy = Linearization::from_ints(n, d, &[1, 1, 1, 3])?;
    println!(
        "\nnormalized: {} and {}",
        normalize_to_simplex(&ones)?,
        normalize_to_simplex(&heavy)?
    );
    println!("same chamber: {}", same_chamber(&ones, &heavy)?);

    let on = Linearization::from_ints(0, 4, &[1])?;
    println!(
        "k = {on} for n=0, d=4 lies on {}",
        on_any_wall(&on).map_or("no wall".into(), |w| w.to_string())
    );

    let chambers = sample_chambers(n, d, 5000, 1);
    println!("\n{} chambers found by sampling:", chambers.len());
    for (sig, k) in &chambers {
        let sig: String = sig
            .iter()
            .map(|s| if *s == Side::Below { '-' } else { '+' })
            .collect();
        let note = if k.has_stable_points() {
            ""
        } else {
            "  no stable points"
        };
        println!("  {sig}  {k}{note}");
    }
    Ok(())
}
