//! Crossing a wall swaps one divisor for its complement. Depending on the
//! labels this is a small modification or contracts a divisor, and
//! `rho(Q) + e(U)` stays put.

use stablemap_git::census::{chamber_crossings, classify_wall, CrossingKind};
use stablemap_git::chambers::wall_enumerate;

fn main() -> stablemap_git::Result<()> {
    for (n, d, r) in [(3, 2, 2), (3, 1, 1)] {
        println!("n={n} d={d} r={r}");
        for w in wall_enumerate(n, d) {
            println!("  {w}: {}", classify_wall(n, d, r, &w));
        }
        let crossings = chamber_crossings(n, d, r, 5000, 3)?;
        println!("  observed crossings between sampled chambers:");
        for kind in [
            CrossingKind::SmallModification,
            CrossingKind::DiagonalContraction,
            CrossingKind::ResultantContraction,
        ] {
            if let Some(x) = crossings
                .iter()
                .find(|x| x.kind == kind && x.identity_holds.is_some())
            {
                println!("    {x}");
            }
        }
    }
    Ok(())
}
