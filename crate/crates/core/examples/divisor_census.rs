//! Boundary divisors and Picard numbers: which divisors survive in the GIT
//! quotient, which get contracted, and the resulting count.

use stablemap_git::census::{
    case_linearization, census, classify_labels, codim_image, is_phi_exceptional, picard_expected,
};

fn main() -> stablemap_git::Result<()> {
    let (n, d, r) = (3, 2, 2);
    let k = case_linearization(n, d);
    println!("labels for n={n} d={d} r={r} at k = {k}:");
    for (lbl, status) in classify_labels(&k) {
        let exc = if is_phi_exceptional(&lbl, r) {
            "exceptional"
        } else {
            ""
        };
        println!(
            "  {lbl:<18} {status:<10} codim {} {exc}",
            codim_image(&lbl, r)
        );
    }
    println!("\n{}", census(n, d, r, &k)?);

    println!("\n n  d  r  census  formula");
    for (n, d, r) in [
        (0, 3, 2),
        (2, 1, 2),
        (3, 2, 1),
        (4, 0, 0),
        (4, 2, 3),
        (5, 3, 2),
        (6, 0, 0),
    ] {
        let report = census(n, d, r, &case_linearization(n, d))?;
        let expected = picard_expected(n, d, r)?;
        println!(
            "{n:>2} {d:>2} {r:>2} {:>7} {expected:>8}",
            report.rho_qprime.map_or("-".into(), |v| v.to_string())
        );
    }
    Ok(())
}
