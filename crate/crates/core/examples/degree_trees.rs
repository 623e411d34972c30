//! Degree-labelled dual trees: the unique handle of an odd-degree tree and
//! the n-stability conditions of the intermediate spaces.

use stablemap_git::comb::{intermediate_threshold, n_stable_check, unique_handle, DegreeTree};
use stablemap_git::MarkSet;

fn main() -> stablemap_git::Result<()> {
    let chain = DegreeTree::new(vec![1, 0, 2], vec![(0, 1), (1, 2)], vec![])?;
    println!("{chain}: handle {}", unique_handle(&chain)?);
    let star = DegreeTree::new(
        vec![1, 3, 1, 0, 2],
        vec![(0, 1), (1, 2), (1, 3), (3, 4)],
        vec![],
    )?;
    println!("{star}: handle {}", unique_handle(&star)?);
    let even = DegreeTree::new(vec![1, 1], vec![(0, 1)], vec![])?;
    println!("{even}: {}", unique_handle(&even).unwrap_err());

    let big_n = 6;
    let marks = |ms: &[usize]| MarkSet::from_marks(ms.iter().copied(), big_n);
    let t = DegreeTree::new(
        vec![1, 0],
        vec![(0, 1)],
        vec![marks(&[1, 2, 3])?, marks(&[4, 5, 6])?],
    )?;
    println!("\n{t}, node 0 parametrized:");
    for n in 1..big_n {
        let group = marks(&[1, 2])?;
        println!(
            "  n={n}: {}  (with marks 1,2 together: {})",
            n_stable_check(&t, 0, &[], big_n, n)?,
            n_stable_check(&t, 0, &[group], big_n, n)?
        );
    }
    println!(
        "\nthresholds (r+1)(k-1)+1 for r = 2: {:?}",
        (1..6)
            .map(|k| intermediate_threshold(k, 2))
            .collect::<Vec<_>>()
    );
    Ok(())
}
