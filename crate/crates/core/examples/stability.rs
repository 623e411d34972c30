//! Stability of configurations: the numerical criterion next to the
//! Hilbert-Mumford re-derivation through torus weights.

use stablemap_git::rational::int;
use stablemap_git::stability::{hm_oracle, stability_status, torus_weight_interval};
use stablemap_git::{BinaryForm, Configuration, Linearization, ProjPoint};

fn show(label: &str, c: &Configuration, k: &Linearization) -> stablemap_git::Result<()> {
    let status = stability_status(c, k)?;
    let oracle = hm_oracle(c, k)?;
    let (lo, hi) = torus_weight_interval(c, k)?;
    println!("{label}: {c}  k = {k}");
    println!(
        "    {status}; oracle {}; diagonal torus weights [{lo}, {hi}]",
        oracle.status
    );
    if let Some(w) = status.witness {
        println!("    S(p) - half = {}", w.excess);
    }
    Ok(())
}

fn main() -> stablemap_git::Result<()> {
    let conic = |a: &[i64], b: &[i64]| {
        Configuration::new(
            vec![],
            vec![BinaryForm::from_ints(a), BinaryForm::from_ints(b)],
        )
    };
    let k = Linearization::ones(0, 2);
    show("basepoint free", &conic(&[1, 0, 0], &[0, 0, 1])?, &k)?;
    show("common factor xy", &conic(&[0, 1, 0], &[0, 1, 0])?, &k)?;
    show("common factor x", &conic(&[1, 0, 0], &[0, 1, 0])?, &k)?;
    show("one double root", &conic(&[1, 0, 0], &[3, 0, 0])?, &k)?;

    // marks change the balance: a point of weight 2 where the forms also vanish
    let c = Configuration::new(
        vec![
            ProjPoint::affine(int(2)),
            ProjPoint::infinity(),
            ProjPoint::zero(),
        ],
        vec![
            BinaryForm::from_ints(&[1, -2, 0]),
            BinaryForm::from_ints(&[0, 1, -2]),
        ],
    )?;
    for w in [[1, 1, 1, 1], [2, 1, 1, 1], [1, 1, 1, 3]] {
        show("marked", &c, &Linearization::from_ints(3, 2, &w)?)?;
    }
    Ok(())
}
