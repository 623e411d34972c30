//! Combs and the Givental contraction: teeth become common zeros of the
//! forms, the contraction commutes with moving the handle, and forgetting the
//! parametrization collapses what became unstable.

use std::collections::BTreeMap;

use stablemap_git::comb::{
    act_on_comb, comb_git_status, contract, forgetful_stabilize, Comb, Tooth,
};
use stablemap_git::equivariance::act_on_configuration;
use stablemap_git::geometry::projectively_equal;
use stablemap_git::rational::int;
use stablemap_git::{BinaryForm, Linearization, MarkSet, MobiusTransform, ProjPoint};

fn main() -> stablemap_git::Result<()> {
    let handle = vec![
        BinaryForm::from_ints(&[1, 0]),
        BinaryForm::from_ints(&[0, 1]),
    ];
    let comb = Comb::new(
        2,
        handle,
        vec![Tooth::new(
            ProjPoint::affine(int(1)),
            1,
            MarkSet::from_marks([1], 2)?,
        )],
        BTreeMap::from([(2, ProjPoint::infinity())]),
    )?;
    println!("comb: {comb}");
    println!("contracts to {}", contract(&comb));

    let g = MobiusTransform::from_ints(2, 1, 1, 1)?;
    let moved = contract(&act_on_comb(&g, &comb));
    let expected = act_on_configuration(&g, &contract(&comb));
    println!("moved by g: {moved}");
    println!(
        "equivariant: {}",
        moved.points() == expected.points() && projectively_equal(moved.forms(), expected.forms())
    );

    println!("\nteeth against k = (1) in degree 3 and 4:");
    for (d, tooth) in [(3, 1), (3, 2), (4, 2)] {
        let forms = vec![
            BinaryForm::monomial(d - tooth, 0),
            BinaryForm::monomial(d - tooth, d - tooth),
        ];
        let c = Comb::new(
            0,
            forms,
            vec![Tooth::new(ProjPoint::zero(), tooth, MarkSet::empty())],
            BTreeMap::new(),
        )?;
        println!(
            "  d={d}, tooth of degree {tooth}: {}",
            comb_git_status(&c, &Linearization::ones(0, d))?.status
        );
    }

    let flat = Comb::new(
        0,
        vec![BinaryForm::from_ints(&[1]), BinaryForm::from_ints(&[5])],
        vec![
            Tooth::new(ProjPoint::zero(), 1, MarkSet::empty()),
            Tooth::new(ProjPoint::infinity(), 2, MarkSet::empty()),
        ],
        BTreeMap::new(),
    )?;
    println!("\ndegree-0 handle with two teeth: {}", flat.dual_tree());
    println!(
        "after forgetting the map:       {}",
        forgetful_stabilize(&flat)?
    );
    Ok(())
}
