//! Points, Möbius maps and binary forms over Q: multiplicities, gcds and
//! roots that are not rational.

use std::collections::BTreeSet;

use stablemap_git::geometry::{
    common_vanishing, form_compose, gcd_forms, max_unmarked_multiplicity, rational_roots,
    squarefree_decomposition, unmarked_roots, vanishing_order,
};
use stablemap_git::rational::{int, rat};
use stablemap_git::{BinaryForm, MobiusTransform, ProjPoint};

fn main() -> stablemap_git::Result<()> {
    let shear = MobiusTransform::from_ints(1, 1, 0, 1)?;
    let p = ProjPoint::affine(int(1));
    println!("{p} -> {}", shear.apply(&p));
    println!(
        "swap sends {} to {}",
        ProjPoint::infinity(),
        MobiusTransform::swap().apply(&ProjPoint::infinity())
    );

    let xy = BinaryForm::from_ints(&[0, 1, 0]);
    println!("({xy}) o shear = {}", form_compose(&xy, &shear));

    // x^2 y and x^2 (x - y) share x^2, which vanishes at [0:1] to order 2
    let f = BinaryForm::from_ints(&[0, 1, 0, 0]);
    let g = BinaryForm::from_ints(&[1, -1, 0, 0]);
    let forms = [f.clone(), g.clone()];
    println!("gcd({f}, {g}) = {}", gcd_forms(&forms)?);
    println!(
        "d_[0:1] = {}",
        common_vanishing(&forms, &ProjPoint::zero())?
    );
    println!(
        "order of {f} at [1:0] = {}",
        vanishing_order(&f, &ProjPoint::infinity())?
    );

    // (x^2 + y^2)^2 (x - y/2): one rational root, a double pair of irrational ones
    let h = BinaryForm::from_ints(&[1, 0, 1])
        .pow(2)
        .mul(&BinaryForm::linear_at(&ProjPoint::affine(rat(1, 2))));
    println!("\n{h}");
    for (factor, e) in squarefree_decomposition(&h)? {
        println!("  level {e}: {factor}");
    }
    println!(
        "  rational roots: {:?}",
        rational_roots(&h)?
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    let marked = BTreeSet::from([ProjPoint::affine(rat(1, 2))]);
    for (locus, e) in unmarked_roots(&h, &marked)? {
        println!("  unmarked: {locus} with multiplicity {e}");
    }
    println!(
        "  max unmarked multiplicity: {}",
        max_unmarked_multiplicity(&h, &marked)?
    );
    Ok(())
}
