//! The representation `rho` on binary forms, the Veronese map and the group
//! action on configurations.

use stablemap_git::equivariance::{act_on_configuration, rho_matrix, veronese};
use stablemap_git::geometry::form_compose;
use stablemap_git::rational::{format_rational, int};
use stablemap_git::{BinaryForm, Configuration, MobiusTransform, ProjPoint};

fn main() -> stablemap_git::Result<()> {
    let g = MobiusTransform::from_ints(1, 1, 0, 1)?;
    let h = MobiusTransform::from_ints(2, -1, 1, 3)?;
    println!("rho(g, 2) = {}", rho_matrix(&g, 2));
    let lhs = rho_matrix(&g.compose(&h), 3);
    let rhs = &rho_matrix(&g, 3) * &rho_matrix(&h, 3);
    println!("rho(gh) == rho(g) rho(h) for k = 3: {}", lhs == rhs);

    let p = ProjPoint::affine(int(2));
    let show = |v: Vec<_>| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
    println!("v({p}) = ({})", show(veronese(&p, 2)));
    println!(
        "v(g{p}) = ({}) = rho(g) v(p) = ({})",
        show(veronese(&g.apply(&p), 2)),
        show(rho_matrix(&g, 2).apply(&veronese(&p, 2)))
    );

    // substitution is the transpose of rho
    let f = BinaryForm::from_ints(&[1, 0, -1]);
    println!("f o h = {}", form_compose(&f, &h));
    println!(
        "rho(h)^T f = {:?}",
        show(rho_matrix(&h, 2).transpose().apply(f.coeffs()))
    );

    let c = Configuration::new(
        vec![ProjPoint::zero()],
        vec![
            BinaryForm::from_ints(&[1, 0]),
            BinaryForm::from_ints(&[0, 1]),
        ],
    )?;
    println!("\ng . {c} = {}", act_on_configuration(&g, &c));
    Ok(())
}
