use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stablemap_git::census::{census, classify_labels, divisor_enumerate, divisor_git_status};
use stablemap_git::chambers::{
    normalize_to_simplex, on_any_wall, same_chamber, signature, wall_enumerate, Linearization,
};
use stablemap_git::comb::{
    act_on_comb, comb_git_status, contract, forgetful_stabilize, unique_handle, DegreeTree,
};
use stablemap_git::equivariance::act_on_configuration;
use stablemap_git::geometry::{
    common_vanishing, form_compose, gcd_forms, rational_roots, squarefree_decomposition,
    vanishing_order, BinaryForm, MobiusTransform, ProjPoint, RootLocus,
};
use stablemap_git::random;
use stablemap_git::rational::{rat, Rational};
use stablemap_git::stability::{load_at, stability_status, torus_stability, Stability};
use stablemap_git::MarkSet;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    prop_oneof![1 => Just(ProjPoint::infinity()), 6 => small_rational().prop_map(ProjPoint::affine)]
}

fn mobius() -> impl Strategy<Value = MobiusTransform> {
    [
        small_rational(),
        small_rational(),
        small_rational(),
        small_rational(),
    ]
    .prop_filter_map("singular", |[a, b, c, d]| {
        MobiusTransform::new(a, b, c, d).ok()
    })
}

fn nonzero_form(degree: usize) -> impl Strategy<Value = BinaryForm> {
    proptest::collection::vec(small_rational(), degree + 1)
        .prop_map(move |c| BinaryForm::new(degree, c).unwrap())
        .prop_filter("zero form", |f| !f.is_zero())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mobius_is_an_action(g in mobius(), h in mobius(), p in point()) {
        prop_assert_eq!(g.apply(&h.apply(&p)), g.compose(&h).apply(&p));
    }

    #[test]
    fn composition_is_contravariant(f in nonzero_form(3), g in mobius(), h in mobius()) {
        prop_assert_eq!(form_compose(&form_compose(&f, &h), &g), form_compose(&f, &h.compose(&g)));
    }

    #[test]
    fn orders_fit_in_the_degree(f in nonzero_form(4)) {
        let rational: usize = rational_roots(&f).unwrap().iter().map(|p| vanishing_order(&f, p).unwrap()).sum();
        prop_assert!(rational <= 4);
        let total: usize = squarefree_decomposition(&f).unwrap().iter().map(|(g, e)| g.degree() * e).sum();
        prop_assert_eq!(total, 4);
    }

    #[test]
    fn gcd_divides_each_form(seed in any::<u64>()) {
        let c = random::configuration(&mut rng(seed), 0, 4, 2, 5);
        let g = gcd_forms(c.forms()).unwrap();
        for f in c.forms().iter().filter(|f| !f.is_zero()) {
            prop_assert!(g.dehomogenize().divides(&f.dehomogenize()));
            for p in rational_roots(&g).unwrap() {
                prop_assert!(vanishing_order(&g, &p).unwrap() <= vanishing_order(f, &p).unwrap());
            }
        }
        for p in rational_roots(&g).unwrap() {
            prop_assert_eq!(vanishing_order(&g, &p).unwrap(), common_vanishing(c.forms(), &p).unwrap());
        }
    }

    #[test]
    fn vanishing_order_is_invariant(f in nonzero_form(3), g in mobius(), p in point()) {
        prop_assert_eq!(
            vanishing_order(&f, &p).unwrap(),
            vanishing_order(&form_compose(&f, &g), &g.inverse().apply(&p)).unwrap()
        );
    }

    #[test]
    fn partner_walls_have_opposite_sides(seed in any::<u64>(), n in 0usize..4, d in 0usize..4) {
        let k = random::integer_linearization(&mut rng(seed), n, d, 7);
        for w in wall_enumerate(n, d) {
            let partner = stablemap_git::Wall::new(n, d, w.marks.complement(n), d - w.d_i).unwrap();
            // canonical form identifies the pair, so compare raw loads directly
            let lhs = k.load(w.marks, w.d_i) - k.half();
            let rhs = k.load(w.marks.complement(n), d - w.d_i) - k.half();
            prop_assert_eq!(lhs, -rhs);
            prop_assert_eq!(partner, w);
        }
    }

    #[test]
    fn signatures_are_scale_invariant(seed in any::<u64>(), num in 1i64..20, den in 1i64..20) {
        let k = random::integer_linearization(&mut rng(seed), 3, 2, 9);
        let scaled = k.scaled(&rat(num, den)).unwrap();
        prop_assert_eq!(signature(&k), signature(&scaled));
        if on_any_wall(&k).is_none() {
            prop_assert!(same_chamber(&k, &scaled).unwrap());
            prop_assert!(same_chamber(&scaled, &k).unwrap());
            prop_assert_eq!(signature(&normalize_to_simplex(&k).unwrap()), signature(&k));
        }
    }

    #[test]
    fn same_chamber_gives_same_census(a in any::<u64>(), b in any::<u64>()) {
        let k1 = random::integer_linearization(&mut rng(a), 3, 2, 4);
        let k2 = random::integer_linearization(&mut rng(b), 3, 2, 4);
        prop_assume!(on_any_wall(&k1).is_none() && on_any_wall(&k2).is_none());
        if same_chamber(&k1, &k2).unwrap() {
            let c1 = census(3, 2, 2, &k1).unwrap();
            let c2 = census(3, 2, 2, &k2).unwrap();
            prop_assert_eq!(classify_labels(&k1), classify_labels(&k2));
            prop_assert_eq!((c1.rho_q, c1.rho_qprime, c1.e_u), (c2.rho_q, c2.rho_qprime, c2.e_u));
        }
    }

    #[test]
    fn off_wall_generic_points_are_never_semistable(seed in any::<u64>(), n in 0usize..4, d in 0usize..4) {
        let k = random::integer_linearization(&mut rng(seed), n, d, 6);
        prop_assume!(on_any_wall(&k).is_none());
        for lbl in divisor_enumerate(n, d) {
            let c = lbl.generic_configuration(2).unwrap();
            prop_assert_ne!(stability_status(&c, &k).unwrap().status, Stability::StrictlySemistable);
            prop_assert_ne!(divisor_git_status(&lbl, &k).unwrap().status, Stability::StrictlySemistable);
        }
    }

    #[test]
    fn census_bookkeeping(seed in any::<u64>(), n in 0usize..5, d in 0usize..4, r in 0usize..3) {
        let k = random::integer_linearization(&mut rng(seed), n, d, 5);
        let c = census(n, d, r, &k).unwrap();
        prop_assert_eq!(c.stable + c.unstable + c.strictly_semistable, c.total);
        prop_assert_eq!(c.e_u, c.phi_exceptional_stable);
        if let (Some(q), Some(qp)) = (c.rho_q, c.rho_qprime) {
            prop_assert_eq!(qp, q + c.e_u as i64);
        }
    }

    #[test]
    fn stability_is_g_invariant(seed in any::<u64>(), g in mobius()) {
        let mut r = rng(seed);
        let c = random::configuration(&mut r, 3, 3, 1, 5);
        let k = random::integer_linearization(&mut r, 3, 3, 4);
        let before = stability_status(&c, &k).unwrap();
        let after = stability_status(&act_on_configuration(&g, &c), &k).unwrap();
        prop_assert_eq!(before.status, after.status);
        prop_assert_eq!(before.witness.map(|w| w.excess), after.witness.map(|w| w.excess));
    }

    #[test]
    fn stability_is_scale_invariant(seed in any::<u64>(), num in 1i64..30, den in 1i64..30) {
        let mut r = rng(seed);
        let c = random::configuration(&mut r, 2, 4, 2, 5);
        let k = random::integer_linearization(&mut r, 2, 4, 5);
        let scaled = k.scaled(&rat(num, den)).unwrap();
        prop_assert_eq!(stability_status(&c, &k).unwrap().status, stability_status(&c, &scaled).unwrap().status);
    }

    #[test]
    fn unstable_witness_is_heavy(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random::configuration(&mut r, 3, 3, 1, 4);
        let k = random::integer_linearization(&mut r, 3, 3, 4);
        let s = stability_status(&c, &k).unwrap();
        if let (Stability::Unstable, Some(w)) = (s.status, &s.witness) {
            prop_assert!(w.excess > Rational::from_integer(0.into()));
            if let RootLocus::Point(p) = &w.locus {
                prop_assert_eq!(load_at(&c, &k, p).unwrap() - k.half(), w.excess.clone());
            }
        }
    }

    #[test]
    fn torus_witness_sits_at_a_fixed_point(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random::configuration(&mut r, 2, 3, 1, 4);
        let k = random::integer_linearization(&mut r, 2, 3, 4);
        let t = torus_stability(&c, &k).unwrap();
        if let Some(w) = t.witness {
            let RootLocus::Point(p) = w.locus else { panic!("torus witness must be a point") };
            prop_assert!(p == ProjPoint::infinity() || p == ProjPoint::zero());
            prop_assert_eq!(load_at(&c, &k, &p).unwrap() - k.half(), w.excess);
        }
    }

    #[test]
    fn action_is_left_and_covariant(seed in any::<u64>(), g in mobius(), h in mobius(), p in point()) {
        let c = random::configuration(&mut rng(seed), 2, 3, 2, 5);
        prop_assert_eq!(
            act_on_configuration(&g, &act_on_configuration(&h, &c)),
            act_on_configuration(&g.compose(&h), &c)
        );
        prop_assert_eq!(
            common_vanishing(act_on_configuration(&g, &c).forms(), &g.apply(&p)).unwrap(),
            common_vanishing(c.forms(), &p).unwrap()
        );
    }

    #[test]
    fn contraction_bookkeeping(seed in any::<u64>()) {
        let comb = random::comb(&mut rng(seed), 2, 5, 2, 3, 5);
        let image = contract(&comb);
        prop_assert_eq!(image.d(), 5);
        for t in comb.teeth() {
            let order = common_vanishing(image.forms(), &t.attach).unwrap();
            prop_assert!(order >= t.degree);
            if common_vanishing(comb.handle_forms(), &t.attach).unwrap() == 0 {
                prop_assert_eq!(order, t.degree);
            }
        }
    }

    #[test]
    fn comb_status_is_g_invariant(seed in any::<u64>(), g in mobius()) {
        let mut r = rng(seed);
        let comb = random::comb(&mut r, 2, 4, 1, 3, 5);
        let k = random::integer_linearization(&mut r, 2, 4, 4);
        prop_assert_eq!(
            comb_git_status(&comb, &k).unwrap().status,
            comb_git_status(&act_on_comb(&g, &comb), &k).unwrap().status
        );
    }

    #[test]
    fn stabilization_is_idempotent(seed in any::<u64>()) {
        let comb = random::comb(&mut rng(seed), 3, 4, 2, 3, 5);
        if let Ok(t) = forgetful_stabilize(&comb) {
            prop_assert!(t.is_stable());
            prop_assert_eq!(t.stabilize().unwrap(), t.clone());
            prop_assert_eq!(t.total_degree(), 4);
            prop_assert_eq!(t.all_marks(), MarkSet::full(3));
        }
    }

    #[test]
    fn handle_has_light_teeth(parents in proptest::collection::vec(any::<prop::sample::Index>(), 0..7),
                              degrees in proptest::collection::vec(0usize..4, 8)) {
        let size = parents.len() + 1;
        let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
        let mut degrees = degrees[..size].to_vec();
        if degrees.iter().sum::<usize>() % 2 == 0 {
            degrees[0] += 1;
        }
        let t = DegreeTree::new(degrees, edges, vec![]).unwrap();
        let d = t.total_degree();
        let handle = unique_handle(&t).unwrap();
        for branch in t.branches(handle) {
            prop_assert!(2 * branch.iter().map(|&v| t.degrees()[v]).sum::<usize>() < d);
        }
        let others: BTreeSet<usize> = (0..size)
            .filter(|&v| t.branches(v).iter().all(|b| 2 * b.iter().map(|&u| t.degrees()[u]).sum::<usize>() < d))
            .collect();
        prop_assert_eq!(others, BTreeSet::from([handle]));
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random::configuration(&mut r, 2, 3, 1, 5);
        let back: stablemap_git::Configuration = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c.clone());
        let comb = random::comb(&mut r, 2, 3, 1, 2, 5);
        let back: stablemap_git::comb::Comb = serde_json::from_str(&serde_json::to_string(&comb).unwrap()).unwrap();
        prop_assert_eq!(back, comb);
        let k = random::integer_linearization(&mut r, 2, 3, 5);
        let status = stability_status(&c, &k).unwrap();
        let back: stablemap_git::StabilityStatus = serde_json::from_str(&serde_json::to_string(&status).unwrap()).unwrap();
        prop_assert_eq!(back, status);
        let report = census(2, 3, 1, &k).unwrap();
        let back: stablemap_git::census::CensusReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
        let back: Linearization = serde_json::from_str(&serde_json::to_string(&k).unwrap()).unwrap();
        prop_assert_eq!(back, k);
    }
}
