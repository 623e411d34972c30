//! Seeded generators for rational test data: points, Möbius maps, forms,
//! configurations, combs and linearizations.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::chambers::Linearization;
use crate::comb::{Comb, Tooth};
use crate::geometry::{gcd_forms, BinaryForm, MobiusTransform, ProjPoint};
use crate::marks::MarkSet;
use crate::rational::{rat, Rational};
use crate::stability::Configuration;

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    rat(
        rng.gen_range(-bound..=bound),
        rng.gen_range(1..=bound.max(1)),
    )
}

pub fn point<R: Rng>(rng: &mut R, bound: i64) -> ProjPoint {
    if rng.gen_ratio(1, 8) {
        ProjPoint::infinity()
    } else {
        ProjPoint::affine(rational(rng, bound))
    }
}

pub fn mobius<R: Rng>(rng: &mut R, bound: i64) -> MobiusTransform {
    loop {
        let [a, b, c, d] = [(); 4].map(|_| rational(rng, bound));
        if let Ok(g) = MobiusTransform::new(a, b, c, d) {
            return g;
        }
    }
}

pub fn form<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> BinaryForm {
    let coeffs = (0..=degree).map(|_| rational(rng, bound)).collect();
    BinaryForm::new(degree, coeffs).expect("degree + 1 coefficients")
}

/// Points drawn from a small pool so that collisions are common, and forms
/// sharing a random product of linear factors at pool points (sometimes with an
/// irreducible quadratic thrown in).
pub fn configuration<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    r: usize,
    bound: i64,
) -> Configuration {
    let pool: Vec<ProjPoint> = (0..3).map(|_| point(rng, bound)).collect();
    let points: Vec<ProjPoint> = (0..n)
        .map(|_| pool.choose(rng).expect("nonempty pool").clone())
        .collect();
    let mut common = BinaryForm::constant(Rational::one());
    let shared = rng.gen_range(0..=d);
    while common.degree() < shared {
        let factor = if shared - common.degree() >= 2 && rng.gen_ratio(1, 4) {
            BinaryForm::from_ints(&[1, 0, rng.gen_range(1..4)])
        } else if rng.gen_bool(0.7) {
            BinaryForm::linear_at(pool.choose(rng).expect("nonempty pool"))
        } else {
            BinaryForm::linear_at(&point(rng, bound))
        };
        common = common.mul(&factor);
    }
    loop {
        let forms: Vec<BinaryForm> = (0..=r)
            .map(|_| common.mul(&form(rng, d - common.degree(), bound)))
            .collect();
        if let Ok(c) = Configuration::new(points.clone(), forms) {
            return c;
        }
    }
}

/// Integer weights in `1..=max`.
pub fn integer_linearization<R: Rng>(rng: &mut R, n: usize, d: usize, max: i64) -> Linearization {
    let weights: Vec<i64> = (0..=n).map(|_| rng.gen_range(1..=max)).collect();
    Linearization::from_ints(n, d, &weights).expect("positive weights")
}

/// Handle forms without common zeros of the given degree.
pub fn basepoint_free<R: Rng>(rng: &mut R, degree: usize, r: usize, bound: i64) -> Vec<BinaryForm> {
    loop {
        let forms: Vec<BinaryForm> = (0..=r).map(|_| form(rng, degree, bound)).collect();
        if forms.iter().any(|f| !f.is_zero())
            && gcd_forms(&forms).map(|g| g.degree() == 0).unwrap_or(false)
        {
            return forms;
        }
    }
}

/// A comb with total degree `d`, `n` marks and at most `max_teeth` teeth.
/// For `r = 0` the handle has degree 0.
pub fn comb<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    r: usize,
    max_teeth: usize,
    bound: i64,
) -> Comb {
    loop {
        let teeth_count = rng.gen_range(0..=max_teeth);
        let mut degrees = vec![0usize; teeth_count];
        let mut handle = d;
        for deg in degrees.iter_mut() {
            let take = rng.gen_range(0..=handle);
            *deg = take;
            handle -= take;
        }
        if r == 0 && handle > 0 {
            if let Some(first) = degrees.first_mut() {
                *first += handle;
                handle = 0;
            } else {
                continue;
            }
        }
        let mut places: Vec<ProjPoint> = Vec::new();
        while places.len() < teeth_count + n {
            let p = point(rng, bound);
            if !places.contains(&p) {
                places.push(p);
            }
        }
        let mut tooth_marks = vec![MarkSet::empty(); teeth_count];
        let mut handle_marks = BTreeMap::new();
        for i in 1..=n {
            if teeth_count > 0 && rng.gen_bool(0.5) {
                let t = rng.gen_range(0..teeth_count);
                tooth_marks[t] = MarkSet::from_bits(tooth_marks[t].bits() | (1 << (i - 1)));
            } else {
                handle_marks.insert(i, places[teeth_count + i - 1].clone());
            }
        }
        let teeth = (0..teeth_count)
            .map(|t| Tooth::new(places[t].clone(), degrees[t], tooth_marks[t]))
            .collect();
        let forms = if handle == 0 {
            (0..=r)
                .map(|_| BinaryForm::constant(rational(rng, bound)))
                .collect::<Vec<_>>()
        } else {
            basepoint_free(rng, handle, r, bound)
        };
        if forms.iter().all(|f| f.coeffs().iter().all(Zero::is_zero)) {
            continue;
        }
        if let Ok(c) = Comb::new(n, forms, teeth, handle_marks) {
            return c;
        }
    }
}
