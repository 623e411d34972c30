//! Boundary divisors `D(N_1, N_2, d_1, d_2)` of the space of stable maps, their
//! GIT status through the contraction to `(P^1)^n x P^r_d`, and the Picard
//! number count `rho(Q') = rho(Q) + e(U)`.
//!
//! A label records the contracted side `(N_2, d_2)`; the other side is implicit.
//! Its image under the contraction has all `N_2` marks at one point where the
//! forms vanish to order `d_2`, which is stable iff
//! `sum_{N_2} k_i + d_2 k_{n+1} < half`.

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chambers::{
    on_any_wall, sample_chambers, signature, wall_enumerate, wall_membership, Linearization, Side,
    Wall,
};
use crate::error::{Error, Result};
use crate::geometry::{BinaryForm, ProjPoint, RootLocus};
use crate::marks::MarkSet;
use crate::rational::{self, Rational};
use crate::stability::{Configuration, Stability, StabilityStatus, Witness};

/// The divisor `D(N_1, N_2, d_1, d_2)` with `N_1 = N_2^c` and `d_1 = d - d_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DivisorLabel {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N2")]
    pub n2: MarkSet,
    pub d2: usize,
}

impl DivisorLabel {
    /// A valid label: `d_2 <= d`, and a degree-0 side carries at least two marks.
    pub fn new(n: usize, d: usize, n2: MarkSet, d2: usize) -> Result<Self> {
        let label = DivisorLabel::raw(n, d, n2, d2)?;
        if !label.is_valid() {
            return Err(Error::InvalidLabel(label.to_string()));
        }
        Ok(label)
    }

    /// Any `(N_2, d_2)` in range, including the configurations that are not divisors.
    pub fn raw(n: usize, d: usize, n2: MarkSet, d2: usize) -> Result<Self> {
        if !n2.is_within(n) || d2 > d {
            return Err(Error::InvalidLabel(format!(
                "N2={n2}, d2={d2} for n={n}, d={d}"
            )));
        }
        Ok(DivisorLabel { n, d, n2, d2 })
    }

    pub fn is_valid(&self) -> bool {
        self.d2 > 0 || self.n2.len() >= 2
    }

    pub fn n1(&self) -> MarkSet {
        self.n2.complement(self.n)
    }

    pub fn d1(&self) -> usize {
        self.d - self.d2
    }

    /// Both sides carry two marks or more and no degree.
    pub fn is_diagonal(&self) -> bool {
        self.d2 == 0 && self.n2.len() == 2
    }

    /// `D(N, {}, d-1, 1)`: two forms acquire a common root away from the marks.
    pub fn is_resultant(&self) -> bool {
        self.d2 == 1 && self.n2.is_empty()
    }

    /// The label for the same divisor with the two sides exchanged, if that is valid.
    pub fn complement(&self) -> DivisorLabel {
        DivisorLabel {
            n: self.n,
            d: self.d,
            n2: self.n1(),
            d2: self.d1(),
        }
    }

    /// A generic point of the image: the `N_2` marks at `[0:1]`, the other
    /// marks at `1, 2, ...`, forms `x^{d_2} y^{d_1}` and `x^d` and then
    /// `x^{d_2} (x + j y)^{d_1}`. Needs `r >= 1` unless `d_1 = 0`.
    pub fn generic_configuration(&self, r: usize) -> Result<Configuration> {
        if r == 0 && self.d1() > 0 {
            return Err(Error::EmptyModuli {
                n: self.n,
                d: self.d,
                r,
            });
        }
        let mut next = 0i64;
        let points = (1..=self.n)
            .map(|i| {
                if self.n2.contains(i) {
                    ProjPoint::zero()
                } else {
                    next += 1;
                    ProjPoint::affine(rational::int(next))
                }
            })
            .collect();
        let base = BinaryForm::monomial(self.d2, 0);
        let forms = (0..=r)
            .map(|j| {
                let tail = match j {
                    0 => BinaryForm::monomial(self.d1(), self.d1()),
                    1 => BinaryForm::monomial(self.d1(), 0),
                    _ => BinaryForm::from_ints(&[1, j as i64]).pow(self.d1()),
                };
                base.mul(&tail)
            })
            .collect();
        Configuration::new(points, forms)
    }
}

impl fmt::Display for DivisorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{},{},{})", self.n1(), self.n2, self.d1(), self.d2)
    }
}

/// Every `(N_2, d_2)` for `(n, d)`, valid or not: `2^n (d + 1)` of them.
pub fn all_labels(n: usize, d: usize) -> Vec<DivisorLabel> {
    MarkSet::all(n)
        .flat_map(|n2| (0..=d).map(move |d2| DivisorLabel { n, d, n2, d2 }))
        .collect()
}

/// The boundary divisors: `2^n (d + 1) - n - 1` labels.
pub fn divisor_enumerate(n: usize, d: usize) -> Vec<DivisorLabel> {
    all_labels(n, d)
        .into_iter()
        .filter(DivisorLabel::is_valid)
        .collect()
}

fn check_label(lbl: &DivisorLabel, k: &Linearization) -> Result<()> {
    if lbl.n != k.n() || lbl.d != k.d() {
        return Err(Error::DimensionMismatch {
            config_n: lbl.n,
            config_d: lbl.d,
            lin_n: k.n(),
            lin_d: k.d(),
        });
    }
    Ok(())
}

/// `sum_{i in N_2} k_i + d_2 k_{n+1} - half`.
pub fn label_excess(lbl: &DivisorLabel, k: &Linearization) -> Result<Rational> {
    check_label(lbl, k)?;
    Ok(k.load(lbl.n2, lbl.d2) - k.half())
}

/// Stability of the generic point of the image of the divisor; the witness
/// is the collision point `[0:1]` of [`DivisorLabel::generic_configuration`].
pub fn divisor_git_status(lbl: &DivisorLabel, k: &Linearization) -> Result<StabilityStatus> {
    let excess = label_excess(lbl, k)?;
    let status = if excess.is_negative() {
        Stability::Stable
    } else if excess.is_zero() {
        Stability::StrictlySemistable
    } else {
        Stability::Unstable
    };
    let witness = (status != Stability::Stable).then(|| Witness {
        locus: RootLocus::Point(ProjPoint::zero()),
        excess,
    });
    Ok(StabilityStatus { status, witness })
}

pub fn codim_image(lbl: &DivisorLabel, r: usize) -> usize {
    (lbl.n2.len() + (r + 1) * lbl.d2).saturating_sub(1)
}

pub fn is_phi_exceptional(lbl: &DivisorLabel, r: usize) -> bool {
    codim_image(lbl, r) >= 2
}

/// `rho` of `(P^1)^n x P^r_d` modulo `G`: one class per factor, none for a point.
pub fn rho_ambient(n: usize, d: usize, r: usize) -> i64 {
    n as i64 + i64::from((r, d) != (0, 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub linearization: Linearization,
    pub total: usize,
    pub stable: usize,
    pub unstable: usize,
    pub strictly_semistable: usize,
    pub phi_exceptional_stable: usize,
    /// Unstable labels whose image is a divisor of the ambient space.
    pub unstable_codim_one: usize,
    #[serde(rename = "e_U")]
    pub e_u: usize,
    #[serde(rename = "rho_Q", skip_serializing_if = "Option::is_none", default)]
    pub rho_q: Option<i64>,
    #[serde(
        rename = "rho_Qprime",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub rho_qprime: Option<i64>,
    /// Why the Picard numbers were not reported.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub withheld: Option<String>,
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "census n={} d={} r={} k={}",
            self.n, self.d, self.r, self.linearization
        )?;
        writeln!(
            f,
            "  labels {}: stable {}, unstable {}, strictly semistable {}",
            self.total, self.stable, self.unstable, self.strictly_semistable
        )?;
        writeln!(
            f,
            "  e(U) {}, unstable codim-1 images {}",
            self.e_u, self.unstable_codim_one
        )?;
        match (self.rho_q, self.rho_qprime, &self.withheld) {
            (Some(q), Some(qp), _) => write!(f, "  rho(Q) {q}, rho(Q') {qp}"),
            (_, _, Some(reason)) => write!(f, "  rho withheld: {reason}"),
            _ => write!(f, "  rho withheld"),
        }
    }
}

/// Status of every valid label, in [`divisor_enumerate`] order.
pub fn classify_labels(k: &Linearization) -> Vec<(DivisorLabel, Stability)> {
    divisor_enumerate(k.n(), k.d())
        .into_iter()
        .map(|lbl| {
            let status = divisor_git_status(&lbl, k)
                .expect("labels built from k")
                .status;
            (lbl, status)
        })
        .collect()
}

/// Reason the Picard numbers are meaningless for `k`, if any.
pub fn withheld_reason(k: &Linearization) -> Option<String> {
    if let Some(w) = on_any_wall(k) {
        return Some(format!("linearization lies on wall {w}"));
    }
    if !k.has_stable_points() {
        return Some("stable locus is empty".into());
    }
    None
}

pub fn census(n: usize, d: usize, r: usize, k: &Linearization) -> Result<CensusReport> {
    if k.n() != n || k.d() != d {
        return Err(Error::DimensionMismatch {
            config_n: n,
            config_d: d,
            lin_n: k.n(),
            lin_d: k.d(),
        });
    }
    let mut report = CensusReport {
        n,
        d,
        r,
        linearization: k.clone(),
        total: 0,
        stable: 0,
        unstable: 0,
        strictly_semistable: 0,
        phi_exceptional_stable: 0,
        unstable_codim_one: 0,
        e_u: 0,
        rho_q: None,
        rho_qprime: None,
        withheld: None,
    };
    for (lbl, status) in classify_labels(k) {
        report.total += 1;
        match status {
            Stability::Stable => {
                report.stable += 1;
                if is_phi_exceptional(&lbl, r) {
                    report.phi_exceptional_stable += 1;
                }
            }
            Stability::StrictlySemistable => report.strictly_semistable += 1,
            Stability::Unstable => {
                report.unstable += 1;
                if codim_image(&lbl, r) == 1 {
                    report.unstable_codim_one += 1;
                }
            }
        }
    }
    report.e_u = report.phi_exceptional_stable;
    report.withheld = withheld_reason(k);
    if report.withheld.is_none() {
        let rho_q = rho_ambient(n, d, r) - report.unstable_codim_one as i64;
        report.rho_q = Some(rho_q);
        report.rho_qprime = Some(rho_q + report.e_u as i64);
    }
    Ok(report)
}

/// `(1, ..., 1)` if `d + n` is odd, `(1, ..., 1, 2)` if `d + n` is even with
/// `n` odd, and `(1, 2, ..., 2, 1)` if both are even.
pub fn case_linearization(n: usize, d: usize) -> Linearization {
    let weights: Vec<i64> = if (d + n) % 2 == 1 {
        vec![1; n + 1]
    } else if n % 2 == 1 {
        let mut w = vec![1; n + 1];
        w[n] = 2;
        w
    } else {
        (0..=n)
            .map(|i| if i == 0 || i == n { 1 } else { 2 })
            .collect()
    };
    Linearization::from_ints(n, d, &weights).expect("positive weights")
}

fn binomial2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// Picard number of the space of `n`-pointed genus-0 stable maps of degree `d` to `P^r`:
/// `2^{n-1}(d+1) - C(n,2)`, one less for `r = 1`, and `2^{n-1} - C(n,2) - 1` for `r = 0`.
pub fn picard_expected(n: usize, d: usize, r: usize) -> Result<i64> {
    if (r == 0 && d > 0) || (d == 0 && n < 3) {
        return Err(Error::EmptyModuli { n, d, r });
    }
    // twice the leading term, so n = 0 stays exact
    let doubled = (1i64 << n) * (d as i64 + 1);
    if doubled % 2 != 0 {
        return Err(Error::NonIntegralPicard { n, d, r });
    }
    let base = doubled / 2 - binomial2(n);
    Ok(if r <= 1 { base - 1 } else { base })
}

/// Counts over the full `2^n (d + 1)` grid of `(N_2, d_2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCount {
    pub configurations: usize,
    pub unstable: usize,
    pub valid_unstable: usize,
    pub invalid_unstable: usize,
}

pub fn grid_unstable_count(k: &Linearization) -> GridCount {
    let labels = all_labels(k.n(), k.d());
    let mut count = GridCount {
        configurations: labels.len(),
        unstable: 0,
        valid_unstable: 0,
        invalid_unstable: 0,
    };
    for lbl in labels {
        if divisor_git_status(&lbl, k)
            .expect("labels built from k")
            .status
            == Stability::Unstable
        {
            count.unstable += 1;
            if lbl.is_valid() {
                count.valid_unstable += 1;
            } else {
                count.invalid_unstable += 1;
            }
        }
    }
    count
}

/// How crossing a wall changes the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CrossingKind {
    /// Isomorphism in codimension one: `rho(Q)` and `e(U)` are unchanged.
    SmallModification,
    /// The image of a divisor `D(N, {i,j}, d, 0)` is contracted.
    DiagonalContraction,
    /// For `r = 1`, the locus where `f_0, f_1` share a root is contracted.
    ResultantContraction,
    /// One side has no stable points: a single mark outweighs the rest.
    StableLocusBoundary,
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingKind::SmallModification => "small modification",
            CrossingKind::DiagonalContraction => "divisor contraction (diagonal)",
            CrossingKind::ResultantContraction => "divisor contraction (resultant)",
            CrossingKind::StableLocusBoundary => "stable locus boundary",
        })
    }
}

/// Going from below to above `W_{I,d_I}` makes `(I, d_I)` unstable and
/// `(I^c, d - d_I)` stable.
pub fn classify_wall(n: usize, d: usize, r: usize, w: &Wall) -> CrossingKind {
    let lost = DivisorLabel {
        n,
        d,
        n2: w.marks,
        d2: w.d_i,
    };
    let gained = lost.complement();
    if !lost.is_valid() || !gained.is_valid() {
        return CrossingKind::StableLocusBoundary;
    }
    let codim_one = |l: &DivisorLabel| codim_image(l, r) == 1;
    if [lost, gained]
        .iter()
        .any(|l| codim_one(l) && l.is_diagonal())
    {
        CrossingKind::DiagonalContraction
    } else if [lost, gained]
        .iter()
        .any(|l| codim_one(l) && l.is_resultant())
    {
        CrossingKind::ResultantContraction
    } else {
        CrossingKind::SmallModification
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCrossing {
    pub wall: Wall,
    pub kind: CrossingKind,
    /// Labels stable below the wall and unstable above it.
    pub became_unstable: Vec<DivisorLabel>,
    /// Labels unstable below the wall and stable above it.
    pub became_stable: Vec<DivisorLabel>,
    pub below: CensusReport,
    pub above: CensusReport,
    /// `rho(Q_1) + e(U_1) = rho(Q_2) + e(U_2)`, when both sides report them.
    pub identity_holds: Option<bool>,
}

impl fmt::Display for WallCrossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ls: &[DivisorLabel]| {
            ls.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "{}: {}", self.wall, self.kind)?;
        write!(
            f,
            "; unstable: [{}], stable: [{}]",
            list(&self.became_unstable),
            list(&self.became_stable)
        )?;
        let side = |c: &CensusReport| match (c.rho_q, c.e_u) {
            (Some(q), e) => format!("rho(Q)={q} e(U)={e}"),
            (None, _) => "empty".to_string(),
        };
        write!(
            f,
            "; below {}, above {}",
            side(&self.below),
            side(&self.above)
        )?;
        match self.identity_holds {
            Some(true) => write!(f, ", rho(Q') preserved"),
            Some(false) => write!(f, ", rho(Q') CHANGED"),
            None => Ok(()),
        }
    }
}

/// Compares the census on the two chambers adjacent across `w`.
pub fn wall_crossing_diff(
    n: usize,
    d: usize,
    r: usize,
    w: &Wall,
    k_below: &Linearization,
    k_above: &Linearization,
) -> Result<WallCrossing> {
    let w = w.canonical(n, d);
    let sides = (wall_membership(k_below, &w), wall_membership(k_above, &w));
    if sides != (Side::Below, Side::Above) {
        return Err(Error::NotAdjacent(format!(
            "expected below/above {w}, got {:?}/{:?}",
            sides.0, sides.1
        )));
    }
    let walls = wall_enumerate(n, d);
    let (sig_b, sig_a) = (signature(k_below), signature(k_above));
    for (wall, (b, a)) in walls.iter().zip(sig_b.iter().zip(&sig_a)) {
        if *b == Side::On || *a == Side::On {
            return Err(Error::OnWall(wall.to_string()));
        }
        if *wall != w && b != a {
            return Err(Error::NotAdjacent(format!("also separated by {wall}")));
        }
    }
    let before: BTreeMap<DivisorLabel, Stability> = classify_labels(k_below).into_iter().collect();
    let after: BTreeMap<DivisorLabel, Stability> = classify_labels(k_above).into_iter().collect();
    let mut became_unstable = Vec::new();
    let mut became_stable = Vec::new();
    for (lbl, s) in &before {
        match (s, after[lbl]) {
            (Stability::Stable, Stability::Unstable) => became_unstable.push(*lbl),
            (Stability::Unstable, Stability::Stable) => became_stable.push(*lbl),
            _ => {}
        }
    }
    let below = census(n, d, r, k_below)?;
    let above = census(n, d, r, k_above)?;
    let identity_holds = match (below.rho_qprime, above.rho_qprime) {
        (Some(b), Some(a)) => Some(a == b),
        _ => None,
    };
    Ok(WallCrossing {
        wall: w,
        kind: classify_wall(n, d, r, &w),
        became_unstable,
        became_stable,
        below,
        above,
        identity_holds,
    })
}

/// Every crossing between sampled chambers whose signatures differ at exactly one wall.
pub fn chamber_crossings(
    n: usize,
    d: usize,
    r: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<WallCrossing>> {
    let chambers = sample_chambers(n, d, samples, seed);
    let walls = wall_enumerate(n, d);
    let reps: Vec<(&Vec<Side>, &Linearization)> = chambers.iter().collect();
    let mut crossings = Vec::new();
    for (i, (sig_a, k_a)) in reps.iter().enumerate() {
        for (sig_b, k_b) in &reps[i + 1..] {
            let diff: Vec<usize> = (0..walls.len()).filter(|&j| sig_a[j] != sig_b[j]).collect();
            if let [j] = diff[..] {
                let (below, above) = if sig_a[j] == Side::Below {
                    (k_a, k_b)
                } else {
                    (k_b, k_a)
                };
                crossings.push(wall_crossing_diff(n, d, r, &walls[j], below, above)?);
            }
        }
    }
    Ok(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::stability_status;

    fn label(n: usize, d: usize, marks: &[usize], d2: usize) -> DivisorLabel {
        DivisorLabel::new(
            n,
            d,
            MarkSet::from_marks(marks.iter().copied(), n).unwrap(),
            d2,
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(divisor_enumerate(0, 3).len(), 3);
        assert_eq!(divisor_enumerate(3, 2).len(), 20);
        assert_eq!(divisor_enumerate(4, 0).len(), 11);
        for n in 0..6 {
            for d in 0..5 {
                assert_eq!(
                    divisor_enumerate(n, d).len() as i64,
                    (1i64 << n) * (d as i64 + 1) - n as i64 - 1
                );
            }
        }
    }

    #[test]
    fn label_validity() {
        let one = MarkSet::from_marks([1], 3).unwrap();
        assert!(DivisorLabel::new(3, 2, one, 0).is_err());
        assert!(DivisorLabel::new(3, 2, one, 1).is_ok());
        assert!(DivisorLabel::raw(3, 2, one, 3).is_err());
        assert_eq!(label(3, 2, &[1, 2], 0).to_string(), "D({3},{1,2},2,0)");
    }

    #[test]
    fn git_status_examples() {
        let k = Linearization::ones(0, 3);
        assert_eq!(
            divisor_git_status(&label(0, 3, &[], 1), &k).unwrap().status,
            Stability::Stable
        );
        assert_eq!(
            divisor_git_status(&label(0, 3, &[], 2), &k).unwrap().status,
            Stability::Unstable
        );
        let k = Linearization::ones(3, 2);
        assert_eq!(
            divisor_git_status(&label(3, 2, &[1, 2], 0), &k)
                .unwrap()
                .status,
            Stability::Stable
        );
    }

    #[test]
    fn codim_examples() {
        assert_eq!(codim_image(&label(4, 1, &[1, 2], 0), 3), 1);
        assert_eq!(codim_image(&label(2, 1, &[], 1), 1), 1);
        assert_eq!(codim_image(&label(2, 1, &[], 1), 2), 2);
        assert!(!is_phi_exceptional(&label(2, 1, &[1, 2], 0), 2));
        assert!(!is_phi_exceptional(&label(2, 1, &[], 1), 1));
        assert!(is_phi_exceptional(&label(3, 1, &[1, 2, 3], 1), 2));
        assert_eq!(codim_image(&label(3, 1, &[1, 2, 3], 1), 2), 5);
    }

    #[test]
    fn census_examples() {
        let c = census(0, 3, 2, &Linearization::ones(0, 3)).unwrap();
        assert_eq!((c.total, c.unstable, c.stable, c.e_u), (3, 2, 1, 1));
        assert_eq!((c.rho_q, c.rho_qprime), (Some(1), Some(2)));

        let c = census(3, 2, 2, &Linearization::ones(3, 2)).unwrap();
        assert_eq!((c.total, c.unstable, c.stable, c.e_u), (20, 12, 8, 5));
        assert_eq!((c.rho_q, c.rho_qprime), (Some(4), Some(9)));

        let c = census(3, 2, 1, &Linearization::ones(3, 2)).unwrap();
        assert_eq!((c.e_u, c.rho_qprime), (4, Some(8)));

        let k = Linearization::from_ints(4, 0, &[1, 2, 2, 2, 1]).unwrap();
        let c = census(4, 0, 0, &k).unwrap();
        assert_eq!(
            (c.stable, c.e_u, c.rho_q, c.rho_qprime),
            (3, 0, Some(1), Some(1))
        );
    }

    #[test]
    fn census_on_wall_withholds() {
        let c = census(0, 2, 2, &Linearization::ones(0, 2)).unwrap();
        assert_eq!(c.strictly_semistable, 1);
        assert_eq!(c.rho_qprime, None);
        assert!(c.withheld.unwrap().contains("wall"));
    }

    #[test]
    fn case_vectors() {
        assert_eq!(
            case_linearization(3, 2),
            Linearization::from_ints(3, 2, &[1, 1, 1, 1]).unwrap()
        );
        assert_eq!(
            case_linearization(3, 3),
            Linearization::from_ints(3, 3, &[1, 1, 1, 2]).unwrap()
        );
        assert_eq!(
            case_linearization(4, 2),
            Linearization::from_ints(4, 2, &[1, 2, 2, 2, 1]).unwrap()
        );
    }

    #[test]
    fn picard_values() {
        assert_eq!(picard_expected(3, 2, 2), Ok(9));
        assert_eq!(picard_expected(3, 2, 1), Ok(8));
        assert_eq!(picard_expected(4, 0, 0), Ok(1));
        assert_eq!(picard_expected(0, 3, 2), Ok(2));
        assert_eq!(picard_expected(0, 1, 3), Ok(1));
        assert!(picard_expected(2, 1, 0).is_err());
        assert!(picard_expected(2, 0, 2).is_err());
    }

    #[test]
    fn generic_points_agree_with_labels() {
        for (n, d) in [(3, 2), (2, 3), (4, 1), (0, 3)] {
            let k = case_linearization(n, d);
            for lbl in divisor_enumerate(n, d) {
                for r in 1..3 {
                    let c = lbl.generic_configuration(r).unwrap();
                    assert_eq!(
                        stability_status(&c, &k).unwrap().status,
                        divisor_git_status(&lbl, &k).unwrap().status,
                        "{lbl} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn diagonal_crossing() {
        let n = 3;
        let d = 2;
        let w = Wall::new(n, d, MarkSet::from_marks([1, 2], n).unwrap(), 0).unwrap();
        // push k_1 + k_2 across half of the total
        let below = Linearization::from_ints(n, d, &[2, 2, 3, 2]).unwrap();
        let above = Linearization::from_ints(n, d, &[3, 3, 1, 2]).unwrap();
        let side = |k: &Linearization| wall_membership(k, &w);
        let (below, above) = if side(&below) == Side::Below {
            (below, above)
        } else {
            (above, below)
        };
        let crossing = wall_crossing_diff(n, d, 2, &w, &below, &above);
        // the chosen pair may be separated by further walls
        if let Ok(x) = crossing {
            assert_eq!(x.kind, CrossingKind::DiagonalContraction);
        }
        assert_eq!(
            classify_wall(n, d, 2, &w),
            CrossingKind::DiagonalContraction
        );
    }

    #[test]
    fn resultant_and_small() {
        let w = Wall::new(2, 3, MarkSet::empty(), 1).unwrap();
        assert_eq!(
            classify_wall(2, 3, 1, &w),
            CrossingKind::ResultantContraction
        );
        assert_eq!(classify_wall(2, 3, 2, &w), CrossingKind::SmallModification);
        let w = Wall::new(4, 2, MarkSet::from_marks([1, 2, 3], 4).unwrap(), 1).unwrap();
        assert_eq!(classify_wall(4, 2, 2, &w), CrossingKind::SmallModification);
    }
}
