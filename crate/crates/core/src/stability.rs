//! Stability of configurations `(p_1, ..., p_n; f_0, ..., f_r)` on (P^1)^n x P^r_d.
//!
//! [`stability_status`] evaluates the numerical criterion
//! `S(p) = sum_{p_i = p} k_i + d_p k_{n+1}` against half of
//! `sum k_i + d k_{n+1}` over a finite candidate set. [`hm_oracle`] re-derives
//! the verdict from one-parameter subgroups: it conjugates each candidate to
//! `[1:0]` and reads off the torus weights of the Segre-Veronese embedding.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::chambers::Linearization;
use crate::equivariance::act_on_configuration;
use crate::error::{Error, Result};
use crate::geometry::{
    common_vanishing, gcd_forms, rational_roots, squarefree_decomposition, unmarked_roots,
    vanishing_order, BinaryForm, MobiusTransform, ProjPoint, RootLocus,
};
use crate::rational::{self, Rational};

/// `n` marked points and `r + 1` forms of a common degree, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    points: Vec<ProjPoint>,
    forms: Vec<BinaryForm>,
}

impl Configuration {
    pub fn new(points: Vec<ProjPoint>, forms: Vec<BinaryForm>) -> Result<Self> {
        let first = forms.first().ok_or(Error::NoForms)?;
        if let Some(f) = forms.iter().find(|f| f.degree() != first.degree()) {
            return Err(Error::MixedDegrees(first.degree(), f.degree()));
        }
        if forms.iter().all(BinaryForm::is_zero) {
            return Err(Error::AllFormsZero);
        }
        Ok(Configuration { points, forms })
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn d(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn r(&self) -> usize {
        self.forms.len() - 1
    }

    /// Same points and forms proportional by a single common scalar.
    pub fn projectively_eq(&self, other: &Configuration) -> bool {
        self.points == other.points
            && crate::geometry::projectively_equal(&self.forms, &other.forms)
    }

    /// Distinct marked points in order of first appearance.
    pub fn distinct_points(&self) -> Vec<ProjPoint> {
        let mut seen = BTreeSet::new();
        self.points
            .iter()
            .filter(|p| seen.insert((*p).clone()))
            .cloned()
            .collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(ToString::to_string).collect();
        let forms: Vec<String> = self.forms.iter().map(ToString::to_string).collect();
        write!(f, "({}; {})", pts.join(", "), forms.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigurationDoc {
    points: Vec<ProjPoint>,
    forms: Vec<BinaryForm>,
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigurationDoc {
            points: self.points.clone(),
            forms: self.forms.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ConfigurationDoc::deserialize(d)?;
        Configuration::new(doc.points, doc.forms).map_err(de::Error::custom)
    }
}

/// Ordered from worst to best, so `min` picks the most destabilized verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stability {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl Stability {
    /// Verdict for a torus with weight interval `[min, max]`.
    pub fn from_weight_interval(min: &BigInt, max: &BigInt) -> Stability {
        if min.is_negative() && max.is_positive() {
            Stability::Stable
        } else if !min.is_positive() && !max.is_negative() {
            Stability::StrictlySemistable
        } else {
            Stability::Unstable
        }
    }

    fn from_excess(excess: &Rational) -> Stability {
        if excess.is_negative() {
            Stability::Stable
        } else if excess.is_zero() {
            Stability::StrictlySemistable
        } else {
            Stability::Unstable
        }
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The point (or factor) where `S(p)` reaches half or more, and `S(p) - half`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(flatten)]
    pub locus: RootLocus,
    #[serde(with = "rational")]
    pub excess: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityStatus {
    pub status: Stability,
    pub witness: Option<Witness>,
}

impl StabilityStatus {
    fn from_worst(locus: RootLocus, excess: Rational) -> Self {
        let status = Stability::from_excess(&excess);
        let witness = (status != Stability::Stable).then_some(Witness { locus, excess });
        StabilityStatus { status, witness }
    }
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}", self.status),
            Some(w) => write!(f, "{}, witness {}", self.status, w.locus),
        }
    }
}

fn check_dimensions(c: &Configuration, k: &Linearization) -> Result<()> {
    if c.n() != k.n() || c.d() != k.d() {
        return Err(Error::DimensionMismatch {
            config_n: c.n(),
            config_d: c.d(),
            lin_n: k.n(),
            lin_d: k.d(),
        });
    }
    Ok(())
}

fn times(w: &Rational, m: usize) -> Rational {
    w * Rational::from_integer(BigInt::from(m))
}

/// `S(p) = sum_{i : p_i = p} k_i + k_{n+1} d_p` at any rational point.
pub fn load_at(c: &Configuration, k: &Linearization, p: &ProjPoint) -> Result<Rational> {
    check_dimensions(c, k)?;
    let marks: Rational = c
        .points
        .iter()
        .enumerate()
        .filter(|(_, q)| *q == p)
        .map(|(i, _)| k.mark_weight(i + 1).clone())
        .sum();
    Ok(marks + times(k.form_weight(), common_vanishing(&c.forms, p)?))
}

/// Stability of `c` for the linearization `k`.
///
/// The maximum of `S(p)` over P^1 is attained at a marked point or at a root of
/// the gcd of the forms; unmarked roots (rational or not) contribute
/// `k_{n+1}` times their multiplicity in the gcd.
pub fn stability_status(c: &Configuration, k: &Linearization) -> Result<StabilityStatus> {
    check_dimensions(c, k)?;
    let gcd = gcd_forms(&c.forms)?;
    let half = k.half();

    let mut candidates: Vec<(RootLocus, Rational)> = Vec::new();
    let distinct = c.distinct_points();
    for p in &distinct {
        let marks: Rational = c
            .points
            .iter()
            .enumerate()
            .filter(|(_, q)| *q == p)
            .map(|(i, _)| k.mark_weight(i + 1).clone())
            .sum();
        let load = marks + times(k.form_weight(), vanishing_order(&gcd, p)?);
        candidates.push((RootLocus::Point(p.clone()), load));
    }
    let marked: BTreeSet<ProjPoint> = distinct.into_iter().collect();
    for (locus, mult) in unmarked_roots(&gcd, &marked)? {
        candidates.push((locus, times(k.form_weight(), mult)));
    }
    // S vanishes identically away from the candidates.
    let (locus, load) = candidates
        .into_iter()
        .reduce(|best, next| if next.1 > best.1 { next } else { best })
        .unwrap_or((RootLocus::Point(ProjPoint::infinity()), Rational::zero()));
    Ok(StabilityStatus::from_worst(locus, load - half))
}

/// Extreme torus weights of the nonzero coordinates of the Segre-Veronese image
/// of `c`, for `lambda(t) = diag(t^-1, t)`.
pub fn torus_weight_interval(c: &Configuration, k: &Linearization) -> Result<(BigInt, BigInt)> {
    check_dimensions(c, k)?;
    let weights = k.integer_weights()?;
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (p, w) in c.points.iter().zip(&weights) {
        // exponent 2 s - k over the admissible s
        if p.is_infinity() {
            lo -= w;
            hi -= w;
        } else if p.x().is_zero() {
            lo += w;
            hi += w;
        } else {
            lo -= w;
            hi += w;
        }
    }
    let indices: Vec<usize> = c
        .forms
        .iter()
        .flat_map(|f| {
            f.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, _)| i)
        })
        .collect();
    let i_min = *indices.iter().min().ok_or(Error::AllFormsZero)?;
    let i_max = *indices.iter().max().unwrap();
    let d = c.d() as i64;
    let form_weight = &weights[c.n()];
    lo += form_weight * BigInt::from(d - 2 * i_max as i64);
    hi += form_weight * BigInt::from(d - 2 * i_min as i64);
    Ok((lo, hi))
}

/// Stability for the maximal torus `diag(t^-1, t)` alone. The witness is
/// `[1:0]` or `[0:1]`, with excess read off the weight interval.
pub fn torus_stability(c: &Configuration, k: &Linearization) -> Result<StabilityStatus> {
    let (lo, hi) = torus_weight_interval(c, k)?;
    let status = Stability::from_weight_interval(&lo, &hi);
    let two = rational::int(2);
    let witness = match status {
        Stability::Stable => None,
        // max weight = total - 2 S([1:0]), min weight = 2 S([0:1]) - total
        _ if !hi.is_positive() => Some(Witness {
            locus: RootLocus::Point(ProjPoint::infinity()),
            excess: Rational::from_integer(-hi) / &two,
        }),
        _ => Some(Witness {
            locus: RootLocus::Point(ProjPoint::zero()),
            excess: Rational::from_integer(lo) / &two,
        }),
    };
    Ok(StabilityStatus { status, witness })
}

/// Hilbert-Mumford re-derivation of [`stability_status`].
///
/// For every marked point and every rational root of the gcd, a rational
/// Möbius map sends the candidate to `[1:0]` and the torus verdict of the moved
/// configuration is taken. Irrational roots admit no rational conjugation and
/// are bounded by their multiplicity in the gcd. The result is the worst
/// verdict, ties broken by the larger excess.
pub fn hm_oracle(c: &Configuration, k: &Linearization) -> Result<StabilityStatus> {
    check_dimensions(c, k)?;
    k.integer_weights()?;
    let gcd = gcd_forms(&c.forms)?;

    let mut centers = vec![ProjPoint::infinity()];
    centers.extend(c.distinct_points());
    centers.extend(rational_roots(&gcd)?);

    let mut verdicts = Vec::new();
    for p in &centers {
        let g = MobiusTransform::moving_to_infinity(p);
        let moved = act_on_configuration(&g, c);
        let mut verdict = torus_stability(&moved, k)?;
        if let Some(w) = verdict.witness.as_mut() {
            if let RootLocus::Point(q) = &w.locus {
                w.locus = RootLocus::Point(g.inverse().apply(q));
            }
        }
        verdicts.push(verdict);
    }

    let half = k.half();
    for (factor, mult) in squarefree_decomposition(&gcd)? {
        let rational: Vec<ProjPoint> = rational_roots(&factor)?;
        if rational.len() < factor.degree() {
            let excess = times(k.form_weight(), mult) - &half;
            verdicts.push(StabilityStatus::from_worst(
                RootLocus::Factor(factor),
                excess,
            ));
        }
    }

    let excess = |s: &StabilityStatus| s.witness.as_ref().map(|w| w.excess.clone());
    Ok(verdicts
        .into_iter()
        .reduce(|best, next| {
            let worse = next.status < best.status
                || (next.status == best.status && excess(&next) > excess(&best));
            if worse {
                next
            } else {
                best
            }
        })
        .expect("at least the identity conjugation"))
}
