//! Linearizations on (P^1)^n x P^r_d, the walls `W_{I,d_I}` and chamber signatures.
//!
//! A wall `W_{I,d_I}` is the hyperplane `sum_{i in I} k_i + d_I k_{n+1} = 1` on
//! the simplex `sum k_i + d k_{n+1} = 2`. Off the simplex we compare against
//! half of `sum k_i + d k_{n+1}` instead, which is the same test after scaling.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::marks::MarkSet;
use crate::rational::{self, format_rational, Rational};

/// Positive weights `(k_1, ..., k_n, k_{n+1})`; the last weight sits on P^r_d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Linearization {
    n: usize,
    d: usize,
    weights: Vec<Rational>,
}

impl Linearization {
    pub fn new(n: usize, d: usize, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != n + 1 {
            return Err(Error::WeightCount {
                expected: n + 1,
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight {
                index: i + 1,
                value: format_rational(&weights[i]),
            });
        }
        Ok(Linearization { n, d, weights })
    }

    pub fn from_ints(n: usize, d: usize, weights: &[i64]) -> Result<Self> {
        Self::new(n, d, weights.iter().map(|&w| rational::int(w)).collect())
    }

    /// `(1, ..., 1)`
    pub fn ones(n: usize, d: usize) -> Self {
        Self::new(n, d, vec![Rational::one(); n + 1]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Weight of mark `i` (1-based).
    pub fn mark_weight(&self, i: usize) -> &Rational {
        &self.weights[i - 1]
    }

    pub fn form_weight(&self) -> &Rational {
        &self.weights[self.n]
    }

    /// `sum_{i in marks} k_i + degree * k_{n+1}`
    pub fn load(&self, marks: MarkSet, degree: usize) -> Rational {
        marks
            .iter()
            .map(|i| self.mark_weight(i).clone())
            .sum::<Rational>()
            + self.form_weight() * Rational::from_integer(BigInt::from(degree))
    }

    /// `sum k_i + d k_{n+1}`
    pub fn total(&self) -> Rational {
        self.load(MarkSet::full(self.n), self.d)
    }

    /// Right-hand side of the stability inequality: half the total.
    pub fn half(&self) -> Rational {
        self.total() / Rational::from_integer(BigInt::from(2))
    }

    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Self::new(
            self.n,
            self.d,
            self.weights.iter().map(|w| w * factor).collect(),
        )
    }

    pub fn is_normalized(&self) -> bool {
        self.total() == rational::int(2)
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    /// Smallest positive multiple with integer weights.
    pub fn integral_multiple(&self) -> Self {
        let lcm = self
            .weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        self.scaled(&Rational::from_integer(lcm)).unwrap()
    }

    /// Integer weights, or the first offending index.
    pub fn integer_weights(&self) -> Result<Vec<BigInt>> {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if w.is_integer() {
                    Ok(w.to_integer())
                } else {
                    Err(Error::NonIntegerWeight {
                        index: i + 1,
                        value: format_rational(w),
                    })
                }
            })
            .collect()
    }

    /// True when a configuration of distinct points and base-point-free forms
    /// is stable, i.e. every single mark weighs less than half and half > 0.
    pub fn has_stable_points(&self) -> bool {
        let half = self.half();
        half.is_positive() && self.weights[..self.n].iter().all(|w| *w < half)
    }
}

impl fmt::Display for Linearization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(format_rational).collect();
        write!(f, "({})", ws.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinearizationDoc {
    n: usize,
    d: usize,
    #[serde(with = "rational::vec")]
    weights: Vec<Rational>,
}

impl Serialize for Linearization {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LinearizationDoc {
            n: self.n,
            d: self.d,
            weights: self.weights.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Linearization {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = LinearizationDoc::deserialize(d)?;
        Linearization::new(doc.n, doc.d, doc.weights).map_err(de::Error::custom)
    }
}

/// The positive multiple of `k` on the simplex `sum k_i + d k_{n+1} = 2`.
pub fn normalize_to_simplex(k: &Linearization) -> Result<Linearization> {
    let total = k.total();
    if total.is_zero() {
        return Err(Error::DegenerateNormalization);
    }
    k.scaled(&(rational::int(2) / total))
}

/// A wall `W_{I,d_I}`, stored as the smaller of `(I, d_I)` and `(I^c, d - d_I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Wall {
    #[serde(rename = "I")]
    pub marks: MarkSet,
    #[serde(rename = "dI")]
    pub d_i: usize,
}

impl Wall {
    pub fn new(n: usize, d: usize, marks: MarkSet, d_i: usize) -> Result<Self> {
        if d_i > d {
            return Err(Error::WallDegree { d_i, d });
        }
        if !marks.is_within(n) {
            let bad = marks.iter().find(|&m| m > n).unwrap();
            return Err(Error::MarkOutOfRange { index: bad, n });
        }
        Ok(Wall { marks, d_i }.canonical(n, d))
    }

    /// The other label `(I^c, d - d_I)` of the same wall.
    pub fn partner(&self, n: usize, d: usize) -> Wall {
        Wall {
            marks: self.marks.complement(n),
            d_i: d - self.d_i,
        }
    }

    pub fn canonical(&self, n: usize, d: usize) -> Wall {
        let other = self.partner(n, d);
        let key = |w: &Wall| (w.marks.bits(), w.d_i);
        if key(&other) < key(self) {
            other
        } else {
            *self
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({}, {})", self.marks, self.d_i)
    }
}

/// Position of a linearization relative to a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Below,
    On,
    Above,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Below => Side::Above,
            Side::On => Side::On,
            Side::Above => Side::Below,
        }
    }
}

/// All walls for `(n, d)` up to the identification `W_{I,d_I} = W_{I^c,d-d_I}`,
/// sorted by canonical representative.
pub fn wall_enumerate(n: usize, d: usize) -> Vec<Wall> {
    let mut walls: Vec<Wall> = MarkSet::all(n)
        .flat_map(|marks| (0..=d).map(move |d_i| Wall { marks, d_i }.canonical(n, d)))
        .collect();
    walls.sort();
    walls.dedup();
    walls
}

/// Side of `k` relative to `w`: the sign of `sum_{I} k_i + d_I k_{n+1} - 1`
/// after normalizing `k` to the simplex.
pub fn wall_membership(k: &Linearization, w: &Wall) -> Side {
    let diff = k.load(w.marks, w.d_i) - k.half();
    if diff.is_zero() {
        Side::On
    } else if diff.is_positive() {
        Side::Above
    } else {
        Side::Below
    }
}

pub fn on_any_wall(k: &Linearization) -> Option<Wall> {
    wall_enumerate(k.n, k.d)
        .into_iter()
        .find(|w| wall_membership(k, w) == Side::On)
}

/// Side of `k` against every wall of `wall_enumerate(n, d)`, in that order.
pub fn signature(k: &Linearization) -> Vec<Side> {
    wall_enumerate(k.n, k.d)
        .iter()
        .map(|w| wall_membership(k, w))
        .collect()
}

fn check_same_space(k: &Linearization, other: &Linearization) -> Result<()> {
    if k.n != other.n || k.d != other.d {
        return Err(Error::DimensionMismatch {
            config_n: other.n,
            config_d: other.d,
            lin_n: k.n,
            lin_d: k.d,
        });
    }
    Ok(())
}

pub fn same_chamber(k: &Linearization, other: &Linearization) -> Result<bool> {
    check_same_space(k, other)?;
    for lin in [k, other] {
        if let Some(w) = on_any_wall(lin) {
            return Err(Error::OnWall(w.to_string()));
        }
    }
    Ok(signature(k) == signature(other))
}

/// One off-wall representative per chamber signature found by sampling
/// positive rational weight vectors; the same seed gives the same result.
pub fn sample_chambers(
    n: usize,
    d: usize,
    samples: usize,
    seed: u64,
) -> BTreeMap<Vec<Side>, Linearization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeMap::new();
    for _ in 0..samples {
        let weights = (0..=n)
            .map(|_| rational::rat(rng.gen_range(1..=997), rng.gen_range(1..=997)))
            .collect();
        let k = Linearization::new(n, d, weights).unwrap();
        let sig = signature(&k);
        if sig.contains(&Side::On) {
            continue;
        }
        found
            .entry(sig)
            .or_insert_with(|| normalize_to_simplex(&k).unwrap_or(k));
    }
    found
}
