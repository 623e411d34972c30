//! Exact geometry of P^1 over Q: points, Möbius transformations and binary forms.
//!
//! A binary form of degree `d` is stored as `(a_0, ..., a_d)` where `a_i`
//! multiplies `x^(d-i) y^i`. The point `[1:0]` corresponds to the factor `y`,
//! a finite point `[a:1]` to the factor `x - a*y`.

use std::collections::BTreeSet;
use std::fmt;

use num::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, binomial, format_rational, pow, Rational};

/// A point of P^1 in canonical affine form: `[x:1]` when possible, else `[1:0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    x: Rational,
    y: Rational,
}

impl ProjPoint {
    pub fn new(x: Rational, y: Rational) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(if y.is_zero() {
            ProjPoint {
                x: Rational::one(),
                y,
            }
        } else {
            ProjPoint {
                x: x / &y,
                y: Rational::one(),
            }
        })
    }

    /// The finite point `[value:1]`.
    pub fn affine(value: Rational) -> Self {
        ProjPoint {
            x: value,
            y: Rational::one(),
        }
    }

    pub fn infinity() -> Self {
        ProjPoint {
            x: Rational::one(),
            y: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::affine(Rational::zero())
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// Affine coordinate `x/y`, `None` at `[1:0]`.
    pub fn affine_value(&self) -> Option<&Rational> {
        (!self.is_infinity()).then_some(&self.x)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}:{}]",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let x = rational::parse_rational(&x).map_err(de::Error::custom)?;
        let y = rational::parse_rational(&y).map_err(de::Error::custom)?;
        ProjPoint::new(x, y).map_err(de::Error::custom)
    }
}

/// An invertible 2x2 rational matrix `((a, b), (c, d))` acting on `[x:y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusTransform {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl MobiusTransform {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let m = MobiusTransform { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(
            rational::int(a),
            rational::int(b),
            rational::int(c),
            rational::int(d),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).unwrap()
    }

    /// `((0, 1), (1, 0))`: exchanges x and y.
    pub fn swap() -> Self {
        Self::from_ints(0, 1, 1, 0).unwrap()
    }

    /// A transformation sending `p` to `[1:0]`.
    pub fn moving_to_infinity(p: &ProjPoint) -> Self {
        match p.affine_value() {
            None => Self::identity(),
            // ((0, 1), (1, -a)) maps [a:1] to [1:0]
            Some(a) => Self::new(
                Rational::zero(),
                Rational::one(),
                Rational::one(),
                -a.clone(),
            )
            .unwrap(),
        }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let x = &self.a * p.x() + &self.b * p.y();
        let y = &self.c * p.x() + &self.d * p.y();
        ProjPoint::new(x, y).expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &MobiusTransform) -> MobiusTransform {
        MobiusTransform {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn inverse(&self) -> MobiusTransform {
        let det = self.det();
        MobiusTransform {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }
}

impl Serialize for MobiusTransform {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let f = format_rational;
        [[f(&self.a), f(&self.b)], [f(&self.c), f(&self.d)]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for MobiusTransform {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, dd]] = <[[String; 2]; 2]>::deserialize(d)?;
        let p = |t: &str| rational::parse_rational(t).map_err(de::Error::custom);
        MobiusTransform::new(p(&a)?, p(&b)?, p(&c)?, p(&dd)?).map_err(de::Error::custom)
    }
}

/// Homogeneous form of degree `d` in `x, y` with coefficients `(a_0, ..., a_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::CoefficientCount {
                degree,
                expected: degree + 1,
                got: coeffs.len(),
            });
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        BinaryForm {
            coeffs: coeffs.iter().map(|&c| rational::int(c)).collect(),
        }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn constant(value: Rational) -> Self {
        BinaryForm {
            coeffs: vec![value],
        }
    }

    /// `x^(degree-i) y^i`
    pub fn monomial(degree: usize, i: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = Rational::one();
        f
    }

    /// The linear form vanishing at `p`, scaled so its leading nonzero
    /// coefficient is 1: `x - a*y` for `[a:1]`, `y` for `[1:0]`.
    pub fn linear_at(p: &ProjPoint) -> Self {
        match p.affine_value() {
            Some(a) => BinaryForm {
                coeffs: vec![Rational::one(), -a.clone()],
            },
            None => BinaryForm {
                coeffs: vec![Rational::zero(), Rational::one()],
            },
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Scaled so the first nonzero coefficient is 1; the zero form is unchanged.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let lead = lead.clone();
                BinaryForm {
                    coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
                }
            }
            None => self.clone(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, exp: usize) -> BinaryForm {
        (0..exp).fold(BinaryForm::constant(Rational::one()), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Rational {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * pow(p.x(), d - i) * pow(p.y(), i))
            .sum()
    }

    /// `f(x, 1)` as an ascending polynomial in x.
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenize `poly` to a form of the given degree (extra factors of y).
    pub fn homogenize(poly: &Poly, degree: usize) -> Self {
        let deg = poly.degree().unwrap_or(0);
        assert!(
            deg <= degree,
            "homogenizing to a degree below the polynomial degree"
        );
        let mut coeffs = vec![Rational::zero(); degree + 1];
        for (j, c) in poly.coeffs().iter().enumerate() {
            coeffs[degree - j] = c.clone();
        }
        BinaryForm { coeffs }
    }

    /// Order of vanishing at `[1:0]`, i.e. the power of `y` dividing the form.
    fn y_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero form")
    }

    /// `f(a*x + b*y, c*x + d*y)`, the literal substitution by `g`.
    pub fn compose(&self, g: &MobiusTransform) -> BinaryForm {
        let [a, b, c, d] = g.entries();
        let first = BinaryForm {
            coeffs: vec![a.clone(), b.clone()],
        };
        let second = BinaryForm {
            coeffs: vec![c.clone(), d.clone()],
        };
        let deg = self.degree();
        let mut out = BinaryForm::zero(deg);
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let term = first.pow(deg - i).mul(&second.pow(i));
            for (slot, t) in out.coeffs.iter_mut().zip(term.coeffs) {
                *slot += coeff * t;
            }
        }
        out
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (px, py) => {
                    let part = |v: &str, e: usize| match e {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{e}"),
                    };
                    format!("{}{}", part("x", px), part("y", py))
                }
            };
            let coeff = format_rational(c);
            terms.push(match (coeff.as_str(), mono.is_empty()) {
                (_, true) => coeff,
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{coeff}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormDoc {
    degree: usize,
    #[serde(with = "rational::vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormDoc {
            degree: self.degree(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = FormDoc::deserialize(d)?;
        BinaryForm::new(doc.degree, doc.coeffs).map_err(de::Error::custom)
    }
}

/// Where a root of a form sits: a rational point, or the roots of an
/// irreducible-over-the-marks factor (possibly irrational).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLocus {
    Point(ProjPoint),
    Factor(BinaryForm),
}

impl fmt::Display for RootLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLocus::Point(p) => write!(f, "{p}"),
            RootLocus::Factor(g) => write!(f, "roots of {g}"),
        }
    }
}

pub fn mobius_apply(g: &MobiusTransform, p: &ProjPoint) -> ProjPoint {
    g.apply(p)
}

pub fn form_compose(f: &BinaryForm, g: &MobiusTransform) -> BinaryForm {
    f.compose(g)
}

pub fn vanishing_order(f: &BinaryForm, p: &ProjPoint) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(match p.affine_value() {
        None => f.y_order(),
        Some(a) => f.dehomogenize().root_multiplicity(a),
    })
}

fn nonzero_forms(forms: &[BinaryForm]) -> Result<Vec<&BinaryForm>> {
    let nz: Vec<_> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nz.is_empty() {
        return Err(Error::AllFormsZero);
    }
    Ok(nz)
}

/// `d_p`: the least vanishing order at `p` among the nonzero forms.
pub fn common_vanishing(forms: &[BinaryForm], p: &ProjPoint) -> Result<usize> {
    let nz = nonzero_forms(forms)?;
    Ok(nz
        .iter()
        .map(|f| vanishing_order(f, p).unwrap())
        .min()
        .unwrap())
}

/// Greatest common divisor of the nonzero forms, leading nonzero coefficient 1.
pub fn gcd_forms(forms: &[BinaryForm]) -> Result<BinaryForm> {
    let nz = nonzero_forms(forms)?;
    let y_power = nz.iter().map(|f| f.y_order()).min().unwrap();
    let affine = nz
        .iter()
        .fold(Poly::zero(), |acc, f| acc.gcd(&f.dehomogenize()));
    let deg = affine.degree().unwrap() + y_power;
    Ok(BinaryForm::homogenize(&affine, deg))
}

/// Homogeneous square-free decomposition of a nonzero form: `(g_e, e)` pairs with
/// each `g_e` normalized and square-free. The factor `y` (root `[1:0]`) is
/// folded into the level of its multiplicity.
pub fn squarefree_decomposition(g: &BinaryForm) -> Result<Vec<(BinaryForm, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let y_power = g.y_order();
    let mut levels: Vec<(BinaryForm, usize)> = g
        .dehomogenize()
        .squarefree_decomposition()
        .into_iter()
        .map(|(p, e)| {
            let deg = p.degree().unwrap();
            (BinaryForm::homogenize(&p, deg), e)
        })
        .collect();
    if y_power > 0 {
        let y = BinaryForm::linear_at(&ProjPoint::infinity());
        match levels.iter_mut().find(|(_, e)| *e == y_power) {
            Some(level) => level.0 = level.0.mul(&y).normalized(),
            None => levels.push((y, y_power)),
        }
        levels.sort_by_key(|(_, e)| *e);
    }
    Ok(levels)
}

/// Roots of `g` away from `marked`, grouped by multiplicity. `[1:0]` comes
/// first; then, for each multiplicity level in increasing order, the part of
/// the square-free factor left after removing marked linear factors (a point
/// when it is linear).
pub fn unmarked_roots(
    g: &BinaryForm,
    marked: &BTreeSet<ProjPoint>,
) -> Result<Vec<(RootLocus, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut out = Vec::new();
    let y_power = g.y_order();
    if y_power > 0 && !marked.contains(&ProjPoint::infinity()) {
        out.push((RootLocus::Point(ProjPoint::infinity()), y_power));
    }
    for (factor, e) in g.dehomogenize().squarefree_decomposition() {
        let mut residual = factor;
        for p in marked {
            if let Some(a) = p.affine_value() {
                if residual.eval(a).is_zero() {
                    residual = residual.exact_div(&Poly::linear(a));
                }
            }
        }
        match residual.degree() {
            Some(0) | None => {}
            Some(1) => {
                let root = -&residual.coeffs()[0] / &residual.coeffs()[1];
                out.push((RootLocus::Point(ProjPoint::affine(root)), e));
            }
            Some(deg) => out.push((
                RootLocus::Factor(BinaryForm::homogenize(&residual.monic(), deg)),
                e,
            )),
        }
    }
    Ok(out)
}

/// Largest multiplicity of a root of `g` (over the algebraic closure) lying
/// outside `marked`; 0 when every root is marked.
pub fn max_unmarked_multiplicity(g: &BinaryForm, marked: &BTreeSet<ProjPoint>) -> Result<usize> {
    Ok(unmarked_roots(g, marked)?
        .into_iter()
        .map(|(_, e)| e)
        .max()
        .unwrap_or(0))
}

/// Distinct rational roots of a nonzero form, `[1:0]` first.
pub fn rational_roots(g: &BinaryForm) -> Result<Vec<ProjPoint>> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut out = Vec::new();
    if g.y_order() > 0 {
        out.push(ProjPoint::infinity());
    }
    let affine = g.dehomogenize();
    if affine.degree().is_some_and(|d| d > 0) {
        out.extend(affine.rational_roots().into_iter().map(ProjPoint::affine));
    }
    Ok(out)
}

/// Coefficient vectors proportional by one common nonzero scalar.
pub fn projectively_equal(lhs: &[BinaryForm], rhs: &[BinaryForm]) -> bool {
    if lhs.len() != rhs.len() || lhs.iter().zip(rhs).any(|(f, g)| f.degree() != g.degree()) {
        return false;
    }
    let left: Vec<&Rational> = lhs.iter().flat_map(|f| f.coeffs()).collect();
    let right: Vec<&Rational> = rhs.iter().flat_map(|f| f.coeffs()).collect();
    proportional(&left, &right)
}

pub(crate) fn proportional(left: &[&Rational], right: &[&Rational]) -> bool {
    let Some(pivot) = left.iter().position(|c| !c.is_zero()) else {
        return right.iter().all(|c| c.is_zero());
    };
    if right[pivot].is_zero() {
        return false;
    }
    let ratio = right[pivot] / left[pivot];
    left.iter().zip(right).all(|(l, r)| &(*l * &ratio) == *r)
}

/// Coefficients of `x^(k-j) y^j` in `(a x + b y)^(k-i) (c x + d y)^i`, computed by
/// the closed binomial sum.
pub(crate) fn binomial_product_coefficient(
    g: &MobiusTransform,
    k: usize,
    i: usize,
    j: usize,
) -> Rational {
    let [a, b, c, d] = g.entries();
    let mut acc = Rational::zero();
    // choose m of the y's from (ax+by)^(k-i) and j-m from (cx+dy)^i
    for m in 0..=j {
        if m > k - i || j - m > i {
            continue;
        }
        let coeff = Rational::from_integer(binomial(k - i, m) * binomial(i, j - m));
        acc += coeff * pow(b, m) * pow(a, k - i - m) * pow(d, j - m) * pow(c, i + m - j);
    }
    acc
}
