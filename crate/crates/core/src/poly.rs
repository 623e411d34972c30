//! Dense univariate polynomials over Q, used for dehomogenized binary forms.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `x^i`) and
//! the zero polynomial is the empty vector.

use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Rational::one()],
        }
    }

    /// `x - root`
    pub fn linear(root: &Rational) -> Self {
        Poly {
            coeffs: vec![-root.clone(), Rational::one()],
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let lc = lc.clone();
                Poly::new(self.coeffs.iter().map(|c| c / &lc).collect())
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let q = top / &lc;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * c;
            }
            quot[shift] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `root` as a zero of a nonzero polynomial.
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        let mut p = self.clone();
        let mut count = 0;
        // synthetic division by (x - root)
        loop {
            let Some(deg) = p.degree() else {
                unreachable!("root multiplicity of the zero polynomial");
            };
            if deg == 0 {
                return count;
            }
            let mut quot = vec![Rational::zero(); deg];
            let mut carry = Rational::zero();
            for i in (0..=deg).rev() {
                let v = &p.coeffs[i] + &carry * root;
                if i == 0 {
                    if !v.is_zero() {
                        return count;
                    }
                } else {
                    quot[i - 1] = v.clone();
                }
                carry = v;
            }
            p = Poly::new(quot);
            count += 1;
        }
    }

    /// Yun's square-free decomposition of a nonzero polynomial: pairs
    /// `(g_e, e)` with each `g_e` monic, square-free, pairwise coprime and
    /// non-constant, such that `self = lc * prod g_e^e`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut e = 1;
        while b.degree() != Some(0) {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((a, e));
            }
            e += 1;
        }
        out
    }

    /// Distinct rational roots, ascending. Candidates come from the rational
    /// root theorem, so cost grows with the size of the extreme coefficients.
    pub fn rational_roots(&self) -> Vec<Rational> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let ints = self.integer_coefficients();
        let mut roots = Vec::new();
        let lowest = ints.iter().position(|c| !c.is_zero()).unwrap();
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let trimmed = &ints[lowest..];
        if trimmed.len() > 1 {
            let p_divs = divisors(&trimmed[0].abs());
            let q_divs = divisors(&trimmed[trimmed.len() - 1].abs());
            let reduced = Poly::new(
                trimmed
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect(),
            );
            let mut seen = std::collections::BTreeSet::new();
            for p in &p_divs {
                for q in &q_divs {
                    for sign in [1, -1] {
                        let cand = Rational::new(p * BigInt::from(sign), q.clone());
                        if seen.insert(cand.clone()) && reduced.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Primitive integer multiple of the coefficient vector.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let j = n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_roundtrip() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn yun_decomposition() {
        // x^3 (x-1) (x^2+1)^2
        let x = p(&[0, 1]);
        let f = &(&(&(&x * &x) * &x) * &p(&[-1, 1])) * &(&p(&[1, 0, 1]) * &p(&[1, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[-1, 1]), 1), (p(&[1, 0, 1]), 2), (x, 3)]);
    }

    #[test]
    fn multiplicities() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        assert_eq!(f.root_multiplicity(&int(1)), 2);
        assert_eq!(f.root_multiplicity(&int(-3)), 1);
        assert_eq!(f.root_multiplicity(&int(0)), 0);
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(3x + 4) x
        let f = &(&p(&[-1, 2]) * &p(&[4, 3])) * &p(&[0, 1]);
        assert_eq!(f.rational_roots(), vec![rat(-4, 3), int(0), rat(1, 2)]);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
        assert!(p(&[5]).rational_roots().is_empty());
    }
}
