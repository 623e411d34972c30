//! The representation `rho: GL_2 -> GL(k+1)` on degree-`k` binary forms, the
//! Veronese map and the group action on configurations.

use std::fmt;
use std::ops::Mul;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::geometry::{binomial_product_coefficient, proportional, MobiusTransform, ProjPoint};
use crate::rational::{self, pow, Rational};
use crate::stability::Configuration;

/// A square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepMatrix {
    size: usize,
    #[serde(with = "rational::vec")]
    entries: Vec<Rational>,
}

impl RepMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![Rational::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Rational::one();
        }
        RepMatrix { size, entries }
    }

    /// Builds a matrix from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "rows must form a square matrix"
        );
        RepMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn transpose(&self) -> RepMatrix {
        let n = self.size;
        let entries = (0..n * n)
            .map(|idx| self.get(idx % n, idx / n).clone())
            .collect();
        RepMatrix { size: n, entries }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.size, "vector length must match matrix size");
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Mul for &RepMatrix {
    type Output = RepMatrix;

    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.size, rhs.size, "matrix sizes must agree");
        let n = self.size;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.get(l, j);
                }
            }
        }
        RepMatrix { size: n, entries }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                format!(
                    "({})",
                    r.iter()
                        .map(rational::format_rational)
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect();
        write!(f, "({})", rows.join(", "))
    }
}

/// `a_{ij}` is the coefficient of `x^(k-j) y^j` in `(ax+by)^(k-i) (cx+dy)^i`.
pub fn rho_matrix(g: &MobiusTransform, k: usize) -> RepMatrix {
    let entries = (0..=k)
        .flat_map(|i| (0..=k).map(move |j| (i, j)))
        .map(|(i, j)| binomial_product_coefficient(g, k, i, j))
        .collect();
    RepMatrix {
        size: k + 1,
        entries,
    }
}

/// `(x^k, x^(k-1) y, ..., y^k)`.
pub fn veronese(p: &ProjPoint, k: usize) -> Vec<Rational> {
    (0..=k).map(|j| pow(p.x(), k - j) * pow(p.y(), j)).collect()
}

/// Projective equality of two coordinate vectors.
pub fn projectively_equal_vectors(u: &[Rational], v: &[Rational]) -> bool {
    if u.len() != v.len() || u.iter().all(Zero::is_zero) || v.iter().all(Zero::is_zero) {
        return false;
    }
    let u: Vec<&Rational> = u.iter().collect();
    let v: Vec<&Rational> = v.iter().collect();
    proportional(&u, &v)
}

/// `g . (p_1, ..., p_n; f_0, ..., f_r) = (g p_1, ..., g p_n; f_0 o g^-1, ..., f_r o g^-1)`.
pub fn act_on_configuration(g: &MobiusTransform, c: &Configuration) -> Configuration {
    let inv = g.inverse();
    let points = c.points().iter().map(|p| g.apply(p)).collect();
    let forms = c.forms().iter().map(|f| f.compose(&inv)).collect();
    Configuration::new(points, forms).expect("the action preserves degrees and nonvanishing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{common_vanishing, form_compose, BinaryForm};
    use crate::rational::int;

    fn m(a: i64, b: i64, c: i64, d: i64) -> MobiusTransform {
        MobiusTransform::from_ints(a, b, c, d).unwrap()
    }

    fn rows(rs: &[&[i64]]) -> RepMatrix {
        RepMatrix::from_rows(
            rs.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_matrix(&m(2, 3, 5, 7), 1), rows(&[&[2, 3], &[5, 7]]));
        assert_eq!(
            rho_matrix(&MobiusTransform::identity(), 4),
            RepMatrix::identity(5)
        );
        assert_eq!(
            rho_matrix(&m(1, 1, 0, 1), 2),
            rows(&[&[1, 2, 1], &[0, 1, 1], &[0, 0, 1]])
        );
    }

    #[test]
    fn rho_homomorphism_small() {
        let g = m(1, 2, -1, 3);
        let h = m(0, 1, 4, -2);
        for k in 0..5 {
            assert_eq!(
                rho_matrix(&g.compose(&h), k),
                &rho_matrix(&g, k) * &rho_matrix(&h, k)
            );
        }
    }

    #[test]
    fn rho_transposes_composition() {
        let g = m(2, -1, 1, 1);
        let f = BinaryForm::from_ints(&[1, -2, 0, 5]);
        let rho_t = rho_matrix(&g, 3).transpose();
        assert_eq!(
            form_compose(&f, &g).coeffs(),
            rho_t.apply(f.coeffs()).as_slice()
        );
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(
            veronese(&ProjPoint::infinity(), 3),
            vec![int(1), int(0), int(0), int(0)]
        );
        assert_eq!(veronese(&ProjPoint::affine(int(1)), 2), vec![int(1); 3]);
        assert_eq!(
            veronese(&ProjPoint::affine(int(2)), 2),
            vec![int(4), int(2), int(1)]
        );
    }

    #[test]
    fn veronese_equivariance() {
        let g = m(3, 1, -2, 5);
        for p in [
            ProjPoint::infinity(),
            ProjPoint::zero(),
            ProjPoint::affine(rational::rat(-3, 4)),
        ] {
            let lhs = veronese(&g.apply(&p), 4);
            let rhs = rho_matrix(&g, 4).apply(&veronese(&p, 4));
            assert!(projectively_equal_vectors(&lhs, &rhs));
        }
    }

    #[test]
    fn action_examples() {
        let c = Configuration::new(
            vec![ProjPoint::zero()],
            vec![
                BinaryForm::from_ints(&[1, 0]),
                BinaryForm::from_ints(&[0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(act_on_configuration(&MobiusTransform::identity(), &c), c);
        let moved = act_on_configuration(&m(1, 1, 0, 1), &c);
        assert_eq!(moved.points(), &[ProjPoint::affine(int(1))]);
        assert_eq!(
            moved.forms(),
            &[
                BinaryForm::from_ints(&[1, -1]),
                BinaryForm::from_ints(&[0, 1])
            ]
        );
        let swapped = act_on_configuration(&MobiusTransform::swap(), &c);
        assert_eq!(swapped.points(), &[ProjPoint::infinity()]);
        assert_eq!(
            swapped.forms(),
            &[
                BinaryForm::from_ints(&[0, 1]),
                BinaryForm::from_ints(&[1, 0])
            ]
        );
    }

    #[test]
    fn left_action_and_covariance() {
        let c = Configuration::new(
            vec![ProjPoint::affine(int(2)), ProjPoint::infinity()],
            vec![
                BinaryForm::from_ints(&[0, 1, -2]),
                BinaryForm::from_ints(&[0, 0, 1]),
            ],
        )
        .unwrap();
        let g = m(1, 2, 3, 5);
        let h = m(0, -1, 1, 4);
        assert_eq!(
            act_on_configuration(&g, &act_on_configuration(&h, &c)),
            act_on_configuration(&g.compose(&h), &c)
        );
        for p in [
            ProjPoint::zero(),
            ProjPoint::affine(int(2)),
            ProjPoint::infinity(),
        ] {
            let moved = act_on_configuration(&g, &c);
            assert_eq!(
                common_vanishing(moved.forms(), &g.apply(&p)).unwrap(),
                common_vanishing(c.forms(), &p).unwrap()
            );
        }
    }
}
