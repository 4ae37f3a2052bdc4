//! Arbitrary-precision integers and rationals, and small dense matrices.
//!
//! Every value in this crate bottoms out in [`Int`] (signed, arbitrary
//! precision) or [`Rat`] (always reduced, positive denominator), so all
//! arithmetic is exact. Matrices are 2x2 or 3x3 only; determinants are
//! computed by direct permutation-sum expansion.

use num_traits::{One, Signed, Zero};
use std::ops::{Neg, Sub};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, eagerly reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand constructor for small integer constants.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand constructor for small rational constants.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Entry types our matrices support: exact ring elements with subtraction.
pub trait Scalar: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T = Int> {
    pub rows: [[T; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat3<T = Int> {
    pub rows: [[T; 3]; 3],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(rows: [[T; 2]; 2]) -> Self {
        Mat2 { rows }
    }

    pub fn identity() -> Self {
        Mat2::new([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    /// Exact determinant: `ad - bc`.
    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.rows;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut rows = [[T::zero(), T::zero()], [T::zero(), T::zero()]];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut acc = T::zero();
                for k in 0..2 {
                    acc = acc + self.rows[i][k].clone() * other.rows[k][j].clone();
                }
                *entry = acc;
            }
        }
        Mat2::new(rows)
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.rows.clone();
        Mat2::new([[a, c], [b, d]])
    }
}

impl Mat2<Int> {
    pub fn from_i64(rows: [[i64; 2]; 2]) -> Self {
        Mat2::new(rows.map(|r| r.map(Int::from)))
    }

    /// True iff the determinant is +1 or -1.
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}

impl<T: Scalar> Mat3<T> {
    pub fn new(rows: [[T; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn identity() -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.rows[i][i] = T::one();
        }
        m
    }

    pub fn zero() -> Self {
        Mat3::new([
            [T::zero(), T::zero(), T::zero()],
            [T::zero(), T::zero(), T::zero()],
            [T::zero(), T::zero(), T::zero()],
        ])
    }

    /// Exact determinant by the six-term permutation sum.
    pub fn det(&self) -> T {
        let r = &self.rows;
        r[0][0].clone() * r[1][1].clone() * r[2][2].clone()
            + r[0][1].clone() * r[1][2].clone() * r[2][0].clone()
            + r[0][2].clone() * r[1][0].clone() * r[2][1].clone()
            - r[0][2].clone() * r[1][1].clone() * r[2][0].clone()
            - r[0][1].clone() * r[1][0].clone() * r[2][2].clone()
            - r[0][0].clone() * r[1][2].clone() * r[2][1].clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = T::zero();
                for k in 0..3 {
                    acc = acc + self.rows[i][k].clone() * other.rows[k][j].clone();
                }
                out.rows[i][j] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] = self.rows[j][i].clone();
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T; 3]) -> [T; 3] {
        let mut out = [T::zero(), T::zero(), T::zero()];
        for (i, entry) in out.iter_mut().enumerate() {
            let mut acc = T::zero();
            for k in 0..3 {
                acc = acc + self.rows[i][k].clone() * v[k].clone();
            }
            *entry = acc;
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat3<U> {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] = f(&self.rows[i][j]);
            }
        }
        out
    }
}

impl Mat3<Int> {
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3::new(rows.map(|r| r.map(Int::from)))
    }

    /// True iff the determinant is +1 or -1.
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// View with rational entries.
    pub fn to_rat(&self) -> Mat3<Rat> {
        self.map(|x| Rat::from_integer(x.clone()))
    }
}

/// Determinant of a 3x3 matrix of rows given as slices (no copy of a Mat3).
pub fn det3_rows(x: &[Int; 3], y: &[Int; 3], z: &[Int; 3]) -> Int {
    &x[0] * &y[1] * &z[2] + &x[1] * &y[2] * &z[0] + &x[2] * &y[0] * &z[1]
        - &x[2] * &y[1] * &z[0]
        - &x[1] * &y[0] * &z[2]
        - &x[0] * &y[2] * &z[1]
}
