//! Binary quartic/cubic forms and ternary quadratic forms over the integers,
//! with the group actions, invariants, and discriminants attached to them.
//!
//! Conventions:
//!
//! * A binary quartic form is `f0*x^4 + f1*x^3*y + f2*x^2*y^2 + f3*x*y^3 + f4*y^4`.
//! * A binary cubic form is `a*x^3 + b*x^2*y + c*x*y^2 + d*y^3`.
//! * A ternary quadratic form is stored as the six integer coefficients
//!   `[a11, a22, a33, a12, a13, a23]` of
//!   `a11*x^2 + a22*y^2 + a33*z^2 + a12*x*y + a13*x*z + a23*y*z`; its Gram
//!   matrix has halves off the diagonal, so the doubled Gram matrix is the
//!   integral object we compute with.
//! * `g = (a b; c d)` acts on a degree-n form `F` by `F(a*x + c*y, b*x + d*y)`,
//!   divided by `det(g)` in the twisted (cubic) case.
//!
//! Forms are plain values: no normalization is ever applied implicitly.

use crate::exact::{int, Int, Mat2, Mat3, Rat, Scalar};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Integral binary quartic form; the zero form is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryQuarticForm {
    /// `[f0, f1, f2, f3, f4]`
    pub coeffs: [Int; 5],
}

/// Integral binary cubic form; the zero form is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubicForm {
    /// `[a, b, c, d]`
    pub coeffs: [Int; 4],
}

/// Integral ternary quadratic form (integer-valued; see module docs).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryQuadraticForm {
    /// `[a11, a22, a33, a12, a13, a23]`
    pub coeffs: [Int; 6],
}

/// Ternary quadratic form with rational coefficients (image of `psi_prime`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatTernaryQuadraticForm {
    /// `[a11, a22, a33, a12, a13, a23]`
    pub coeffs: [Rat; 6],
}

/// Ordered pair of integral ternary quadratic forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TQFPair {
    pub a: TernaryQuadraticForm,
    pub b: TernaryQuadraticForm,
}

/// Pair of rational ternary quadratic forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatTQFPair {
    pub a: RatTernaryQuadraticForm,
    pub b: RatTernaryQuadraticForm,
}

/// Element of `GL2(Z)`: an integer 2x2 matrix with determinant +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GL2Elem {
    mat: Mat2<Int>,
}

/// Element of `GL3(Z)`: an integer 3x3 matrix with determinant +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GL3Elem {
    mat: Mat3<Int>,
}

impl BinaryQuarticForm {
    pub fn new(coeffs: [Int; 5]) -> Self {
        BinaryQuarticForm { coeffs }
    }

    pub fn from_i64(coeffs: [i64; 5]) -> Self {
        BinaryQuarticForm::new(coeffs.map(Int::from))
    }

    pub fn zero() -> Self {
        BinaryQuarticForm::from_i64([0; 5])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl BinaryCubicForm {
    pub fn new(coeffs: [Int; 4]) -> Self {
        BinaryCubicForm { coeffs }
    }

    pub fn from_i64(coeffs: [i64; 4]) -> Self {
        BinaryCubicForm::new(coeffs.map(Int::from))
    }

    pub fn zero() -> Self {
        BinaryCubicForm::from_i64([0; 4])
    }

    pub fn a(&self) -> &Int {
        &self.coeffs[0]
    }
    pub fn b(&self) -> &Int {
        &self.coeffs[1]
    }
    pub fn c(&self) -> &Int {
        &self.coeffs[2]
    }
    pub fn d(&self) -> &Int {
        &self.coeffs[3]
    }
}

impl TernaryQuadraticForm {
    pub fn new(coeffs: [Int; 6]) -> Self {
        TernaryQuadraticForm { coeffs }
    }

    pub fn from_i64(coeffs: [i64; 6]) -> Self {
        TernaryQuadraticForm::new(coeffs.map(Int::from))
    }

    pub fn zero() -> Self {
        TernaryQuadraticForm::from_i64([0; 6])
    }

    /// The fixed anchor form `-x*y + z^2`, the unique `SL3(Z)` class of
    /// determinant `-1/4`; every monogenic resolvent pair is reduced to it.
    pub fn a0() -> Self {
        TernaryQuadraticForm::from_i64([0, 0, 1, -1, 0, 0])
    }

    /// Doubled Gram matrix: integral, symmetric, even diagonal.
    pub fn gram2(&self) -> Mat3<Int> {
        let [a11, a22, a33, a12, a13, a23] = &self.coeffs;
        Mat3::new([
            [a11 * 2, a12.clone(), a13.clone()],
            [a12.clone(), a22 * 2, a23.clone()],
            [a13.clone(), a23.clone(), a33 * 2],
        ])
    }

    /// Rebuild from a doubled Gram matrix. Panics if the matrix is not
    /// symmetric with even diagonal; conjugation by integer matrices always
    /// preserves that shape, so a panic here is a bug.
    pub fn from_gram2(m: &Mat3<Int>) -> Self {
        for i in 0..3 {
            assert!(
                m.rows[i][i].is_even(),
                "doubled Gram matrix has odd diagonal"
            );
            for j in (i + 1)..3 {
                assert_eq!(m.rows[i][j], m.rows[j][i], "Gram matrix not symmetric");
            }
        }
        TernaryQuadraticForm::new([
            &m.rows[0][0] / 2,
            &m.rows[1][1] / 2,
            &m.rows[2][2] / 2,
            m.rows[0][1].clone(),
            m.rows[0][2].clone(),
            m.rows[1][2].clone(),
        ])
    }

    /// Gram matrix over the rationals (halves off the diagonal).
    pub fn gram_rat(&self) -> Mat3<Rat> {
        let half = crate::exact::rat(1, 2);
        let [a11, a22, a33, a12, a13, a23] = self.coeffs.clone().map(Rat::from_integer);
        Mat3::new([
            [a11, a12.clone() * half.clone(), a13.clone() * half.clone()],
            [a12 * half.clone(), a22, a23.clone() * half.clone()],
            [a13 * half.clone(), a23 * half, a33],
        ])
    }

    /// Coefficientwise `s*self + t*other`.
    pub fn lin_comb(&self, s: &Int, other: &Self, t: &Int) -> Self {
        let mut out = TernaryQuadraticForm::zero();
        for i in 0..6 {
            out.coeffs[i] = s * &self.coeffs[i] + t * &other.coeffs[i];
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl RatTernaryQuadraticForm {
    pub fn from_int(q: &TernaryQuadraticForm) -> Self {
        RatTernaryQuadraticForm {
            coeffs: q.coeffs.clone().map(Rat::from_integer),
        }
    }

    /// The integral form with the same coefficients, if all are integers.
    pub fn to_int(&self) -> Option<TernaryQuadraticForm> {
        let mut out = [
            Int::zero(),
            Int::zero(),
            Int::zero(),
            Int::zero(),
            Int::zero(),
            Int::zero(),
        ];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            if !c.is_integer() {
                return None;
            }
            *o = c.to_integer();
        }
        Some(TernaryQuadraticForm::new(out))
    }

    pub fn gram_rat(&self) -> Mat3<Rat> {
        let half = crate::exact::rat(1, 2);
        let [a11, a22, a33, a12, a13, a23] = self.coeffs.clone();
        Mat3::new([
            [a11, a12.clone() * half.clone(), a13.clone() * half.clone()],
            [a12 * half.clone(), a22, a23.clone() * half.clone()],
            [a13 * half.clone(), a23 * half, a33],
        ])
    }

    /// Rebuild from a rational Gram matrix (off-diagonal entries doubled).
    pub fn from_gram_rat(m: &Mat3<Rat>) -> Self {
        let two = Rat::from_integer(int(2));
        RatTernaryQuadraticForm {
            coeffs: [
                m.rows[0][0].clone(),
                m.rows[1][1].clone(),
                m.rows[2][2].clone(),
                m.rows[0][1].clone() * two.clone(),
                m.rows[0][2].clone() * two.clone(),
                m.rows[1][2].clone() * two,
            ],
        }
    }
}

impl TQFPair {
    pub fn new(a: TernaryQuadraticForm, b: TernaryQuadraticForm) -> Self {
        TQFPair { a, b }
    }
}

impl GL2Elem {
    /// Entries row-major: `(a b; c d)`. Rejects non-unimodular matrices.
    pub fn new(mat: Mat2<Int>) -> Result<Self> {
        if !mat.is_unimodular() {
            return Err(Error::NotUnimodular { det: mat.det() });
        }
        Ok(GL2Elem { mat })
    }

    pub fn from_i64(rows: [[i64; 2]; 2]) -> Result<Self> {
        GL2Elem::new(Mat2::from_i64(rows))
    }

    pub fn identity() -> Self {
        GL2Elem {
            mat: Mat2::identity(),
        }
    }

    pub fn mat(&self) -> &Mat2<Int> {
        &self.mat
    }

    /// `(a, b, c, d)` for the matrix `(a b; c d)`.
    pub fn entries(&self) -> (&Int, &Int, &Int, &Int) {
        let [[a, b], [c, d]] = &self.mat.rows;
        (a, b, c, d)
    }

    pub fn det(&self) -> Int {
        self.mat.det()
    }

    pub fn mul(&self, other: &Self) -> Self {
        GL2Elem {
            mat: self.mat.mul(&other.mat),
        }
    }

    /// Exact inverse; integral because the determinant is a unit.
    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = self.entries();
        let det = self.det();
        GL2Elem {
            mat: Mat2::new([[d * &det, -(b * &det)], [-(c * &det), a * &det]]),
        }
    }
}

impl GL3Elem {
    pub fn new(mat: Mat3<Int>) -> Result<Self> {
        if !mat.is_unimodular() {
            return Err(Error::NotUnimodular { det: mat.det() });
        }
        Ok(GL3Elem { mat })
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Result<Self> {
        GL3Elem::new(Mat3::from_i64(rows))
    }

    pub fn identity() -> Self {
        GL3Elem {
            mat: Mat3::identity(),
        }
    }

    pub fn mat(&self) -> &Mat3<Int> {
        &self.mat
    }

    pub fn det(&self) -> Int {
        self.mat.det()
    }

    pub fn mul(&self, other: &Self) -> Self {
        GL3Elem {
            mat: self.mat.mul(&other.mat),
        }
    }
}

/// Coefficients of `(p*x + q*y)^k`, lowest y-power first.
fn linear_power(p: &Int, q: &Int, k: usize) -> Vec<Int> {
    let mut acc = vec![Int::one()];
    for _ in 0..k {
        let mut next = vec![Int::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i] += c * p;
            next[i + 1] += c * q;
        }
        acc = next;
    }
    acc
}

fn convolve(u: &[Int], v: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); u.len() + v.len() - 1];
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Coefficients of `F(a*x + c*y, b*x + d*y)` for a degree-n form `F`.
fn substitute(coeffs: &[Int], g: &GL2Elem) -> Vec<Int> {
    let n = coeffs.len() - 1;
    let (a, b, c, d) = g.entries();
    let mut out = vec![Int::zero(); n + 1];
    for (i, fi) in coeffs.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        let term = convolve(&linear_power(a, c, n - i), &linear_power(b, d, i));
        for (o, t) in out.iter_mut().zip(term) {
            *o += fi * t;
        }
    }
    out
}

/// `g . f = F(a*x + c*y, b*x + d*y)`. The action has kernel `{+I, -I}`.
pub fn act_gl2_quartic(g: &GL2Elem, f: &BinaryQuarticForm) -> BinaryQuarticForm {
    let out = substitute(&f.coeffs, g);
    BinaryQuarticForm::new(out.try_into().expect("degree preserved"))
}

/// Twisted action `g . f = F(a*x + c*y, b*x + d*y) / det(g)`, integral
/// because `det(g)` is a unit.
pub fn act_gl2_cubic_twisted(g: &GL2Elem, f: &BinaryCubicForm) -> BinaryCubicForm {
    let det = g.det();
    let out: Vec<Int> = substitute(&f.coeffs, g)
        .into_iter()
        .map(|c| c * &det)
        .collect();
    BinaryCubicForm::new(out.try_into().expect("degree preserved"))
}

/// The two generating `SL2(Z)` invariants of a binary quartic form, in their
/// denominator-cleared integral normalization:
///
/// `I = 12*f0*f4 - 3*f1*f3 + f2^2`
/// `J = 72*f0*f2*f4 - 2*f2^3 - 27*f0*f3^2 - 27*f4*f1^2 + 9*f1*f2*f3`
pub fn quartic_invariants(f: &BinaryQuarticForm) -> (Int, Int) {
    let [f0, f1, f2, f3, f4] = &f.coeffs;
    let i = 12 * f0 * f4 - 3 * f1 * f3 + f2 * f2;
    let j = 72 * f0 * f2 * f4 - 2 * f2 * f2 * f2 - 27 * f0 * f3 * f3 - 27 * f4 * f1 * f1
        + 9 * f1 * f2 * f3;
    (i, j)
}

/// Discriminant of a binary quartic form, `(4*I^3 - J^2)/27`.
///
/// Divisibility by 27 is an identity in the coefficients; a remainder here
/// is an implementation bug, so it panics.
pub fn disc_quartic(f: &BinaryQuarticForm) -> Int {
    let (i, j) = quartic_invariants(f);
    let num: Int = 4 * &i * &i * &i - &j * &j;
    let (q, r) = num.div_rem(&int(27));
    assert!(r.is_zero(), "4I^3 - J^2 not divisible by 27 for {:?}", f);
    q
}

/// Classical discriminant of a binary cubic form:
/// `b^2*c^2 - 4*a*c^3 - 4*b^3*d - 27*a^2*d^2 + 18*a*b*c*d`.
///
/// Equals the trace-pairing discriminant of the associated cubic ring.
pub fn disc_cubic(f: &BinaryCubicForm) -> Int {
    let [a, b, c, d] = &f.coeffs;
    b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
}

/// The homomorphism `rho : GL2(Z) -> SL3(Z)`,
///
/// ```text
///                1     ( d^2   c^2   dc      )
/// (a b; c d) -> ----- * ( b^2   a^2   ab      )
///               ad-bc   ( 2bd   2ac   ad+bc   )
/// ```
///
/// Its image stabilizes the anchor form: `rho(g) * Gram(A0) * rho(g)^t = Gram(A0)`.
pub fn rho(g: &GL2Elem) -> GL3Elem {
    let (a, b, c, d) = g.entries();
    let det = g.det();
    let y = Mat3::new([
        [d * d, c * c, d * c],
        [b * b, a * a, a * b],
        [2 * b * d, 2 * a * c, a * d + b * c],
    ]);
    let m = y.map(|e| e * &det);
    GL3Elem::new(m).expect("rho image is unimodular")
}

/// Conjugation action of `GL3(Z)` on a pair: `(A, B) -> (h A h^t, h B h^t)`.
pub fn act_gl3_pair(h: &GL3Elem, p: &TQFPair) -> TQFPair {
    TQFPair::new(conj_tqf(h, &p.a), conj_tqf(h, &p.b))
}

fn conj_tqf(h: &GL3Elem, q: &TernaryQuadraticForm) -> TernaryQuadraticForm {
    let m = h.mat().mul(&q.gram2()).mul(&h.mat().transpose());
    TernaryQuadraticForm::from_gram2(&m)
}

/// Conjugation of a rational ternary quadratic form by an integral matrix.
pub fn conj_rat_tqf(h: &GL3Elem, q: &RatTernaryQuadraticForm) -> RatTernaryQuadraticForm {
    let hr = h.mat().to_rat();
    let m = hr.mul(&q.gram_rat()).mul(&hr.transpose());
    RatTernaryQuadraticForm::from_gram_rat(&m)
}

/// Linear-combination action of `GL2(Z)` on a pair:
/// `(a b; c d) . (A, B) = (a*A + b*B, c*A + d*B)`.
pub fn act_gl2_pair(g: &GL2Elem, p: &TQFPair) -> TQFPair {
    let (a, b, c, d) = g.entries();
    TQFPair::new(p.a.lin_comb(a, &p.b, b), p.a.lin_comb(c, &p.b, d))
}

/// Coefficients `[p0, p1, p2, p3]` of `det(Ga*x - Gb*y)` where the matrix
/// entries are the linear forms `Ga[i][j]*x - Gb[i][j]*y`, expanded by the
/// six-term permutation sum.
pub fn det_linear_pencil<T: Scalar>(ga: &Mat3<T>, gb: &Mat3<T>) -> [T; 4] {
    let entry = |i: usize, j: usize| (ga.rows[i][j].clone(), -gb.rows[i][j].clone());
    let mut acc = [T::zero(), T::zero(), T::zero(), T::zero()];
    // (permutation, sign)
    let perms: [([usize; 3], bool); 6] = [
        ([0, 1, 2], true),
        ([1, 2, 0], true),
        ([2, 0, 1], true),
        ([2, 1, 0], false),
        ([1, 0, 2], false),
        ([0, 2, 1], false),
    ];
    for (p, positive) in perms {
        let (u0, v0) = entry(0, p[0]);
        let (u1, v1) = entry(1, p[1]);
        let (u2, v2) = entry(2, p[2]);
        // product of three linear forms in (x, y)
        let term = [
            u0.clone() * u1.clone() * u2.clone(),
            u0.clone() * u1.clone() * v2.clone()
                + u0.clone() * v1.clone() * u2.clone()
                + v0.clone() * u1.clone() * u2.clone(),
            u0.clone() * v1.clone() * v2.clone()
                + v0.clone() * u1.clone() * v2.clone()
                + v0.clone() * v1.clone() * u2.clone(),
            v0 * v1 * v2,
        ];
        for (a, t) in acc.iter_mut().zip(term) {
            if positive {
                *a = a.clone() + t;
            } else {
                *a = a.clone() - t;
            }
        }
    }
    acc
}

/// The determinant binary cubic of a pair: `4*Det(A*x - B*y)`, computed with
/// cleared denominators. All four coefficients are integral; a failure of
/// that divisibility is a bug and panics.
pub fn det_cubic_of_pair(p: &TQFPair) -> BinaryCubicForm {
    // 4*Det((2A*x - 2B*y)/2) = Det(2A*x - 2B*y)/2.
    let doubled = det_linear_pencil(&p.a.gram2(), &p.b.gram2());
    let coeffs = doubled.map(|c| {
        let (q, r) = c.div_rem(&int(2));
        assert!(
            r.is_zero(),
            "determinant cubic has a non-integral coefficient"
        );
        q
    });
    BinaryCubicForm::new(coeffs)
}

/// Value of an integral ternary quadratic form at an integer vector.
pub fn eval_ternary(q: &TernaryQuadraticForm, v: &[Int; 3]) -> Int {
    let [a11, a22, a33, a12, a13, a23] = &q.coeffs;
    let [x, y, z] = v;
    a11 * x * x + a22 * y * y + a33 * z * z + a12 * x * y + a13 * x * z + a23 * y * z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words;

    fn bqf(c: [i64; 5]) -> BinaryQuarticForm {
        BinaryQuarticForm::from_i64(c)
    }

    fn bcf(c: [i64; 4]) -> BinaryCubicForm {
        BinaryCubicForm::from_i64(c)
    }

    fn gl2(rows: [[i64; 2]; 2]) -> GL2Elem {
        GL2Elem::from_i64(rows).unwrap()
    }

    #[test]
    fn quartic_action_examples() {
        let f = bqf([1, 2, 0, 0, 0]); // x^4 + 2x^3y
        assert_eq!(act_gl2_quartic(&GL2Elem::identity(), &f), f);
        // swap reverses the coefficient vector
        let swapped = act_gl2_quartic(&gl2([[0, 1], [1, 0]]), &f);
        assert_eq!(swapped, bqf([0, 0, 0, 2, 1]));
        // -I is in the kernel
        let neg = gl2([[-1, 0], [0, -1]]);
        assert_eq!(
            act_gl2_quartic(&neg, &bqf([1, -2, 3, 0, 5])),
            bqf([1, -2, 3, 0, 5])
        );
    }

    #[test]
    fn twisted_cubic_action_examples() {
        let f = bcf([-1, 4, 0, 0]); // -x^3 + 4x^2y
        assert_eq!(act_gl2_cubic_twisted(&GL2Elem::identity(), &f), f);
        // (1 0; 1 1): expand -(x+y)^3 + 4(x+y)^2 y
        let g = gl2([[1, 0], [1, 1]]);
        assert_eq!(act_gl2_cubic_twisted(&g, &f), bcf([-1, 1, 5, 3]));
        // -I: substitution negates odd-degree parts, twist divides by det = 1
        let neg = gl2([[-1, 0], [0, -1]]);
        assert_eq!(
            act_gl2_cubic_twisted(&neg, &bcf([-1, 0, 0, 0])),
            bcf([1, 0, 0, 0])
        );
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(quartic_invariants(&bqf([1, 0, 0, 0, 1])), (int(12), int(0)));
        assert_eq!(
            quartic_invariants(&BinaryQuarticForm::zero()),
            (int(0), int(0))
        );
        assert_eq!(quartic_invariants(&bqf([0, 1, 0, 1, 0])), (int(-3), int(0)));
    }

    #[test]
    fn disc_quartic_examples() {
        assert_eq!(disc_quartic(&bqf([1, 0, 0, 0, 1])), int(256));
        assert_eq!(disc_quartic(&BinaryQuarticForm::zero()), int(0));
        assert_eq!(disc_quartic(&bqf([0, 1, 0, 1, 0])), int(-4));
    }

    #[test]
    fn disc_cubic_examples() {
        assert_eq!(disc_cubic(&bcf([-1, 0, 1, 0])), int(4));
        assert_eq!(disc_cubic(&BinaryCubicForm::zero()), int(0));
        assert_eq!(disc_cubic(&bcf([0, 1, -1, 0])), int(1));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&GL2Elem::identity()).mat(), &Mat3::identity());
        let swap = rho(&gl2([[0, 1], [1, 0]]));
        assert_eq!(
            swap.mat(),
            &Mat3::from_i64([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
        );
        let shear = rho(&gl2([[1, 1], [0, 1]]));
        assert_eq!(
            shear.mat(),
            &Mat3::from_i64([[1, 0, 0], [1, 1, 1], [2, 0, 1]])
        );
    }

    #[test]
    fn rho_lands_in_stabilizer_on_generators() {
        let a0 = TernaryQuadraticForm::a0();
        for g in words::generators() {
            let h = rho(&g);
            assert_eq!(h.det(), int(1));
            assert_eq!(conj_tqf(&h, &a0), a0);
        }
    }

    #[test]
    fn gl3_pair_action_examples() {
        let a0 = TernaryQuadraticForm::a0();
        let diag = TernaryQuadraticForm::from_i64([1, 1, 0, 0, 0, 0]);
        let p = TQFPair::new(a0.clone(), diag.clone());
        assert_eq!(act_gl3_pair(&GL3Elem::identity(), &p), p);

        let h = rho(&gl2([[0, 1], [1, 0]]));
        assert_eq!(act_gl3_pair(&h, &p), p);

        // permute rows/cols 2 and 3: -xy + z^2 becomes -xz + y^2
        let perm = GL3Elem::from_i64([[1, 0, 0], [0, 0, 1], [0, 1, 0]]).unwrap();
        assert_eq!(
            conj_tqf(&perm, &a0),
            TernaryQuadraticForm::from_i64([0, 1, 0, 0, -1, 0])
        );
    }

    #[test]
    fn gl2_pair_action_examples() {
        let a = TernaryQuadraticForm::from_i64([1, 0, 0, 2, 0, 0]);
        let b = TernaryQuadraticForm::from_i64([0, 3, 0, 0, 0, -1]);
        let p = TQFPair::new(a.clone(), b.clone());
        assert_eq!(act_gl2_pair(&GL2Elem::identity(), &p), p);
        // lower-unipotent shear: (A, B) -> (A, n*A + B)
        let n = 4;
        let g = gl2([[1, 0], [n, 1]]);
        let shifted = act_gl2_pair(&g, &p);
        assert_eq!(shifted.a, a);
        assert_eq!(shifted.b, a.lin_comb(&int(n), &b, &int(1)));
        // swap
        let g = gl2([[0, 1], [1, 0]]);
        assert_eq!(act_gl2_pair(&g, &p), TQFPair::new(b, a));
    }

    #[test]
    fn det_cubic_examples() {
        let a0 = TernaryQuadraticForm::a0();
        // B for x^4 + y^4 is x^2 + y^2
        let b = TernaryQuadraticForm::from_i64([1, 1, 0, 0, 0, 0]);
        assert_eq!(
            det_cubic_of_pair(&TQFPair::new(a0.clone(), b)),
            bcf([-1, 0, 4, 0])
        );
        assert_eq!(
            det_cubic_of_pair(&TQFPair::new(a0.clone(), TernaryQuadraticForm::zero())),
            bcf([-1, 0, 0, 0])
        );
        // (A0, A0): 4 Det(A0) (x - y)^3 = -(x - y)^3
        assert_eq!(
            det_cubic_of_pair(&TQFPair::new(a0.clone(), a0)),
            bcf([-1, 3, -3, 1])
        );
    }

    #[test]
    fn det_cubic_is_sl3_invariant() {
        let pairs = [
            TQFPair::new(
                TernaryQuadraticForm::a0(),
                TernaryQuadraticForm::from_i64([1, 1, 0, 0, 0, 0]),
            ),
            TQFPair::new(
                TernaryQuadraticForm::from_i64([2, -1, 3, 1, 0, -2]),
                TernaryQuadraticForm::from_i64([0, 1, -1, 2, 1, 0]),
            ),
        ];
        let mut samples = vec![
            rho(&gl2([[0, 1], [1, 0]])),
            rho(&gl2([[1, 1], [0, 1]])),
            GL3Elem::from_i64([[1, 2, 0], [0, 1, -3], [0, 0, 1]]).unwrap(),
            GL3Elem::from_i64([[0, 0, 1], [1, 0, 0], [0, 1, 0]]).unwrap(),
        ];
        samples.push(samples[2].mul(&samples[3]));
        for p in &pairs {
            let cubic = det_cubic_of_pair(p);
            for h in &samples {
                assert_eq!(h.det(), int(1));
                assert_eq!(det_cubic_of_pair(&act_gl3_pair(h, p)), cubic);
            }
        }
    }

    #[test]
    fn eval_examples() {
        let a0 = TernaryQuadraticForm::a0();
        assert_eq!(eval_ternary(&a0, &[int(0), int(1), int(0)]), int(0));
        assert_eq!(eval_ternary(&a0, &[int(1), int(1), int(1)]), int(0));
        let q = TernaryQuadraticForm::from_i64([3, -1, 2, 5, 0, -7]);
        assert_eq!(eval_ternary(&q, &[int(0), int(0), int(0)]), int(0));
    }

    #[test]
    fn action_law_on_small_words() {
        // act(g1, act(g2, f)) == act(g1*g2, f)
        let f = bqf([1, -2, 0, 1, 2]);
        let fc = bcf([-1, 2, 0, -2]);
        for g1 in words::all_words(2) {
            for g2 in words::all_words(2) {
                let lhs = act_gl2_quartic(&g1, &act_gl2_quartic(&g2, &f));
                assert_eq!(lhs, act_gl2_quartic(&g1.mul(&g2), &f));
                let lhs = act_gl2_cubic_twisted(&g1, &act_gl2_cubic_twisted(&g2, &fc));
                assert_eq!(lhs, act_gl2_cubic_twisted(&g1.mul(&g2), &fc));
            }
        }
    }

    #[test]
    fn invariants_fixed_by_both_determinant_signs() {
        // I has weight 4 and J weight 6, so determinant -1 elements fix
        // them too; the discriminant follows.
        let f = bqf([1, -2, 3, 1, -1]);
        let (i, j) = quartic_invariants(&f);
        assert_eq!((i.clone(), j.clone()), (int(3), int(-243)));
        for g in [
            gl2([[1, 1], [0, 1]]),
            gl2([[1, 0], [0, -1]]),
            gl2([[0, 1], [1, 0]]),
            gl2([[1, 0], [1, 1]]),
        ] {
            let moved = act_gl2_quartic(&g, &f);
            assert_eq!(quartic_invariants(&moved), (i.clone(), j.clone()));
            assert_eq!(disc_quartic(&moved), disc_quartic(&f));
        }
    }

    #[test]
    fn non_unimodular_rejected() {
        assert!(GL2Elem::from_i64([[2, 0], [0, 1]]).is_err());
        assert!(GL3Elem::from_i64([[2, 0, 0], [0, 1, 0], [0, 0, 1]]).is_err());
    }
}
