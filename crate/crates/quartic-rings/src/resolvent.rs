//! The resolvent constructions: from a binary quartic form to a pair of
//! ternary quadratic forms and back, with full resolvent data.
//!
//! The anchor form is `A0 = -x*y + z^2`. A binary quartic form `f` maps to
//! the pair `(A0, B_f)` where, in `[a11, a22, a33, a12, a13, a23]` order,
//! `B_f = [f4, f0, f2, 0, f3, f1]`. Adding integer multiples of `A0` to the
//! second form does not change the quartic ring; classes modulo that shift
//! have a unique representative with `a12 = 0`, which is exactly the image
//! of [`psi`].
//!
//! The quartic ring of `f` carries the basis `(zeta1, zeta2, zeta3')`; the
//! pair coordinates use the reordered basis `alpha = (zeta3', zeta1, zeta2)`.
//! With the orientation `1 ^ zeta1 ^ zeta2 ^ zeta3' = 1 ^ alpha1 ^ alpha2 ^
//! alpha3` (the reordering is an even permutation), the resolvent data of
//! `f` satisfies, for all `x, y` in the quartic ring:
//!
//! ```text
//! delta * (1 ^ x ^ y ^ xy) = 1 ^ phi(x) ^ phi(y)
//! ```
//!
//! where `phi(x) = B_f(x) * omega + A0(x) * theta` in alpha coordinates and
//! `delta = +1`. This sign/axis convention is not arbitrary: the derivation
//! test in this module brute-forces all axis and sign assignments and checks
//! the unique surviving one against the classical split-algebra resolvent
//! map `x -> x x' + x'' x'''` and against transport along the unipotent
//! shear action. See `tests::frozen_convention_is_the_unique_survivor`.

use crate::exact::{det3_rows, int, Int, Mat3, Rat};
use crate::forms::{
    act_gl2_quartic, act_gl3_pair, det_cubic_of_pair, det_linear_pencil, eval_ternary,
    quartic_invariants, rho, BinaryCubicForm, BinaryQuarticForm, GL2Elem, GL3Elem, RatTQFPair,
    RatTernaryQuadraticForm, TQFPair, TernaryQuadraticForm,
};
use crate::report::CheckReport;
use crate::rings::{quartic_ring_from_bqf, BasedRing, MonogenizedCubic, RingElem};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{HashMap, HashSet, VecDeque};

/// Orientation sign of the isomorphism `wedge^4 Q ~ wedge^3 C` on the
/// standard bases; frozen by the derivation test in this module.
pub const RESOLVENT_ORIENTATION: i64 = 1;

/// `psi(f) = (A0, B_f)`.
pub fn psi(f: &BinaryQuarticForm) -> TQFPair {
    let [f0, f1, f2, f3, f4] = &f.coeffs;
    let b = TernaryQuadraticForm::new([
        f4.clone(),
        f0.clone(),
        f2.clone(),
        Int::zero(),
        f3.clone(),
        f1.clone(),
    ]);
    TQFPair::new(TernaryQuadraticForm::a0(), b)
}

/// Class of pairs `(A0, B + Z*A0)`, stored as the unique representative
/// with `a12 = 0` in the second form. Since adding `n*A0` shifts `a12` by
/// `-n`, that representative always exists and is unique, and it coincides
/// with the image of [`psi`], so class equality is syntactic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiBarClass {
    rep: TQFPair,
}

impl PsiBarClass {
    /// Build the class of a pair whose first form is `A0`, or whose first
    /// form can be moved to `A0` by an `SL3(Z)` change of variables (it
    /// must have `4*det = -1`); other pairs are rejected.
    pub fn from_pair(p: &TQFPair) -> Result<Self> {
        let a0 = TernaryQuadraticForm::a0();
        let pair = if p.a == a0 {
            p.clone()
        } else {
            let h = reduce_to_a0(&p.a)?;
            let moved = act_gl3_pair(&h, p);
            debug_assert_eq!(moved.a, a0);
            moved
        };
        Ok(Self::normalize(pair))
    }

    fn normalize(p: TQFPair) -> Self {
        // adding n*A0 shifts a12 by -n; take n = current a12
        let n = p.b.coeffs[3].clone();
        let b = p.b.lin_comb(&Int::one(), &TernaryQuadraticForm::a0(), &n);
        debug_assert!(b.coeffs[3].is_zero());
        PsiBarClass {
            rep: TQFPair::new(p.a, b),
        }
    }

    pub fn rep(&self) -> &TQFPair {
        &self.rep
    }
}

/// `psi_bar(f)`: the class of `psi(f)`, whose representative is `psi(f)`
/// itself (its second form already has `a12 = 0`).
pub fn psi_bar(f: &BinaryQuarticForm) -> PsiBarClass {
    PsiBarClass::normalize(psi(f))
}

/// Restriction of a ternary quadratic form to the conic cut out by `A0`,
/// i.e. the substitution `[x, y, z] = [v^2, u^2, u*v]`, read back in our
/// quartic coefficient order so that `pullback(B_f) = f`. Constant on
/// `B + Z*A0` classes.
pub fn pullback(b: &TernaryQuadraticForm) -> BinaryQuarticForm {
    let [b11, b22, b33, b12, b13, b23] = &b.coeffs;
    BinaryQuarticForm::new([
        b22.clone(),
        b23.clone(),
        b12 + b33,
        b13.clone(),
        b11.clone(),
    ])
}

/// The denominator-1/3 variant of [`psi`] that is equivariant on the nose
/// (no shift classes): second form `[f4, f0, 2*f2/3, f2/3, f3, f1]`.
/// Integral exactly when `3 | f2`.
pub fn psi_prime(f: &BinaryQuarticForm) -> RatTQFPair {
    let [f0, f1, f2, f3, f4] = f.coeffs.clone().map(Rat::from_integer);
    let third = crate::exact::rat(1, 3);
    RatTQFPair {
        a: RatTernaryQuadraticForm::from_int(&TernaryQuadraticForm::a0()),
        b: RatTernaryQuadraticForm {
            coeffs: [
                f4,
                f0,
                f2.clone() * crate::exact::rat(2, 3),
                f2 * third,
                f3,
                f1,
            ],
        },
    }
}

/// Both sides of the `psi_prime` determinant identity: the computed
/// `4*Det(A0*x - B'*y)` and the closed form `[-1, 0, I/3, -J/27]`.
pub fn psi_prime_det_sides(f: &BinaryQuarticForm) -> ([Rat; 4], [Rat; 4]) {
    let p = psi_prime(f);
    let pencil = det_linear_pencil(&p.a.gram_rat(), &p.b.gram_rat());
    let four = Rat::from_integer(int(4));
    let computed = pencil.map(|c| c * four.clone());
    let (i, j) = quartic_invariants(f);
    let expected = [
        Rat::from_integer(int(-1)),
        Rat::from_integer(Int::zero()),
        Rat::new(i, int(3)),
        Rat::new(-j, int(27)),
    ];
    (computed, expected)
}

/// Determinant cubic of `psi_prime(f)` in exact rational arithmetic.
///
/// Returns the coefficients `[-1, 0, I/3, -J/27]`; the equality of the
/// computed determinant with that closed form is asserted, so a mismatch
/// panics (it would be an implementation bug).
pub fn resolvent_det_of_psi_prime(f: &BinaryQuarticForm) -> [Rat; 4] {
    let (computed, expected) = psi_prime_det_sides(f);
    assert_eq!(
        computed, expected,
        "determinant of psi_prime disagrees with the invariant form"
    );
    computed
}

/// Reorder coordinates from the ring basis `(zeta1, zeta2, zeta3')` to the
/// pair basis `alpha = (zeta3', zeta1, zeta2)`.
pub fn alpha_coords(e: &[Int; 3]) -> [Int; 3] {
    [e[2].clone(), e[0].clone(), e[1].clone()]
}

/// The coefficient `1 ^ x ^ y ^ xy` of the basis orientation of
/// `wedge^4 Q`, for canonical lifts `x`, `y` given by their non-constant
/// coordinates over `(zeta1, zeta2, zeta3')`.
pub fn wedge_quadruple(q: &BasedRing, x_e: &[Int; 3], y_e: &[Int; 3]) -> Int {
    let lift =
        |v: &[Int; 3]| RingElem::new(vec![Int::zero(), v[0].clone(), v[1].clone(), v[2].clone()]);
    let xy = q.mul(&lift(x_e), &lift(y_e));
    let z_e = [
        xy.coords[1].clone(),
        xy.coords[2].clone(),
        xy.coords[3].clone(),
    ];
    det3_rows(&alpha_coords(x_e), &alpha_coords(y_e), &alpha_coords(&z_e))
}

/// The quadratic resolvent map in coordinates: evaluating the stored pair
/// of ternary forms at the alpha coordinates of `x` gives the `omega` and
/// `theta` components of `phi(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticResolventMap {
    /// Form whose values land on the `omega` axis (`B_f` for `psi(f)`).
    pub omega_form: TernaryQuadraticForm,
    /// Form whose values land on the `theta` axis (`A0` for `psi(f)`).
    pub theta_form: TernaryQuadraticForm,
}

impl QuadraticResolventMap {
    /// `(omega component, theta component)` of `phi(x)` for `x` given by
    /// non-constant coordinates over `(zeta1, zeta2, zeta3')`.
    pub fn eval(&self, x_e: &[Int; 3]) -> (Int, Int) {
        let v = alpha_coords(x_e);
        (
            eval_ternary(&self.omega_form, &v),
            eval_ternary(&self.theta_form, &v),
        )
    }
}

/// Assembled resolvent data of a binary quartic form: the quartic ring, the
/// monogenized cubic resolvent, the quadratic map, and the orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolventData {
    pub quartic: BasedRing,
    pub cubic: MonogenizedCubic,
    pub phi: QuadraticResolventMap,
    /// Orientation sign matching `1 ^ zeta1 ^ zeta2 ^ zeta3'` to
    /// `1 ^ omega ^ theta`; always [`RESOLVENT_ORIENTATION`] as built.
    pub delta: Int,
}

/// Build the resolvent data of `f`: quartic ring from the multiplication
/// table, cubic ring from the determinant cubic of `psi(f)` (always
/// monogenized since `4*det(A0) = -1`), and the frozen-convention quadratic
/// map and orientation.
pub fn resolvent_data(f: &BinaryQuarticForm) -> ResolventData {
    let pair = psi(f);
    let cubic_form = det_cubic_of_pair(&pair);
    let cubic = MonogenizedCubic::new(cubic_form)
        .expect("determinant cubic over A0 has leading coefficient -1");
    ResolventData {
        quartic: quartic_ring_from_bqf(f),
        phi: QuadraticResolventMap {
            omega_form: pair.b,
            theta_form: pair.a,
        },
        cubic,
        delta: int(RESOLVENT_ORIENTATION),
    }
}

/// Check the two resolvent conditions on `rd`:
///
/// 1. `delta * (1 ^ x ^ y ^ xy) = 1 ^ phi(x) ^ phi(y)` for all `x, y` with
///    coordinates in `[-coord_box, coord_box]`;
/// 2. the binary cubic form of the cubic ring equals the determinant cubic
///    of the pair carried by `phi` (theta form first, omega form second).
///
/// The returned report lists every violated instance.
pub fn check_resolvent_conditions(rd: &ResolventData, coord_box: i64) -> CheckReport {
    let mut report = CheckReport::default();

    // condition (2)
    report.record_case();
    let pair = TQFPair::new(rd.phi.theta_form.clone(), rd.phi.omega_form.clone());
    if det_cubic_of_pair(&pair) != *rd.cubic.form() {
        report.fail(
            crate::serial::print_pair(&pair),
            "determinant cubic of phi differs from the cubic ring's form",
        );
    }

    // condition (1)
    let coords = coord_vectors(coord_box);
    let phis: Vec<(Int, Int)> = coords.iter().map(|v| rd.phi.eval(v)).collect();
    for (xi, x) in coords.iter().enumerate() {
        for (yi, y) in coords.iter().enumerate() {
            report.record_case();
            let lhs = &rd.delta * wedge_quadruple(&rd.quartic, x, y);
            let (ox, tx) = &phis[xi];
            let (oy, ty) = &phis[yi];
            let rhs = ox * ty - tx * oy;
            if lhs != rhs {
                report.fail(
                    crate::serial::print_ring(&rd.quartic),
                    format!("wedge identity fails at x={x:?}, y={y:?}: {lhs} != {rhs}"),
                );
            }
        }
    }
    report
}

/// All integer 3-vectors with entries in `[-bound, bound]`, lexicographic.
pub fn coord_vectors(bound: i64) -> Vec<[Int; 3]> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                out.push([int(a), int(b), int(c)]);
            }
        }
    }
    out
}

fn gram2_a0() -> Mat3<Int> {
    TernaryQuadraticForm::a0().gram2()
}

/// `4 * det(Gram(a))` of an integral ternary quadratic form (always an
/// integer: the doubled Gram determinant is even).
pub fn four_det(a: &TernaryQuadraticForm) -> Int {
    let d2 = a.gram2().det(); // 8 * det(Gram)
    let (q, r) = d2.div_rem(&int(2));
    debug_assert!(r.is_zero());
    q
}

/// Find `h` in `SL3(Z)` with `h * Gram(a) * h^t = Gram(A0)`, for a form
/// with `4*det = -1`, searching isotropic vectors with entries up to 64.
pub fn reduce_to_a0(a: &TernaryQuadraticForm) -> Result<GL3Elem> {
    reduce_to_a0_bounded(a, 64)
}

/// [`reduce_to_a0`] with an explicit bound on the isotropic-vector search.
///
/// The path is: find a primitive isotropic vector, complete it to an
/// `SL3(Z)` basis, then clear the remaining entries by explicit unipotent
/// moves and a final sign flip. If no isotropic vector lies in the box, a
/// bounded breadth-first search over elementary-matrix words is tried
/// before reporting exhaustion (retry with a larger bound).
pub fn reduce_to_a0_bounded(a: &TernaryQuadraticForm, bound: i64) -> Result<GL3Elem> {
    let d4 = four_det(a);
    if d4 != int(-1) {
        return Err(Error::NotUnitCovolume { det4: d4 });
    }
    let target = gram2_a0();
    if a == &TernaryQuadraticForm::a0() {
        return Ok(GL3Elem::identity());
    }

    let v = match find_primitive_isotropic(a, bound) {
        Some(v) => v,
        None => {
            // Structured path stalled; fall back to a bounded word search.
            return word_search_to_a0(a).ok_or(Error::SearchExhausted { bound });
        }
    };

    // Complete v to a determinant-1 basis with first row v.
    let u = complete_unimodular(&v);
    let g = a.gram2();
    let m1 = u.mul(&g).mul(&u.transpose());
    debug_assert!(m1.rows[0][0].is_zero());

    // gcd(p, q) = 1 is forced by 4*det = -1.
    let p = m1.rows[0][1].clone();
    let q = m1.rows[0][2].clone();
    let egcd = p.extended_gcd(&q);
    assert!(
        egcd.gcd.abs().is_one(),
        "isotropic row not unimodular-completable"
    );
    // make x*p + y*q = +1
    let sign = egcd.gcd.clone();
    let x = egcd.x * &sign;
    let y = egcd.y * &sign;
    let v_step = Mat3::new([
        [Int::one(), Int::zero(), Int::zero()],
        [Int::zero(), x, y],
        [Int::zero(), -q, p],
    ]);
    let m2 = v_step.mul(&m1).mul(&v_step.transpose());
    debug_assert!(m2.rows[0][1].is_one());
    debug_assert!(m2.rows[0][2].is_zero());
    debug_assert_eq!(m2.rows[2][2], int(2));

    // clear the (2,3) entry, then the (2,2) entry, against the hyperbolic row
    let s = m2.rows[1][2].clone();
    let mut w1 = Mat3::identity();
    w1.rows[2][0] = -s;
    let m3 = w1.mul(&m2).mul(&w1.transpose());

    let c22: Int = &m3.rows[1][1] / 2;
    let mut w2 = Mat3::identity();
    w2.rows[1][0] = -c22;
    let _m4 = w2.mul(&m3).mul(&w2.transpose());

    // flip signs to reach a12 = -1 while keeping determinant +1
    let s_step = Mat3::from_i64([[-1, 0, 0], [0, 1, 0], [0, 0, -1]]);
    let h = s_step.mul(&w2).mul(&w1).mul(&v_step).mul(&u);
    let check = h.mul(&a.gram2()).mul(&h.transpose());
    assert_eq!(check, target, "reduction pipeline failed to reach A0");
    let h = GL3Elem::new(h).expect("product of determinant-1 steps");
    debug_assert!(h.det().is_one());
    Ok(h)
}

/// First primitive vector (lexicographic within growing sup-norm shells)
/// with `a(v) = 0`.
fn find_primitive_isotropic(a: &TernaryQuadraticForm, bound: i64) -> Option<[Int; 3]> {
    for r in 1..=bound {
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    if x.abs().max(y.abs()).max(z.abs()) != r {
                        continue; // only the new shell
                    }
                    let g = x.gcd(&y).gcd(&z);
                    if g != 1 {
                        continue;
                    }
                    let v = [int(x), int(y), int(z)];
                    if eval_ternary(a, &v).is_zero() {
                        return Some(v);
                    }
                }
            }
        }
    }
    None
}

/// Determinant-1 integer matrix whose first row is the primitive vector `v`.
fn complete_unimodular(v: &[Int; 3]) -> Mat3<Int> {
    let [v1, v2, v3] = v;
    if v1.is_zero() && v2.is_zero() {
        // v = (0, 0, +-1)
        let s = v3.clone();
        return Mat3::new([
            [Int::zero(), Int::zero(), s.clone()],
            [Int::zero(), Int::one(), Int::zero()],
            [-s, Int::zero(), Int::zero()],
        ]);
    }
    let e1 = v1.extended_gcd(v2);
    let g = e1.gcd; // > 0 since (v1, v2) != (0, 0)
    let e2 = g.extended_gcd(v3);
    debug_assert!(e2.gcd.is_one(), "vector not primitive");
    let (uu, ww) = (e2.x, e2.y);
    Mat3::new([
        [v1.clone(), v2.clone(), v3.clone()],
        [-e1.y.clone(), e1.x.clone(), Int::zero()],
        [-(&ww * v1) / &g, -(&ww * v2) / &g, uu],
    ])
}

/// Breadth-first search over words in the elementary matrices
/// `E_ij(+-1)`, looking for `h` with `h * Gram(a) * h^t = Gram(A0)`.
fn word_search_to_a0(a: &TernaryQuadraticForm) -> Option<GL3Elem> {
    let target = gram2_a0();
    let gens: Vec<Mat3<Int>> = {
        let mut gs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                for s in [1i64, -1] {
                    let mut m = Mat3::identity();
                    m.rows[i][j] = int(s);
                    gs.push(m);
                }
            }
        }
        gs
    };
    let start = a.gram2();
    let mut seen: HashSet<Vec<Int>> = HashSet::new();
    let key = |m: &Mat3<Int>| -> Vec<Int> { m.rows.iter().flatten().cloned().collect() };
    let mut queue: VecDeque<(Mat3<Int>, Mat3<Int>, usize)> =
        VecDeque::from([(Mat3::identity(), start.clone(), 0)]);
    seen.insert(key(&start));
    const MAX_DEPTH: usize = 8;
    const MAX_NODES: usize = 200_000;
    let mut nodes = 0usize;
    while let Some((h, gram, depth)) = queue.pop_front() {
        if gram == target {
            return GL3Elem::new(h).ok();
        }
        if depth >= MAX_DEPTH || nodes >= MAX_NODES {
            continue;
        }
        for g in &gens {
            let h2 = g.mul(&h);
            let gram2 = g.mul(&gram).mul(&g.transpose());
            if seen.insert(key(&gram2)) {
                nodes += 1;
                queue.push_back((h2, gram2, depth + 1));
            }
        }
    }
    None
}

/// Enumerate every determinant-1 integer matrix with entries in
/// `[-bound, bound]` that fixes `Gram(A0)` under congruence, and match each
/// against `rho(g)` for `g` with entries in `[-bound-1, bound+1]`.
/// Cases counted are the stabilizer elements found; failures are the
/// unmatched ones (expected: none).
pub fn stabilizer_scan(bound: i64) -> CheckReport {
    let mut report = CheckReport::default();
    let target = gram2_a0();

    // all rho values over the matching box
    let mb = bound + 1;
    let mut rho_image: HashMap<Mat3<Int>, GL2Elem> = HashMap::new();
    for a in -mb..=mb {
        for b in -mb..=mb {
            for c in -mb..=mb {
                for d in -mb..=mb {
                    if (a * d - b * c).abs() != 1 {
                        continue;
                    }
                    let g = GL2Elem::from_i64([[a, b], [c, d]]).expect("checked det");
                    let image = rho(&g);
                    rho_image.entry(image.mat().clone()).or_insert(g);
                }
            }
        }
    }

    let range: Vec<i64> = (-bound..=bound).collect();
    let mut entries = [0i64; 9];
    let mut idx = [0usize; 9];
    loop {
        for (e, &i) in entries.iter_mut().zip(&idx) {
            *e = range[i];
        }
        let m = Mat3::from_i64([
            [entries[0], entries[1], entries[2]],
            [entries[3], entries[4], entries[5]],
            [entries[6], entries[7], entries[8]],
        ]);
        if m.det().is_one() && m.mul(&target).mul(&m.transpose()) == target {
            report.record_case();
            if !rho_image.contains_key(&m) {
                report.fail(
                    format!("mat3 {:?}", entries),
                    format!("stabilizer element not of the form rho(g) with entries up to {mb}"),
                );
            }
        }
        // odometer
        let mut k = 8;
        loop {
            idx[k] += 1;
            if idx[k] < range.len() {
                break;
            }
            idx[k] = 0;
            if k == 0 {
                return report;
            }
            k -= 1;
        }
    }
}

/// Does `psi_bar` intertwine the quartic action with the `rho`-conjugation
/// action on pairs? True exactly when
/// `psi_bar(g . f)` equals the class of `rho(g)`-conjugated `psi(f)`.
pub fn equivariance_check(g: &GL2Elem, f: &BinaryQuarticForm) -> bool {
    let lhs = psi_bar(&act_gl2_quartic(g, f));
    let conj = act_gl3_pair(&rho(g), &psi(f));
    debug_assert_eq!(conj.a, TernaryQuadraticForm::a0());
    let rhs = PsiBarClass::normalize(conj);
    lhs == rhs
}

/// Image of a binary cubic under the shear `(1 0; k 1)` with rational `k`
/// (twisted action; determinant 1). Used to study which fractional shears
/// preserve integrality.
pub fn shear_cubic_rational(f: &BinaryCubicForm, k: &Rat) -> [Rat; 4] {
    let [a, b, c, d] = f.coeffs.clone().map(Rat::from_integer);
    let k2 = k * k;
    let k3 = &k2 * k;
    [
        a.clone(),
        a.clone() * Rat::from_integer(int(3)) * k + b.clone(),
        a.clone() * Rat::from_integer(int(3)) * &k2
            + b.clone() * Rat::from_integer(int(2)) * k
            + c.clone(),
        a * k3 + b * k2 + c * k.clone() + d,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::disc_cubic;
    use crate::rings::is_monogenized_based;

    fn bqf(c: [i64; 5]) -> BinaryQuarticForm {
        BinaryQuarticForm::from_i64(c)
    }

    fn tqf(c: [i64; 6]) -> TernaryQuadraticForm {
        TernaryQuadraticForm::from_i64(c)
    }

    #[test]
    fn psi_examples() {
        let p = psi(&bqf([1, 0, 0, 0, 1]));
        assert_eq!(p.a, TernaryQuadraticForm::a0());
        assert_eq!(p.b, tqf([1, 1, 0, 0, 0, 0]));

        assert!(psi(&BinaryQuarticForm::zero()).b.is_zero());
        assert_eq!(psi(&bqf([0, 0, 1, 0, 0])).b, tqf([0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn psi_bar_examples() {
        let f = bqf([1, -2, 3, 0, 1]);
        let class = psi_bar(&f);
        assert_eq!(class.rep(), &psi(&f));

        // (A0, B + 3*A0) normalizes back to (A0, B)
        let shifted = TQFPair::new(
            TernaryQuadraticForm::a0(),
            psi(&f)
                .b
                .lin_comb(&int(1), &TernaryQuadraticForm::a0(), &int(3)),
        );
        assert_eq!(PsiBarClass::from_pair(&shifted).unwrap(), class);

        // forms that do not differ by a multiple of A0 stay distinct
        let other = psi_bar(&bqf([1, -2, 4, 0, 1]));
        assert_ne!(class, other);
    }

    #[test]
    fn pullback_examples() {
        let f = bqf([1, 0, 0, 0, 1]);
        assert_eq!(pullback(&psi(&f).b), f);
        assert_eq!(
            pullback(&TernaryQuadraticForm::a0()),
            BinaryQuarticForm::zero()
        );
        assert_eq!(pullback(&tqf([0, 0, 1, 0, 0, 0])), bqf([0, 0, 1, 0, 0]));
    }

    #[test]
    fn pullback_inverts_psi_and_kills_a0_shifts() {
        for f in [
            bqf([1, 2, 3, 4, 5]),
            bqf([0, -2, 1, 0, 2]),
            bqf([-1, 0, 0, 1, -2]),
        ] {
            let b = psi(&f).b;
            assert_eq!(pullback(&b), f);
            for n in -5..=5 {
                let shifted = b.lin_comb(&int(1), &TernaryQuadraticForm::a0(), &int(n));
                assert_eq!(pullback(&shifted), f);
            }
        }
    }

    #[test]
    fn psi_prime_examples() {
        // f2 = 0: psi_prime agrees with psi
        let f = bqf([1, -1, 0, 2, 3]);
        let p = psi_prime(&f);
        assert_eq!(p.b.to_int().unwrap(), psi(&f).b);

        let p = psi_prime(&bqf([0, 0, 1, 0, 0]));
        assert_eq!(p.b.coeffs[2], crate::exact::rat(2, 3));
        assert_eq!(p.b.coeffs[3], crate::exact::rat(1, 3));
        assert!(p.b.to_int().is_none());

        let p = psi_prime(&bqf([0, 0, 3, 0, 0]));
        assert_eq!(p.b.to_int().unwrap(), tqf([0, 0, 2, 1, 0, 0]));
    }

    #[test]
    fn psi_prime_determinant_examples() {
        let to_i = |r: [Rat; 4]| r.map(|c| c.to_integer());
        assert_eq!(
            to_i(resolvent_det_of_psi_prime(&bqf([1, 0, 0, 0, 1]))),
            [int(-1), int(0), int(4), int(0)]
        );
        assert_eq!(
            to_i(resolvent_det_of_psi_prime(&BinaryQuarticForm::zero())),
            [int(-1), int(0), int(0), int(0)]
        );
        assert_eq!(
            to_i(resolvent_det_of_psi_prime(&bqf([0, 1, 0, 1, 0]))),
            [int(-1), int(0), int(-1), int(0)]
        );
        // a form with all invariants nontrivial stays exact in rationals
        resolvent_det_of_psi_prime(&bqf([1, 2, -1, 0, 2]));
    }

    #[test]
    fn resolvent_data_examples() {
        let rd = resolvent_data(&bqf([1, 0, 0, 0, 1]));
        // zeta1 has alpha coordinates (0, 1, 0): A0 vanishes, B = 1
        let (omega, theta) = rd.phi.eval(&[int(1), int(0), int(0)]);
        assert_eq!((omega, theta), (int(1), int(0)));
        // phi(0) = 0
        assert_eq!(rd.phi.eval(&[int(0), int(0), int(0)]), (int(0), int(0)));
        // quadratic scaling phi(2x) = 4 phi(x)
        let x = [int(1), int(-2), int(1)];
        let x2 = [int(2), int(-4), int(2)];
        let (o1, t1) = rd.phi.eval(&x);
        let (o2, t2) = rd.phi.eval(&x2);
        assert_eq!(o2, o1 * 4);
        assert_eq!(t2, t1 * 4);
    }

    #[test]
    fn resolvent_conditions_hold_on_sample_forms() {
        for f in [
            bqf([1, 0, 0, 0, 1]),
            bqf([0, 1, 0, 1, 0]),
            BinaryQuarticForm::zero(),
            bqf([1, 2, -1, 0, 2]),
            bqf([-2, 1, 1, -1, 0]),
        ] {
            let rd = resolvent_data(&f);
            let report = check_resolvent_conditions(&rd, 1);
            assert!(report.pass(), "violations for {f:?}: {:?}", report.failures);
        }
    }

    #[test]
    fn resolvent_conditions_detect_a_flipped_axis() {
        let f = bqf([1, 2, -1, 0, 2]);
        let mut rd = resolvent_data(&f);
        // negate phi on the omega axis only
        rd.phi.omega_form =
            rd.phi
                .omega_form
                .lin_comb(&int(-1), &TernaryQuadraticForm::zero(), &int(0));
        let report = check_resolvent_conditions(&rd, 1);
        assert!(!report.pass());
    }

    #[test]
    fn monogenicity_of_every_resolvent() {
        for f in [
            bqf([0, 0, 0, 0, 0]),
            bqf([2, -1, 0, 1, -2]),
            bqf([0, 1, 2, -2, 1]),
        ] {
            let cubic = det_cubic_of_pair(&psi(&f));
            assert!(is_monogenized_based(&cubic));
            assert_eq!(disc_cubic(&cubic), crate::forms::disc_quartic(&f));
        }
    }

    /// The sign/axis convention is derived, not guessed: over all 16
    /// combinations of axis assignment, component signs, and orientation,
    /// exactly one satisfies both resolvent conditions on a 100-form
    /// corpus, and it is the one frozen in [`resolvent_data`]. The
    /// surviving map also matches the classical split-algebra resolvent
    /// and transports correctly along unipotent shears.
    #[test]
    fn frozen_convention_is_the_unique_survivor() {
        // deterministic 100-form corpus striding the |fi| <= 2 box
        let corpus: Vec<BinaryQuarticForm> = (0..100u32)
            .map(|i| {
                let mut n = (i * 31 + 7) % 3125;
                let mut c = [0i64; 5];
                for slot in c.iter_mut().rev() {
                    *slot = (n % 5) as i64 - 2;
                    n /= 5;
                }
                BinaryQuarticForm::from_i64(c)
            })
            .collect();
        let coords = coord_vectors(1);

        let mut survivors = Vec::new();
        for b_on_omega in [true, false] {
            for s_omega in [1i64, -1] {
                for s_theta in [1i64, -1] {
                    for delta in [1i64, -1] {
                        let ok = corpus.iter().all(|f| {
                            let pair = psi(f);
                            let (raw_omega, raw_theta) = if b_on_omega {
                                (pair.b.clone(), pair.a.clone())
                            } else {
                                (pair.a.clone(), pair.b.clone())
                            };
                            let zero = TernaryQuadraticForm::zero();
                            let phi = QuadraticResolventMap {
                                omega_form: raw_omega.lin_comb(&int(s_omega), &zero, &int(0)),
                                theta_form: raw_theta.lin_comb(&int(s_theta), &zero, &int(0)),
                            };
                            let rd = ResolventData {
                                quartic: quartic_ring_from_bqf(f),
                                cubic: MonogenizedCubic::new(det_cubic_of_pair(&pair)).unwrap(),
                                phi,
                                delta: int(delta),
                            };
                            // condition (2) with the candidate's own forms
                            let cand_pair =
                                TQFPair::new(rd.phi.theta_form.clone(), rd.phi.omega_form.clone());
                            if det_cubic_of_pair(&cand_pair) != *rd.cubic.form() {
                                return false;
                            }
                            // condition (1) on a small coordinate box
                            coords.iter().enumerate().all(|(xi, x)| {
                                coords.iter().skip(xi).all(|y| {
                                    let lhs = &rd.delta * wedge_quadruple(&rd.quartic, x, y);
                                    let (ox, tx) = rd.phi.eval(x);
                                    let (oy, ty) = rd.phi.eval(y);
                                    lhs == ox * ty - tx * oy
                                })
                            })
                        });
                        if ok {
                            survivors.push((b_on_omega, s_omega, s_theta, delta));
                        }
                    }
                }
            }
        }
        assert_eq!(survivors, vec![(true, 1, 1, RESOLVENT_ORIENTATION)]);
    }

    /// Pin the frozen axis against the classical resolvent map
    /// `q(x) = x x' + x'' x'''` on the split quartic
    /// `f = (x-y)(x+y)(x-2y)(x+2y) = x^4 - 5 x^2 y^2 + 4 y^4`: there
    /// `q(beta) = omega` and `q(beta^2) = 8 - 5*omega + theta`.
    #[test]
    fn frozen_axis_matches_classical_split_resolvent() {
        let rd = resolvent_data(&bqf([1, 0, -5, 0, 4]));
        // zeta1 = beta
        assert_eq!(rd.phi.eval(&[int(1), int(0), int(0)]), (int(1), int(0)));
        // zeta2 = beta^2: omega coefficient -5, theta coefficient 1
        assert_eq!(rd.phi.eval(&[int(0), int(1), int(0)]), (int(-5), int(1)));
    }

    /// Transport along the unipotent shear: conjugating the pair by
    /// `rho((1 0; n 1))` shifts `B` by a multiple of `A0`, and the
    /// quadratic map follows via `(p, q) -> (p + shift*q, q)`.
    #[test]
    fn frozen_axis_transports_along_shears() {
        for n in [-2i64, 1, 3] {
            let g = GL2Elem::from_i64([[1, 0], [n, 1]]).unwrap();
            let h = rho(&g);
            for f in [bqf([1, 2, -1, 0, 2]), bqf([0, 1, 0, 1, 0])] {
                let f2 = act_gl2_quartic(&g, &f);
                let conj = act_gl3_pair(&h, &psi(&f));
                assert_eq!(conj.a, TernaryQuadraticForm::a0());
                let shift = -conj.b.coeffs[3].clone();
                // conj.b == B_{f2} + shift * A0
                assert_eq!(
                    conj.b,
                    psi(&f2)
                        .b
                        .lin_comb(&int(1), &TernaryQuadraticForm::a0(), &shift)
                );
                let phi_f = resolvent_data(&f).phi;
                let phi_f2 = resolvent_data(&f2).phi;
                let ht = GL3Elem::new(h.mat().transpose()).unwrap();
                for x in coord_vectors(1) {
                    // iota maps alpha coordinates v to h^t v
                    let v_alpha = alpha_coords(&x);
                    let tv = ht.mat().mul_vec(&v_alpha);
                    let moved_e = [tv[1].clone(), tv[2].clone(), tv[0].clone()];
                    let (p_f, q_f) = phi_f.eval(&moved_e);
                    let (p, q) = phi_f2.eval(&x);
                    assert_eq!((p_f, q_f), (p + &shift * &q, q));
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        // A0 itself reduces by the identity
        let h = reduce_to_a0(&TernaryQuadraticForm::a0()).unwrap();
        assert_eq!(h, GL3Elem::identity());

        // unimodular conjugates of A0 reduce back
        let conjugators = [
            GL3Elem::from_i64([[1, 0, 0], [2, 1, 0], [0, -1, 1]]).unwrap(),
            GL3Elem::from_i64([[0, 1, 0], [0, 2, 1], [1, 3, 2]]).unwrap(),
            GL3Elem::from_i64([[1, 2, 3], [0, 1, -2], [0, 0, 1]]).unwrap(),
            GL3Elem::from_i64([[1, 0, 0], [0, 0, 1], [0, -1, 0]]).unwrap(),
        ];
        for c in conjugators {
            let moved = TernaryQuadraticForm::from_gram2(
                &c.mat().mul(&gram2_a0()).mul(&c.mat().transpose()),
            );
            let h = reduce_to_a0(&moved).unwrap();
            let back = h.mat().mul(&moved.gram2()).mul(&h.mat().transpose());
            assert_eq!(back, gram2_a0());
            assert!(h.det().is_one());
        }

        // wrong determinant rejected
        let err = reduce_to_a0(&tqf([1, 1, 1, 0, 0, 0]));
        assert!(matches!(err, Err(Error::NotUnitCovolume { .. })));
    }

    #[test]
    fn stabilizer_scan_bound_one_is_complete() {
        let report = stabilizer_scan(1);
        assert!(report.pass(), "unmatched: {:?}", report.failures);
        assert!(report.cases > 0);
    }

    #[test]
    fn equivariance_examples() {
        let f = bqf([1, 0, 0, 0, 1]);
        assert!(equivariance_check(&GL2Elem::identity(), &f));
        assert!(equivariance_check(
            &GL2Elem::from_i64([[0, 1], [1, 0]]).unwrap(),
            &f
        ));
        for g in crate::words::all_words(2) {
            for f in [bqf([1, -1, 0, 2, 1]), bqf([0, 1, 2, 0, -1])] {
                assert!(equivariance_check(&g, &f));
            }
        }
    }

    /// The fractional shear `(1 0; m/3 1)` has integral image exactly when
    /// `3 | m`; its `y^3` coefficient is `d + c*m/3 + b*m^2/9 - m^3/27`.
    #[test]
    fn third_shears_preserve_integrality_only_at_integers() {
        let f = BinaryCubicForm::from_i64([-1, 2, -1, 3]);
        let [_, b, c, d] = [-1i64, 2, -1, 3];
        for m in -15i64..=15 {
            let k = crate::exact::rat(m, 3);
            let image = shear_cubic_rational(&f, &k);
            let expected_d = crate::exact::rat(d, 1)
                + crate::exact::rat(c * m, 3)
                + crate::exact::rat(b * m * m, 9)
                - crate::exact::rat(m * m * m, 27);
            assert_eq!(image[3], expected_d);
            let integral = image.iter().all(|r| r.is_integer());
            assert_eq!(integral, m % 3 == 0, "m = {m}");
        }
    }
}
