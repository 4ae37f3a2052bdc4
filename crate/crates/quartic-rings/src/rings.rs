//! Based rings of rank 3 and 4 as integer structure-constant tables.
//!
//! A based ring of rank `n` is the free module `Z^n` with basis
//! `(1, e_1, ..., e_{n-1})` and a commutative multiplication fixed by the
//! products `e_i * e_j`, each stored as a full coordinate vector (the
//! constant coordinate is explicit because the tables built from forms have
//! constant terms). Equality of based rings is componentwise equality of
//! tables; isomorphism is only ever certified through explicit
//! change-of-basis witnesses.
//!
//! Rank-4 rings come from binary quartic forms via the multiplication table
//! on the basis `(zeta1, zeta2, zeta3')`; rank-3 rings come from binary
//! cubic forms via the classical table on `(omega, theta)`, and that
//! construction is inverted by [`bcf_from_cubic_ring`].

use crate::exact::{int, Int};
use crate::forms::{act_gl2_cubic_twisted, BinaryCubicForm, BinaryQuarticForm, GL2Elem};
use crate::report::CheckReport;
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rank-3 or rank-4 commutative ring with a chosen module basis, given by
/// integer structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasedRing {
    rank: usize,
    /// Products `e_i * e_j` for `1 <= i <= j < rank`, in row-major (i <= j)
    /// order; each entry is a coordinate vector over `(1, e_1, ...)`.
    products: Vec<Vec<Int>>,
}

/// Element of a based ring, as coordinates over `(1, e_1, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub coords: Vec<Int>,
}

impl RingElem {
    pub fn new(coords: Vec<Int>) -> Self {
        RingElem { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RingElem::new(coords.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        RingElem::new(vec![Int::zero(); rank])
    }
}

/// Index of the pair `(i, j)`, `1 <= i <= j < rank`, in row-major order.
fn pair_index(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j < rank);
    let m = rank - 1;
    // row i-1 starts after a staircase of full rows
    let row = i - 1;
    row * m - row * (row.saturating_sub(1)) / 2 + (j - i)
}

/// Number of stored products for a given rank.
pub fn table_len(rank: usize) -> usize {
    let m = rank - 1;
    m * (m + 1) / 2
}

impl BasedRing {
    /// Build from a table; validates shape only. Associativity is checked
    /// separately by [`verify_ring_axioms`] so that corrupt tables can be
    /// represented and then rejected.
    pub fn new(rank: usize, products: Vec<Vec<Int>>) -> Result<Self> {
        if rank != 3 && rank != 4 {
            return Err(Error::CorruptRing(format!("rank {rank} not supported")));
        }
        if products.len() != table_len(rank) {
            return Err(Error::CorruptRing(format!(
                "expected {} products for rank {rank}, got {}",
                table_len(rank),
                products.len()
            )));
        }
        if let Some(p) = products.iter().find(|p| p.len() != rank) {
            return Err(Error::CorruptRing(format!(
                "product vector has {} coordinates, expected {rank}",
                p.len()
            )));
        }
        Ok(BasedRing { rank, products })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of `e_i * e_j` (symmetric in `i`, `j`).
    pub fn product(&self, i: usize, j: usize) -> &[Int] {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.products[pair_index(self.rank, i, j)]
    }

    /// The stored products in serialization order.
    pub fn table(&self) -> &[Vec<Int>] {
        &self.products
    }

    /// Basis element `e_k` (`k = 0` is the ring unit).
    pub fn basis_elem(&self, k: usize) -> RingElem {
        let mut coords = vec![Int::zero(); self.rank];
        coords[k] = Int::one();
        RingElem::new(coords)
    }

    /// Exact product of two elements.
    pub fn mul(&self, x: &RingElem, y: &RingElem) -> RingElem {
        let n = self.rank;
        let mut out = vec![Int::zero(); n];
        out[0] = &x.coords[0] * &y.coords[0];
        for k in 1..n {
            out[k] = &x.coords[0] * &y.coords[k] + &y.coords[0] * &x.coords[k];
        }
        for i in 1..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 1..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let scale = &x.coords[i] * &y.coords[j];
                for (o, p) in out.iter_mut().zip(self.product(i, j)) {
                    *o += &scale * p;
                }
            }
        }
        RingElem::new(out)
    }

    /// Matrix of multiplication by `x` on the basis `(1, e_1, ...)`,
    /// columns `x * e_j`.
    pub fn mult_matrix(&self, x: &RingElem) -> Vec<Vec<Int>> {
        (0..self.rank)
            .map(|j| self.mul(x, &self.basis_elem(j)).coords)
            .collect()
    }

    /// Trace of multiplication by `x`.
    pub fn trace(&self, x: &RingElem) -> Int {
        let cols = self.mult_matrix(x);
        let mut t = Int::zero();
        for (j, col) in cols.iter().enumerate() {
            t += &col[j];
        }
        t
    }
}

/// Determinant of a small square matrix by Laplace expansion; exact.
fn det_small(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Int::zero();
    for (j, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Int>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * det_small(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Discriminant of a based ring: determinant of the trace pairing
/// `Tr(b_i * b_j)` over the basis `(1, e_1, ...)`.
pub fn disc_ring(r: &BasedRing) -> Int {
    let n = r.rank();
    let basis: Vec<RingElem> = (0..n).map(|k| r.basis_elem(k)).collect();
    let gram: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| r.trace(&r.mul(&basis[i], &basis[j])))
                .collect()
        })
        .collect();
    det_small(&gram)
}

/// Quartic ring of a binary quartic form, on the basis
/// `(zeta1, zeta2, zeta3')` with `zeta3' = zeta3 + f3`:
///
/// ```text
/// zeta1^2       = -f1*zeta1 + f0*zeta2
/// zeta1*zeta2   = -f2*zeta1 + f0*zeta3' - f0*f3
/// zeta1*zeta3'  = -f0*f4
/// zeta2^2       = -f3*zeta1 - f2*zeta2 + f1*zeta3' - f1*f3 - f0*f4
/// zeta2*zeta3'  = -f4*zeta1 - f1*f4
/// zeta3'^2      = -f4*zeta2 + f3*zeta3' - f2*f4
/// ```
///
/// The table is valid for every integral form, including `f0 = 0` and the
/// zero form (which yields `Z[z1,z2,z3]/(z1,z2,z3)^2`).
pub fn quartic_ring_from_bqf(f: &BinaryQuarticForm) -> BasedRing {
    let [f0, f1, f2, f3, f4] = &f.coeffs;
    let products = vec![
        vec![Int::zero(), -f1.clone(), f0.clone(), Int::zero()],
        vec![-(f0 * f3), -f2.clone(), Int::zero(), f0.clone()],
        vec![-(f0 * f4), Int::zero(), Int::zero(), Int::zero()],
        vec![-(f1 * f3) - f0 * f4, -f3.clone(), -f2.clone(), f1.clone()],
        vec![-(f1 * f4), -f4.clone(), Int::zero(), Int::zero()],
        vec![-(f2 * f4), Int::zero(), -f4.clone(), f3.clone()],
    ];
    BasedRing::new(4, products).expect("table shape is fixed")
}

/// Cubic ring of a binary cubic form, on the basis `(omega, theta)`:
///
/// ```text
/// omega*theta = -a*d
/// omega^2     = -a*c + b*omega - a*theta
/// theta^2     = -b*d + d*omega - c*theta
/// ```
pub fn cubic_ring_from_bcf(f: &BinaryCubicForm) -> BasedRing {
    let [a, b, c, d] = &f.coeffs;
    let products = vec![
        vec![-(a * c), b.clone(), -a.clone()],
        vec![-(a * d), Int::zero(), Int::zero()],
        vec![-(b * d), d.clone(), -c.clone()],
    ];
    BasedRing::new(3, products).expect("table shape is fixed")
}

/// Recover the binary cubic form of a rank-3 based ring.
///
/// The basis lifts are first translated so that the `omega*theta` product is
/// a pure constant (the unique normalization), then the coefficients are
/// read off the normalized table. Inverse to [`cubic_ring_from_bcf`]:
/// the round trip is the identity, and the read-off does not depend on the
/// lifts of the input basis.
///
/// Rejects tables that are not associative or whose normalized table is not
/// of the required shape; both are impossible for genuine based rings and
/// signal corrupt input.
pub fn bcf_from_cubic_ring(r: &BasedRing) -> Result<BinaryCubicForm> {
    if r.rank() != 3 {
        return Err(Error::CorruptRing(format!(
            "expected rank 3, got {}",
            r.rank()
        )));
    }
    let axioms = verify_ring_axioms(r);
    if !axioms.pass() {
        return Err(Error::CorruptRing(format!(
            "not associative: {}",
            axioms.failures[0].detail
        )));
    }

    // omega*theta = m + u*omega + v*theta; translate omega -> omega - v,
    // theta -> theta - u so the product becomes a pure constant.
    let u = r.product(1, 2)[1].clone();
    let v = r.product(1, 2)[2].clone();
    let omega = RingElem::new(vec![-v, Int::one(), Int::zero()]);
    let theta = RingElem::new(vec![-u, Int::zero(), Int::one()]);

    // Products of the translated lifts, re-expressed over (1, omega', theta').
    // An element z0 + z1*e1 + z2*e2 has omega'/theta' coordinates (z1, z2)
    // and constant z0 + z1*shift1 + z2*shift2 cancelled by the lift shifts;
    // since omega' differs from e1 by a constant, the non-constant
    // coordinates carry over and only the constant needs adjusting.
    let reexpress = |z: &RingElem| -> Vec<Int> {
        let c0 = &z.coords[0]
            + &z.coords[1] * &omega.coords[0] * int(-1)
            + &z.coords[2] * &theta.coords[0] * int(-1);
        vec![c0, z.coords[1].clone(), z.coords[2].clone()]
    };

    let p_oo = reexpress(&r.mul(&omega, &omega));
    let p_ot = reexpress(&r.mul(&omega, &theta));
    let p_tt = reexpress(&r.mul(&theta, &theta));

    if !p_ot[1].is_zero() || !p_ot[2].is_zero() {
        return Err(Error::CorruptRing(
            "normalization failed: omega*theta not a pure constant".into(),
        ));
    }

    // omega^2 = -ac + b*omega - a*theta ; theta^2 = -bd + d*omega - c*theta
    let a = -p_oo[2].clone();
    let b = p_oo[1].clone();
    let c = -p_tt[2].clone();
    let d = p_tt[1].clone();

    let consistent = p_ot[0] == -(&a * &d) && p_oo[0] == -(&a * &c) && p_tt[0] == -(&b * &d);
    if !consistent {
        return Err(Error::CorruptRing(
            "constant terms inconsistent with a cubic-form table".into(),
        ));
    }
    Ok(BinaryCubicForm::new([a, b, c, d]))
}

/// Check the based-ring axioms: the stored table is symmetric by
/// construction, so this verifies associativity `(e_i e_j) e_k = e_i (e_j e_k)`
/// over all basis triples. An empty failure list means the table is a
/// genuine commutative ring structure.
pub fn verify_ring_axioms(r: &BasedRing) -> CheckReport {
    let mut report = CheckReport::default();
    let n = r.rank();
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                report.record_case();
                let ei = r.basis_elem(i);
                let ej = r.basis_elem(j);
                let ek = r.basis_elem(k);
                let lhs = r.mul(&r.mul(&ei, &ej), &ek);
                let rhs = r.mul(&ei, &r.mul(&ej, &ek));
                if lhs != rhs {
                    report.fail(
                        crate::serial::print_ring(r),
                        format!("(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"),
                    );
                }
            }
        }
    }
    report
}

/// Re-express the ring of a rank-3 based ring on the new basis
/// `(omega', theta') = g * (omega, theta)` of the quotient modulo `Z`.
/// The new table uses the canonical lifts of the new basis (no constant
/// part relative to the old lifts); reading a form off it goes through the
/// usual normalization in [`bcf_from_cubic_ring`].
pub fn change_cubic_basis(r: &BasedRing, g: &GL2Elem) -> Result<BasedRing> {
    if r.rank() != 3 {
        return Err(Error::CorruptRing(format!(
            "expected rank 3, got {}",
            r.rank()
        )));
    }
    let (a, b, c, d) = g.entries();
    let u1 = RingElem::new(vec![Int::zero(), a.clone(), b.clone()]);
    let u2 = RingElem::new(vec![Int::zero(), c.clone(), d.clone()]);
    // inverse transpose of g, for converting e-coordinates to u-coordinates
    let det = g.det();
    let inv_t = [[d * &det, -(c * &det)], [-(b * &det), a * &det]];
    let to_u = |z: &RingElem| -> Vec<Int> {
        vec![
            z.coords[0].clone(),
            &inv_t[0][0] * &z.coords[1] + &inv_t[0][1] * &z.coords[2],
            &inv_t[1][0] * &z.coords[1] + &inv_t[1][1] * &z.coords[2],
        ]
    };
    let products = vec![
        to_u(&r.mul(&u1, &u1)),
        to_u(&r.mul(&u1, &u2)),
        to_u(&r.mul(&u2, &u2)),
    ];
    BasedRing::new(3, products)
}

/// A binary cubic form with `x^3` coefficient `-1` together with its ring;
/// the distinguished generator is `omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenizedCubic {
    form: BinaryCubicForm,
    ring: BasedRing,
}

impl MonogenizedCubic {
    pub fn new(form: BinaryCubicForm) -> Result<Self> {
        if !is_monogenized_based(&form) {
            return Err(Error::NotMonogenized {
                leading: form.a().clone(),
            });
        }
        let ring = cubic_ring_from_bcf(&form);
        Ok(MonogenizedCubic { form, ring })
    }

    pub fn form(&self) -> &BinaryCubicForm {
        &self.form
    }

    pub fn ring(&self) -> &BasedRing {
        &self.ring
    }
}

/// True iff the `x^3` coefficient is `-1`.
pub fn is_monogenized_based(f: &BinaryCubicForm) -> bool {
    *f.a() == int(-1)
}

/// Canonical representative of the orbit of `f` under the lower-unipotent
/// subgroup `N = (1 0; * 1)`, which shifts the `x^2 y` coefficient by
/// multiples of 3. The representative is the unique orbit element with
/// `b` in `{0, 1, 2}`; the returned witness `n` satisfies
/// `(1 0; n 1) . f = canonical`. Idempotent by construction.
pub fn canonicalize_monogenized(f: &BinaryCubicForm) -> Result<(BinaryCubicForm, Int)> {
    if !is_monogenized_based(f) {
        return Err(Error::NotMonogenized {
            leading: f.a().clone(),
        });
    }
    // acting by (1 0; n 1) sends b to b - 3n
    let n = f.b().div_floor(&int(3));
    let g = GL2Elem::new(crate::exact::Mat2::new([
        [Int::one(), Int::zero()],
        [n.clone(), Int::one()],
    ]))
    .expect("unipotent matrices are unimodular");
    let canonical = act_gl2_cubic_twisted(&g, f);
    debug_assert!(canonical.b() >= &int(0) && canonical.b() < &int(3));
    Ok((canonical, n))
}
