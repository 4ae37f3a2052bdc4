//! Named verification suites: exhaustive sweeps that re-check the library's
//! identities at pinned desk-scale bounds.
//!
//! Every suite is a pure function of its [`SuiteParams`]; given equal
//! parameters the report is byte-identical, regardless of `jobs`.
//! Enumeration ranges are partitioned into contiguous shards, workers share
//! nothing, and shard reports are merged in shard order.

use crate::enumerate::{cubic_at, cubic_count, quartic_at, quartic_count};
use crate::exact::{int, Int, Rat};
use crate::forms::{
    act_gl2_cubic_twisted, act_gl2_quartic, conj_rat_tqf, det_cubic_of_pair, disc_cubic,
    disc_quartic, eval_ternary, quartic_invariants, rho, BinaryCubicForm, BinaryQuarticForm,
    GL2Elem, TQFPair, TernaryQuadraticForm,
};
use crate::report::CheckReport;
use crate::resolvent::{
    alpha_coords, coord_vectors, equivariance_check, psi, psi_prime, psi_prime_det_sides, pullback,
    reduce_to_a0, shear_cubic_rational, stabilizer_scan, RESOLVENT_ORIENTATION,
};
use crate::rings::{
    bcf_from_cubic_ring, canonicalize_monogenized, change_cubic_basis, cubic_ring_from_bcf,
    disc_ring, quartic_ring_from_bqf, verify_ring_axioms,
};
use crate::serial::{print_bcf, print_bqf, print_gl2};
use crate::words::all_words;
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Desk-scale bounds for every suite, normally read from `bounds.conf` at
/// the repository root (embedded at compile time as [`PINNED_CONFIG`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub quartic_box: i64,
    pub cubic_box: i64,
    pub word_len: usize,
    pub stab_bound: i64,
    pub rho_entry_bound: i64,
    pub coord_box: i64,
    pub shift_range: i64,
    pub family_bound: i64,
    pub n13_coeff_bound: i64,
    pub n13_k_bound: i64,
    pub reduce_trials: u64,
    pub reduce_entry_bound: i64,
    pub seed: u64,
    pub jobs: usize,
}

/// The checked-in bounds file; the acceptance run uses exactly this text.
pub const PINNED_CONFIG: &str = include_str!("../../../bounds.conf");

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams::from_config(PINNED_CONFIG).expect("pinned bounds.conf parses")
    }
}

impl SuiteParams {
    /// Parse `key=value` lines; `#` starts a comment, blank lines ignored.
    /// Unknown keys are rejected so that typos cannot silently unpin a bound.
    pub fn from_config(text: &str) -> Result<Self> {
        let mut p = SuiteParams {
            quartic_box: 2,
            cubic_box: 3,
            word_len: 4,
            stab_bound: 1,
            rho_entry_bound: 2,
            coord_box: 2,
            shift_range: 5,
            family_bound: 3,
            n13_coeff_bound: 3,
            n13_k_bound: 5,
            reduce_trials: 200,
            reduce_entry_bound: 3,
            seed: 0xDEAD_BEEF,
            jobs: 1,
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::parse(lineno + 1, format!("expected key=value, got `{line}`"))
            })?;
            let v = value.trim();
            let parse_i64 = || -> Result<i64> {
                v.parse()
                    .map_err(|_| Error::parse(lineno + 1, format!("`{v}` is not an integer")))
            };
            match key.trim() {
                "quartic_box" => p.quartic_box = parse_i64()?,
                "cubic_box" => p.cubic_box = parse_i64()?,
                "word_len" => p.word_len = parse_i64()? as usize,
                "stab_bound" => p.stab_bound = parse_i64()?,
                "rho_entry_bound" => p.rho_entry_bound = parse_i64()?,
                "coord_box" => p.coord_box = parse_i64()?,
                "shift_range" => p.shift_range = parse_i64()?,
                "family_bound" => p.family_bound = parse_i64()?,
                "n13_coeff_bound" => p.n13_coeff_bound = parse_i64()?,
                "n13_k_bound" => p.n13_k_bound = parse_i64()?,
                "reduce_trials" => p.reduce_trials = parse_i64()? as u64,
                "reduce_entry_bound" => p.reduce_entry_bound = parse_i64()?,
                "seed" => {
                    p.seed = v
                        .parse()
                        .map_err(|_| Error::parse(lineno + 1, format!("`{v}` is not a seed")))?
                }
                other => {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("unknown bounds key `{other}`"),
                    ))
                }
            }
        }
        Ok(p)
    }
}

/// Partition `0..total` into `jobs` contiguous shards, run the worker on
/// each, and merge reports in shard order. With `jobs <= 1` runs inline.
pub fn run_sharded<F>(total: u64, jobs: usize, worker: F) -> CheckReport
where
    F: Fn(std::ops::Range<u64>) -> CheckReport + Sync,
{
    if jobs <= 1 || total == 0 {
        return worker(0..total);
    }
    let jobs = jobs.min(total as usize);
    let chunk = total.div_ceil(jobs as u64);
    let mut merged = CheckReport::default();
    let partials = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|k| {
                let lo = k * chunk;
                let hi = ((k + 1) * chunk).min(total);
                let worker = &worker;
                scope.spawn(move || worker(lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect::<Vec<_>>()
    });
    for part in partials {
        merged.absorb(part);
    }
    merged
}

/// Names accepted by [`run_suite`], in documentation order.
pub const SUITE_NAMES: &[&str] = &[
    "discriminant-chain",
    "ring-axioms",
    "equivariance",
    "rho-homomorphism",
    "stab-scan",
    "pullback-inverse",
    "psi-prime-det",
    "cubic-roundtrip",
    "resolvent-axioms",
    "monogenicity",
    "disc-oracle",
    "reduce-a0",
    "action-laws",
    "invariant-actions",
    "cubic-equivariance",
    "canonicalize-orbits",
    "psi-prime-equivariance",
    "n13-injectivity",
];

/// Run a named suite. Unknown names are rejected.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<CheckReport> {
    Ok(match name {
        "discriminant-chain" => discriminant_chain(p),
        "ring-axioms" => ring_axioms(p),
        "equivariance" => equivariance(p),
        "rho-homomorphism" => rho_homomorphism(p),
        "stab-scan" => stabilizer_scan(p.stab_bound),
        "pullback-inverse" => pullback_inverse(p),
        "psi-prime-det" => psi_prime_det(p),
        "cubic-roundtrip" => cubic_roundtrip(p),
        "resolvent-axioms" => resolvent_axioms(p),
        "monogenicity" => monogenicity(p),
        "disc-oracle" => disc_oracle(p),
        "reduce-a0" => reduce_a0(p),
        "action-laws" => action_laws(p),
        "invariant-actions" => invariant_actions(p),
        "cubic-equivariance" => cubic_equivariance(p),
        "canonicalize-orbits" => canonicalize_orbits(p),
        "psi-prime-equivariance" => psi_prime_equivariance(p),
        "n13-injectivity" => n13_injectivity(p),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// `disc_ring(R_f) = disc_quartic(f) = disc_cubic(det cubic of psi(f))`
/// over the whole quartic box.
pub fn discriminant_chain(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            rep.record_case();
            let d_form = disc_quartic(&f);
            let d_ring = disc_ring(&quartic_ring_from_bqf(&f));
            let d_res = disc_cubic(&det_cubic_of_pair(&psi(&f)));
            if d_ring != d_form || d_res != d_form {
                rep.fail(
                    print_bqf(&f),
                    format!("disc chain broken: ring {d_ring}, form {d_form}, resolvent {d_res}"),
                );
            }
        }
        rep
    })
}

/// Full associativity verification of every constructed ring: quartic rings
/// over the quartic box and cubic rings over the cubic box.
pub fn ring_axioms(p: &SuiteParams) -> CheckReport {
    let qbound = p.quartic_box;
    let mut report = run_sharded(quartic_count(qbound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(qbound, i);
            rep.record_case();
            let axioms = verify_ring_axioms(&quartic_ring_from_bqf(&f));
            if !axioms.pass() {
                rep.fail(print_bqf(&f), axioms.failures[0].detail.clone());
            }
        }
        rep
    });
    let cbound = p.cubic_box;
    let cubic_part = run_sharded(cubic_count(cbound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = cubic_at(cbound, i);
            rep.record_case();
            let axioms = verify_ring_axioms(&cubic_ring_from_bcf(&f));
            if !axioms.pass() {
                rep.fail(print_bcf(&f), axioms.failures[0].detail.clone());
            }
        }
        rep
    });
    report.absorb(cubic_part);
    report
}

/// `psi_bar(g . f)` equals the `rho(g)`-conjugated class of `psi(f)` for
/// every form in the box and every generator word up to the pinned length.
pub fn equivariance(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let words = all_words(p.word_len);
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            for g in &words {
                rep.record_case();
                if !equivariance_check(g, &f) {
                    rep.fail(
                        print_bqf(&f),
                        format!("equivariance fails for {}", print_gl2(g)),
                    );
                }
            }
        }
        rep
    })
}

fn unimodular_gl2_box(bound: i64) -> Vec<GL2Elem> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if (a * d - b * c).abs() == 1 {
                        out.push(GL2Elem::from_i64([[a, b], [c, d]]).expect("checked det"));
                    }
                }
            }
        }
    }
    out
}

/// `rho` is a homomorphism into the stabilizer of `A0`: determinant one,
/// congruence fixed, and multiplicativity over all pairs from the entry box.
pub fn rho_homomorphism(p: &SuiteParams) -> CheckReport {
    let elems = unimodular_gl2_box(p.rho_entry_bound);
    let gram_a0 = TernaryQuadraticForm::a0().gram2();
    let mut report = CheckReport::default();
    for g in &elems {
        report.record_case();
        let h = rho(g);
        if !h.det().is_one() || h.mat().mul(&gram_a0).mul(&h.mat().transpose()) != gram_a0 {
            report.fail(print_gl2(g), "rho(g) not a determinant-1 stabilizer of A0");
        }
    }
    let images: Vec<_> = elems.iter().map(rho).collect();
    let total = (elems.len() * elems.len()) as u64;
    let pair_part = run_sharded(total, p.jobs, |range| {
        let mut rep = CheckReport::default();
        for idx in range {
            let i = (idx / elems.len() as u64) as usize;
            let j = (idx % elems.len() as u64) as usize;
            rep.record_case();
            if rho(&elems[i].mul(&elems[j])).mat() != images[i].mul(&images[j]).mat() {
                rep.fail(
                    format!("{} ; {}", print_gl2(&elems[i]), print_gl2(&elems[j])),
                    "rho(g1*g2) != rho(g1)*rho(g2)",
                );
            }
        }
        rep
    });
    report.absorb(pair_part);
    report
}

/// `pullback(B_f) = f` over the box, `pullback(B + n*A0)` constant over the
/// shift range, and `pullback(A0) = 0`.
pub fn pullback_inverse(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let shift = p.shift_range;
    let a0 = TernaryQuadraticForm::a0();
    let mut report = run_sharded(quartic_count(bound), p.jobs, |range| {
        let a0 = TernaryQuadraticForm::a0();
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            let b = psi(&f).b;
            for n in -shift..=shift {
                rep.record_case();
                let shifted = b.lin_comb(&Int::one(), &a0, &int(n));
                if pullback(&shifted) != f {
                    rep.fail(
                        print_bqf(&f),
                        format!("pullback(B + {n}*A0) differs from f"),
                    );
                }
            }
        }
        rep
    });
    report.record_case();
    if !pullback(&a0).is_zero() {
        report.fail("tqf 0 0 1 -1 0 0", "pullback of A0 is not the zero form");
    }
    report
}

/// `4*Det(A0*x - B'*y) = -x^3 + (I/3)*x*y^2 - (J/27)*y^3` in exact rational
/// arithmetic over the whole box.
pub fn psi_prime_det(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            rep.record_case();
            let (computed, expected) = psi_prime_det_sides(&f);
            if computed != expected {
                rep.fail(print_bqf(&f), "psi_prime determinant identity fails");
            }
        }
        rep
    })
}

/// `bcf_from_cubic_ring(cubic_ring_from_bcf(f)) = f` over the cubic box.
pub fn cubic_roundtrip(p: &SuiteParams) -> CheckReport {
    let bound = p.cubic_box;
    run_sharded(cubic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = cubic_at(bound, i);
            rep.record_case();
            match bcf_from_cubic_ring(&cubic_ring_from_bcf(&f)) {
                Ok(back) if back == f => {}
                Ok(back) => rep.fail(
                    print_bcf(&f),
                    format!("round trip gave {}", print_bcf(&back)),
                ),
                Err(e) => rep.fail(print_bcf(&f), format!("round trip rejected: {e}")),
            }
        }
        rep
    })
}

/// Both resolvent conditions over the full quartic box and coordinate box.
///
/// Same identities as [`crate::resolvent::check_resolvent_conditions`], but
/// evaluated with per-form precomputation: for fixed `x` the wedge side is
/// a quadratic form in `y`, so each `(x, y)` pair costs a 6-term dot
/// product instead of a ring multiplication and a 3x3 determinant. Workers
/// shard over forms; `tests::fast_resolvent_sweep_matches_reference` pins
/// this driver against the reference implementation.
pub fn resolvent_axioms(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let coords = coord_vectors(p.coord_box);
    let alphas: Vec<[Int; 3]> = coords.iter().map(alpha_coords).collect();
    // y-monomials in the order y1^2, y1y2, y1y3, y2^2, y2y3, y3^2
    let monomials: Vec<[Int; 6]> = coords
        .iter()
        .map(|v| {
            [
                &v[0] * &v[0],
                &v[0] * &v[1],
                &v[0] * &v[2],
                &v[1] * &v[1],
                &v[1] * &v[2],
                &v[2] * &v[2],
            ]
        })
        .collect();
    let delta = int(RESOLVENT_ORIENTATION);
    let a0 = TernaryQuadraticForm::a0();

    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for fi in range {
            let f = quartic_at(bound, fi);
            let pair = psi(&f);
            let ring = quartic_ring_from_bqf(&f);

            // condition (2): the determinant cubic of the pair carried by
            // phi (theta form = A0 first, omega form = B second) is the
            // resolvent ring's form
            rep.record_case();
            let c_form = det_cubic_of_pair(&pair);
            let phi_pair = TQFPair::new(pair.a.clone(), pair.b.clone());
            if det_cubic_of_pair(&phi_pair) != c_form {
                rep.fail(print_bqf(&f), "condition (2) fails");
                continue;
            }

            // nonconstant parts of e_i * e_j
            let tab: Vec<Vec<[Int; 3]>> = (1..4)
                .map(|i| {
                    (1..4)
                        .map(|j| {
                            let prod = ring.product(i, j);
                            [prod[1].clone(), prod[2].clone(), prod[3].clone()]
                        })
                        .collect()
                })
                .collect();
            let a_vals: Vec<Int> = alphas.iter().map(|v| eval_ternary(&a0, v)).collect();
            let b_vals: Vec<Int> = alphas.iter().map(|v| eval_ternary(&pair.b, v)).collect();

            for (xi, x) in coords.iter().enumerate() {
                // columns of y -> nonconstant part of x*y
                let mut mcol = [
                    [Int::zero(), Int::zero(), Int::zero()],
                    [Int::zero(), Int::zero(), Int::zero()],
                    [Int::zero(), Int::zero(), Int::zero()],
                ];
                for (j, col) in mcol.iter_mut().enumerate() {
                    for (k, slot) in col.iter_mut().enumerate() {
                        let mut acc = Int::zero();
                        for (i, xc) in x.iter().enumerate() {
                            if !xc.is_zero() {
                                acc += xc * &tab[i][j][k];
                            }
                        }
                        *slot = acc;
                    }
                }
                // rows x cross e_j
                let cross = [
                    [Int::zero(), x[2].clone(), -x[1].clone()],
                    [-x[2].clone(), Int::zero(), x[0].clone()],
                    [x[1].clone(), -x[0].clone(), Int::zero()],
                ];
                let dot = |u: &[Int; 3], v: &[Int; 3]| -> Int {
                    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
                };
                let mut q = [
                    [Int::zero(), Int::zero(), Int::zero()],
                    [Int::zero(), Int::zero(), Int::zero()],
                    [Int::zero(), Int::zero(), Int::zero()],
                ];
                for (j, row) in q.iter_mut().enumerate() {
                    for (k, slot) in row.iter_mut().enumerate() {
                        *slot = dot(&cross[j], &mcol[k]);
                    }
                }
                let qq = [
                    q[0][0].clone(),
                    &q[0][1] + &q[1][0],
                    &q[0][2] + &q[2][0],
                    q[1][1].clone(),
                    &q[1][2] + &q[2][1],
                    q[2][2].clone(),
                ];
                for yi in 0..coords.len() {
                    rep.record_case();
                    let mon = &monomials[yi];
                    let mut wedge = Int::zero();
                    for (qc, mc) in qq.iter().zip(mon) {
                        if !qc.is_zero() && !mc.is_zero() {
                            wedge += qc * mc;
                        }
                    }
                    let lhs = &delta * wedge;
                    let rhs = &b_vals[xi] * &a_vals[yi] - &a_vals[xi] * &b_vals[yi];
                    if lhs != rhs {
                        rep.fail(
                            print_bqf(&f),
                            format!(
                                "condition (1) fails at x={:?} y={:?}",
                                coords[xi], coords[yi]
                            ),
                        );
                    }
                }
            }
        }
        rep
    })
}

/// The determinant cubic of `psi(f)` has leading coefficient `-1` for every
/// box form, and the family `-x^3 y + b x^2 y^2 + c x y^3 + d y^4` maps to
/// the determinant cubic `-x^3 + b x^2 y + c x y^2 + d y^3`.
pub fn monogenicity(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let mut report = run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            rep.record_case();
            let cubic = det_cubic_of_pair(&psi(&f));
            if *cubic.a() != int(-1) {
                rep.fail(print_bqf(&f), "determinant cubic not monogenized");
            }
        }
        rep
    });
    let fb = p.family_bound;
    for b in -fb..=fb {
        for c in -fb..=fb {
            for d in -fb..=fb {
                report.record_case();
                let f = BinaryQuarticForm::from_i64([0, -1, b, c, d]);
                let cubic = det_cubic_of_pair(&psi(&f));
                if cubic != BinaryCubicForm::from_i64([-1, b, c, d]) {
                    report.fail(
                        print_bqf(&f),
                        format!("family image is {}", print_bcf(&cubic)),
                    );
                }
            }
        }
    }
    report
}

/// Discriminant of `f(x, 1)` as the resultant with its derivative, by
/// fraction-free (Bareiss) elimination of the 7x7 Sylvester matrix;
/// completely independent of the invariant-based discriminant path.
fn disc_poly_oracle(f: &BinaryQuarticForm) -> Int {
    let p: Vec<Int> = f.coeffs.to_vec();
    let dp: Vec<Int> = vec![4 * &p[0], 3 * &p[1], 2 * &p[2], p[3].clone()];
    let mut m = vec![vec![Int::zero(); 7]; 7];
    for r in 0..3 {
        for (k, c) in p.iter().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..4 {
        for (k, c) in dp.iter().enumerate() {
            m[3 + r][r + k] = c.clone();
        }
    }
    let res = bareiss_det(m);
    // disc = (-1)^(n(n-1)/2) * Res(p, p') / lc(p); the sign is +1 for n = 4
    let (q, r) = res.div_rem(&p[0]);
    assert!(
        r.is_zero(),
        "resultant not divisible by the leading coefficient"
    );
    q
}

/// Exact determinant by Bareiss fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// `disc_quartic` agrees with the polynomial-discriminant oracle on every
/// box form with nonzero leading coefficient.
pub fn disc_oracle(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            if f.coeffs[0].is_zero() {
                continue;
            }
            rep.record_case();
            let via_invariants = disc_quartic(&f);
            let via_resultant = disc_poly_oracle(&f);
            if via_invariants != via_resultant {
                rep.fail(
                    print_bqf(&f),
                    format!("disc {via_invariants} but resultant oracle {via_resultant}"),
                );
            }
        }
        rep
    })
}

/// Randomized unimodular conjugates of `A0` reduce back to `A0`. Fixtures
/// are drawn from a seeded stream, so reports are reproducible.
pub fn reduce_a0(p: &SuiteParams) -> CheckReport {
    let mut report = CheckReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let gram_a0 = TernaryQuadraticForm::a0().gram2();
    let eb = p.reduce_entry_bound;
    let mut produced = 0;
    while produced < p.reduce_trials {
        let mut rows = [[0i64; 3]; 3];
        for row in &mut rows {
            for e in row.iter_mut() {
                *e = rng.gen_range(-eb..=eb);
            }
        }
        let m = crate::exact::Mat3::from_i64(rows);
        if !m.is_unimodular() {
            continue;
        }
        produced += 1;
        report.record_case();
        let moved = TernaryQuadraticForm::from_gram2(&m.mul(&gram_a0).mul(&m.transpose()));
        match reduce_to_a0(&moved) {
            Ok(h) => {
                let back = h.mat().mul(&moved.gram2()).mul(&h.mat().transpose());
                if back != gram_a0 || !h.det().is_one() {
                    report.fail(
                        crate::serial::print_tqf(&moved),
                        "returned matrix fails h*Gram*h^t = Gram(A0)",
                    );
                }
            }
            Err(e) => report.fail(
                crate::serial::print_tqf(&moved),
                format!("reduction failed: {e}"),
            ),
        }
    }
    report
}

/// `act(g1, act(g2, f)) = act(g1*g2, f)` for word pairs over the quartic
/// box, and for the twisted action over a cubic coefficient box.
pub fn action_laws(p: &SuiteParams) -> CheckReport {
    let words = all_words(2);
    let bound = p.quartic_box;
    let mut report = run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            for g1 in &words {
                for g2 in &words {
                    rep.record_case();
                    let step = act_gl2_quartic(g1, &act_gl2_quartic(g2, &f));
                    if step != act_gl2_quartic(&g1.mul(g2), &f) {
                        rep.fail(
                            print_bqf(&f),
                            format!("{} then {}", print_gl2(g2), print_gl2(g1)),
                        );
                    }
                }
            }
        }
        rep
    });
    let cbound = p.quartic_box.min(2);
    let cubic_part = run_sharded(cubic_count(cbound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = cubic_at(cbound, i);
            for g1 in &words {
                for g2 in &words {
                    rep.record_case();
                    let step = act_gl2_cubic_twisted(g1, &act_gl2_cubic_twisted(g2, &f));
                    if step != act_gl2_cubic_twisted(&g1.mul(g2), &f) {
                        rep.fail(
                            print_bcf(&f),
                            format!("{} then {}", print_gl2(g2), print_gl2(g1)),
                        );
                    }
                }
            }
        }
        rep
    });
    report.absorb(cubic_part);
    report
}

/// `I`, `J`, and the discriminant are fixed by every generator word
/// (both determinant signs occur among the words).
pub fn invariant_actions(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let words = all_words(p.word_len.min(3));
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            let expected = quartic_invariants(&f);
            let expected_disc = disc_quartic(&f);
            for g in &words {
                rep.record_case();
                let moved = act_gl2_quartic(g, &f);
                if quartic_invariants(&moved) != expected || disc_quartic(&moved) != expected_disc {
                    rep.fail(
                        print_bqf(&f),
                        format!("invariants move under {}", print_gl2(g)),
                    );
                }
            }
        }
        rep
    })
}

/// The cubic-ring construction is equivariant: rebasing the ring of `f` by
/// `g` yields the based ring of `g . f`.
pub fn cubic_equivariance(p: &SuiteParams) -> CheckReport {
    let bound = p.cubic_box;
    let gens = crate::words::generators();
    run_sharded(cubic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = cubic_at(bound, i);
            let ring = cubic_ring_from_bcf(&f);
            for g in &gens {
                rep.record_case();
                let moved = act_gl2_cubic_twisted(g, &f);
                let rebased = change_cubic_basis(&ring, g).and_then(|r| bcf_from_cubic_ring(&r));
                match rebased {
                    Ok(form) if form == moved => {}
                    Ok(form) => rep.fail(
                        print_bcf(&f),
                        format!(
                            "rebase gave {}, action gave {}",
                            print_bcf(&form),
                            print_bcf(&moved)
                        ),
                    ),
                    Err(e) => rep.fail(print_bcf(&f), format!("rebase failed: {e}")),
                }
            }
        }
        rep
    })
}

/// The canonical unipotent-orbit representative is idempotent and constant
/// along the orbit.
pub fn canonicalize_orbits(p: &SuiteParams) -> CheckReport {
    let bound = p.n13_coeff_bound;
    let mut report = CheckReport::default();
    for b in -bound..=bound {
        for c in -bound..=bound {
            for d in -bound..=bound {
                let f = BinaryCubicForm::from_i64([-1, b, c, d]);
                let (canon, _) = canonicalize_monogenized(&f).expect("leading -1");
                report.record_case();
                let (again, n) = canonicalize_monogenized(&canon).expect("leading -1");
                if again != canon || !n.is_zero() {
                    report.fail(print_bcf(&f), "canonicalization not idempotent");
                }
                for k in -p.shift_range..=p.shift_range {
                    report.record_case();
                    let g = GL2Elem::from_i64([[1, 0], [k, 1]]).expect("unipotent");
                    let moved = act_gl2_cubic_twisted(&g, &f);
                    let (from_orbit, _) = canonicalize_monogenized(&moved).expect("leading -1");
                    if from_orbit != canon {
                        report.fail(
                            print_bcf(&f),
                            format!("orbit element k={k} canonicalizes differently"),
                        );
                    }
                }
            }
        }
    }
    report
}

/// `psi_prime` is equivariant without any shift class:
/// `rho(g) * psi_prime(f) * rho(g)^t = psi_prime(g . f)` exactly.
pub fn psi_prime_equivariance(p: &SuiteParams) -> CheckReport {
    let bound = p.quartic_box;
    let gens = crate::words::generators();
    run_sharded(quartic_count(bound), p.jobs, |range| {
        let mut rep = CheckReport::default();
        for i in range {
            let f = quartic_at(bound, i);
            let image = psi_prime(&f);
            for g in &gens {
                rep.record_case();
                let h = rho(g);
                let conj_b = conj_rat_tqf(&h, &image.b);
                let conj_a = conj_rat_tqf(&h, &image.a);
                let direct = psi_prime(&act_gl2_quartic(g, &f));
                if conj_b != direct.b || conj_a != direct.a {
                    rep.fail(
                        print_bqf(&f),
                        format!("psi_prime not equivariant under {}", print_gl2(g)),
                    );
                }
            }
        }
        rep
    })
}

/// Fractional shears `(1 0; m/3 1)` with `3` not dividing `m` never map a
/// monogenized integral cubic to an integral one, and integral shears stay
/// in the same unipotent class: distinct classes remain distinct.
pub fn n13_injectivity(p: &SuiteParams) -> CheckReport {
    let bound = p.n13_coeff_bound;
    let mut report = CheckReport::default();
    for b in -bound..=bound {
        for c in -bound..=bound {
            for d in -bound..=bound {
                let f = BinaryCubicForm::from_i64([-1, b, c, d]);
                let (canon, _) = canonicalize_monogenized(&f).expect("leading -1");
                for m in -3 * p.n13_k_bound..=3 * p.n13_k_bound {
                    report.record_case();
                    let image = shear_cubic_rational(&f, &Rat::new(int(m), int(3)));
                    let integral = image.iter().all(|r| r.is_integer());
                    if m % 3 == 0 {
                        let moved = BinaryCubicForm::new([
                            image[0].to_integer(),
                            image[1].to_integer(),
                            image[2].to_integer(),
                            image[3].to_integer(),
                        ]);
                        let (moved_canon, _) =
                            canonicalize_monogenized(&moved).expect("leading -1");
                        if !integral || moved_canon != canon {
                            report.fail(
                                print_bcf(&f),
                                format!("integral shear m/3={m}/3 left the class"),
                            );
                        }
                    } else if integral {
                        report.fail(
                            print_bcf(&f),
                            format!("fractional shear m/3={m}/3 has integral image"),
                        );
                    }
                }
            }
        }
    }
    report
}
