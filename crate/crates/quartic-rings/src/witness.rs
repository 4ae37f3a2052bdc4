//! Orbit certificates: explicit, machine-checkable evidence that two forms
//! in one `GL2(Z)` orbit have isomorphic quartic rings with matching
//! monogenized cubic resolvents.
//!
//! For `f' = word . f` the certificate carries the group element `g`, its
//! image `h = rho(g)`, the shift `n` with `h B_f h^t = B_{f'} + n A0`, and
//! the translation parts of two affine base changes:
//!
//! * the quartic ring isomorphism `iota : R_{f'} -> R_f` with
//!   `iota(alpha'_i) = sum_j h[i][j] alpha_j + t_i`,
//! * the cubic resolvent isomorphism `kappa : C_f -> C_{f'}` with
//!   `kappa(omega) = omega' + s` and `kappa(theta) = -n omega' + theta' + u`,
//!   which preserves the distinguished generator modulo `Z`.
//!
//! The checker recomputes everything from scratch: the acted form, `rho`,
//! the shift, multiplicativity of both affine maps on all basis products,
//! and the transport law `kappa(phi_f(iota(x))) = phi_{f'}(x)` relating the
//! two quadratic resolvent maps on a coordinate box.

use crate::exact::{int, Int};
use crate::forms::{
    act_gl2_quartic, act_gl3_pair, rho, BinaryQuarticForm, GL2Elem, GL3Elem, TernaryQuadraticForm,
};
use crate::report::CheckReport;
use crate::resolvent::{alpha_coords, coord_vectors, psi, resolvent_data};
use crate::rings::{quartic_ring_from_bqf, BasedRing, RingElem};
use crate::serial::{parse_bqf, parse_gl2, parse_mat3, print_bqf, print_gl2, print_mat3};
use crate::words::{parse_word, word_product, word_string, GenLetter};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Basis order used by the pair coordinates: `alpha = (zeta3', zeta1, zeta2)`,
/// as indices into the ring basis `(1, e1, e2, e3)`.
const ALPHA_ORDER: [usize; 3] = [3, 1, 2];
/// The cubic resolvent basis in its own order.
const OMEGA_THETA_ORDER: [usize; 2] = [1, 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitWitness {
    pub word: Vec<GenLetter>,
    pub source: BinaryQuarticForm,
    pub image: BinaryQuarticForm,
    pub g: GL2Elem,
    pub h: GL3Elem,
    /// `n` with `h * Gram(B_f) * h^t = Gram(B_{f'}) + n * Gram(A0)`.
    pub shift: Int,
    /// Translation part of the quartic base change, in alpha order.
    pub quartic_translation: [Int; 3],
    /// Translation part `(s, u)` of the cubic base change.
    pub cubic_translation: [Int; 2],
}

/// Product of a source basis vector's image under the linear part, as an
/// element of the destination ring (no translation).
fn linear_image(dst_order: &[usize], rank: usize, row: &[Int]) -> RingElem {
    let mut coords = vec![Int::zero(); rank];
    for (j, val) in row.iter().enumerate() {
        coords[dst_order[j]] = val.clone();
    }
    RingElem::new(coords)
}

/// Reindex a destination ring element into `(const, view coords...)`.
fn to_view(dst_order: &[usize], elem: &RingElem) -> Vec<Int> {
    let mut out = vec![elem.coords[0].clone()];
    for &e in dst_order {
        out.push(elem.coords[e].clone());
    }
    out
}

/// Structure constants of `u_i * u_j` in the source ring, in view order.
fn view_product(r: &BasedRing, order: &[usize], i: usize, j: usize) -> Vec<Int> {
    let p = r.product(order[i], order[j]);
    let mut out = vec![p[0].clone()];
    for &e in order {
        out.push(p[e].clone());
    }
    out
}

/// Solve for the translation part of an affine ring isomorphism
/// `src -> dst` with the given linear part (in view coordinates); the
/// translations are determined by the diagonal products. Verification is
/// separate so a checker can run it on externally supplied translations.
fn solve_translations(
    src: &BasedRing,
    src_order: &[usize],
    dst: &BasedRing,
    dst_order: &[usize],
    linear: &[Vec<Int>],
) -> Result<Vec<Int>> {
    let m = src_order.len();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let img = linear_image(dst_order, dst.rank(), &linear[i]);
        let p_view = to_view(dst_order, &dst.mul(&img, &img));
        let c = view_product(src, src_order, i, i);
        let k = linear[i]
            .iter()
            .position(|v| !v.is_zero())
            .ok_or_else(|| Error::BadWitness(format!("zero linear row {i}")))?;
        // component k of: P_ii + 2 t_i * L[i] = c0-transport
        let mut rhs = Int::zero();
        for (mm, cm) in c[1..].iter().enumerate() {
            rhs += cm * &linear[mm][k];
        }
        let num = rhs - &p_view[k + 1];
        let den: Int = 2 * &linear[i][k];
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::BadWitness(format!(
                "no integral translation for basis vector {i}"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

/// Verify that `x -> linear x + t` is a ring isomorphism `src -> dst`
/// (unit preserved, multiplicative on all basis products, unimodular
/// linear part).
fn verify_affine_iso(
    src: &BasedRing,
    src_order: &[usize],
    dst: &BasedRing,
    dst_order: &[usize],
    linear: &[Vec<Int>],
    translations: &[Int],
) -> std::result::Result<(), String> {
    let m = src_order.len();
    if linear.len() != m || translations.len() != m {
        return Err("dimension mismatch".into());
    }
    let det: Int = match m {
        2 => &linear[0][0] * &linear[1][1] - &linear[0][1] * &linear[1][0],
        3 => crate::exact::det3_rows(
            &[
                linear[0][0].clone(),
                linear[0][1].clone(),
                linear[0][2].clone(),
            ],
            &[
                linear[1][0].clone(),
                linear[1][1].clone(),
                linear[1][2].clone(),
            ],
            &[
                linear[2][0].clone(),
                linear[2][1].clone(),
                linear[2][2].clone(),
            ],
        ),
        _ => return Err("unsupported rank".into()),
    };
    if det != int(1) && det != int(-1) {
        return Err(format!("linear part has determinant {det}"));
    }
    let iota: Vec<RingElem> = (0..m)
        .map(|i| {
            let mut e = linear_image(dst_order, dst.rank(), &linear[i]);
            e.coords[0] = translations[i].clone();
            e
        })
        .collect();
    for i in 0..m {
        for j in i..m {
            let lhs = dst.mul(&iota[i], &iota[j]);
            // transport of the source product through iota
            let c = view_product(src, src_order, i, j);
            let mut rhs = RingElem::zero(dst.rank());
            rhs.coords[0] = c[0].clone();
            for (mm, cm) in c[1..].iter().enumerate() {
                if cm.is_zero() {
                    continue;
                }
                for (slot, v) in rhs.coords.iter_mut().zip(&iota[mm].coords) {
                    *slot += cm * v;
                }
            }
            if lhs != rhs {
                return Err(format!("product of basis vectors {i},{j} not preserved"));
            }
        }
    }
    Ok(())
}

fn quartic_linear(h: &GL3Elem) -> Vec<Vec<Int>> {
    h.mat().rows.iter().map(|r| r.to_vec()).collect()
}

fn cubic_linear(shift: &Int) -> Vec<Vec<Int>> {
    vec![
        vec![Int::one(), Int::zero()],
        vec![-shift.clone(), Int::one()],
    ]
}

/// Build the certificate for `word . f`. The construction is total: the
/// required translations always exist, and the assembled certificate is
/// verified before being returned.
pub fn orbit_witness(f: &BinaryQuarticForm, word: &[GenLetter]) -> OrbitWitness {
    let g = word_product(word);
    let image = act_gl2_quartic(&g, f);
    let h = rho(&g);
    let conj = act_gl3_pair(&h, &psi(f));
    let shift = -conj.b.coeffs[3].clone();
    debug_assert_eq!(
        conj.b,
        psi(&image)
            .b
            .lin_comb(&Int::one(), &TernaryQuadraticForm::a0(), &shift)
    );

    let src_q = quartic_ring_from_bqf(&image);
    let dst_q = quartic_ring_from_bqf(f);
    let lin_q = quartic_linear(&h);
    let t_q = solve_translations(&src_q, &ALPHA_ORDER, &dst_q, &ALPHA_ORDER, &lin_q)
        .expect("quartic base change always has integral translations");

    let src_c = resolvent_data(f).cubic.ring().clone();
    let dst_c = resolvent_data(&image).cubic.ring().clone();
    let lin_c = cubic_linear(&shift);
    let t_c = solve_translations(
        &src_c,
        &OMEGA_THETA_ORDER,
        &dst_c,
        &OMEGA_THETA_ORDER,
        &lin_c,
    )
    .expect("cubic base change always has integral translations");

    let witness = OrbitWitness {
        word: word.to_vec(),
        source: f.clone(),
        image,
        g,
        h,
        shift,
        quartic_translation: t_q.try_into().expect("rank 4 has three translations"),
        cubic_translation: t_c.try_into().expect("rank 3 has two translations"),
    };
    let report = check_witness(&witness);
    assert!(
        report.pass(),
        "freshly built witness must validate: {:?}",
        report.failures
    );
    witness
}

/// Independent validation of a certificate: every claim is recomputed from
/// the word and the source form alone, then the supplied base changes are
/// verified as ring isomorphisms and checked to transport the quadratic
/// resolvent maps into each other.
pub fn check_witness(w: &OrbitWitness) -> CheckReport {
    let mut report = CheckReport::default();
    let fail = |detail: String, report: &mut CheckReport| {
        report.fail(print_bqf(&w.source), detail);
    };

    report.record_case();
    let g = word_product(&w.word);
    if g != w.g {
        fail(
            format!("word product is {}, not {}", print_gl2(&g), print_gl2(&w.g)),
            &mut report,
        );
    }
    report.record_case();
    let image = act_gl2_quartic(&w.g, &w.source);
    if image != w.image {
        fail(
            "acted form differs from the certified image".into(),
            &mut report,
        );
    }
    report.record_case();
    let h = rho(&w.g);
    if h != w.h {
        fail("matrix is not rho(word)".into(), &mut report);
    }
    report.record_case();
    if !h.det().is_one() {
        fail("matrix not in SL3".into(), &mut report);
    }
    report.record_case();
    let conj = act_gl3_pair(&w.h, &psi(&w.source));
    let expected = psi(&w.image)
        .b
        .lin_comb(&Int::one(), &TernaryQuadraticForm::a0(), &w.shift);
    if conj.a != TernaryQuadraticForm::a0() || conj.b != expected {
        fail(
            "shift does not witness the pair equivariance".into(),
            &mut report,
        );
    }

    // quartic ring isomorphism R_{f'} -> R_f
    report.record_case();
    let src_q = quartic_ring_from_bqf(&w.image);
    let dst_q = quartic_ring_from_bqf(&w.source);
    if let Err(e) = verify_affine_iso(
        &src_q,
        &ALPHA_ORDER,
        &dst_q,
        &ALPHA_ORDER,
        &quartic_linear(&w.h),
        &w.quartic_translation,
    ) {
        fail(format!("quartic base change: {e}"), &mut report);
    }

    // cubic resolvent isomorphism C_f -> C_{f'}, generator preserved
    report.record_case();
    let rd_f = resolvent_data(&w.source);
    let rd_image = resolvent_data(&w.image);
    let lin_c = cubic_linear(&w.shift);
    if let Err(e) = verify_affine_iso(
        rd_f.cubic.ring(),
        &OMEGA_THETA_ORDER,
        rd_image.cubic.ring(),
        &OMEGA_THETA_ORDER,
        &lin_c,
        &w.cubic_translation,
    ) {
        fail(format!("cubic base change: {e}"), &mut report);
    }
    report.record_case();
    if lin_c[0] != vec![Int::one(), Int::zero()] {
        fail(
            "cubic base change does not fix the generator mod Z".into(),
            &mut report,
        );
    }

    // transport of the quadratic resolvent maps:
    // kappa(phi_f(iota(x))) = phi_{f'}(x) on a coordinate box
    let ht = w.h.mat().transpose();
    for x in coord_vectors(1) {
        report.record_case();
        let v_alpha = alpha_coords(&x);
        let tv = ht.mul_vec(&v_alpha);
        let moved_e = [tv[1].clone(), tv[2].clone(), tv[0].clone()];
        let (p, q) = rd_f.phi.eval(&moved_e);
        let transported = (&p - &w.shift * &q, q);
        if transported != rd_image.phi.eval(&x) {
            fail(
                format!("quadratic map transport fails at {x:?}"),
                &mut report,
            );
        }
    }
    report
}

/// Multi-line textual form of a certificate.
pub fn print_witness(w: &OrbitWitness) -> String {
    let t = &w.quartic_translation;
    let c = &w.cubic_translation;
    format!(
        "witness word={}\n{}\n{}\n{}\n{}\nshift={}\nqtrans={} {} {}\nctrans={} {}\n",
        word_string(&w.word),
        print_bqf(&w.source),
        print_bqf(&w.image),
        print_gl2(&w.g),
        print_mat3(&w.h),
        w.shift,
        t[0],
        t[1],
        t[2],
        c[0],
        c[1],
    )
}

fn kv_line<'a>(
    lines: &mut std::iter::Enumerate<std::str::Lines<'a>>,
    key: &str,
) -> Result<(usize, &'a str)> {
    let (idx, line) = lines
        .next()
        .ok_or_else(|| Error::parse(0, format!("missing `{key}` line")))?;
    let lineno = idx + 1;
    line.trim()
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .map(|v| (lineno, v))
        .ok_or_else(|| Error::parse(lineno, format!("expected `{key}=...`")))
}

/// Parse the output of [`print_witness`].
pub fn parse_witness(text: &str) -> Result<OrbitWitness> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty witness"))?;
    let word_str = header
        .trim()
        .strip_prefix("witness word=")
        .ok_or_else(|| Error::parse(1, "expected `witness word=...`"))?;
    let word = parse_word(word_str)?;

    let mut next_record = |name: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some((idx, line)) => Ok((idx + 1, line.to_string())),
            None => Err(Error::parse(0, format!("missing `{name}` record"))),
        }
    };
    let (n1, source_line) = next_record("bqf")?;
    let source = parse_bqf(&source_line).map_err(|e| at_line(e, n1))?;
    let (n2, image_line) = next_record("bqf")?;
    let image = parse_bqf(&image_line).map_err(|e| at_line(e, n2))?;
    let (n3, g_line) = next_record("gl2")?;
    let g = parse_gl2(&g_line).map_err(|e| at_line(e, n3))?;
    let (n4, h_line) = next_record("mat3")?;
    let h = parse_mat3(&h_line).map_err(|e| at_line(e, n4))?;

    let (n5, shift_str) = kv_line(&mut lines, "shift")?;
    let shift: Int = shift_str
        .trim()
        .parse()
        .map_err(|_| Error::parse(n5, "shift is not an integer"))?;
    let (n6, qt_str) = kv_line(&mut lines, "qtrans")?;
    let qt = parse_int_list::<3>(qt_str, n6)?;
    let (n7, ct_str) = kv_line(&mut lines, "ctrans")?;
    let ct = parse_int_list::<2>(ct_str, n7)?;

    Ok(OrbitWitness {
        word,
        source,
        image,
        g,
        h,
        shift,
        quartic_translation: qt,
        cubic_translation: ct,
    })
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

fn parse_int_list<const N: usize>(s: &str, lineno: usize) -> Result<[Int; N]> {
    let toks: Vec<&str> = s.split(' ').filter(|t| !t.is_empty()).collect();
    if toks.len() != N {
        return Err(Error::parse(lineno, format!("expected {N} integers")));
    }
    let mut out = Vec::with_capacity(N);
    for t in toks {
        out.push(
            t.parse::<Int>()
                .map_err(|_| Error::parse(lineno, format!("`{t}` is not an integer")))?,
        );
    }
    Ok(out.try_into().expect("length checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bqf(c: [i64; 5]) -> BinaryQuarticForm {
        BinaryQuarticForm::from_i64(c)
    }

    #[test]
    fn empty_word_gives_identity_certificate() {
        let w = orbit_witness(&bqf([1, -2, 0, 1, 1]), &[]);
        assert_eq!(w.g, GL2Elem::identity());
        assert_eq!(w.h, GL3Elem::identity());
        assert!(w.shift.is_zero());
        assert!(w.quartic_translation.iter().all(Zero::is_zero));
        assert!(w.cubic_translation.iter().all(Zero::is_zero));
        assert!(check_witness(&w).pass());
    }

    #[test]
    fn swap_certificate_relates_reversed_forms() {
        let w = orbit_witness(&bqf([1, 2, 0, 0, 0]), &parse_word("S").unwrap());
        assert_eq!(w.image, bqf([0, 0, 0, 2, 1]));
        assert!(check_witness(&w).pass());
    }

    #[test]
    fn shear_certificate_has_the_expected_translations() {
        // worked by hand: T on x^4 + y^4 needs translations (1, -1, -3)
        let w = orbit_witness(&bqf([1, 0, 0, 0, 1]), &parse_word("T").unwrap());
        assert_eq!(w.image, bqf([2, 4, 6, 4, 1]));
        assert_eq!(w.shift, int(-2));
        assert_eq!(w.quartic_translation, [int(1), int(-1), int(-3)]);
        assert!(check_witness(&w).pass());
    }

    #[test]
    fn random_words_validate() {
        let words = ["", "S", "TU", "SUt", "TTSU", "tSTU"];
        let forms = [
            bqf([1, 2, -1, 0, 2]),
            bqf([0, 1, 0, 1, 0]),
            bqf([-2, 0, 1, 1, -1]),
        ];
        for ws in words {
            let word = parse_word(ws).unwrap();
            for f in &forms {
                let w = orbit_witness(f, &word);
                let report = check_witness(&w);
                assert!(report.pass(), "word {ws} on {f:?}: {:?}", report.failures);
            }
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let w = orbit_witness(&bqf([1, 2, -1, 0, 2]), &parse_word("SUt").unwrap());
        let text = print_witness(&w);
        assert_eq!(parse_witness(&text).unwrap(), w);
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut w = orbit_witness(&bqf([1, 2, -1, 0, 2]), &parse_word("ST").unwrap());
        w.shift += 1;
        assert!(!check_witness(&w).pass());

        let mut w = orbit_witness(&bqf([1, 2, -1, 0, 2]), &parse_word("ST").unwrap());
        w.quartic_translation[1] += 1;
        assert!(!check_witness(&w).pass());

        let mut w = orbit_witness(&bqf([1, 2, -1, 0, 2]), &parse_word("ST").unwrap());
        w.image = bqf([1, 0, 0, 0, 1]);
        assert!(!check_witness(&w).pass());
    }
}
