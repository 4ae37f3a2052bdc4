//! Line-oriented record serialization.
//!
//! One record per line, fields separated by single spaces, all integers in
//! base 10:
//!
//! ```text
//! bqf f0 f1 f2 f3 f4
//! bcf a b c d
//! tqf a11 a22 a33 a12 a13 a23
//! pair <tqf>|<tqf>
//! gl2 a b c d
//! ring <rank> <structure constants, (i <= j) row-major, constant first>
//! mat3 m11 m12 m13 m21 m22 m23 m31 m32 m33
//! qtqf ... / qpair ...   (rational fields, `n` or `n/d`, lowest terms)
//! ```
//!
//! Printing then parsing any emitted record is the identity.

use crate::exact::{Int, Mat3, Rat};
use crate::forms::{
    BinaryCubicForm, BinaryQuarticForm, GL2Elem, GL3Elem, RatTQFPair, RatTernaryQuadraticForm,
    TQFPair, TernaryQuadraticForm,
};
use crate::rings::{table_len, BasedRing};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Any record the grammar knows about.
#[derive(Debug, Clone, PartialEq)]
pub enum Record {
    Bqf(BinaryQuarticForm),
    Bcf(BinaryCubicForm),
    Tqf(TernaryQuadraticForm),
    Pair(TQFPair),
    Gl2(GL2Elem),
    Ring(BasedRing),
    Mat3Rec(GL3Elem),
    QTqf(RatTernaryQuadraticForm),
    QPair(RatTQFPair),
}

fn join_ints<'a>(vals: impl IntoIterator<Item = &'a Int>) -> String {
    let mut out = String::new();
    for (i, v) in vals.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn join_rats<'a>(vals: impl IntoIterator<Item = &'a Rat>) -> String {
    let mut out = String::new();
    for (i, v) in vals.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

pub fn print_bqf(f: &BinaryQuarticForm) -> String {
    format!("bqf {}", join_ints(&f.coeffs))
}

pub fn print_bcf(f: &BinaryCubicForm) -> String {
    format!("bcf {}", join_ints(&f.coeffs))
}

pub fn print_tqf(q: &TernaryQuadraticForm) -> String {
    format!("tqf {}", join_ints(&q.coeffs))
}

pub fn print_pair(p: &TQFPair) -> String {
    format!("pair {}|{}", print_tqf(&p.a), print_tqf(&p.b))
}

pub fn print_gl2(g: &GL2Elem) -> String {
    let (a, b, c, d) = g.entries();
    format!("gl2 {}", join_ints([a, b, c, d]))
}

pub fn print_mat3(h: &GL3Elem) -> String {
    format!("mat3 {}", join_ints(h.mat().rows.iter().flatten()))
}

pub fn print_ring(r: &BasedRing) -> String {
    format!(
        "ring {} {}",
        r.rank(),
        join_ints(r.table().iter().flatten())
    )
}

pub fn print_qtqf(q: &RatTernaryQuadraticForm) -> String {
    format!("qtqf {}", join_rats(&q.coeffs))
}

pub fn print_qpair(p: &RatTQFPair) -> String {
    format!("qpair {}|{}", print_qtqf(&p.a), print_qtqf(&p.b))
}

pub fn print_record(r: &Record) -> String {
    match r {
        Record::Bqf(f) => print_bqf(f),
        Record::Bcf(f) => print_bcf(f),
        Record::Tqf(q) => print_tqf(q),
        Record::Pair(p) => print_pair(p),
        Record::Gl2(g) => print_gl2(g),
        Record::Ring(r) => print_ring(r),
        Record::Mat3Rec(h) => print_mat3(h),
        Record::QTqf(q) => print_qtqf(q),
        Record::QPair(p) => print_qpair(p),
    }
}

fn parse_int(tok: &str) -> Result<Int> {
    tok.parse::<Int>()
        .map_err(|_| Error::parse(1, format!("`{tok}` is not an integer")))
}

fn parse_rat(tok: &str) -> Result<Rat> {
    match tok.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(tok)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den == Int::from(0) {
                return Err(Error::parse(1, format!("`{tok}` has zero denominator")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

fn fields<'a, const N: usize>(tag: &str, body: &'a str) -> Result<[&'a str; N]> {
    let toks: Vec<&str> = body.split(' ').filter(|t| !t.is_empty()).collect();
    if toks.len() != N {
        return Err(Error::parse(
            1,
            format!("`{tag}` record needs {N} fields, got {}", toks.len()),
        ));
    }
    Ok(toks.try_into().expect("length checked"))
}

fn tagged<'a>(line: &'a str, tag: &str) -> Result<&'a str> {
    let line = line.trim();
    match line.strip_prefix(tag) {
        Some("") => Ok(""),
        Some(rest) if rest.starts_with(' ') => Ok(rest.trim_start()),
        _ => Err(Error::parse(1, format!("expected a `{tag}` record"))),
    }
}

pub fn parse_bqf(line: &str) -> Result<BinaryQuarticForm> {
    let toks: [&str; 5] = fields("bqf", tagged(line, "bqf")?)?;
    let mut coeffs = [
        Int::from(0),
        Int::from(0),
        Int::from(0),
        Int::from(0),
        Int::from(0),
    ];
    for (c, t) in coeffs.iter_mut().zip(toks) {
        *c = parse_int(t)?;
    }
    Ok(BinaryQuarticForm::new(coeffs))
}

pub fn parse_bcf(line: &str) -> Result<BinaryCubicForm> {
    let toks: [&str; 4] = fields("bcf", tagged(line, "bcf")?)?;
    let mut coeffs = [Int::from(0), Int::from(0), Int::from(0), Int::from(0)];
    for (c, t) in coeffs.iter_mut().zip(toks) {
        *c = parse_int(t)?;
    }
    Ok(BinaryCubicForm::new(coeffs))
}

pub fn parse_tqf(line: &str) -> Result<TernaryQuadraticForm> {
    let toks: [&str; 6] = fields("tqf", tagged(line, "tqf")?)?;
    let mut coeffs = [
        Int::from(0),
        Int::from(0),
        Int::from(0),
        Int::from(0),
        Int::from(0),
        Int::from(0),
    ];
    for (c, t) in coeffs.iter_mut().zip(toks) {
        *c = parse_int(t)?;
    }
    Ok(TernaryQuadraticForm::new(coeffs))
}

pub fn parse_pair(line: &str) -> Result<TQFPair> {
    let body = tagged(line, "pair")?;
    let (left, right) = body
        .split_once('|')
        .ok_or_else(|| Error::parse(1, "`pair` record needs two `tqf` halves separated by `|`"))?;
    Ok(TQFPair::new(parse_tqf(left)?, parse_tqf(right)?))
}

pub fn parse_gl2(line: &str) -> Result<GL2Elem> {
    let toks: [&str; 4] = fields("gl2", tagged(line, "gl2")?)?;
    let a = parse_int(toks[0])?;
    let b = parse_int(toks[1])?;
    let c = parse_int(toks[2])?;
    let d = parse_int(toks[3])?;
    GL2Elem::new(crate::exact::Mat2::new([[a, b], [c, d]]))
}

pub fn parse_mat3(line: &str) -> Result<GL3Elem> {
    let toks: [&str; 9] = fields("mat3", tagged(line, "mat3")?)?;
    let mut vals = Vec::with_capacity(9);
    for t in toks {
        vals.push(parse_int(t)?);
    }
    let mut rows = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            rows.rows[i][j] = vals[3 * i + j].clone();
        }
    }
    GL3Elem::new(rows)
}

pub fn parse_ring(line: &str) -> Result<BasedRing> {
    let body = tagged(line, "ring")?;
    let toks: Vec<&str> = body.split(' ').filter(|t| !t.is_empty()).collect();
    if toks.is_empty() {
        return Err(Error::parse(1, "`ring` record needs a rank"));
    }
    let rank: usize = toks[0]
        .parse()
        .map_err(|_| Error::parse(1, format!("`{}` is not a rank", toks[0])))?;
    if rank != 3 && rank != 4 {
        return Err(Error::parse(1, format!("rank must be 3 or 4, got {rank}")));
    }
    let expected = table_len(rank) * rank;
    if toks.len() - 1 != expected {
        return Err(Error::parse(
            1,
            format!(
                "`ring {rank}` record needs {expected} structure constants, got {}",
                toks.len() - 1
            ),
        ));
    }
    let mut products = Vec::with_capacity(table_len(rank));
    let mut it = toks[1..].iter();
    for _ in 0..table_len(rank) {
        let mut prod = Vec::with_capacity(rank);
        for _ in 0..rank {
            prod.push(parse_int(it.next().expect("count checked"))?);
        }
        products.push(prod);
    }
    BasedRing::new(rank, products)
}

pub fn parse_qtqf(line: &str) -> Result<RatTernaryQuadraticForm> {
    let toks: [&str; 6] = fields("qtqf", tagged(line, "qtqf")?)?;
    let zero = || Rat::from_integer(Int::from(0));
    let mut coeffs = [zero(), zero(), zero(), zero(), zero(), zero()];
    for (c, t) in coeffs.iter_mut().zip(toks) {
        *c = parse_rat(t)?;
    }
    Ok(RatTernaryQuadraticForm { coeffs })
}

pub fn parse_qpair(line: &str) -> Result<RatTQFPair> {
    let body = tagged(line, "qpair")?;
    let (left, right) = body.split_once('|').ok_or_else(|| {
        Error::parse(1, "`qpair` record needs two `qtqf` halves separated by `|`")
    })?;
    Ok(RatTQFPair {
        a: parse_qtqf(left)?,
        b: parse_qtqf(right)?,
    })
}

/// Parse any record, dispatching on the leading tag.
pub fn parse_record(line: &str) -> Result<Record> {
    let trimmed = line.trim();
    let tag = trimmed.split(' ').next().unwrap_or("");
    match tag {
        "bqf" => Ok(Record::Bqf(parse_bqf(trimmed)?)),
        "bcf" => Ok(Record::Bcf(parse_bcf(trimmed)?)),
        "tqf" => Ok(Record::Tqf(parse_tqf(trimmed)?)),
        "pair" => Ok(Record::Pair(parse_pair(trimmed)?)),
        "gl2" => Ok(Record::Gl2(parse_gl2(trimmed)?)),
        "ring" => Ok(Record::Ring(parse_ring(trimmed)?)),
        "mat3" => Ok(Record::Mat3Rec(parse_mat3(trimmed)?)),
        "qtqf" => Ok(Record::QTqf(parse_qtqf(trimmed)?)),
        "qpair" => Ok(Record::QPair(parse_qpair(trimmed)?)),
        other => Err(Error::parse(1, format!("unknown record tag `{other}`"))),
    }
}
