//! Words over a fixed generating set of `GL2(Z)`.
//!
//! The generators are the swap `S = (0 1; 1 0)`, the reflection
//! `U = (1 0; 0 -1)`, and the shear `T = (1 1; 0 1)`; together they generate
//! all of `GL2(Z)`. Word enumeration is deterministic: by length, then by
//! letter index.

use crate::forms::GL2Elem;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenLetter {
    /// `S = (0 1; 1 0)`
    Swap,
    /// `U = (1 0; 0 -1)`
    Reflect,
    /// `T = (1 1; 0 1)`
    Shear,
    /// `t = T^-1 = (1 -1; 0 1)`
    ShearInv,
}

impl GenLetter {
    pub fn to_char(self) -> char {
        match self {
            GenLetter::Swap => 'S',
            GenLetter::Reflect => 'U',
            GenLetter::Shear => 'T',
            GenLetter::ShearInv => 't',
        }
    }

    pub fn elem(self) -> GL2Elem {
        let rows = match self {
            GenLetter::Swap => [[0, 1], [1, 0]],
            GenLetter::Reflect => [[1, 0], [0, -1]],
            GenLetter::Shear => [[1, 1], [0, 1]],
            GenLetter::ShearInv => [[1, -1], [0, 1]],
        };
        GL2Elem::from_i64(rows).expect("generators are unimodular")
    }
}

pub fn swap() -> GL2Elem {
    GenLetter::Swap.elem()
}

pub fn reflect() -> GL2Elem {
    GenLetter::Reflect.elem()
}

pub fn shear() -> GL2Elem {
    GenLetter::Shear.elem()
}

/// The three-letter generating set used by the exhaustive sweeps.
pub fn generators() -> Vec<GL2Elem> {
    vec![swap(), reflect(), shear()]
}

/// Parse a word like `"SUt"`; the empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<GenLetter>> {
    s.chars()
        .map(|ch| match ch {
            'S' => Ok(GenLetter::Swap),
            'U' => Ok(GenLetter::Reflect),
            'T' => Ok(GenLetter::Shear),
            't' => Ok(GenLetter::ShearInv),
            other => Err(Error::parse(
                1,
                format!("unknown generator letter `{other}` (expected S, U, T, or t)"),
            )),
        })
        .collect()
}

/// Left-to-right product of a word; the empty word is the identity.
pub fn word_product(letters: &[GenLetter]) -> GL2Elem {
    letters
        .iter()
        .fold(GL2Elem::identity(), |acc, l| acc.mul(&l.elem()))
}

pub fn word_string(letters: &[GenLetter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// Group elements of every word over `{S, U, T}` of length at most
/// `max_len`, including the empty word. Duplicate matrices are kept so that
/// sweeps really cover all words.
pub fn all_words(max_len: usize) -> Vec<GL2Elem> {
    let gens = generators();
    let mut out = vec![GL2Elem::identity()];
    let mut frontier = vec![GL2Elem::identity()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * gens.len());
        for w in &frontier {
            for g in &gens {
                let prod = w.mul(g);
                out.push(prod.clone());
                next.push(prod);
            }
        }
        frontier = next;
    }
    out
}
