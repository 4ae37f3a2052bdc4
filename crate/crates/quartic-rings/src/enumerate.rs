//! Deterministic lexicographic enumeration of coefficient boxes.
//!
//! Forms are ordered by their coefficient vectors, each coordinate running
//! from `-bound` to `bound`, the leading coefficient slowest. The
//! index/form bijection is exposed so that sweeps can be partitioned into
//! contiguous shards.

use crate::forms::{BinaryCubicForm, BinaryQuarticForm};

pub fn quartic_count(bound: i64) -> u64 {
    (2 * bound as u64 + 1).pow(5)
}

pub fn cubic_count(bound: i64) -> u64 {
    (2 * bound as u64 + 1).pow(4)
}

fn decode<const N: usize>(bound: i64, mut index: u64) -> [i64; N] {
    let base = 2 * bound as u64 + 1;
    let mut out = [0i64; N];
    for slot in out.iter_mut().rev() {
        *slot = (index % base) as i64 - bound;
        index /= base;
    }
    debug_assert_eq!(index, 0, "index out of range");
    out
}

/// The `index`-th quartic form in the box, `0 <= index < quartic_count`.
pub fn quartic_at(bound: i64, index: u64) -> BinaryQuarticForm {
    BinaryQuarticForm::from_i64(decode::<5>(bound, index))
}

/// The `index`-th cubic form in the box, `0 <= index < cubic_count`.
pub fn cubic_at(bound: i64, index: u64) -> BinaryCubicForm {
    BinaryCubicForm::from_i64(decode::<4>(bound, index))
}

pub fn quartics(bound: i64) -> impl Iterator<Item = BinaryQuarticForm> {
    (0..quartic_count(bound)).map(move |i| quartic_at(bound, i))
}

pub fn cubics(bound: i64) -> impl Iterator<Item = BinaryCubicForm> {
    (0..cubic_count(bound)).map(move |i| cubic_at(bound, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(quartic_count(1), 243);
        assert_eq!(quartic_count(2), 3125);
        assert_eq!(cubic_count(0), 1);
        assert_eq!(cubic_count(3), 2401);
    }

    #[test]
    fn lexicographic_endpoints() {
        assert_eq!(quartic_at(2, 0), BinaryQuarticForm::from_i64([-2; 5]));
        assert_eq!(quartic_at(2, 3124), BinaryQuarticForm::from_i64([2; 5]));
        assert_eq!(
            quartic_at(2, 1),
            BinaryQuarticForm::from_i64([-2, -2, -2, -2, -1])
        );
        assert_eq!(cubics(0).next().unwrap(), BinaryCubicForm::zero());
    }

    proptest! {
        #[test]
        fn index_decode_is_injective(b in 1i64..=2, i in 0u64..243, j in 0u64..243) {
            prop_assume!(i != j);
            prop_assert_ne!(quartic_at(b, i), quartic_at(b, j));
        }
    }
}
