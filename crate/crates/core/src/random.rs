//! Seeded generators for random words, states and Fock vectors with small
//! exact rational data. Used by the verification suites and the tests.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Insertion, LinearCombination, PlainCombination, PlainWord, WickCombination, WickGroup, WickWord};
use crate::fock::{FockIndex, FockVector};
use crate::scalar::ComplexScalar;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A Gaussian rational with denominator at most `max_den`.
pub fn gaussian(rng: &mut TestRng, max_den: i64, max_abs: i64) -> ComplexScalar {
    let den = rng.random_range(1..=max_den);
    let re = rng.random_range(-max_abs * den..=max_abs * den);
    let im = rng.random_range(-max_abs * den..=max_abs * den);
    ComplexScalar::gaussian(ratio(re, den), ratio(im, den))
}

/// A nonzero Gaussian rational point in the open unit disc.
pub fn point_in_disc(rng: &mut TestRng) -> ComplexScalar {
    let one = ComplexScalar::one();
    loop {
        let den = rng.random_range(2..=9);
        let re = rng.random_range(-(den - 1)..den);
        let im = rng.random_range(-(den - 1)..den);
        let z = ComplexScalar::gaussian(ratio(re, den), ratio(im, den));
        if !z.is_zero() && z.norm_sqr().real_cmp(&one) == Some(Ordering::Less) {
            return z;
        }
    }
}

fn fresh_point(rng: &mut TestRng, taken: &mut Vec<ComplexScalar>) -> ComplexScalar {
    loop {
        let z = point_in_disc(rng);
        if !taken.contains(&z) {
            taken.push(z.clone());
            return z;
        }
    }
}

/// A plain word of `len` insertions at distinct points of `D - {0}`.
pub fn plain_word(rng: &mut TestRng, len: usize, max_order: u32) -> PlainWord {
    let mut taken = Vec::new();
    PlainWord::new(
        (0..len)
            .map(|_| Insertion::new(rng.random_range(1..=max_order), fresh_point(rng, &mut taken)))
            .collect(),
    )
}

/// A Wick word with `total` insertions split into random groups.
/// Points of different groups are distinct; with `coincide`, insertions of
/// one group may share a point, otherwise every point is distinct.
pub fn wick_word(rng: &mut TestRng, total: usize, max_order: u32, coincide: bool) -> WickWord {
    let mut taken = Vec::new();
    let mut groups = Vec::new();
    let mut left = total;
    while left > 0 {
        let size = rng.random_range(1..=left.min(3));
        left -= size;
        groups.push(wick_group_from(rng, size, max_order, coincide, &mut taken));
    }
    WickWord::new(groups)
}

fn wick_group_from(
    rng: &mut TestRng,
    size: usize,
    max_order: u32,
    coincide: bool,
    taken: &mut Vec<ComplexScalar>,
) -> WickGroup {
    let mut own: Vec<ComplexScalar> = Vec::new();
    let ins = (0..size)
        .map(|_| {
            let z = if coincide && !own.is_empty() && rng.random_bool(0.4) {
                own[rng.random_range(0..own.len())].clone()
            } else {
                fresh_point(rng, taken)
            };
            own.push(z.clone());
            Insertion::new(rng.random_range(1..=max_order), z)
        })
        .collect();
    WickGroup::new(ins).expect("size >= 1")
}

/// A single Wick group of the given arity in `D - {0}`.
pub fn wick_group(rng: &mut TestRng, arity: usize, max_order: u32, coincide: bool) -> WickGroup {
    wick_group_from(rng, arity, max_order, coincide, &mut Vec::new())
}

/// Small random coefficient with denominator at most 4.
pub fn coefficient(rng: &mut TestRng) -> ComplexScalar {
    loop {
        let c = gaussian(rng, 4, 2);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A combination of up to `terms` plain words of length at most `max_len`.
pub fn plain_combination(rng: &mut TestRng, terms: usize, max_len: usize, max_order: u32) -> PlainCombination {
    (0..terms)
        .map(|_| {
            let len = rng.random_range(0..=max_len);
            (plain_word(rng, len, max_order), coefficient(rng))
        })
        .collect()
}

/// A combination of up to `terms` Wick words, each with at most `max_total`
/// insertions; groups may contain coinciding points.
pub fn wick_combination(rng: &mut TestRng, terms: usize, max_total: usize, max_order: u32) -> WickCombination {
    (0..terms)
        .map(|_| {
            let len = rng.random_range(0..=max_total);
            (wick_word(rng, len, max_order, true), coefficient(rng))
        })
        .collect()
}

/// A single-group state `c :G:` of arity between 1 and `max_arity`.
pub fn single_group_state(rng: &mut TestRng, max_arity: usize, max_order: u32) -> WickCombination {
    let arity = rng.random_range(1..=max_arity);
    let g = wick_group(rng, arity, max_order, true);
    LinearCombination::term(coefficient(rng), WickWord::from(g))
}

/// A random monomial index of level at most `max_level`.
pub fn fock_index(rng: &mut TestRng, max_level: u32) -> FockIndex {
    let target = rng.random_range(0..=max_level);
    let mut orders = Vec::new();
    let mut left = target;
    while left > 0 {
        let m = rng.random_range(1..=left);
        orders.push(m);
        left -= m;
    }
    FockIndex::from_orders(&orders).expect("positive modes")
}

/// A Fock vector with up to `terms` monomials of level at most `max_level`.
pub fn fock_vector(rng: &mut TestRng, terms: usize, max_level: u32) -> FockVector {
    (0..terms)
        .map(|_| (fock_index(rng, max_level), coefficient(rng)))
        .collect()
}
