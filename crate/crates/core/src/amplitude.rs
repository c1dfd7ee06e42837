//! Transition amplitudes between disjoint discs on the sphere and their
//! truncated Hilbert-Schmidt norms.
//!
//! Disc `j` is parametrised by `z -> a_j + q_j z`. The amplitude of Fock
//! states `phi_1, ..., phi_r` is the correlator of the corresponding Wick
//! states placed at the centres, each weighted by `q_j^{level}`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{binomial, factorial};
use crate::correlator::kernel;
use crate::error::{Error, Module, Result};
use crate::fock::{FockIndex, FockVector};
use crate::scalar::ComplexScalar;

/// Tuple budget for [`hs_truncated`].
pub const DEFAULT_TUPLE_LIMIT: u128 = 100_000;

/// `{ |z - a| < |q| }` with parametrisation `z -> a + q z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disc {
    center: ComplexScalar,
    parameter: ComplexScalar,
}

impl Disc {
    pub fn new(center: ComplexScalar, parameter: ComplexScalar) -> Result<Self> {
        if parameter.is_zero() {
            return Err(Error::Configuration("disc parameter q must be nonzero".into()));
        }
        Ok(Disc { center, parameter })
    }

    pub fn center(&self) -> &ComplexScalar {
        &self.center
    }

    pub fn parameter(&self) -> &ComplexScalar {
        &self.parameter
    }

    /// `R^2 = |q|^2`.
    pub fn radius_sq(&self) -> ComplexScalar {
        self.parameter.norm_sqr()
    }

    pub fn radius(&self) -> f64 {
        self.parameter.abs()
    }
}

fn is_positive(x: &ComplexScalar) -> bool {
    x.real_cmp(&ComplexScalar::zero()) == Some(Ordering::Greater)
}

fn real_max(a: ComplexScalar, b: ComplexScalar) -> ComplexScalar {
    if a.real_cmp(&b) == Some(Ordering::Less) {
        b
    } else {
        a
    }
}

/// At least two pairwise disjoint discs.
#[derive(Clone, Debug)]
pub struct DiscConfiguration {
    discs: Vec<Disc>,
    d_sq: ComplexScalar,
    big_r_sq: ComplexScalar,
}

impl DiscConfiguration {
    pub fn new(discs: Vec<Disc>) -> Result<Self> {
        if discs.len() < 2 {
            return Err(Error::Configuration(format!("need at least two discs, got {}", discs.len())));
        }
        let mut d_sq: Option<ComplexScalar> = None;
        for i in 0..discs.len() {
            for j in i + 1..discs.len() {
                let sep = (discs[i].center() - discs[j].center()).norm_sqr();
                let (a, b) = (discs[i].radius_sq(), discs[j].radius_sq());
                // |a_i - a_j| > R_i + R_j  <=>  D - A - B > 0 and (D - A - B)^2 > 4AB
                let gap = &sep - &a - &b;
                let four_ab = ComplexScalar::integer(4) * &a * &b;
                if !is_positive(&gap) || !is_positive(&(&gap * &gap - four_ab)) {
                    return Err(Error::Configuration(format!("discs {i} and {j} overlap")));
                }
                d_sq = Some(match d_sq {
                    Some(d) if d.real_cmp(&sep) != Some(Ordering::Greater) => d,
                    _ => sep,
                });
            }
        }
        let big_r_sq = discs
            .iter()
            .map(Disc::radius_sq)
            .reduce(real_max)
            .expect("at least two discs");
        Ok(DiscConfiguration {
            discs,
            d_sq: d_sq.expect("at least one pair"),
            big_r_sq,
        })
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn len(&self) -> usize {
        self.discs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.discs.is_empty()
    }

    /// `d^2`, the smallest squared distance between centres.
    pub fn d_sq(&self) -> &ComplexScalar {
        &self.d_sq
    }

    /// `R^2`, the largest squared radius.
    pub fn big_r_sq(&self) -> &ComplexScalar {
        &self.big_r_sq
    }

    /// `d / R` as a float.
    pub fn separation_ratio(&self) -> f64 {
        (self.d_sq.to_complex64().re / self.big_r_sq.to_complex64().re).sqrt()
    }

    /// `d / R > 4 sqrt(r)`, where the Hilbert-Schmidt bound applies.
    pub fn hs_regime(&self) -> bool {
        let rhs = ComplexScalar::integer(16 * self.len() as i64) * &self.big_r_sq;
        self.d_sq.real_cmp(&rhs) == Some(Ordering::Greater)
    }
}

/// `numerator / sqrt(norm_sq)`: the amplitude on normalised basis states.
/// `numerator` is the value on the ladder monomials themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplitudeValue {
    pub numerator: ComplexScalar,
    pub norm_sq: BigInt,
}

impl AmplitudeValue {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `|A|^2`, exact whenever the numerator is.
    pub fn abs_sq(&self) -> ComplexScalar {
        self.numerator.norm_sqr() / ComplexScalar::from_bigint(&self.norm_sq)
    }

    pub fn to_complex64(&self) -> num_complex::Complex64 {
        self.numerator.to_complex64() / self.norm_sq.to_f64().expect("finite norm").sqrt()
    }

    /// The exact value, when `sqrt(norm_sq)` lies in `Q(sqrt2)`.
    pub fn to_exact(&self) -> Option<ComplexScalar> {
        if !self.numerator.is_exact() {
            return None;
        }
        let root = self.norm_sq.sqrt();
        if &root * &root == self.norm_sq {
            return Some(&self.numerator / &ComplexScalar::from_bigint(&root));
        }
        let (half, rem) = self.norm_sq.div_rem(&BigInt::from(2));
        let root = half.sqrt();
        if rem.is_zero() && &root * &root == half {
            let denom = ComplexScalar::from_bigint(&root) * ComplexScalar::sqrt2();
            return Some(&self.numerator / &denom);
        }
        None
    }

    /// Exact value if available, otherwise a float.
    pub fn to_scalar(&self) -> ComplexScalar {
        self.to_exact().unwrap_or_else(|| ComplexScalar::from(self.to_complex64()))
    }
}

/// Work done by the memoised pairing sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EntryStats {
    pub insertions: u64,
    pub memo_states: usize,
    pub memo_hits: usize,
}

struct PairingDp<'a> {
    kern: &'a [Vec<Option<ComplexScalar>>],
    memo: HashMap<Vec<u32>, ComplexScalar>,
    hits: usize,
}

impl PairingDp<'_> {
    /// Sum over perfect matchings of labelled insertions that never pair two
    /// insertions from the same disc; `counts[c]` insertions remain in class `c`.
    fn sum(&mut self, counts: &mut Vec<u32>) -> ComplexScalar {
        let Some(first) = counts.iter().position(|&c| c > 0) else {
            return ComplexScalar::one();
        };
        if let Some(v) = self.memo.get(counts.as_slice()) {
            self.hits += 1;
            return v.clone();
        }
        let key = counts.clone();
        counts[first] -= 1;
        let mut total = ComplexScalar::zero();
        for c in first..counts.len() {
            if counts[c] == 0 {
                continue;
            }
            let Some(k) = &self.kern[first][c] else { continue };
            let mult = ComplexScalar::integer(counts[c] as i64);
            counts[c] -= 1;
            let sub = self.sum(counts);
            counts[c] += 1;
            if !sub.is_zero() {
                total = total + mult * k * sub;
            }
        }
        counts[first] += 1;
        self.memo.insert(key, total.clone());
        total
    }
}

/// `A_r(phi_1, ..., phi_r)` on normalised occupation-number states.
pub fn amplitude_entry(config: &DiscConfiguration, indices: &[FockIndex]) -> Result<AmplitudeValue> {
    amplitude_entry_with_stats(config, indices).map(|(v, _)| v)
}

/// [`amplitude_entry`] together with pairing-sum statistics.
pub fn amplitude_entry_with_stats(
    config: &DiscConfiguration,
    indices: &[FockIndex],
) -> Result<(AmplitudeValue, EntryStats)> {
    if indices.len() != config.len() {
        return Err(Error::domain(
            Module::Amplitude,
            format!("{} indices for {} discs", indices.len(), config.len()),
        ));
    }
    let norm_sq: BigInt = indices.iter().map(FockIndex::norm_sq).product();
    let total: u64 = indices.iter().map(FockIndex::particles).sum();
    let mut stats = EntryStats {
        insertions: total,
        ..EntryStats::default()
    };
    if total % 2 == 1 {
        let zero = AmplitudeValue {
            numerator: ComplexScalar::zero(),
            norm_sq,
        };
        return Ok((zero, stats));
    }

    // one class per (disc, mode) with its multiplicity
    let mut classes = Vec::new();
    let mut counts = Vec::new();
    for (j, idx) in indices.iter().enumerate() {
        for (m, n) in idx.iter() {
            classes.push((j, m));
            counts.push(n);
        }
    }
    let discs = config.discs();
    let mut kern = vec![vec![None; classes.len()]; classes.len()];
    for (x, &(j1, m1)) in classes.iter().enumerate() {
        for (y, &(j2, m2)) in classes.iter().enumerate() {
            if j1 != j2 {
                kern[x][y] = Some(kernel(m1, discs[j1].center(), m2, discs[j2].center())?);
            }
        }
    }
    let mut dp = PairingDp {
        kern: &kern,
        memo: HashMap::new(),
        hits: 0,
    };
    let pairing = dp.sum(&mut counts);
    stats.memo_states = dp.memo.len();
    stats.memo_hits = dp.hits;

    // (sqrt2 i / (m-1)!)^{n_m} per insertion and q_j^{m n_m} per disc
    let sqrt2_i = ComplexScalar::sqrt2() * ComplexScalar::i();
    let mut weight = ComplexScalar::one();
    for (j, idx) in indices.iter().enumerate() {
        for (m, n) in idx.iter() {
            let field = &sqrt2_i / &ComplexScalar::from_bigint(&factorial(m - 1));
            let q = discs[j].parameter().powi(m as i64).expect("nonnegative power");
            weight = weight * (field * q).powi(n as i64).expect("nonnegative power");
        }
    }
    let value = AmplitudeValue {
        numerator: pairing * weight,
        norm_sq,
    };
    Ok((value, stats))
}

/// The multilinear extension to finite Fock vectors (coefficients on ladder
/// monomials, as in [`FockVector`]).
pub fn amplitude_apply(config: &DiscConfiguration, vectors: &[FockVector]) -> Result<ComplexScalar> {
    if vectors.len() != config.len() {
        return Err(Error::domain(
            Module::Amplitude,
            format!("{} vectors for {} discs", vectors.len(), config.len()),
        ));
    }
    let mut total = ComplexScalar::zero();
    let mut tuple: Vec<FockIndex> = Vec::with_capacity(vectors.len());
    apply_rec(config, vectors, &mut tuple, ComplexScalar::one(), &mut total)?;
    Ok(total)
}

fn apply_rec(
    config: &DiscConfiguration,
    vectors: &[FockVector],
    tuple: &mut Vec<FockIndex>,
    weight: ComplexScalar,
    total: &mut ComplexScalar,
) -> Result<()> {
    let Some(v) = vectors.get(tuple.len()) else {
        let entry = amplitude_entry(config, tuple)?;
        *total = &*total + &(weight * entry.numerator);
        return Ok(());
    };
    for (idx, c) in v {
        tuple.push(idx.clone());
        apply_rec(config, vectors, tuple, &weight * c, total)?;
        tuple.pop();
    }
    Ok(())
}

/// `sum_{n >= 0} x^n = 1/(1 - x)` with `x = (r/4) s`, `s = t/(1 - t)`,
/// `t = 8 R^2 / d^2`. Requires `d / R > 4 sqrt(r)`.
pub fn hs_bound(config: &DiscConfiguration) -> Result<ComplexScalar> {
    let r = ComplexScalar::integer(config.len() as i64);
    let t = ComplexScalar::integer(8) * config.big_r_sq() / config.d_sq();
    let ratio = &r * &t;
    if ratio.real_cmp(&ComplexScalar::rational(1, 2)) != Some(Ordering::Less) {
        return Err(Error::domain(
            Module::Amplitude,
            format!("Hilbert-Schmidt regime needs 8 r R^2 / d^2 < 1/2, got {ratio}"),
        ));
    }
    let one = ComplexScalar::one();
    let s = &t / &(&one - &t);
    let x = r * ComplexScalar::rational(1, 4) * s;
    Ok(&one / &(&one - &x))
}

/// Cumulative `sum |A|^2` after all tuples with a given total particle count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsRow {
    pub total_insertions: u64,
    /// Tuples enumerated so far, this row included.
    pub tuple_count: u128,
    pub partial_sum: ComplexScalar,
}

#[derive(Clone, Debug)]
pub struct HsTable {
    pub max_mode: u32,
    pub max_particles: u32,
    pub rows: Vec<HsRow>,
    /// Whether `d / R > 4 sqrt(r)`; the bound is only claimed inside.
    pub regime: bool,
    pub bound: Option<ComplexScalar>,
    pub memo_states: usize,
    pub memo_hits: usize,
}

impl HsTable {
    pub fn is_monotone(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[0].partial_sum.real_cmp(&w[1].partial_sum) != Some(Ordering::Greater))
    }

    /// Every partial sum is at most the bound (vacuously false outside the regime).
    pub fn within_bound(&self) -> bool {
        let Some(bound) = &self.bound else { return false };
        self.rows
            .iter()
            .all(|row| row.partial_sum.real_cmp(bound) != Some(Ordering::Greater))
    }
}

/// Occupation indices over modes `1..=max_mode` with exactly `particles` particles.
fn indices_with_particles(max_mode: u32, particles: u32) -> Vec<FockIndex> {
    fn go(mode: u32, max_mode: u32, left: u32, current: &mut Vec<(u32, u32)>, out: &mut Vec<FockIndex>) {
        if mode > max_mode {
            if left == 0 {
                out.push(FockIndex::from_counts(current.iter().copied()).expect("positive modes"));
            }
            return;
        }
        for n in 0..=left {
            current.push((mode, n));
            go(mode + 1, max_mode, left - n, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max_mode, particles, &mut Vec::new(), &mut out);
    out
}

/// Number of index tuples [`hs_truncated`] would enumerate.
pub fn hs_tuple_count(discs: usize, max_mode: u32, max_particles: u32) -> u128 {
    // distributing at most N particles over r * M (disc, mode) slots
    let slots = discs as u32 * max_mode;
    binomial(max_particles + slots, slots).to_u128().unwrap_or(u128::MAX)
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partial Hilbert-Schmidt sums over all tuples with modes at most
/// `max_mode` and at most `max_particles` particles in total, ordered by
/// total particle count and then lexicographically.
pub fn hs_truncated(config: &DiscConfiguration, max_mode: u32, max_particles: u32) -> Result<HsTable> {
    hs_truncated_with_limit(config, max_mode, max_particles, DEFAULT_TUPLE_LIMIT)
}

pub fn hs_truncated_with_limit(
    config: &DiscConfiguration,
    max_mode: u32,
    max_particles: u32,
    limit: u128,
) -> Result<HsTable> {
    if max_mode == 0 {
        return Err(Error::domain(Module::Amplitude, "max mode must be at least 1"));
    }
    let requested = hs_tuple_count(config.len(), max_mode, max_particles);
    if requested > limit {
        return Err(Error::ResourceLimit {
            module: Module::Amplitude,
            requested,
            limit,
        });
    }
    let per_count: Vec<Vec<FockIndex>> = (0..=max_particles)
        .map(|p| indices_with_particles(max_mode, p))
        .collect();

    let mut rows = Vec::with_capacity(max_particles as usize + 1);
    let mut running = ComplexScalar::zero();
    let mut seen: u128 = 0;
    let (mut memo_states, mut memo_hits) = (0, 0);
    for n in 0..=max_particles {
        let mut tuples: Vec<Vec<FockIndex>> = Vec::new();
        for comp in compositions(n, config.len()) {
            let mut partial: Vec<Vec<FockIndex>> = vec![Vec::new()];
            for &p in &comp {
                partial = partial
                    .into_iter()
                    .flat_map(|t| {
                        per_count[p as usize].iter().map(move |idx| {
                            let mut t = t.clone();
                            t.push(idx.clone());
                            t
                        })
                    })
                    .collect();
            }
            tuples.extend(partial);
        }
        tuples.sort();
        let terms = tuples
            .par_iter()
            .map(|t| amplitude_entry_with_stats(config, t))
            .collect::<Result<Vec<_>>>()?;
        for (value, stats) in terms {
            memo_states += stats.memo_states;
            memo_hits += stats.memo_hits;
            if !value.is_zero() {
                running = running + value.abs_sq();
            }
        }
        seen += tuples.len() as u128;
        rows.push(HsRow {
            total_insertions: n as u64,
            tuple_count: seen,
            partial_sum: running.clone(),
        });
    }
    let regime = config.hs_regime();
    let bound = if regime { Some(hs_bound(config)?) } else { None };
    Ok(HsTable {
        max_mode,
        max_particles,
        rows,
        regime,
        bound,
        memo_states,
        memo_hits,
    })
}
