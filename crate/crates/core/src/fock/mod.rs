//! Occupation-number states and the Heisenberg ladder operators.
//!
//! A [`FockIndex`] `{n_m}` names the unnormalised monomial
//! `prod_m alpha_{-m}^{n_m} Omega`, whose squared norm is `prod_m n_m! m^{n_m}`.

mod contour;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

pub use contour::{contour_alpha_adaptive, contour_alpha_check, contour_commutator, ContourCheck, DEFAULT_PROBE_LEVEL};

use crate::algebra::{factorial, LinearCombination, WickGroup};
use crate::error::{Error, Module, Result};
use crate::scalar::ComplexScalar;

/// Occupation numbers `m -> n_m`, finitely supported, zero counts dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockIndex {
    counts: BTreeMap<u32, u32>,
}

impl FockIndex {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// From `(mode, count)` pairs; repeated modes add up. Mode 0 is rejected.
    pub fn from_counts(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (m, n) in pairs {
            if m == 0 {
                return Err(Error::domain(Module::Fock, "modes start at 1"));
            }
            if n > 0 {
                *counts.entry(m).or_insert(0) += n;
            }
        }
        Ok(FockIndex { counts })
    }

    /// From a multiset of modes, e.g. `[2, 2, 1]` is `{n_1 = 1, n_2 = 2}`.
    pub fn from_orders(orders: &[u32]) -> Result<Self> {
        Self::from_counts(orders.iter().map(|&m| (m, 1)))
    }

    pub fn count(&self, m: u32) -> u32 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&m, &n)| (m, n))
    }

    pub fn is_vacuum(&self) -> bool {
        self.counts.is_empty()
    }

    /// `sum_m m n_m`.
    pub fn level(&self) -> u64 {
        self.iter().map(|(m, n)| m as u64 * n as u64).sum()
    }

    /// `sum_m n_m`.
    pub fn particles(&self) -> u64 {
        self.iter().map(|(_, n)| n as u64).sum()
    }

    /// The modes as a sorted multiset.
    pub fn orders(&self) -> Vec<u32> {
        self.iter().flat_map(|(m, n)| std::iter::repeat_n(m, n as usize)).collect()
    }

    /// `prod_m n_m! m^{n_m}`.
    pub fn norm_sq(&self) -> BigInt {
        self.iter()
            .map(|(m, n)| factorial(n) * BigInt::from(m).pow(n))
            .product()
    }

    fn raised(&self, m: u32) -> Self {
        let mut out = self.clone();
        *out.counts.entry(m).or_insert(0) += 1;
        out
    }

    fn lowered(&self, m: u32) -> Option<Self> {
        let mut out = self.clone();
        let n = out.counts.get_mut(&m)?;
        *n -= 1;
        if *n == 0 {
            out.counts.remove(&m);
        }
        Some(out)
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vacuum() {
            return f.write_str("Omega");
        }
        f.write_str("{")?;
        for (i, (m, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "n{m}={n}")?;
        }
        f.write_str("}")
    }
}

/// Finite combination of ladder monomials.
pub type FockVector = LinearCombination<FockIndex>;

impl LinearCombination<FockIndex> {
    /// `Omega`.
    pub fn vacuum() -> Self {
        Self::basis(FockIndex::vacuum())
    }
}

/// `alpha_m v`: creation for `m < 0`, annihilation for `m > 0`, and zero
/// for `m = 0`.
pub fn ladder(v: &FockVector, m: i64) -> FockVector {
    let mut out = FockVector::zero();
    let mode = m.unsigned_abs() as u32;
    match m.cmp(&0) {
        std::cmp::Ordering::Less => {
            for (idx, c) in v {
                out.add_term(c.clone(), idx.raised(mode));
            }
        }
        std::cmp::Ordering::Greater => {
            for (idx, c) in v {
                let n = idx.count(mode);
                if let Some(lower) = idx.lowered(mode) {
                    out.add_term(c * &ComplexScalar::integer(m * n as i64), lower);
                }
            }
        }
        std::cmp::Ordering::Equal => {}
    }
    out
}

/// `<v, w>`, antilinear in `v`.
pub fn fock_inner(v: &FockVector, w: &FockVector) -> ComplexScalar {
    let mut total = ComplexScalar::zero();
    for (idx, c) in v {
        let d = w.coefficient(idx);
        if !d.is_zero() {
            total = total + c.conj() * d * ComplexScalar::from_bigint(&idx.norm_sq());
        }
    }
    total
}

/// `1 / (sqrt2 i) = -(sqrt2 / 2) i`.
fn field_prefactor() -> ComplexScalar {
    ComplexScalar::i() * ComplexScalar::sqrt2() * ComplexScalar::rational(-1, 2)
}

/// `nu(:prod_m [m, 0]^{n_m}:)` as a Fock vector: the monomial
/// `prod_m alpha_{-m}^{n_m} Omega` times `prod_m ((m-1)! / (sqrt2 i))^{n_m}`.
/// The empty multiset gives `Omega`.
pub fn wick_origin_to_fock(orders: &[u32]) -> Result<FockVector> {
    let index = FockIndex::from_orders(orders)?;
    let c = field_prefactor();
    let coeff: ComplexScalar = orders
        .iter()
        .map(|&m| ComplexScalar::from_bigint(&factorial(m - 1)) * &c)
        .product();
    Ok(FockVector::term(coeff, index))
}

/// `nu(:G:)` truncated at total level `max_level`:
/// `(1/(sqrt2 i))^n sum prod_j (k_j - 1)!/(k_j - m_j)! z_j^{k_j - m_j} alpha_{-k_1} ... Omega`
/// over `k_j >= m_j` with `sum k_j <= max_level`.
pub fn wick_group_to_fock(group: &WickGroup, max_level: u32) -> Result<FockVector> {
    let ins = group.as_slice();
    let one = ComplexScalar::one();
    if let Some(bad) = ins
        .iter()
        .find(|i| i.point().norm_sqr().real_cmp(&one) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::domain(Module::Fock, format!("{bad} lies outside the open unit disc")));
    }
    let max_order = ins.iter().map(|i| i.order()).max().unwrap_or(0);
    if max_level < max_order {
        return Err(Error::domain(
            Module::Fock,
            format!("truncation level {max_level} is below the largest order {max_order}"),
        ));
    }
    let series: Vec<Vec<(u32, ComplexScalar)>> = ins
        .iter()
        .map(|i| {
            let m = i.order();
            (m..=max_level)
                .map(|k| {
                    let c = ComplexScalar::from_bigint(&(factorial(k - 1) / factorial(k - m)))
                        * i.point().powi((k - m) as i64).expect("nonnegative power");
                    (k, c)
                })
                .collect()
        })
        .collect();
    let prefactor = field_prefactor().powi(ins.len() as i64).expect("nonnegative power");
    let mut out = FockVector::zero();
    let mut modes = Vec::with_capacity(ins.len());
    expand_levels(&series, 0, max_level, prefactor, &mut modes, &mut out);
    Ok(out)
}

fn expand_levels(
    series: &[Vec<(u32, ComplexScalar)>],
    j: usize,
    budget: u32,
    weight: ComplexScalar,
    modes: &mut Vec<u32>,
    out: &mut FockVector,
) {
    if j == series.len() {
        let index = FockIndex::from_orders(modes).expect("modes are positive");
        out.add_term(weight, index);
        return;
    }
    for (k, c) in &series[j] {
        if *k > budget {
            break;
        }
        if c.is_zero() {
            continue;
        }
        modes.push(*k);
        expand_levels(series, j + 1, budget - k, &weight * c, modes, out);
        modes.pop();
    }
}
