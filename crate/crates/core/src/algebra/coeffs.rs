//! Integer coefficient tables: factorials, binomials and the reflection
//! coefficients `d(m, a)` defined by
//!
//! ```text
//! d^m/dz^m [ f(1/z) ] = sum_{a=1}^{m} d(m, a) z^{-(m+a)} f^{(a)}(1/z)
//! ```

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Module, Result};

const FACTORIAL_CACHE: usize = 128;
const D_TABLE_ROWS: usize = 64;

fn factorial_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(FACTORIAL_CACHE + 1);
        t.push(BigInt::one());
        for n in 1..=FACTORIAL_CACHE {
            let next = &t[n - 1] * BigInt::from(n);
            t.push(next);
        }
        t
    })
}

pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    let table = factorial_table();
    if n <= FACTORIAL_CACHE {
        return table[n].clone();
    }
    (FACTORIAL_CACHE + 1..=n).fold(table[FACTORIAL_CACHE].clone(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(-1)^m (m!/a!) C(m-1, a-1)` for `1 <= a <= m`, else 0.
pub fn d_coeff_closed_form(m: u32, a: i64) -> BigInt {
    if m == 0 || a < 1 || a > m as i64 {
        return BigInt::zero();
    }
    let a = a as u32;
    let magnitude = factorial(m) / factorial(a) * binomial(m - 1, a - 1);
    if m.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// Row `m` of the d-table, indexed by `a = 0..=m` (entry 0 is always zero).
///
/// Built by `d(m+1, a) = -(m+a) d(m, a) - d(m, a-1)` from `d(1, 1) = -1`.
fn build_rows(max_m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![], vec![BigInt::zero(), -BigInt::one()]];
    for m in 1..max_m {
        let prev = &rows[m];
        let mut next = vec![BigInt::zero(); m + 2];
        for (a, slot) in next.iter_mut().enumerate().skip(1) {
            let keep = prev.get(a).map(|d| -(d * BigInt::from(m + a))).unwrap_or_default();
            let shift = prev.get(a - 1).cloned().unwrap_or_default();
            *slot = keep - shift;
        }
        rows.push(next);
    }
    rows
}

fn d_table() -> &'static [Vec<BigInt>] {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| build_rows(D_TABLE_ROWS))
}

/// Reflection coefficient `d(m, a)`; zero outside `1 <= a <= m`.
pub fn d_coeff(m: i64, a: i64) -> Result<BigInt> {
    if m < 1 {
        return Err(Error::domain(Module::Algebra, format!("d(m, a) needs m >= 1, got m = {m}")));
    }
    if a < 1 || a > m {
        return Ok(BigInt::zero());
    }
    let (mu, au) = (m as usize, a as usize);
    match d_table().get(mu) {
        Some(row) => Ok(row[au].clone()),
        None => Ok(d_coeff_closed_form(m as u32, a)),
    }
}

/// Non-zero entries `(a, d(m, a))` of row `m`.
pub(crate) fn d_row(m: u32) -> Vec<(u32, BigInt)> {
    (1..=m)
        .map(|a| (a, d_coeff(m as i64, a as i64).expect("m >= 1")))
        .collect()
}
