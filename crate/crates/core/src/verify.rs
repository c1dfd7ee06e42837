//! Cross-module identity suites over seeded random data.
//!
//! Each suite reports how many cases it ran and the first failure, if any.
//! In float mode the expectation-valued suites evaluate on float copies of
//! the random points and compare with a relative tolerance; the purely
//! algebraic suites stay exact.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{
    d_coeff, rescale, theta, wick_expand, Insertion, LinearCombination, PlainCombination, PlainWord, WickCombination,
    WickGroup, WickWord,
};
use crate::correlator::{expect_combo, expect_plain, expect_wick, mobius_check};
use crate::error::Result;
use crate::fock::{fock_inner, ladder, wick_origin_to_fock};
use crate::hilbert::{disc_series_inner, inner, state_inner};
use crate::random::{self, TestRng};
use crate::scalar::{Backend, ComplexScalar};

const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random cases per randomised suite.
    pub samples: usize,
    pub backend: Backend,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 2024,
            samples: 40,
            backend: Backend::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    /// The first failing case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    detail: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: 0,
            detail: None,
            start: Instant::now(),
        }
    }

    fn record(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        self.cases += 1;
        let failed = match outcome {
            Ok(true) => return,
            Ok(false) => describe(),
            Err(e) => format!("{}: {e}", describe()),
        };
        self.failures += 1;
        self.detail.get_or_insert(failed);
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            detail: self.detail,
            millis: self.start.elapsed().as_millis(),
        }
    }
}

fn agree(a: &ComplexScalar, b: &ComplexScalar) -> bool {
    if a.is_exact() && b.is_exact() {
        return a == b;
    }
    let scale = 1.0f64.max(a.abs()).max(b.abs());
    a.approx_eq(b, FLOAT_TOL * scale)
}

fn float_insertion(i: &Insertion) -> Insertion {
    Insertion::new(i.order(), i.point().to_float())
}

fn float_plain(w: &PlainWord) -> PlainWord {
    PlainWord::new(w.as_slice().iter().map(float_insertion).collect())
}

fn float_wick(w: &WickWord) -> WickWord {
    WickWord::new(
        w.groups()
            .iter()
            .map(|g| WickGroup::new(g.as_slice().iter().map(float_insertion).collect()).expect("non-empty"))
            .collect(),
    )
}

fn float_combo<K: Ord + Clone>(f: &LinearCombination<K>, map: impl Fn(&K) -> K) -> LinearCombination<K> {
    f.iter().map(|(k, c)| (map(k), c.to_float())).collect()
}

struct Data {
    backend: Backend,
}

impl Data {
    fn plain(&self, f: PlainCombination) -> PlainCombination {
        match self.backend {
            Backend::Exact => f,
            Backend::Float => float_combo(&f, float_plain),
        }
    }

    fn wick(&self, f: WickCombination) -> WickCombination {
        match self.backend {
            Backend::Exact => f,
            Backend::Float => float_combo(&f, float_wick),
        }
    }

    fn plain_word(&self, w: PlainWord) -> PlainWord {
        match self.backend {
            Backend::Exact => w,
            Backend::Float => float_plain(&w),
        }
    }

    fn wick_word(&self, w: WickWord) -> WickWord {
        match self.backend {
            Backend::Exact => w,
            Backend::Float => float_wick(&w),
        }
    }

    fn scalar(&self, z: ComplexScalar) -> ComplexScalar {
        match self.backend {
            Backend::Exact => z,
            Backend::Float => z.to_float(),
        }
    }
}

/// `sum_a d(m, a) d(a, b) = delta(m, b)` for `1 <= b <= m <= 20`.
pub fn suite_d_identity() -> SuiteResult {
    let mut t = Tally::new("d_identity");
    for m in 1..=20i64 {
        for b in 1..=m {
            let outcome = (|| {
                let mut sum = num_bigint::BigInt::from(0);
                for a in b..=m {
                    sum += d_coeff(m, a)? * d_coeff(a, b)?;
                }
                Ok(sum == num_bigint::BigInt::from((m == b) as i32))
            })();
            t.record(outcome, || format!("m = {m}, b = {b}"));
        }
    }
    t.finish()
}

/// `Theta(Theta F) = F` on plain and Wick combinations (always exact).
pub fn suite_theta_involution(rng: &mut TestRng, samples: usize) -> SuiteResult {
    let mut t = Tally::new("theta_involution");
    for _ in 0..samples {
        let f = random::plain_combination(rng, 3, 6, 3);
        t.record(theta(&f).and_then(|g| theta(&g)).map(|g| g == f), || format!("plain {f}"));
        let w = random::wick_combination(rng, 3, 6, 3);
        t.record(theta(&w).and_then(|g| theta(&g)).map(|g| g == w), || format!("wick {w}"));
    }
    t.finish()
}

/// `<Theta F> = conj <F>` on plain and Wick combinations.
pub fn suite_conjugation(rng: &mut TestRng, samples: usize, backend: Backend) -> SuiteResult {
    let data = Data { backend };
    let mut t = Tally::new("conjugation");
    for _ in 0..samples {
        let f = data.plain(random::plain_combination(rng, 3, 6, 3));
        let outcome = (|| Ok(agree(&expect_combo(&theta(&f)?)?, &expect_combo(&f)?.conj())))();
        t.record(outcome, || format!("plain {f}"));
        let w = data.wick(random::wick_combination(rng, 3, 6, 3));
        let outcome = (|| Ok(agree(&expect_combo(&theta(&w)?)?, &expect_combo(&w)?.conj())))();
        t.record(outcome, || format!("wick {w}"));
    }
    t.finish()
}

/// Affine invariance of expectations and Möbius covariance of first-order words.
pub fn suite_scaling(rng: &mut TestRng, samples: usize, backend: Backend) -> SuiteResult {
    let data = Data { backend };
    let mut t = Tally::new("scaling");
    let (zero, one) = (ComplexScalar::zero(), ComplexScalar::one());
    for _ in 0..samples {
        let len = 2 * rng.random_range(1..=3);
        let w = data.plain_word(random::plain_word(rng, len, 3));
        let a = data.scalar(random::gaussian(rng, 5, 3));
        let q = data.scalar(random::coefficient(rng));
        let outcome = (|| {
            let f = PlainCombination::word(w.clone());
            Ok(agree(&expect_combo(&rescale(&f, &a, &q)?)?, &expect_plain(&w)?))
        })();
        t.record(outcome, || format!("rescale {w} by a = {a}, q = {q}"));

        let first = data.plain_word(random::plain_word(rng, len, 1));
        let outcome = mobius_check(&first, [&zero, &one, &one, &zero]).map(|(l, r)| agree(&l, &r));
        t.record(outcome, || format!("inversion on {first}"));
        let outcome = mobius_check(&first, [&q, &a, &zero, &one]).map(|(l, r)| agree(&l, &r));
        t.record(outcome, || format!("affine {q} z + {a} on {first}"));
    }
    t.finish()
}

/// `<:Z1: ... :Zr:> = < :Z1:_0 ... :Zr:_0 >` on distinct points.
pub fn suite_wick_vs_plain(rng: &mut TestRng, samples: usize, backend: Backend) -> SuiteResult {
    let data = Data { backend };
    let mut t = Tally::new("wick_vs_plain");
    for _ in 0..samples {
        let total = rng.random_range(0..=8);
        let w = data.wick_word(random::wick_word(rng, total, 3, false));
        let outcome = (|| {
            let mut product = PlainCombination::unit();
            for g in w.groups() {
                product = &product * &wick_expand(g)?;
            }
            Ok(agree(&expect_wick(&w)?, &expect_combo(&product)?))
        })();
        t.record(outcome, || format!("{w}"));
    }
    t.finish()
}

/// `[alpha_m, alpha_n] = m delta_{m+n}` and `alpha_m^* = alpha_{-m}` (always exact).
pub fn suite_commutators(rng: &mut TestRng, samples: usize) -> SuiteResult {
    let mut t = Tally::new("commutators");
    for _ in 0..samples {
        let v = random::fock_vector(rng, 3, 10);
        let w = random::fock_vector(rng, 3, 10);
        let m = rng.random_range(-6..=6i64);
        let n = rng.random_range(-6..=6i64);
        let lhs = &ladder(&ladder(&v, n), m) - &ladder(&ladder(&v, m), n);
        let rhs = if m + n == 0 { v.scale(&ComplexScalar::integer(m)) } else { LinearCombination::zero() };
        t.record(Ok(lhs == rhs), || format!("[alpha_{m}, alpha_{n}] on {v}"));
        let adjoint = fock_inner(&ladder(&v, -m), &w) == fock_inner(&v, &ladder(&w, m));
        t.record(Ok(adjoint), || format!("adjoint of alpha_{m} on {v}, {w}"));
    }
    t.finish()
}

/// Every multiset of modes with sum at most `max_level`.
fn multisets(max_level: u32) -> Vec<Vec<u32>> {
    fn go(min: u32, budget: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        for m in min..=budget {
            current.push(m);
            go(m, budget - m, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max_level, &mut Vec::new(), &mut out);
    out
}

fn origin_state(orders: &[u32]) -> WickCombination {
    if orders.is_empty() {
        return WickCombination::unit();
    }
    let g = WickGroup::at_point(orders, &ComplexScalar::zero()).expect("positive orders");
    WickCombination::word(WickWord::from(g))
}

/// Fock inner products of origin Wick states agree with the Hilbert inner
/// product, for all mode multisets of total level at most 8 (always exact).
pub fn suite_dictionary() -> SuiteResult {
    let mut t = Tally::new("dictionary");
    let all = multisets(8);
    for a in &all {
        for b in &all {
            let outcome = (|| {
                let fock = fock_inner(&wick_origin_to_fock(a)?, &wick_origin_to_fock(b)?);
                Ok(fock == state_inner(&origin_state(a), &origin_state(b))?)
            })();
            t.record(outcome, || format!("{a:?} vs {b:?}"));
        }
    }
    t.finish()
}

/// The reflection inner product agrees with the closed-form disc series on
/// single groups of arity at most 4.
pub fn suite_oracle(rng: &mut TestRng, samples: usize, backend: Backend) -> SuiteResult {
    let data = Data { backend };
    let mut t = Tally::new("oracle");
    let origin = WickGroup::single(Insertion::new(1, ComplexScalar::zero()));
    let value = state_inner(&origin_state(&[1]), &origin_state(&[1])).and_then(|v| {
        Ok(v == ComplexScalar::rational(1, 2) && disc_series_inner(&origin, &origin)? == v)
    });
    t.record(value, || "<:[1,0]:, :[1,0]:> = 1/2".into());
    for _ in 0..samples {
        let na = rng.random_range(1..=4);
        let nb = if rng.random_bool(0.8) { na } else { rng.random_range(1..=4) };
        let a = data.wick_word(WickWord::from(random::wick_group(rng, na, 3, true)));
        let b = data.wick_word(WickWord::from(random::wick_group(rng, nb, 3, true)));
        let outcome = (|| {
            let lhs = inner(&WickCombination::word(a.clone()), &WickCombination::word(b.clone()))?;
            Ok(agree(&lhs, &disc_series_inner(&a.groups()[0], &b.groups()[0])?))
        })();
        t.record(outcome, || format!("{a} vs {b}"));
    }
    t.finish()
}

/// All suites in a fixed order.
pub fn run_all(options: &VerifyOptions) -> Vec<SuiteResult> {
    let mut rng = random::rng(options.seed);
    let n = options.samples;
    vec![
        suite_d_identity(),
        suite_theta_involution(&mut rng, n),
        suite_conjugation(&mut rng, n, options.backend),
        suite_scaling(&mut rng, n, options.backend),
        suite_wick_vs_plain(&mut rng, n, options.backend),
        suite_commutators(&mut rng, n),
        suite_dictionary(),
        suite_oracle(&mut rng, n, options.backend),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        // partitions of 0..=4: 1 + 1 + 2 + 3 + 5
        assert_eq!(multisets(4).len(), 12);
    }

    #[test]
    fn all_suites_pass_exact() {
        let results = run_all(&VerifyOptions {
            samples: 8,
            ..VerifyOptions::default()
        });
        for r in &results {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn all_suites_pass_float() {
        let results = run_all(&VerifyOptions {
            samples: 8,
            seed: 5,
            backend: Backend::Float,
        });
        for r in &results {
            assert!(r.passed, "{r:?}");
        }
    }
}
