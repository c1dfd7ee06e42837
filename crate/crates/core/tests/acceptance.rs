//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;

use freeboson::algebra::{
    d_coeff, rescale, theta, wick_expand, Insertion, LinearCombination, PlainCombination, WickCombination, WickGroup,
    WickWord,
};
use freeboson::amplitude::{
    amplitude_entry, hs_bound, hs_truncated, hs_tuple_count, Disc, DiscConfiguration,
};
use freeboson::correlator::{expect_combo, expect_plain, expect_wick, mobius_check};
use freeboson::fock::{contour_alpha_adaptive, fock_inner, ladder, wick_origin_to_fock, FockIndex, FockVector};
use freeboson::hilbert::{disc_series_inner, gram, inner, psd_check, state_inner};
use freeboson::random;
use freeboson::{ComplexScalar, Error};

type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> ComplexScalar {
    ComplexScalar::rational(n, d)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: freeboson::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn d_identity() -> Outcome {
    let mut checked = 0;
    for m in 1..=20i64 {
        for b in 1..=m {
            let mut sum = BigInt::from(0);
            for a in b..=m {
                sum += lift(d_coeff(m, a))? * lift(d_coeff(a, b))?;
            }
            ensure(sum == BigInt::from((m == b) as i32), || format!("m = {m}, b = {b}: {sum}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs (m, b)"))
}

fn involution_and_conjugation() -> Outcome {
    let mut rng = random::rng(11);
    for k in 0..100 {
        let len = rng.random_range(0..=6);
        let f = PlainCombination::word(random::plain_word(&mut rng, len, 3));
        let t = lift(theta(&f))?;
        ensure(lift(theta(&t))? == f, || format!("plain word {k}: theta^2 F != F for {f}"))?;
        let (lhs, rhs) = (lift(expect_combo(&t))?, lift(expect_combo(&f))?.conj());
        ensure(lhs == rhs, || format!("plain word {k}: {lhs} != {rhs}"))?;

        let total = rng.random_range(0..=6);
        let w = WickCombination::word(random::wick_word(&mut rng, total, 3, true));
        let t = lift(theta(&w))?;
        ensure(lift(theta(&t))? == w, || format!("wick word {k}: theta^2 F != F for {w}"))?;
        let (lhs, rhs) = (lift(expect_combo(&t))?, lift(expect_combo(&w))?.conj());
        ensure(lhs == rhs, || format!("wick word {k}: {lhs} != {rhs}"))?;
    }
    Ok("100 plain + 100 Wick words".into())
}

fn wick_vs_plain() -> Outcome {
    let mut rng = random::rng(12);
    let cases = 300;
    for k in 0..cases {
        let total = rng.random_range(0..=8);
        let w = random::wick_word(&mut rng, total, 3, false);
        let mut product = PlainCombination::unit();
        for g in w.groups() {
            product = &product * &lift(wick_expand(g))?;
        }
        let (lhs, rhs) = (lift(expect_wick(&w))?, lift(expect_combo(&product))?);
        ensure(lhs == rhs, || format!("case {k} {w}: {lhs} != {rhs}"))?;
    }
    Ok(format!("{cases} words, up to 8 insertions"))
}

fn reflection_positivity() -> Outcome {
    let mut rng = random::rng(13);
    let mut worst = f64::INFINITY;
    for k in 0..50 {
        let size = rng.random_range(1..=30);
        let states: Vec<WickCombination> = (0..size)
            .map(|_| {
                if rng.random_bool(0.5) {
                    random::single_group_state(&mut rng, 3, 2)
                } else {
                    random::wick_combination(&mut rng, 2, 3, 2)
                }
            })
            .collect();
        let report = lift(gram(&states))?;
        let verdict = lift(psd_check(&report, 1e-10))?;
        ensure(verdict.positive, || {
            format!("matrix {k} (size {size}): min eigenvalue {:?}", verdict.min_eigenvalue)
        })?;
        if let Some(min) = verdict.min_eigenvalue {
            worst = worst.min(min / report.norm().max(f64::MIN_POSITIVE));
        }
    }
    Ok(format!("50 matrices, worst relative min eigenvalue {worst:.3e}"))
}

fn inner_oracle() -> Outcome {
    let origin = WickGroup::single(Insertion::new(1, ComplexScalar::zero()));
    let state = WickCombination::word(WickWord::from(origin.clone()));
    let half = lift(state_inner(&state, &state))?;
    ensure(half == q(1, 2), || format!("<:[1,0]:, :[1,0]:> = {half}"))?;
    ensure(lift(disc_series_inner(&origin, &origin))? == q(1, 2), || "disc series at the origin".into())?;

    let mut rng = random::rng(14);
    let mut cases = 0;
    for na in 1..=4 {
        for nb in 1..=4 {
            for _ in 0..6 {
                let a = random::wick_group(&mut rng, na, 3, true);
                let b = random::wick_group(&mut rng, nb, 3, true);
                let fa = WickCombination::word(WickWord::from(a.clone()));
                let fb = WickCombination::word(WickWord::from(b.clone()));
                let lhs = lift(inner(&fa, &fb))?;
                let rhs = lift(disc_series_inner(&a, &b))?;
                ensure(lhs == rhs, || format!("arities ({na}, {nb}): {lhs} != {rhs}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} group pairs plus the origin value 1/2"))
}

fn ladder_algebra() -> Outcome {
    let mut rng = random::rng(15);
    let vectors: Vec<FockVector> = (0..6).map(|_| random::fock_vector(&mut rng, 3, 10)).collect();
    for v in &vectors {
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                let lhs = &ladder(&ladder(v, n), m) - &ladder(&ladder(v, m), n);
                let rhs = if m + n == 0 { v.scale(&ComplexScalar::integer(m)) } else { LinearCombination::zero() };
                ensure(lhs == rhs, || format!("[alpha_{m}, alpha_{n}] on {v}"))?;
            }
        }
    }
    for (v, w) in vectors.iter().zip(vectors.iter().skip(1)) {
        for m in -6..=6i64 {
            let (lhs, rhs) = (fock_inner(&ladder(v, -m), w), fock_inner(v, &ladder(w, m)));
            ensure(lhs == rhs, || format!("adjoint of alpha_{m}: {lhs} != {rhs}"))?;
        }
    }
    Ok("169 commutators on 6 vectors, adjointness for 13 modes".into())
}

fn multisets(max: u32) -> Vec<Vec<u32>> {
    fn go(min: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for m in min..=budget {
            cur.push(m);
            go(m, budget - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max, &mut Vec::new(), &mut out);
    out
}

fn origin_state(orders: &[u32]) -> WickCombination {
    if orders.is_empty() {
        return WickCombination::unit();
    }
    WickCombination::word(WickWord::from(WickGroup::at_point(orders, &ComplexScalar::zero()).unwrap()))
}

fn fock_dictionary() -> Outcome {
    let all = multisets(8);
    for a in &all {
        for b in &all {
            let fock = fock_inner(&lift(wick_origin_to_fock(a))?, &lift(wick_origin_to_fock(b))?);
            let hilbert = lift(state_inner(&origin_state(a), &origin_state(b)))?;
            ensure(fock == hilbert, || format!("{a:?} vs {b:?}: {fock} != {hilbert}"))?;
        }
    }
    let v = ladder(&ladder(&FockVector::vacuum(), -2), -2);
    let norm = fock_inner(&v, &v);
    ensure(norm == ComplexScalar::integer(8), || format!("||alpha_-2^2 Omega||^2 = {norm}"))?;
    Ok(format!("{} ordered pairs of multisets, ||alpha_-2^2 Omega||^2 = 8", all.len() * all.len()))
}

fn contour_cross_check() -> Outcome {
    let group = WickGroup::single(Insertion::new(1, q(1, 4)));
    let check = lift(contour_alpha_adaptive(1, &group, 0.6, 1e-12, 1024))?;
    let omega = check.probes.iter().position(FockIndex::is_vacuum).ok_or("no vacuum probe")?;
    let expected = Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2);
    let err = (check.quadrature[omega] - expected).norm();
    ensure(err < 1e-10, || format!("vacuum coefficient off by {err:e}"))?;
    ensure(check.discrepancy < 1e-10, || format!("probe discrepancy {:e}", check.discrepancy))?;
    ensure(check.nodes <= 1024, || format!("{} nodes", check.nodes))?;
    Ok(format!("{} nodes, error {err:.1e}, max probe discrepancy {:.1e}", check.nodes, check.discrepancy))
}

fn two_discs(a: ComplexScalar) -> freeboson::Result<DiscConfiguration> {
    DiscConfiguration::new(vec![Disc::new(q(0, 1), q(1, 1))?, Disc::new(a, q(1, 1))?])
}

fn idx(pairs: &[(u32, u32)]) -> FockIndex {
    FockIndex::from_counts(pairs.iter().copied()).unwrap()
}

fn amplitude_values() -> Outcome {
    let c = lift(two_discs(q(10, 1)))?;
    let e = lift(amplitude_entry(&c, &[idx(&[(1, 1)]), idx(&[(1, 1)])]))?;
    ensure(e.to_exact() == Some(q(1, 100)), || format!("entry(n1=1, n1=1) = {:?}", e.to_exact()))?;
    let e = lift(amplitude_entry(&c, &[idx(&[(1, 1)]), idx(&[(2, 1)])]))?;
    let expected = ComplexScalar::sqrt2() * q(-1, 1000);
    ensure(e.to_exact() == Some(expected), || format!("entry(n1=1, n2=1) = {:?}", e.to_exact()))?;

    let mut odd = 0;
    let indices: Vec<FockIndex> = (0..=3u32)
        .flat_map(|a| (0..=2u32).map(move |b| idx(&[(1, a), (2, b)])))
        .collect();
    for x in &indices {
        for y in &indices {
            if (x.particles() + y.particles()) % 2 == 1 {
                let v = lift(amplitude_entry(&c, &[x.clone(), y.clone()]))?;
                ensure(v.is_zero(), || format!("odd entry ({x}, {y}) = {}", v.numerator))?;
                odd += 1;
            }
        }
    }
    Ok(format!("1/100, -sqrt2/1000, {odd} odd entries vanish"))
}

fn hs_bound_check() -> Outcome {
    let c = lift(two_discs(q(10, 1)))?;
    let bound = lift(hs_bound(&c))?;
    ensure(bound == q(23, 22), || format!("bound {bound}"))?;
    let mut largest = ComplexScalar::zero();
    for m in 1..=4 {
        for n in 1..=4 {
            let count = hs_tuple_count(2, m, n);
            ensure(count <= 100_000, || format!("M = {m}, N = {n}: {count} tuples"))?;
            let table = lift(hs_truncated(&c, m, n))?;
            ensure(table.regime, || "regime flag off".into())?;
            ensure(table.is_monotone(), || format!("M = {m}, N = {n}: not monotone"))?;
            ensure(table.within_bound(), || format!("M = {m}, N = {n}: partial sum exceeds 23/22"))?;
            if m == 4 && n == 4 {
                largest = table.rows.last().unwrap().partial_sum.clone();
            }
        }
    }
    // |4 + 4i| = 4 sqrt 2 sits exactly on the boundary
    let edge = lift(two_discs(q(4, 1) + ComplexScalar::i() * q(4, 1)))?;
    ensure(!edge.hs_regime(), || "edge configuration reported inside the regime".into())?;
    match hs_bound(&edge) {
        Err(Error::Domain { .. }) | Err(Error::Configuration(_)) => {}
        other => return Err(format!("edge case gave {other:?}")),
    }
    Ok(format!("bound 23/22, largest partial sum {:.9}", largest.to_complex64().re))
}

fn scaling_covariance() -> Outcome {
    let mut rng = random::rng(17);
    let (zero, one) = (ComplexScalar::zero(), ComplexScalar::one());
    for k in 0..100 {
        let len = 2 * rng.random_range(1..=3);
        let w = random::plain_word(&mut rng, len, 3);
        let a = random::gaussian(&mut rng, 5, 3);
        let s = random::coefficient(&mut rng);
        let f = PlainCombination::word(w.clone());
        let (lhs, rhs) = (lift(expect_combo(&lift(rescale(&f, &a, &s))?))?, lift(expect_plain(&w))?);
        ensure(lhs == rhs, || format!("rescale {k} of {w} by ({a}, {s}): {lhs} != {rhs}"))?;
    }
    for k in 0..40 {
        let len = 2 * rng.random_range(1..=3);
        let w = random::plain_word(&mut rng, len, 1);
        let (l, r) = lift(mobius_check(&w, [&zero, &one, &one, &zero]))?;
        ensure(l == r, || format!("inversion {k} on {w}: {l} != {r}"))?;
        let a = random::gaussian(&mut rng, 5, 3);
        let s = random::coefficient(&mut rng);
        let (l, r) = lift(mobius_check(&w, [&s, &a, &zero, &one]))?;
        ensure(l == r, || format!("affine {k} on {w}: {l} != {r}"))?;
    }
    Ok("100 rescales, 40 inversions, 40 affine maps".into())
}

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { number: 1, name: "coefficient identity", limit: secs(1), run: d_identity },
        Criterion { number: 2, name: "involution and conjugation", limit: secs(10), run: involution_and_conjugation },
        Criterion { number: 3, name: "Wick/plain equivalence", limit: secs(30), run: wick_vs_plain },
        Criterion { number: 4, name: "reflection positivity", limit: secs(60), run: reflection_positivity },
        Criterion { number: 5, name: "inner-product oracle", limit: None, run: inner_oracle },
        Criterion { number: 6, name: "ladder algebra", limit: None, run: ladder_algebra },
        Criterion { number: 7, name: "Fock dictionary", limit: None, run: fock_dictionary },
        Criterion { number: 8, name: "contour cross-check", limit: None, run: contour_cross_check },
        Criterion { number: 9, name: "amplitude hand values", limit: None, run: amplitude_values },
        Criterion { number: 10, name: "Hilbert-Schmidt bound", limit: secs(300), run: hs_bound_check },
        Criterion { number: 11, name: "scaling covariance", limit: None, run: scaling_covariance },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} [{elapsed:.2?}]", c.number, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {}: {why} [{elapsed:.2?}]", c.number, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
