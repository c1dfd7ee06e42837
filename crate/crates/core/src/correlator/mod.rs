//! Expectations of plain and Wick words as sums over pairings of the
//! two-point kernel
//!
//! ```text
//! C(m1, z1, m2, z2) = (1/2) (m1+m2-1)! (-1)^m1 / (z1 - z2)^(m1+m2)
//! ```

mod matching;

use std::collections::HashMap;

pub use matching::{cross_matching_count, cross_matchings, matchings, CrossMatching, Matching, Matchings, Slot};

use crate::algebra::{factorial, Insertion, LinearCombination, PlainWord, WickWord, Word};
use crate::error::{Error, Module, Result};
use crate::scalar::ComplexScalar;

/// Words above this size use a subset-memoised pairing sum.
const DFS_LIMIT: usize = 12;

/// The derivative two-point function `C(m1, z1, m2, z2)`.
pub fn kernel(m1: u32, z1: &ComplexScalar, m2: u32, z2: &ComplexScalar) -> Result<ComplexScalar> {
    let a = Insertion::try_new(m1, z1.clone())?;
    let b = Insertion::try_new(m2, z2.clone())?;
    pair_kernel(&a, &b)
}

pub(crate) fn pair_kernel(a: &Insertion, b: &Insertion) -> Result<ComplexScalar> {
    let diff = a.point() - b.point();
    if diff.is_zero() {
        return Err(Error::Pole {
            module: Module::Correlator,
            first: Box::new(a.clone()),
            second: Box::new(b.clone()),
        });
    }
    let total = a.order() + b.order();
    let mut value = ComplexScalar::from_bigint(&factorial(total - 1)) * ComplexScalar::rational(1, 2);
    if a.order() % 2 == 1 {
        value = -value;
    }
    let power = diff.powi(-(total as i64)).expect("nonzero base");
    Ok(value * power)
}

/// Sum over perfect matchings of `0..n` of the product of `weights[i][j]`,
/// where `None` marks a forbidden pair.
fn pairing_sum(weights: &[Vec<Option<ComplexScalar>>]) -> ComplexScalar {
    let n = weights.len();
    if n % 2 == 1 {
        return ComplexScalar::zero();
    }
    if n <= DFS_LIMIT {
        let mut remaining: Vec<usize> = (0..n).collect();
        return pairing_dfs(weights, &mut remaining);
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    pairing_subsets(weights, full, &mut HashMap::new())
}

fn pairing_dfs(weights: &[Vec<Option<ComplexScalar>>], remaining: &mut Vec<usize>) -> ComplexScalar {
    if remaining.is_empty() {
        return ComplexScalar::one();
    }
    let first = remaining.remove(0);
    let mut total = ComplexScalar::zero();
    for pos in 0..remaining.len() {
        let j = remaining[pos];
        let Some(w) = &weights[first][j] else { continue };
        remaining.remove(pos);
        let sub = pairing_dfs(weights, remaining);
        remaining.insert(pos, j);
        if !sub.is_zero() {
            total = total + w * &sub;
        }
    }
    remaining.insert(0, first);
    total
}

fn pairing_subsets(
    weights: &[Vec<Option<ComplexScalar>>],
    mask: u64,
    memo: &mut HashMap<u64, ComplexScalar>,
) -> ComplexScalar {
    if mask == 0 {
        return ComplexScalar::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let first = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << first);
    let mut total = ComplexScalar::zero();
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if let Some(w) = &weights[first][j] {
            let sub = pairing_subsets(weights, rest & !(1u64 << j), memo);
            total = total + w * &sub;
        }
    }
    memo.insert(mask, total.clone());
    total
}

/// `<[m1, z1, ..., mn, zn]>`: sum over perfect matchings of kernel products.
/// All points must be distinct.
pub fn expect_plain(word: &PlainWord) -> Result<ComplexScalar> {
    let ins = word.as_slice();
    let n = ins.len();
    let mut weights = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let k = pair_kernel(&ins[i], &ins[j])?;
            weights[i][j] = Some(k.clone());
            weights[j][i] = Some(k);
        }
    }
    if n > 64 {
        return Err(Error::domain(Module::Correlator, "words longer than 64 insertions are not supported"));
    }
    Ok(pairing_sum(&weights))
}

/// `<:Z1: ... :Zr:>`: only pairings between different groups contribute.
/// Points in different groups must be distinct; inside a group they may coincide.
pub fn expect_wick(word: &WickWord) -> Result<ComplexScalar> {
    let labelled: Vec<(usize, &Insertion)> = word
        .groups()
        .iter()
        .enumerate()
        .flat_map(|(g, grp)| grp.as_slice().iter().map(move |i| (g, i)))
        .collect();
    let n = labelled.len();
    if n > 64 {
        return Err(Error::domain(Module::Correlator, "words longer than 64 insertions are not supported"));
    }
    let mut weights = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if labelled[i].0 == labelled[j].0 {
                continue;
            }
            let k = pair_kernel(labelled[i].1, labelled[j].1)?;
            weights[i][j] = Some(k.clone());
            weights[j][i] = Some(k);
        }
    }
    Ok(pairing_sum(&weights))
}

/// Words with a defined expectation.
pub trait Expectation: Word {
    fn expect(&self) -> Result<ComplexScalar>;
}

impl Expectation for PlainWord {
    fn expect(&self) -> Result<ComplexScalar> {
        expect_plain(self)
    }
}

impl Expectation for WickWord {
    fn expect(&self) -> Result<ComplexScalar> {
        expect_wick(self)
    }
}

/// Linear extension `<F> = sum_Z F(Z) <Z>`.
pub fn expect_combo<W: Expectation>(f: &LinearCombination<W>) -> Result<ComplexScalar> {
    let mut total = ComplexScalar::zero();
    for (w, c) in f {
        total = total + c * &w.expect()?;
    }
    Ok(total)
}

/// Two sides of Möbius covariance for a first-order word:
/// `(C(z1..zn), C(w1..wn) prod dw/dz(z_i))` with `w = (a z + b)/(c z + d)`.
pub fn mobius_check(word: &PlainWord, map: [&ComplexScalar; 4]) -> Result<(ComplexScalar, ComplexScalar)> {
    let [a, b, c, d] = map;
    let det = a * d - b * c;
    if det.is_zero() {
        return Err(Error::domain(Module::Correlator, "degenerate Möbius map (ad - bc = 0)"));
    }
    if let Some(bad) = word.as_slice().iter().find(|i| i.order() != 1) {
        return Err(Error::domain(Module::Correlator, format!("Möbius covariance needs order 1, got {bad}")));
    }
    let mut images = Vec::with_capacity(word.len());
    let mut jacobian = ComplexScalar::one();
    for ins in word.as_slice() {
        let z = ins.point();
        let denom = c * z + d;
        if denom.is_zero() {
            return Err(Error::domain(Module::Correlator, format!("{ins} is mapped to infinity")));
        }
        images.push(&(a * z + b) / &denom);
        jacobian = jacobian * (&det / &(&denom * &denom));
    }
    let lhs = expect_plain(word)?;
    let rhs = expect_plain(&PlainWord::first_order(images))? * jacobian;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::WickGroup;

    fn z(n: i64) -> ComplexScalar {
        ComplexScalar::integer(n)
    }

    fn first_order(points: &[i64]) -> PlainWord {
        PlainWord::first_order(points.iter().map(|&p| z(p)))
    }

    #[test]
    fn kernel_values() {
        assert_eq!(kernel(1, &z(0), 1, &z(1)).unwrap(), ComplexScalar::rational(-1, 2));
        assert_eq!(kernel(1, &z(0), 2, &z(1)).unwrap(), ComplexScalar::integer(1));
        assert_eq!(kernel(2, &z(0), 2, &z(1)).unwrap(), ComplexScalar::integer(3));
    }

    #[test]
    fn kernel_symmetric_under_swap() {
        let a = ComplexScalar::gaussian((1, 3).q(), (2, 7).q());
        let b = ComplexScalar::gaussian((-1, 2).q(), (1, 5).q());
        for m1 in 1..5 {
            for m2 in 1..5 {
                assert_eq!(kernel(m1, &a, m2, &b).unwrap(), kernel(m2, &b, m1, &a).unwrap());
            }
        }
    }

    #[test]
    fn kernel_pole_and_order_errors() {
        assert!(matches!(kernel(1, &z(2), 3, &z(2)), Err(Error::Pole { .. })));
        assert!(kernel(0, &z(0), 1, &z(1)).is_err());
    }

    #[test]
    fn plain_expectations() {
        assert!(expect_plain(&first_order(&[0, 1, 2])).unwrap().is_zero());
        assert_eq!(expect_plain(&first_order(&[0, 1, 2, 3])).unwrap(), ComplexScalar::rational(169, 576));
        assert_eq!(expect_plain(&PlainWord::unit()).unwrap(), ComplexScalar::one());
        assert!(matches!(expect_plain(&first_order(&[0, 1, 1, 3])), Err(Error::Pole { .. })));
    }

    #[test]
    fn large_words_use_subset_memo_consistently() {
        // 14 points: subset DP; compare with the matching stream
        let pts: Vec<i64> = (0..14).collect();
        let word = first_order(&pts);
        let via_dp = expect_plain(&word).unwrap();
        let ins = word.as_slice();
        let via_stream: ComplexScalar = matchings(14)
            .map(|m| m.pairs().iter().map(|&(i, j)| pair_kernel(&ins[i], &ins[j]).unwrap()).product())
            .sum();
        assert_eq!(via_dp, via_stream);
    }

    #[test]
    fn wick_expectations() {
        let ins = |m, p| Insertion::new(m, z(p));
        let lone = WickWord::from(WickGroup::new(vec![ins(1, 0), ins(1, 0)]).unwrap());
        assert!(expect_wick(&lone).unwrap().is_zero());

        let two = WickWord::new(vec![WickGroup::single(ins(1, 0)), WickGroup::single(ins(1, 1))]);
        assert_eq!(expect_wick(&two).unwrap(), ComplexScalar::rational(-1, 2));

        let doubled = WickWord::new(vec![
            WickGroup::new(vec![ins(1, 0), ins(1, 0)]).unwrap(),
            WickGroup::new(vec![ins(1, 1), ins(1, 1)]).unwrap(),
        ]);
        assert_eq!(expect_wick(&doubled).unwrap(), ComplexScalar::rational(1, 2));

        let clash = WickWord::new(vec![WickGroup::single(ins(1, 3)), WickGroup::single(ins(2, 3))]);
        assert!(matches!(expect_wick(&clash), Err(Error::Pole { .. })));
    }

    #[test]
    fn combo_linearity() {
        let mut f = LinearCombination::term(ComplexScalar::integer(2), first_order(&[0, 1]));
        f.add_term(ComplexScalar::one(), PlainWord::unit());
        assert!(expect_combo(&f).unwrap().is_zero());
        assert!(expect_combo(&LinearCombination::<PlainWord>::zero()).unwrap().is_zero());
    }

    #[test]
    fn mobius_inversion_and_identity() {
        let word = first_order(&[2, 3]);
        let (one, zero) = (z(1), z(0));
        let (l, r) = mobius_check(&word, [&zero, &one, &one, &zero]).unwrap();
        assert_eq!(l, r);
        let (l, r) = mobius_check(&word, [&one, &zero, &zero, &one]).unwrap();
        assert_eq!(l, r);
        assert!(mobius_check(&word, [&one, &one, &one, &one]).is_err());
        assert!(mobius_check(&first_order(&[0, 1]), [&zero, &one, &one, &zero]).is_err());
    }

    trait Q {
        fn q(self) -> num_rational::BigRational;
    }
    impl Q for (i64, i64) {
        fn q(self) -> num_rational::BigRational {
            num_rational::BigRational::new(self.0.into(), self.1.into())
        }
    }
}
