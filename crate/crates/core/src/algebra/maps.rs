//! Structure maps on the symbol algebras: the reflection, the affine
//! reparametrisation, Wick expansion and Wick-group merging.

use super::coeffs::d_row;
use super::combo::LinearCombination;
use super::word::{Insertion, PlainWord, WickGroup, WickWord, Word};
use crate::correlator::pair_kernel;
use crate::error::{Error, Module, Result};
use crate::scalar::ComplexScalar;

/// Words on which the reflection and the affine map act.
pub trait Reflectable: Word {
    /// Image of a single word under the reflection (coefficients not conjugated).
    fn reflect(&self) -> Result<LinearCombination<Self>>;

    /// `(q^{sum m}, word with z -> a + q z)`.
    fn rescaled(&self, a: &ComplexScalar, q: &ComplexScalar) -> (ComplexScalar, Self);
}

/// `[m, z] -> sum_a d(m, a) conj(z)^{-(m+a)} [a, 1/conj(z)]`.
fn reflect_insertion(ins: &Insertion) -> Result<Vec<(ComplexScalar, Insertion)>> {
    let image = ins
        .point()
        .conj()
        .inv()
        .ok_or_else(|| Error::domain(Module::Algebra, format!("reflection pole: {ins} sits at 0")))?;
    let m = ins.order();
    Ok(d_row(m)
        .into_iter()
        .map(|(a, d)| {
            let weight = ComplexScalar::from_bigint(&d) * image.powi((m + a) as i64).expect("nonnegative power");
            (weight, Insertion::new(a, image.clone()))
        })
        .collect())
}

/// Multiply out a product of sums.
fn expand_products<T: Clone>(factors: Vec<Vec<(ComplexScalar, T)>>) -> Vec<(ComplexScalar, Vec<T>)> {
    let mut acc = vec![(ComplexScalar::one(), Vec::with_capacity(factors.len()))];
    for factor in factors {
        let mut next = Vec::with_capacity(acc.len() * factor.len());
        for (c, items) in &acc {
            for (fc, item) in &factor {
                let mut v = items.clone();
                v.push(item.clone());
                next.push((c * fc, v));
            }
        }
        acc = next;
    }
    acc
}

fn reflect_group(group: &WickGroup) -> Result<Vec<(ComplexScalar, WickGroup)>> {
    let factors = group.as_slice().iter().map(reflect_insertion).collect::<Result<Vec<_>>>()?;
    Ok(expand_products(factors)
        .into_iter()
        .map(|(c, ins)| (c, WickGroup::from_sorted_unchecked(ins)))
        .collect())
}

fn rescale_insertion(ins: &Insertion, a: &ComplexScalar, q: &ComplexScalar) -> Insertion {
    Insertion::new(ins.order(), a + q * ins.point())
}

impl Reflectable for PlainWord {
    fn reflect(&self) -> Result<LinearCombination<Self>> {
        let factors = self.as_slice().iter().map(reflect_insertion).collect::<Result<Vec<_>>>()?;
        Ok(expand_products(factors)
            .into_iter()
            .map(|(c, ins)| (PlainWord::new(ins), c))
            .collect())
    }

    fn rescaled(&self, a: &ComplexScalar, q: &ComplexScalar) -> (ComplexScalar, Self) {
        let weight = q.powi(self.total_order() as i64).expect("nonnegative power");
        let word = PlainWord::new(self.as_slice().iter().map(|i| rescale_insertion(i, a, q)).collect());
        (weight, word)
    }
}

impl Reflectable for WickWord {
    fn reflect(&self) -> Result<LinearCombination<Self>> {
        let factors = self.groups().iter().map(reflect_group).collect::<Result<Vec<_>>>()?;
        Ok(expand_products(factors)
            .into_iter()
            .map(|(c, groups)| (WickWord::new(groups), c))
            .collect())
    }

    fn rescaled(&self, a: &ComplexScalar, q: &ComplexScalar) -> (ComplexScalar, Self) {
        let weight = q.powi(self.total_order() as i64).expect("nonnegative power");
        let groups = self
            .groups()
            .iter()
            .map(|g| WickGroup::from_sorted_unchecked(g.as_slice().iter().map(|i| rescale_insertion(i, a, q)).collect()))
            .collect();
        (weight, WickWord::new(groups))
    }
}

/// The anti-linear reflection automorphism through the unit circle.
pub fn theta<W: Reflectable>(f: &LinearCombination<W>) -> Result<LinearCombination<W>> {
    let mut out = LinearCombination::zero();
    for (word, c) in f {
        let c = c.conj();
        for (image, ic) in &word.reflect()? {
            out.add_term(&c * ic, image.clone());
        }
    }
    Ok(out)
}

/// The reparametrisation `z -> a + q z` with weight `q^{sum m}`.
pub fn rescale<W: Reflectable>(
    f: &LinearCombination<W>,
    a: &ComplexScalar,
    q: &ComplexScalar,
) -> Result<LinearCombination<W>> {
    if q.is_zero() {
        return Err(Error::domain(Module::Algebra, "rescale needs q != 0"));
    }
    let mut out = LinearCombination::zero();
    for (word, c) in f {
        let (weight, image) = word.rescaled(a, q);
        out.add_term(c * &weight, image);
    }
    Ok(out)
}

/// `:G:_0`, the Wick-ordered group written out in plain words:
/// a sum over partial pairings `Q` of `prod_Q (-C) prod_unpaired [m, z]`.
pub fn wick_expand(group: &WickGroup) -> Result<LinearCombination<PlainWord>> {
    let ins = group.as_slice();
    for (i, a) in ins.iter().enumerate() {
        if let Some(b) = ins[i + 1..].iter().find(|b| b.point() == a.point()) {
            return Err(Error::domain(
                Module::Algebra,
                format!("Wick expansion needs distinct points, {a} and {b} coincide"),
            ));
        }
    }
    let mut out = LinearCombination::zero();
    let mut remaining: Vec<usize> = (0..ins.len()).collect();
    let mut unpaired = Vec::new();
    partial_pairings(ins, &mut remaining, &mut unpaired, ComplexScalar::one(), &mut out)?;
    Ok(out)
}

fn partial_pairings(
    ins: &[Insertion],
    remaining: &mut Vec<usize>,
    unpaired: &mut Vec<Insertion>,
    weight: ComplexScalar,
    out: &mut LinearCombination<PlainWord>,
) -> Result<()> {
    let Some(&first) = remaining.first() else {
        out.add_term(weight, PlainWord::new(unpaired.clone()));
        return Ok(());
    };
    let rest: Vec<usize> = remaining[1..].to_vec();

    // first left alone
    let saved = std::mem::replace(remaining, rest.clone());
    unpaired.push(ins[first].clone());
    partial_pairings(ins, remaining, unpaired, weight.clone(), out)?;
    unpaired.pop();

    // first contracted with a later insertion
    for (pos, &j) in rest.iter().enumerate() {
        let c = pair_kernel(&ins[first], &ins[j])?;
        let mut others = rest.clone();
        others.remove(pos);
        *remaining = others;
        partial_pairings(ins, remaining, unpaired, -(&weight * &c), out)?;
    }
    *remaining = saved;
    Ok(())
}

/// Rewrite `:Z1: ... :Zr:` as a combination of single-group words using
/// `:A: :B: = sum_Q prod_Q C :(A u B) \ Q:` over partial cross-contractions.
/// Points in different groups must be distinct.
pub fn merge_groups(word: &WickWord) -> Result<LinearCombination<WickWord>> {
    let mut acc: Vec<(ComplexScalar, Vec<Insertion>)> = vec![(ComplexScalar::one(), Vec::new())];
    for group in word.groups() {
        let mut next = Vec::new();
        for (c, merged) in &acc {
            cross_contract(merged, group.as_slice(), c.clone(), &mut next)?;
        }
        acc = next;
    }
    let mut out = LinearCombination::zero();
    for (c, ins) in acc {
        let w = if ins.is_empty() {
            WickWord::unit()
        } else {
            WickWord::from(WickGroup::from_sorted_unchecked(ins))
        };
        out.add_term(c, w);
    }
    Ok(out)
}

fn cross_contract(
    left: &[Insertion],
    right: &[Insertion],
    weight: ComplexScalar,
    out: &mut Vec<(ComplexScalar, Vec<Insertion>)>,
) -> Result<()> {
    fn go(
        left: &[Insertion],
        right: &[Insertion],
        idx: usize,
        used: &mut Vec<bool>,
        kept: &mut Vec<Insertion>,
        weight: ComplexScalar,
        out: &mut Vec<(ComplexScalar, Vec<Insertion>)>,
    ) -> Result<()> {
        if idx == left.len() {
            let mut ins = kept.clone();
            ins.extend(right.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(r, _)| r.clone()));
            out.push((weight, ins));
            return Ok(());
        }
        kept.push(left[idx].clone());
        go(left, right, idx + 1, used, kept, weight.clone(), out)?;
        kept.pop();
        for j in 0..right.len() {
            if used[j] {
                continue;
            }
            let c = pair_kernel(&left[idx], &right[j])?;
            used[j] = true;
            go(left, right, idx + 1, used, kept, &weight * &c, out)?;
            used[j] = false;
        }
        Ok(())
    }
    let mut used = vec![false; right.len()];
    go(left, right, 0, &mut used, &mut Vec::new(), weight, out)
}
