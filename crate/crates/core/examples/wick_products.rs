//! Wick-ordered groups: expansion into plain words, cross-group pairings,
//! and merging two groups into one.

use freeboson::algebra::{merge_groups, wick_expand, Insertion, WickGroup, WickWord};
use freeboson::correlator::{expect_combo, expect_wick};
use freeboson::{ComplexScalar, Result};

fn group(ins: &[(u32, ComplexScalar)]) -> Result<WickGroup> {
    WickGroup::new(ins.iter().map(|(m, z)| Insertion::new(*m, z.clone())).collect())
}

fn main() -> Result<()> {
    let q = ComplexScalar::rational;
    let a = group(&[(1, q(1, 3)), (2, q(-1, 4))])?;
    let b = group(&[(1, q(1, 2)), (1, ComplexScalar::i() * q(1, 2))])?;
    let word = WickWord::new(vec![a.clone(), b.clone()]);

    let expanded = &wick_expand(&a)? * &wick_expand(&b)?;
    println!("{a} expands to {}", wick_expand(&a)?);
    println!("<{word}> = {}", expect_wick(&word)?);
    println!("via plain words = {}", expect_combo(&expanded)?);

    let merged = merge_groups(&word)?;
    println!("merged into {} single-group terms: {merged}", merged.len());
    println!("<merged> = {}", expect_combo(&merged)?);

    // inside one group points may coincide
    let origin = WickGroup::at_point(&[1, 1, 2], &ComplexScalar::zero())?;
    let with_origin = WickWord::new(vec![origin, group(&[(1, q(1, 2)), (3, q(2, 3))])?]);
    println!("<{with_origin}> = {}", expect_wick(&with_origin)?);
    Ok(())
}
