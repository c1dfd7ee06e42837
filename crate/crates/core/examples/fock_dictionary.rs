//! Wick states at the origin as Fock vectors, and the series of a group
//! away from the origin.

use freeboson::algebra::{Insertion, WickCombination, WickGroup, WickWord};
use freeboson::fock::{fock_inner, ladder, wick_group_to_fock, wick_origin_to_fock, FockIndex, FockVector};
use freeboson::hilbert::state_inner;
use freeboson::{ComplexScalar, Result};

fn main() -> Result<()> {
    let two_twos = ladder(&ladder(&FockVector::vacuum(), -2), -2);
    println!("alpha_-2^2 Omega = {two_twos}, norm^2 = {}", fock_inner(&two_twos, &two_twos));

    for orders in [vec![1], vec![1, 1], vec![2, 1], vec![3]] {
        let v = wick_origin_to_fock(&orders)?;
        let g = WickGroup::at_point(&orders, &ComplexScalar::zero())?;
        let s = WickCombination::word(WickWord::from(g));
        println!(
            "{orders:?} -> {v}; Fock norm {} vs Hilbert norm {}",
            fock_inner(&v, &v),
            state_inner(&s, &s)?
        );
    }

    let idx = FockIndex::from_counts([(1, 2), (3, 1)])?;
    println!("|{idx}|^2 = {}", idx.norm_sq());

    let off = WickGroup::single(Insertion::new(1, ComplexScalar::rational(1, 3)));
    println!(":[1,1/3]: to level 3 = {}", wick_group_to_fock(&off, 3)?);
    Ok(())
}
