//! Amplitudes between two disjoint discs on the sphere, exact where possible.

use freeboson::amplitude::{amplitude_entry_with_stats, Disc, DiscConfiguration};
use freeboson::fock::FockIndex;
use freeboson::{ComplexScalar, Result};

fn main() -> Result<()> {
    let q = ComplexScalar::rational;
    let config = DiscConfiguration::new(vec![
        Disc::new(q(0, 1), q(1, 1))?,
        Disc::new(q(10, 1), q(1, 1))?,
    ])?;
    let idx = |pairs: &[(u32, u32)]| FockIndex::from_counts(pairs.iter().copied());
    let tuples = [
        [idx(&[])?, idx(&[])?],
        [idx(&[(1, 1)])?, idx(&[(1, 1)])?],
        [idx(&[(1, 1)])?, idx(&[(2, 1)])?],
        [idx(&[(2, 2)])?, idx(&[(1, 1), (3, 1)])?],
        [idx(&[(1, 2)])?, idx(&[(2, 1)])?],
    ];
    for t in &tuples {
        let (value, stats) = amplitude_entry_with_stats(&config, t)?;
        println!(
            "A({}, {}) = {}  [{} insertions, {} memo states]",
            t[0],
            t[1],
            value.to_scalar(),
            stats.insertions,
            stats.memo_states
        );
    }
    println!("overlapping discs: {}", DiscConfiguration::new(vec![
        Disc::new(q(0, 1), q(1, 1))?,
        Disc::new(q(3, 2), q(1, 1))?,
    ]).unwrap_err());
    Ok(())
}
