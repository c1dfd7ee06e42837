//! Truncated Hilbert-Schmidt sums climbing towards the closed-form bound.

use freeboson::amplitude::{hs_bound, hs_truncated, Disc, DiscConfiguration};
use freeboson::cli::report::hs_csv;
use freeboson::{ComplexScalar, Result};

fn main() -> Result<()> {
    let q = ComplexScalar::rational;
    let config = DiscConfiguration::new(vec![
        Disc::new(q(0, 1), q(1, 1))?,
        Disc::new(q(10, 1), q(1, 1))?,
    ])?;
    println!("d/R = {:.4}, bound = {}", config.separation_ratio(), hs_bound(&config)?);
    let table = hs_truncated(&config, 3, 4)?;
    print!("{}", hs_csv(&table));
    println!("monotone {}, within bound {}", table.is_monotone(), table.within_bound());

    let edge = DiscConfiguration::new(vec![
        Disc::new(q(0, 1), q(1, 1))?,
        Disc::new(q(4, 1) + ComplexScalar::i() * q(4, 1), q(1, 1))?,
    ])?;
    println!("at d/R = 4 sqrt 2: {}", hs_bound(&edge).unwrap_err());
    Ok(())
}
