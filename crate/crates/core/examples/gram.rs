//! Reflection and the Gram matrix of a handful of states, with its
//! positivity verdict.

use freeboson::algebra::{theta, Insertion, WickCombination, WickGroup, WickWord};
use freeboson::hilbert::{disc_series_inner, gram, psd_check, state_inner};
use freeboson::{random, ComplexScalar, Result};

fn main() -> Result<()> {
    let z = ComplexScalar::rational(1, 2) + ComplexScalar::i() * ComplexScalar::rational(1, 4);
    let f = WickCombination::word(WickWord::from(WickGroup::single(Insertion::new(2, z))));
    println!("Theta {f} = {}", theta(&f)?);

    let origin = WickGroup::single(Insertion::new(1, ComplexScalar::zero()));
    let omega1 = WickCombination::word(WickWord::from(origin.clone()));
    println!("<:[1,0]:, :[1,0]:> = {}", state_inner(&omega1, &omega1)?);
    println!("disc series agrees: {}", disc_series_inner(&origin, &origin)?);

    let mut rng = random::rng(1);
    let mut states = vec![WickCombination::unit(), omega1, f];
    states.extend((0..5).map(|_| random::wick_combination(&mut rng, 2, 3, 2)));
    let report = gram(&states)?;
    let verdict = psd_check(&report, 1e-10)?;
    println!("Gram size {}, hermiticity defect {:e}", report.size(), report.hermiticity_defect);
    println!("eigenvalues {:?}", report.eigenvalues);
    println!("positive semidefinite: {} (threshold {:e})", verdict.positive, verdict.threshold);
    Ok(())
}
