//! Ladder operators from contour integrals, checked against their algebraic action.

use freeboson::algebra::{Insertion, WickGroup};
use freeboson::fock::{contour_alpha_adaptive, contour_commutator, FockIndex};
use freeboson::{ComplexScalar, Result};

fn main() -> Result<()> {
    let group = WickGroup::single(Insertion::new(1, ComplexScalar::rational(1, 4)));
    for m in [-1, 1, 2] {
        let check = contour_alpha_adaptive(m, &group, 0.6, 1e-12, 1024)?;
        let omega = check.probes.iter().position(FockIndex::is_vacuum).unwrap_or(0);
        println!(
            "alpha_{m}: {} nodes, <Omega, .> = {:.12}, max discrepancy {:.1e}",
            check.nodes, check.quadrature[omega], check.discrepancy
        );
    }
    for (m, n) in [(1, -1), (3, -3), (2, -1)] {
        let c = contour_commutator(m, n, 0.3, 0.7, 128)?;
        println!("<Omega, [alpha_{m}, alpha_{n}] Omega> = {c:.10}");
    }
    Ok(())
}
