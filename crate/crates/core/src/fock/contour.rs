//! Contour-integral definition of the ladder operators, evaluated with the
//! trapezoidal rule on circles and compared against the algebraic action.
//!
//! `alpha_m nu(F) = sqrt2 \oint (dz / 2 pi) z^m nu([1, z] F)` for a contour
//! enclosing every point of `F`.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rayon::prelude::*;

use super::{fock_inner, ladder, wick_group_to_fock, wick_origin_to_fock, FockIndex};
use crate::algebra::{Insertion, LinearCombination, WickGroup, WickWord};
use crate::correlator::kernel;
use crate::error::{Error, Module, Result};
use crate::hilbert::{state_inner, StateExpression};
use crate::scalar::ComplexScalar;

/// Probes cover every Fock monomial up to this level by default.
pub const DEFAULT_PROBE_LEVEL: u32 = 3;

const START_NODES: usize = 256;

/// Quadrature against algebraic coefficients on a set of probe states.
#[derive(Clone, Debug)]
pub struct ContourCheck {
    pub nodes: usize,
    pub probes: Vec<FockIndex>,
    /// `(nu(probe), alpha_m nu(G))` from the contour integral.
    pub quadrature: Vec<Complex64>,
    /// The same coefficients from the ladder action on the series of `G`.
    pub ladder: Vec<Complex64>,
    pub discrepancy: f64,
}

/// All Fock monomials of level at most `max_level`, in index order.
pub(crate) fn indices_up_to(max_level: u32) -> Vec<FockIndex> {
    fn go(mode: u32, budget: u32, current: &mut Vec<u32>, out: &mut Vec<FockIndex>) {
        out.push(FockIndex::from_orders(current).expect("positive modes"));
        for m in mode..=budget {
            current.push(m);
            go(m, budget - m, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max_level, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn circle(radius: f64, nodes: usize) -> impl Iterator<Item = Complex64> {
    (0..nodes).map(move |k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / nodes as f64))
}

fn check_nodes(nodes: usize) -> Result<()> {
    if nodes < 2 || !nodes.is_power_of_two() {
        return Err(Error::domain(Module::Fock, format!("node count {nodes} is not a power of two >= 2")));
    }
    Ok(())
}

fn probe_state(index: &FockIndex) -> StateExpression {
    let orders = index.orders();
    if orders.is_empty() {
        return StateExpression::unit();
    }
    let group = WickGroup::at_point(&orders, &ComplexScalar::zero()).expect("positive orders");
    LinearCombination::word(WickWord::from(group))
}

/// `nu(probe)` is an origin Wick state, so its Fock vector is known exactly.
fn probe_vector(index: &FockIndex) -> super::FockVector {
    wick_origin_to_fock(&index.orders()).expect("positive orders")
}

/// Compare `(nu(P), alpha_m nu(:G:))` from an `nodes`-point trapezoidal rule
/// on `|z| = radius` with the ladder action, over the given probes.
pub fn contour_alpha_check_with_probes(
    m: i64,
    group: &WickGroup,
    radius: f64,
    nodes: usize,
    probes: &[FockIndex],
) -> Result<ContourCheck> {
    check_nodes(nodes)?;
    let inner_radius = group.as_slice().iter().map(|i| i.point().abs()).fold(0.0, f64::max);
    if !(radius > inner_radius && radius < 1.0) {
        return Err(Error::domain(
            Module::Fock,
            format!("contour radius {radius} must lie strictly between {inner_radius} and 1"),
        ));
    }

    let max_probe = probes.iter().map(FockIndex::level).max().unwrap_or(0) as i64;
    let max_order = group.as_slice().iter().map(|i| i.order()).max().unwrap_or(1) as i64;
    let level = (max_probe + m.max(0)).max(max_order) as u32;
    let image = ladder(&wick_group_to_fock(group, level)?, m);
    let ladder_side: Vec<Complex64> = probes
        .iter()
        .map(|p| fock_inner(&probe_vector(p), &image).to_complex64())
        .collect();

    let states: Vec<StateExpression> = probes.iter().map(probe_state).collect();
    let points: Vec<Complex64> = circle(radius, nodes).collect();
    let per_node = points
        .par_iter()
        .map(|&z| -> Result<Vec<Complex64>> {
            let zs = ComplexScalar::from(z);
            let mut groups = vec![WickGroup::single(Insertion::new(1, zs)), group.clone()];
            groups.sort();
            let word: StateExpression = LinearCombination::word(WickWord::new(groups));
            let weight = z.powi(m as i32 + 1);
            states
                .iter()
                .map(|p| Ok(state_inner(p, &word)?.to_complex64() * weight))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let scale = Complex64::new(0.0, SQRT_2 / nodes as f64);
    let quadrature: Vec<Complex64> = (0..probes.len())
        .map(|k| per_node.iter().map(|row| row[k]).sum::<Complex64>() * scale)
        .collect();

    let discrepancy = quadrature
        .iter()
        .zip(&ladder_side)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    Ok(ContourCheck {
        nodes,
        probes: probes.to_vec(),
        quadrature,
        ladder: ladder_side,
        discrepancy,
    })
}

/// [`contour_alpha_check_with_probes`] over every monomial of level at most
/// [`DEFAULT_PROBE_LEVEL`].
pub fn contour_alpha_check(m: i64, group: &WickGroup, radius: f64, nodes: usize) -> Result<ContourCheck> {
    contour_alpha_check_with_probes(m, group, radius, nodes, &indices_up_to(DEFAULT_PROBE_LEVEL))
}

/// Double the node count from 256 until two successive quadratures agree
/// to `tol`, stopping at `max_nodes`.
pub fn contour_alpha_adaptive(
    m: i64,
    group: &WickGroup,
    radius: f64,
    tol: f64,
    max_nodes: usize,
) -> Result<ContourCheck> {
    let mut nodes = START_NODES.min(max_nodes);
    let mut current = contour_alpha_check(m, group, radius, nodes)?;
    while nodes * 2 <= max_nodes {
        nodes *= 2;
        let next = contour_alpha_check(m, group, radius, nodes)?;
        let change = next
            .quadrature
            .iter()
            .zip(&current.quadrature)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        current = next;
        if change <= tol {
            break;
        }
    }
    Ok(current)
}

/// `<Omega, [alpha_m, alpha_n] Omega>` by nested trapezoidal quadrature,
/// the operator applied first integrated on the inner circle.
pub fn contour_commutator(m: i64, n: i64, inner_radius: f64, outer_radius: f64, nodes: usize) -> Result<Complex64> {
    check_nodes(nodes)?;
    if !(0.0 < inner_radius && inner_radius < outer_radius && outer_radius < 1.0) {
        return Err(Error::domain(
            Module::Fock,
            format!("need 0 < {inner_radius} < {outer_radius} < 1 for nested contours"),
        ));
    }
    let inner_pts: Vec<Complex64> = circle(inner_radius, nodes).collect();
    let outer_pts: Vec<Complex64> = circle(outer_radius, nodes).collect();
    // <Omega, nu([1, z][1, w])> = C(1, z, 1, w)
    let two_point = |z: Complex64, w: Complex64| -> Result<Complex64> {
        Ok(kernel(1, &ComplexScalar::from(z), 1, &ComplexScalar::from(w))?.to_complex64())
    };
    let ordered = |outer_exp: i64, inner_exp: i64| -> Result<Complex64> {
        let rows = outer_pts
            .par_iter()
            .map(|&z| -> Result<Complex64> {
                let mut acc = Complex64::new(0.0, 0.0);
                for &w in &inner_pts {
                    acc += z.powi(outer_exp as i32 + 1) * w.powi(inner_exp as i32 + 1) * two_point(z, w)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let scale = Complex64::new(0.0, 1.0 / nodes as f64).powi(2) * 2.0;
        Ok(rows.into_iter().sum::<Complex64>() * scale)
    };
    Ok(ordered(m, n)? - ordered(n, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quarter_group() -> WickGroup {
        WickGroup::single(Insertion::new(1, ComplexScalar::rational(1, 4)))
    }

    #[test]
    fn probe_enumeration() {
        let probes = indices_up_to(3);
        assert_eq!(probes.len(), 7);
        assert!(probes.contains(&FockIndex::vacuum()));
    }

    #[test]
    fn annihilating_one_field_leaves_vacuum() {
        let check = contour_alpha_check(1, &quarter_group(), 0.6, 256).unwrap();
        assert!(check.discrepancy < 1e-10, "{}", check.discrepancy);
        let omega = check.probes.iter().position(FockIndex::is_vacuum).unwrap();
        let expected = Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2);
        assert!((check.quadrature[omega] - expected).norm() < 1e-10);
    }

    #[test]
    fn creation_and_higher_modes() {
        let g = WickGroup::new(vec![
            Insertion::new(1, ComplexScalar::rational(1, 5)),
            Insertion::new(2, ComplexScalar::rational(-1, 6)),
        ])
        .unwrap();
        for m in [-2, -1, 1, 2, 3] {
            let check = contour_alpha_check(m, &g, 0.55, 256).unwrap();
            assert!(check.discrepancy < 1e-10, "m = {m}: {}", check.discrepancy);
        }
    }

    #[test]
    fn radius_and_nodes_are_validated() {
        assert!(contour_alpha_check(1, &quarter_group(), 0.2, 256).is_err());
        assert!(contour_alpha_check(1, &quarter_group(), 1.2, 256).is_err());
        assert!(contour_alpha_check(1, &quarter_group(), 0.6, 300).is_err());
    }

    #[test]
    fn vacuum_commutator() {
        let c = contour_commutator(1, -1, 0.3, 0.7, 128).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-8, "{c}");
        let c = contour_commutator(2, -2, 0.3, 0.7, 128).unwrap();
        assert!((c - Complex64::new(2.0, 0.0)).norm() < 1e-8, "{c}");
        let c = contour_commutator(2, -1, 0.3, 0.7, 128).unwrap();
        assert!(c.norm() < 1e-8, "{c}");
    }
}
