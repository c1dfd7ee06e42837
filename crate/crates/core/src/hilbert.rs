//! The reflection inner product `<(Theta F) G>` on Wick states in the unit
//! disc, the closed-form disc series, and Gram-matrix positivity checks.

use std::cmp::Ordering;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{binomial, factorial, merge_groups, theta, Insertion, WickCombination, WickGroup, Word};
use crate::correlator::expect_combo;
use crate::error::{Error, Module, Result};
use crate::scalar::ComplexScalar;

/// A vector `nu(F)` written as a combination of Wick words in the unit disc.
pub type StateExpression = WickCombination;

fn in_unit_disc(z: &ComplexScalar) -> bool {
    z.norm_sqr().real_cmp(&ComplexScalar::one()) == Some(Ordering::Less)
}

fn check_in_disc(f: &StateExpression) -> Result<()> {
    for word in f.keys() {
        if let Some(bad) = word.insertions().find(|i| !in_unit_disc(i.point())) {
            return Err(Error::domain(Module::Hilbert, format!("{bad} lies outside the open unit disc")));
        }
    }
    Ok(())
}

fn has_origin(f: &StateExpression) -> bool {
    f.keys().any(|w| w.insertions().any(|i| i.point().is_zero()))
}

/// `<(Theta F) G>`. Every point of `F` must be nonzero.
pub fn inner(f: &StateExpression, g: &StateExpression) -> Result<ComplexScalar> {
    check_in_disc(f)?;
    check_in_disc(g)?;
    if has_origin(f) {
        return Err(Error::domain(
            Module::Hilbert,
            "left argument has a point at 0, where the reflection has a pole",
        ));
    }
    expect_combo(&(&theta(f)? * g))
}

/// The inner product on all of the disc, origin included.
///
/// Uses the reflection route when either side avoids 0 (conjugating if
/// only the right side does), and otherwise merges every word into single
/// Wick groups and sums the closed-form disc series.
pub fn state_inner(f: &StateExpression, g: &StateExpression) -> Result<ComplexScalar> {
    check_in_disc(f)?;
    check_in_disc(g)?;
    if !has_origin(f) {
        return inner(f, g);
    }
    if !has_origin(g) {
        return Ok(inner(g, f)?.conj());
    }
    let left = merged(f)?;
    let right = merged(g)?;
    let mut total = ComplexScalar::zero();
    for (lw, lc) in &left {
        for (rw, rc) in &right {
            let value = match (lw.groups(), rw.groups()) {
                ([], []) => ComplexScalar::one(),
                ([a], [b]) => disc_series_inner(a, b)?,
                _ => ComplexScalar::zero(),
            };
            if !value.is_zero() {
                total = total + lc.conj() * rc * value;
            }
        }
    }
    Ok(total)
}

fn merged(f: &StateExpression) -> Result<StateExpression> {
    let mut out = StateExpression::zero();
    for (w, c) in f {
        for (m, mc) in &merge_groups(w)? {
            out.add_term(c * mc, m.clone());
        }
    }
    Ok(out)
}

/// `d^j/d(zbar)^j d^k/dw^k (1 - zbar w)^{-2}` in closed form.
fn series_derivative(j: u32, k: u32, zbar: &ComplexScalar, w: &ComplexScalar) -> ComplexScalar {
    let u = zbar * w;
    let base = (ComplexScalar::one() - u).inv().expect("|zbar w| < 1");
    let mut total = ComplexScalar::zero();
    for i in 0..=j.min(k) {
        let coeff: BigInt = binomial(j, i) * factorial(k) / factorial(k - i) * factorial(k + 1 + j - i);
        let term = ComplexScalar::from_bigint(&coeff)
            * zbar.powi((k - i) as i64).expect("nonnegative power")
            * w.powi((j - i) as i64).expect("nonnegative power")
            * base.powi((k + j - i + 2) as i64).expect("nonnegative power");
        total = total + term;
    }
    total
}

fn pair_series(left: &Insertion, right: &Insertion) -> ComplexScalar {
    let half = ComplexScalar::rational(1, 2);
    half * series_derivative(left.order() - 1, right.order() - 1, &left.point().conj(), right.point())
}

/// Closed-form `<nu(:left:), nu(:right:)>`: a sum over bijections between the
/// two groups of products of `d^{m-1} d^{l-1} [ (1/2)(1 - zbar w)^{-2} ]`.
/// Zero when the arities differ.
pub fn disc_series_inner(left: &WickGroup, right: &WickGroup) -> Result<ComplexScalar> {
    let (l, r) = (left.as_slice(), right.as_slice());
    if l.len() != r.len() {
        return Ok(ComplexScalar::zero());
    }
    let one = ComplexScalar::one();
    let mut weights = Vec::with_capacity(l.len());
    for a in l {
        let mut row = Vec::with_capacity(r.len());
        for b in r {
            let u = a.point().norm_sqr() * b.point().norm_sqr();
            if u.real_cmp(&one) != Some(Ordering::Less) {
                return Err(Error::domain(
                    Module::Hilbert,
                    format!("disc series diverges for {a} against {b} (|zbar w| >= 1)"),
                ));
            }
            row.push(pair_series(a, b));
        }
        weights.push(row);
    }
    Ok(permanent(&weights))
}

fn permanent(weights: &[Vec<ComplexScalar>]) -> ComplexScalar {
    fn go(weights: &[Vec<ComplexScalar>], row: usize, used: &mut [bool]) -> ComplexScalar {
        if row == weights.len() {
            return ComplexScalar::one();
        }
        let mut total = ComplexScalar::zero();
        for col in 0..used.len() {
            if used[col] {
                continue;
            }
            used[col] = true;
            total = total + &weights[row][col] * &go(weights, row + 1, used);
            used[col] = false;
        }
        total
    }
    go(weights, 0, &mut vec![false; weights.len()])
}

/// A Gram matrix with its float spectrum.
#[derive(Clone, Debug)]
pub struct GramReport {
    pub matrix: Vec<Vec<ComplexScalar>>,
    /// Eigenvalues of the Hermitian part, ascending.
    pub eigenvalues: Vec<f64>,
    /// Matching unit eigenvectors, as columns in eigenvalue order.
    pub eigenvectors: Vec<Vec<Complex<f64>>>,
    /// `max |G_ij - conj(G_ji)|`.
    pub hermiticity_defect: f64,
}

impl GramReport {
    pub fn from_matrix(matrix: Vec<Vec<ComplexScalar>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::domain(Module::Hilbert, "Gram matrix must be square"));
        }
        let mut defect = 0.0f64;
        let float = DMatrix::from_fn(n, n, |i, j| matrix[i][j].to_complex64());
        for i in 0..n {
            for j in 0..n {
                let d = if matrix[i][j].is_exact() && matrix[j][i].is_exact() {
                    (&matrix[i][j] - &matrix[j][i].conj()).abs()
                } else {
                    (float[(i, j)] - float[(j, i)].conj()).norm()
                };
                defect = defect.max(d);
            }
        }
        let hermitian = (&float + float.adjoint()) * Complex::new(0.5, 0.0);
        let (eigenvalues, eigenvectors) = if n == 0 {
            (Vec::new(), Vec::new())
        } else {
            let eig = hermitian.symmetric_eigen();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
            let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
            let vectors = order
                .iter()
                .map(|&k| eig.eigenvectors.column(k).iter().copied().collect())
                .collect();
            (values, vectors)
        };
        Ok(GramReport {
            matrix,
            eigenvalues,
            eigenvectors,
            hermiticity_defect: defect,
        })
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn min_eigenvalue(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    /// Spectral norm of the Hermitian part.
    pub fn norm(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// `G_ij = <nu(s_i), nu(s_j)>`, computed entry by entry.
pub fn gram(states: &[StateExpression]) -> Result<GramReport> {
    let n = states.len();
    let mut matrix = vec![Vec::with_capacity(n); n];
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let values = cells
        .par_iter()
        .map(|&(i, j)| state_inner(&states[i], &states[j]))
        .collect::<Result<Vec<_>>>()?;
    for (&(i, _), v) in cells.iter().zip(values) {
        matrix[i].push(v);
    }
    GramReport::from_matrix(matrix)
}

/// Outcome of a positivity check.
#[derive(Clone, Debug, PartialEq)]
pub struct PsdVerdict {
    pub positive: bool,
    pub min_eigenvalue: Option<f64>,
    /// Eigenvalues above `-threshold` count as nonnegative.
    pub threshold: f64,
    /// Eigenvector of the most negative eigenvalue, when the check fails.
    pub witness: Option<Vec<Complex<f64>>>,
}

/// Positive semidefinite iff the smallest eigenvalue is at least
/// `-tol * ||G||`. Fails with `NotHermitian` past the same tolerance.
pub fn psd_check(report: &GramReport, tol: f64) -> Result<PsdVerdict> {
    let scale = report.norm().max(f64::MIN_POSITIVE);
    if report.hermiticity_defect > tol * scale.max(1.0) {
        return Err(Error::NotHermitian {
            defect: report.hermiticity_defect,
            tolerance: tol * scale.max(1.0),
        });
    }
    let threshold = tol * report.norm();
    let min = report.min_eigenvalue();
    let positive = min.is_none_or(|m| m >= -threshold);
    Ok(PsdVerdict {
        positive,
        min_eigenvalue: min,
        threshold,
        witness: (!positive).then(|| report.eigenvectors[0].clone()),
    })
}
