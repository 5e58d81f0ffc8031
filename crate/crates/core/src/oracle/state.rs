use std::collections::BTreeMap;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::SectorBasis;
use crate::error::{Error, Result};

/// Eigenvalues of the reduced density matrix above `-CLIP` are treated as
/// rounding noise and set to zero.
const CLIP: f64 = 1e-12;

/// Pure state expanded on a sector basis.
#[derive(Debug, Clone)]
pub struct SectorState {
    basis: Arc<SectorBasis>,
    amplitudes: DVector<Complex64>,
}

impl SectorState {
    pub fn new(basis: Arc<SectorBasis>, amplitudes: DVector<Complex64>) -> Self {
        assert_eq!(basis.len(), amplitudes.len());
        Self { basis, amplitudes }
    }

    pub fn basis(&self) -> &SectorBasis {
        &self.basis
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }
}

/// Reduced density matrix of the first `cut` dots, restricted to the
/// configurations of those dots that carry amplitude (all other rows and
/// columns vanish).
pub fn reduced_density_matrix(state: &SectorState, cut: u32) -> DMatrix<Complex64> {
    let basis = state.basis();
    let n = basis.dots();
    assert!(cut <= n, "cut {cut} exceeds {n} dots");
    let rest = n - cut;
    let rest_mask = if rest == 0 { 0 } else { (1u64 << rest) - 1 };

    let mut rows = BTreeMap::new();
    let mut cols = BTreeMap::new();
    for &s in basis.states() {
        let next = rows.len();
        rows.entry(s >> rest).or_insert(next);
        let next = cols.len();
        cols.entry(s & rest_mask).or_insert(next);
    }
    let mut psi = DMatrix::<Complex64>::zeros(rows.len(), cols.len());
    for (&s, &amp) in basis.states().iter().zip(state.amplitudes().iter()) {
        psi[(rows[&(s >> rest)], cols[&(s & rest_mask)])] = amp;
    }
    &psi * psi.adjoint()
}

/// Eigenvalues of the reduced density matrix of the first `cut` dots, in
/// descending order.
pub fn reduced_spectrum(state: &SectorState, cut: u32) -> Result<Vec<f64>> {
    let rho = reduced_density_matrix(state, cut);
    let dim = rho.nrows();
    let eigen = SymmetricEigen::try_new(rho, f64::EPSILON, 100_000).ok_or(Error::Eigensolver(dim))?;
    let mut values: Vec<f64> = eigen
        .eigenvalues
        .iter()
        .map(|&x| if x < 0.0 && x > -CLIP { 0.0 } else { x })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Von Neumann entropy in ebits between the first `cut` dots and the rest.
pub fn reduced_entropy(state: &SectorState, cut: u32) -> Result<f64> {
    let entropy: f64 = reduced_spectrum(state, cut)?
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum();
    Ok(entropy.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{SectorHamiltonian, SectorPropagator};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn propagator(n: u32, m: u32) -> SectorPropagator {
        SectorHamiltonian::new(SectorBasis::new(n, m).unwrap())
            .propagator()
            .unwrap()
    }

    #[test]
    fn product_state_has_no_entropy() {
        let s = propagator(6, 3).evolve(0.0);
        for cut in 0..=6 {
            assert!(reduced_entropy(&s, cut).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn bell_state() {
        let s = propagator(2, 1).evolve(PI / 4.0);
        assert_abs_diff_eq!(reduced_entropy(&s, 1).unwrap(), 1.0, epsilon = 1e-12);
        let rho = reduced_density_matrix(&s, 1);
        assert_abs_diff_eq!(rho.trace().re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn reduced_spectra_have_unit_trace() {
        let s = propagator(8, 3).evolve(0.77);
        for cut in 0..=8 {
            let a = reduced_spectrum(&s, cut).unwrap();
            let total: f64 = a.iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        }
        let left = reduced_entropy(&s, 3).unwrap();
        assert!(left > 0.1);
    }
}
