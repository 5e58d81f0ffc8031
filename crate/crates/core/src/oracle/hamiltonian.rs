use std::sync::Arc;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::{SectorBasis, SectorState};
use crate::error::{Error, Result};

/// Coupling Hamiltonian restricted to one excitation sector, in units of
/// the coupling.
///
/// Each unordered pair of dots contributes `s+_n s-_m + s-_n s+_m`, so the
/// matrix element between two configurations is 1 exactly when they differ
/// by one excitation hopping between two dots.
#[derive(Debug, Clone)]
pub struct SectorHamiltonian {
    basis: Arc<SectorBasis>,
    matrix: DMatrix<f64>,
}

impl SectorHamiltonian {
    pub fn new(basis: SectorBasis) -> Self {
        let dim = basis.len();
        let mut matrix = DMatrix::zeros(dim, dim);
        let sites: Vec<u64> = (0..basis.dots()).map(|i| basis.site_mask(i)).collect();
        for (col, &state) in basis.states().iter().enumerate() {
            for &from in sites.iter().filter(|&&s| state & s != 0) {
                for &to in sites.iter().filter(|&&s| state & s == 0) {
                    let row = basis
                        .index_of(state ^ from ^ to)
                        .expect("hopping conserves the excitation number");
                    matrix[(row, col)] = 1.0;
                }
            }
        }
        Self {
            basis: Arc::new(basis),
            matrix,
        }
    }

    pub fn basis(&self) -> &SectorBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// `<psi|H|psi>`.
    pub fn expectation(&self, state: &SectorState) -> f64 {
        let psi = state.amplitudes();
        let h_psi = self.matrix.map(|x| Complex64::new(x, 0.0)) * psi;
        psi.dotc(&h_psi).re
    }

    /// Diagonalizes the matrix once so that many times can be evaluated.
    pub fn propagator(&self) -> Result<SectorPropagator> {
        let dim = self.matrix.nrows();
        let eigen = SymmetricEigen::try_new(self.matrix.clone(), f64::EPSILON, 100_000)
            .ok_or(Error::Eigensolver(dim))?;
        let start = self
            .basis
            .index_of(self.basis.initial_state())
            .expect("initial state lies in the sector");
        let overlaps = eigen.eigenvectors.row(start).transpose();
        Ok(SectorPropagator {
            basis: Arc::clone(&self.basis),
            energies: eigen.eigenvalues,
            eigenvectors: eigen.eigenvectors,
            overlaps,
        })
    }
}

/// Eigendecomposition of a sector Hamiltonian together with the overlaps of
/// the initial product state on each eigenvector.
#[derive(Debug, Clone)]
pub struct SectorPropagator {
    basis: Arc<SectorBasis>,
    energies: DVector<f64>,
    eigenvectors: DMatrix<f64>,
    overlaps: DVector<f64>,
}

impl SectorPropagator {
    /// Eigenvalues in units of the coupling, unsorted.
    pub fn energies(&self) -> &DVector<f64> {
        &self.energies
    }

    /// `exp(-i H kt) |1..1 0..0>`.
    pub fn evolve(&self, kt: f64) -> SectorState {
        let (sin, cos): (Vec<f64>, Vec<f64>) = self
            .energies
            .iter()
            .map(|&e| (e * kt).sin_cos())
            .unzip();
        let re = DVector::from_iterator(
            self.overlaps.len(),
            self.overlaps.iter().zip(&cos).map(|(o, c)| o * c),
        );
        let im = DVector::from_iterator(
            self.overlaps.len(),
            self.overlaps.iter().zip(&sin).map(|(o, s)| -o * s),
        );
        let re = &self.eigenvectors * re;
        let im = &self.eigenvectors * im;
        let amplitudes = re.zip_map(&im, Complex64::new);
        SectorState::new(Arc::clone(&self.basis), amplitudes)
    }
}

/// One-shot evolution of the initial product state under `h`.
pub fn evolve(h: &SectorHamiltonian, kt: f64) -> Result<SectorState> {
    if !kt.is_finite() {
        return Err(Error::NonFiniteTime(kt));
    }
    Ok(h.propagator()?.evolve(kt))
}
