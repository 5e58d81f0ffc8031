//! Brute-force reference path: the coupling Hamiltonian written out in the
//! fixed-excitation sector, dense eigendecomposition, explicit time
//! evolution, and the von Neumann entropy of the reduced density matrix.
//!
//! Nothing here depends on the closed form; only the exact combinatorics
//! are shared.

mod basis;
mod hamiltonian;
mod state;

pub use basis::{SectorBasis, DEFAULT_MAX_DOTS};
pub use hamiltonian::{evolve, SectorHamiltonian, SectorPropagator};
pub use state::{reduced_density_matrix, reduced_entropy, reduced_spectrum, SectorState};

use crate::error::Result;

/// Entanglement between the first `M` dots and the rest after evolving
/// `|1..1 0..0>` for a time `kt`.
pub fn oracle_entanglement(dots: u32, excitations: u32, kt: f64) -> Result<f64> {
    let basis = SectorBasis::new(dots, excitations)?;
    let propagator = SectorHamiltonian::new(basis).propagator()?;
    reduced_entropy(&propagator.evolve(kt), excitations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn seven_dots_single_excitation_peak() {
        assert_abs_diff_eq!(oracle_entanglement(7, 1, PI / 7.0).unwrap(), 0.9997, epsilon = 5e-5);
    }

    #[test]
    fn zero_time_is_unentangled() {
        for (n, m) in [(2, 1), (5, 2), (8, 4), (6, 0), (6, 6)] {
            assert!(oracle_entanglement(n, m, 0.0).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn five_dots_two_excitations_at_pi() {
        // -(1/25 log2 1/25 + 24/225 log2 24/225 + 192/225 log2 192/225)
        let expected = -[1.0 / 25.0, 24.0 / 225.0, 192.0 / 225.0]
            .iter()
            .map(|p: &f64| p * p.log2())
            .sum::<f64>();
        assert_abs_diff_eq!(oracle_entanglement(5, 2, PI).unwrap(), expected, epsilon = 1e-12);
    }
}
