//! Maximum-entanglement searches and the surveys built on them.

mod fit;
mod search;
mod sweep;

pub use fit::{critical_n, fit_inverse_linear, least_squares_line, InverseLinearFit, LineFit};
pub use search::{find_max, find_max_in_table, MaxEntanglementRecord, SearchOptions};
pub use sweep::{sweep_over_m, sweep_over_n, ExcitationSpec};

use std::f64::consts::PI;

use crate::closed_form::ModelConfig;
use crate::error::{Error, Result};

/// Period of the entanglement evolution: `2 pi / N` for a single excitation
/// (or a single hole), otherwise `pi` for even `N` and `2 pi` for odd `N`.
pub fn period(config: ModelConfig) -> Result<f64> {
    match config.reduced_excitations() {
        0 => Err(Error::NoDynamics {
            dots: config.dots(),
            excitations: config.excitations(),
        }),
        1 => Ok(2.0 * PI / f64::from(config.dots())),
        _ if config.dots().is_multiple_of(2) => Ok(PI),
        _ => Ok(2.0 * PI),
    }
}
