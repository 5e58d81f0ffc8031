//! Exact entanglement dynamics of the equivalent-neighbor (Lipkin-Meshkov-Glick
//! type) quantum-dot spin model.
//!
//! * [`closed_form`] evaluates the analytical Schmidt spectrum and entropy.
//! * [`oracle`] recomputes the same entropy by exact diagonalization.
//! * [`analysis`] searches for entanglement maxima and sweeps system sizes.
//! * [`verify`] cross-checks the two routes over many sizes and times.

pub mod analysis;
pub mod closed_form;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod oracle;
pub mod verify;

pub use closed_form::{
    entanglement, mes_entropy, relative_entanglement, AmplitudeTable, EntanglementTrace,
    ModelConfig, SchmidtSpectrum,
};
pub use combinatorics::ExactRational;
pub use error::{Error, Result};
pub use exec::Execution;
