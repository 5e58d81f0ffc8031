use std::fmt;
use std::str::FromStr;

use super::{find_max, MaxEntanglementRecord, SearchOptions};
use crate::closed_form::ModelConfig;
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Excitation count used at each size of an `N` sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcitationSpec {
    Fixed(u32),
    /// `M = floor(N / 2)`.
    Half,
}

impl ExcitationSpec {
    pub fn for_dots(self, dots: u32) -> u32 {
        match self {
            ExcitationSpec::Fixed(m) => m,
            ExcitationSpec::Half => dots / 2,
        }
    }
}

impl FromStr for ExcitationSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("half") {
            return Ok(ExcitationSpec::Half);
        }
        s.parse()
            .map(ExcitationSpec::Fixed)
            .map_err(|_| format!("expected an excitation count or `half`, got `{s}`"))
    }
}

impl fmt::Display for ExcitationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExcitationSpec::Fixed(m) => write!(f, "{m}"),
            ExcitationSpec::Half => f.write_str("half"),
        }
    }
}

/// Maxima for `M = 1..N-1` at fixed `N`, ordered by `M`.
pub fn sweep_over_m(
    dots: u32,
    options: SearchOptions,
    exec: Execution,
) -> Result<Vec<MaxEntanglementRecord>> {
    if dots < 2 {
        return Err(Error::TooFewDots("sweep over M", 2));
    }
    let configs = (1..dots)
        .map(|m| ModelConfig::new(dots, m))
        .collect::<Result<Vec<_>>>()?;
    exec.try_map(&configs, |&c| find_max(c, options))
}

/// Maxima over the listed sizes, in the order given.
pub fn sweep_over_n(
    excitations: ExcitationSpec,
    dots: &[u32],
    options: SearchOptions,
    exec: Execution,
) -> Result<Vec<MaxEntanglementRecord>> {
    let configs = dots
        .iter()
        .map(|&n| {
            let m = excitations.for_dots(n);
            if n < 2 || m == 0 || n <= m {
                return Err(Error::InvalidConfig { dots: n, excitations: m });
            }
            ModelConfig::new(n, m)
        })
        .collect::<Result<Vec<_>>>()?;
    exec.try_map(&configs, |&c| find_max(c, options))
}
