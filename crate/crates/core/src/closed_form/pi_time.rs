//! Coefficient moduli at `kt = pi` for odd dot counts,
//! `|C_m| = 2^m m! (N - 2M') (N - 2m - 2)!! / N!!`.
//!
//! Exposed for every odd `N`, including sizes below the large-`N` regime
//! where the odd-`N` maximum sits at `kt = pi`. `M` above `N/2` uses `M'`,
//! since the moduli are symmetric under `M -> N - M`.

use num_bigint::BigInt;

use crate::closed_form::ModelConfig;
use crate::combinatorics::{binomial, double_factorial, factorial, ExactRational};
use crate::error::{Error, Result};

pub fn pi_time_magnitudes_exact(config: ModelConfig) -> Result<Vec<ExactRational>> {
    let n = i64::from(config.dots());
    if n % 2 == 0 {
        return Err(Error::EvenDots(config.dots()));
    }
    let reduced = i64::from(config.reduced_excitations());
    let denominator = double_factorial(n)?;
    (0..=reduced)
        .map(|m| {
            let numerator = (BigInt::from(1) << m as usize)
                * factorial(m as u64)
                * BigInt::from(n - 2 * reduced)
                * double_factorial(n - 2 * m - 2)?;
            Ok(ExactRational::new(numerator, denominator.clone()))
        })
        .collect()
}

pub fn pi_time_magnitudes(config: ModelConfig) -> Result<Vec<f64>> {
    Ok(pi_time_magnitudes_exact(config)?
        .iter()
        .map(ExactRational::to_f64)
        .collect())
}

/// Schmidt weights `C(M, m) C(N - M, m) |C_m(pi)|^2` in exact arithmetic.
pub fn pi_time_weights_exact(config: ModelConfig) -> Result<Vec<ExactRational>> {
    let n = i64::from(config.dots());
    let m_exc = i64::from(config.excitations());
    pi_time_magnitudes_exact(config)?
        .into_iter()
        .enumerate()
        .map(|(m, c)| {
            let m = m as i64;
            let multiplicity = binomial(m_exc, m)? * binomial(n - m_exc, m)?;
            Ok(ExactRational::from_integer(multiplicity) * &c * &c)
        })
        .collect()
}
