//! Compact formulas for a single excitation (`M = 1`), where the spectrum is
//! `(1 - P_1, P_1)` with `P_1 = 4(N-1)/N^2 * sin^2(N kt / 2)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

fn require_pair(name: &'static str, dots: u32) -> Result<()> {
    if dots < 2 {
        return Err(Error::TooFewDots(name, 2));
    }
    Ok(())
}

fn amplitude(dots: u32) -> f64 {
    let n = f64::from(dots);
    4.0 * (n - 1.0) / (n * n)
}

/// Weight `P_1` of the single-excitation spectrum.
pub fn p1_single_excitation(dots: u32, kt: f64) -> Result<f64> {
    require_pair("p1_single_excitation", dots)?;
    let s = (0.5 * f64::from(dots) * kt).sin();
    Ok(amplitude(dots) * s * s)
}

/// `dE/d(kt)` for one excitation,
/// `2(N-1)/N sin(N kt) log2[N^2/(4(N-1)) csc^2(N kt/2) - 1]`.
///
/// Returns 0 where the expression is an indeterminate `0 * inf` (the
/// entropy is stationary there).
pub fn entanglement_rate_m1(dots: u32, kt: f64) -> Result<f64> {
    require_pair("entanglement_rate_m1", dots)?;
    let n = f64::from(dots);
    let p1 = p1_single_excitation(dots, kt)?;
    if p1 <= 0.0 || p1 >= 1.0 {
        return Ok(0.0);
    }
    // 1/P_1 - 1 equals the csc^2 form of the log argument
    let rate = 2.0 * (n - 1.0) / n * (n * kt).sin() * (1.0 / p1 - 1.0).log2();
    Ok(if rate.is_finite() { rate } else { 0.0 })
}

/// First time in the period at which `P_0 = P_1 = 1/2`; `None` when no such
/// time exists (more than six dots).
pub fn mes_time_m1(dots: u32) -> Result<Option<f64>> {
    require_pair("mes_time_m1", dots)?;
    let n = f64::from(dots);
    let csc_arg = 2.0 / n * (2.0 * (n - 1.0)).sqrt();
    if csc_arg < 1.0 {
        return Ok(None);
    }
    Ok(Some(2.0 / n * (1.0 / csc_arg).asin()))
}

/// Entropy at `kt = pi/N`,
/// `2/N^2 [N^2 log2 N - (N-2)^2 log2(N-2) - 2(N-1) log2(4(N-1))]`.
///
/// This is the global maximum only above six dots.
pub fn peak_entropy_m1(dots: u32) -> Result<f64> {
    require_pair("peak_entropy_m1", dots)?;
    let n = f64::from(dots);
    let xlog = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    let e = 2.0 / (n * n)
        * (n * n * n.log2() - (n - 2.0) * xlog(n - 2.0) - 2.0 * (n - 1.0) * (4.0 * (n - 1.0)).log2());
    Ok(e.max(0.0))
}

/// Time `pi/N` of the `M = 1` entropy peak above six dots.
pub fn peak_time_m1(dots: u32) -> f64 {
    PI / f64::from(dots)
}
