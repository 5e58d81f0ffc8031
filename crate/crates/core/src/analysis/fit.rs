use serde::Serialize;

use super::{sweep_over_n, ExcitationSpec, SearchOptions};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Size beyond which the maximum entanglement at fixed `M` decays
/// monotonically: `2M + 5`, or 6 for a single excitation.
pub fn critical_n(excitations: u32) -> Result<u32> {
    match excitations {
        0 => Err(Error::NoDynamics { dots: 0, excitations: 0 }),
        1 => Ok(6),
        m => Ok(2 * m + 5),
    }
}

/// Ordinary least-squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
}

pub fn least_squares_line(points: &[(f64, f64)]) -> Result<LineFit> {
    if points.len() < 3 {
        return Err(Error::InsufficientPoints(points.len()));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual_rms = (points
        .iter()
        .map(|&(x, y)| (y - slope * x - intercept).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(LineFit {
        slope,
        intercept,
        residual_rms,
    })
}

/// Straight line through `1 / E_max` against `N` above the critical size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InverseLinearFit {
    pub excitations: u32,
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
    pub domain: Vec<u32>,
    /// `1 / E_max` at each size in `domain`.
    pub inverse_max: Vec<f64>,
}

impl InverseLinearFit {
    pub fn mean_inverse_max(&self) -> f64 {
        self.inverse_max.iter().sum::<f64>() / self.inverse_max.len() as f64
    }
}

pub fn fit_inverse_linear(
    excitations: u32,
    dots: &[u32],
    options: SearchOptions,
    exec: Execution,
) -> Result<InverseLinearFit> {
    let critical = critical_n(excitations)?;
    if let Some(&n) = dots.iter().find(|&&n| n <= critical) {
        return Err(Error::InsideCriticalRegion {
            dots: n,
            excitations,
            critical,
        });
    }
    if dots.len() < 3 {
        return Err(Error::InsufficientPoints(dots.len()));
    }
    let records = sweep_over_n(ExcitationSpec::Fixed(excitations), dots, options, exec)?;
    let inverse_max: Vec<f64> = records.iter().map(|r| 1.0 / r.max_entropy).collect();
    let points: Vec<(f64, f64)> = dots
        .iter()
        .zip(&inverse_max)
        .map(|(&n, &y)| (f64::from(n), y))
        .collect();
    let line = least_squares_line(&points)?;
    Ok(InverseLinearFit {
        excitations,
        slope: line.slope,
        intercept: line.intercept,
        residual_rms: line.residual_rms,
        domain: dots.to_vec(),
        inverse_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn critical_sizes() {
        assert_eq!(critical_n(1).unwrap(), 6);
        assert_eq!(critical_n(2).unwrap(), 9);
        assert_eq!(critical_n(3).unwrap(), 11);
        assert!(critical_n(0).is_err());
    }

    #[test]
    fn exact_line_is_recovered() {
        let pts: Vec<(f64, f64)> = (0..10).map(|i| (i as f64, 2.5 * i as f64 - 1.0)).collect();
        let fit = least_squares_line(&pts).unwrap();
        assert_abs_diff_eq!(fit.slope, 2.5, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.intercept, -1.0, epsilon = 1e-12);
        assert!(fit.residual_rms < 1e-12);
    }

    #[test]
    fn residual_of_known_scatter() {
        // points (0,0), (1,1), (2,0): line y = 1/3, residuals -1/3, 2/3, -1/3
        let fit = least_squares_line(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]).unwrap();
        assert_abs_diff_eq!(fit.slope, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.intercept, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.residual_rms, (6.0f64 / 27.0).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn single_excitation_fit() {
        let ns: Vec<u32> = (8..=40).collect();
        let fit = fit_inverse_linear(1, &ns, SearchOptions::default(), Execution::default()).unwrap();
        assert!(fit.residual_rms < 0.01 * fit.mean_inverse_max());
        assert!(fit.slope > 0.0);
        assert!(fit.inverse_max.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_bad_domains() {
        let o = SearchOptions::default();
        let e = Execution::Sequential;
        assert!(matches!(
            fit_inverse_linear(2, &[8, 9], o, e),
            Err(Error::InsideCriticalRegion { dots: 8, .. })
        ));
        assert_eq!(fit_inverse_linear(2, &[10, 11], o, e), Err(Error::InsufficientPoints(2)));
    }
}
