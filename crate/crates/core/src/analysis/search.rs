use serde::Serialize;

use super::period;
use crate::closed_form::{entanglement, mes_entropy, AmplitudeTable, ModelConfig, SchmidtSpectrum};
use crate::error::{Error, Result};

/// Grid local maxima that get refined.
const CANDIDATES: usize = 8;
/// Refined maxima closer than this are ties, resolved toward smaller `kt`.
const TIE_TOLERANCE: f64 = 1e-12;
/// Half-width of the bracket handed to the derivative polish.
const POLISH_HALF_WIDTH: f64 = 1e-6;
const MAX_ITERATIONS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub grid_points: usize,
    pub refine_tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid_points: 4096,
            refine_tol: 1e-12,
        }
    }
}

impl SearchOptions {
    fn validate(&self) -> Result<()> {
        if self.grid_points < 3 {
            return Err(Error::InvalidSearch("grid needs at least 3 points"));
        }
        if !(self.refine_tol.is_finite() && self.refine_tol > 0.0) {
            return Err(Error::InvalidSearch("refinement tolerance must be positive"));
        }
        Ok(())
    }
}

/// Largest entanglement reached during one period.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxEntanglementRecord {
    pub config: ModelConfig,
    pub kt_star: f64,
    #[serde(rename = "E_max")]
    pub max_entropy: f64,
    #[serde(rename = "e_max")]
    pub relative_max: f64,
    #[serde(rename = "E_MES")]
    pub mes_entropy: f64,
    pub spectrum_at_max: SchmidtSpectrum,
}

pub fn find_max(config: ModelConfig, options: SearchOptions) -> Result<MaxEntanglementRecord> {
    find_max_in_table(&AmplitudeTable::new(config), options)
}

/// Uniform scan of one period, golden-section refinement of the best grid
/// peaks, then bisection on the analytic derivative to pin the location.
pub fn find_max_in_table(
    table: &AmplitudeTable,
    options: SearchOptions,
) -> Result<MaxEntanglementRecord> {
    options.validate()?;
    let config = table.config();
    let period = period(config)?;
    let n = options.grid_points;
    let step = period / n as f64;
    let entropy = |kt: f64| table.entropy_at(kt);

    let grid = (0..n)
        .map(|i| entropy(step * i as f64))
        .collect::<Result<Vec<_>>>()?;

    // cyclic local maxima, best first, grid order among equals
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let prev = grid[(i + n - 1) % n];
            let next = grid[(i + 1) % n];
            grid[i] >= prev && grid[i] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| grid[b].total_cmp(&grid[a]).then(a.cmp(&b)));
    peaks.truncate(CANDIDATES);

    let mut best: Option<(f64, f64)> = None;
    for &i in &peaks {
        let centre = step * i as f64;
        let kt = refine(table, centre - step, centre + step, options.refine_tol)?;
        let kt = wrap(kt, period);
        let e = entropy(kt)?;
        best = match best {
            None => Some((kt, e)),
            Some((bkt, be)) => {
                if e > be + TIE_TOLERANCE || ((e - be).abs() <= TIE_TOLERANCE && kt < bkt) {
                    Some((kt, e))
                } else {
                    Some((bkt, be))
                }
            }
        };
    }
    let (kt_star, _) = best.expect("a periodic grid has at least one local maximum");

    let spectrum = table.schmidt_spectrum(kt_star)?;
    let mes = mes_entropy(config);
    // rounding can push a maximally entangled state a few ulps past the bound
    let max_entropy = entanglement(&spectrum).min(mes);
    Ok(MaxEntanglementRecord {
        config,
        kt_star,
        max_entropy,
        relative_max: max_entropy / mes,
        mes_entropy: mes,
        spectrum_at_max: spectrum,
    })
}

fn wrap(kt: f64, period: f64) -> f64 {
    let w = kt.rem_euclid(period);
    if w >= period {
        0.0
    } else {
        w
    }
}

fn refine(table: &AmplitudeTable, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let golden = golden_section_max(|kt| table.entropy_at(kt), lo, hi, tol)?;

    // Near a quadratic top the entropy is flat to rounding over ~1e-8, so
    // the golden-section point is only that accurate. The derivative still
    // changes sign cleanly there.
    let a = golden - POLISH_HALF_WIDTH;
    let b = golden + POLISH_HALF_WIDTH;
    if table.entropy_rate(a) > 0.0 && table.entropy_rate(b) < 0.0 {
        let polished = bisect_decreasing_root(|kt| table.entropy_rate(kt), a, b, tol);
        if table.entropy_at(polished)? >= table.entropy_at(golden)? - TIE_TOLERANCE {
            return Ok(polished);
        }
    }
    Ok(golden)
}

/// Maximizer of a unimodal function on `[lo, hi]`, to within `tol`.
pub(crate) fn golden_section_max<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..MAX_ITERATIONS {
        if hi - lo <= tol {
            break;
        }
        // ties keep the left part
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 >= f2 { x1 } else { x2 })
}

/// Root of `g` on `[lo, hi]` given `g(lo) > 0 > g(hi)`.
fn bisect_decreasing_root<G: Fn(f64) -> f64>(g: G, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{mes_time_m1, peak_entropy_m1};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn max_of(n: u32, m: u32) -> MaxEntanglementRecord {
        find_max(ModelConfig::new(n, m).unwrap(), SearchOptions::default()).unwrap()
    }

    #[test]
    fn golden_section_on_parabola() {
        let x = golden_section_max(|x| Ok(-(x - 0.3) * (x - 0.3)), 0.0, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-7);
    }

    #[test]
    fn single_excitation_below_critical_size() {
        let r = max_of(5, 1);
        assert_abs_diff_eq!(r.max_entropy, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.kt_star, mes_time_m1(5).unwrap().unwrap(), epsilon = 1e-8);
    }

    #[test]
    fn single_excitation_above_critical_size() {
        let r = max_of(7, 1);
        assert_abs_diff_eq!(r.max_entropy, 0.9997, epsilon = 5e-5);
        assert_abs_diff_eq!(r.max_entropy, peak_entropy_m1(7).unwrap(), epsilon = 1e-9);
        assert_abs_diff_eq!(r.kt_star, PI / 7.0, epsilon = 1e-8);
    }

    #[test]
    fn five_dots_two_excitations() {
        let r = max_of(5, 2);
        assert!(r.relative_max <= 1.0);
        let deficit = 1.0 - r.relative_max;
        assert!(deficit > 1e-6 && deficit < 1e-4, "deficit {deficit}");
    }

    #[test]
    fn ties_resolve_to_earliest_time() {
        // E(kt) = E(period - kt), so every off-centre peak has a mirror image
        for (n, m) in [(7, 3), (5, 2), (6, 1), (9, 2)] {
            let r = max_of(n, m);
            let p = period(r.config).unwrap();
            assert!(r.kt_star <= p / 2.0 + 1e-9, "N={n} M={m} kt*={}", r.kt_star);
        }
    }

    #[test]
    fn result_is_a_certified_local_maximum() {
        for (n, m) in [(4, 1), (8, 3), (11, 5), (12, 2)] {
            let r = max_of(n, m);
            let t = AmplitudeTable::new(r.config);
            let h = 10.0 * SearchOptions::default().refine_tol;
            for kt in [r.kt_star - h, r.kt_star + h] {
                assert!(t.entropy_at(kt).unwrap() <= r.max_entropy + 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_options() {
        let c = ModelConfig::new(5, 2).unwrap();
        let bad = SearchOptions { grid_points: 2, refine_tol: 1e-12 };
        assert!(find_max(c, bad).is_err());
        let bad = SearchOptions { grid_points: 64, refine_tol: 0.0 };
        assert!(find_max(c, bad).is_err());
        assert!(find_max(ModelConfig::new(5, 0).unwrap(), SearchOptions::default()).is_err());
    }
}
