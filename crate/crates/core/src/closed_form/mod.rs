//! Analytical solution of the equivalent-neighbor model.
//!
//! Starting from `M` excited dots next to `N - M` ground-state dots, the
//! state stays in the span of `M' + 1` symmetric superpositions, where
//! `M' = min(M, N - M)`. Each superposition coefficient is a finite sum of
//! pure phases `exp(i * phase_n * kt)` with exact rational amplitudes, and the
//! Schmidt weights across the excited/unexcited cut are the squared moduli of
//! those coefficients times a binomial multiplicity.
//!
//! Time is always the dimensionless product `kt` of the coupling and the
//! physical time.

mod pi_time;
mod single;

pub use pi_time::{pi_time_magnitudes, pi_time_magnitudes_exact, pi_time_weights_exact};
pub use single::{
    entanglement_rate_m1, mes_time_m1, p1_single_excitation, peak_entropy_m1, peak_time_m1,
};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::combinatorics::{binomial, ExactRational};
use crate::error::{Error, Result};

/// Tolerance on `sum(P_m) - 1` beyond which a spectrum is rejected.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Number of dots `N` and initially excited dots `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModelConfig {
    dots: u32,
    excitations: u32,
}

impl ModelConfig {
    pub fn new(dots: u32, excitations: u32) -> Result<Self> {
        if dots == 0 || excitations > dots {
            return Err(Error::InvalidConfig { dots, excitations });
        }
        Ok(Self { dots, excitations })
    }

    pub fn dots(&self) -> u32 {
        self.dots
    }

    pub fn excitations(&self) -> u32 {
        self.excitations
    }

    /// `M' = min(M, N - M)`, the largest Schmidt index.
    pub fn reduced_excitations(&self) -> u32 {
        self.excitations.min(self.dots - self.excitations)
    }

    /// Number of Schmidt weights, `M' + 1`.
    pub fn schmidt_rank(&self) -> usize {
        self.reduced_excitations() as usize + 1
    }

    /// The configuration with excitations and ground-state dots swapped.
    pub fn complement(&self) -> Self {
        Self {
            dots: self.dots,
            excitations: self.dots - self.excitations,
        }
    }

    pub fn has_dynamics(&self) -> bool {
        self.reduced_excitations() > 0
    }
}

/// Exact amplitudes `b[n][m]` and phase integers of the superposition
/// coefficients for one `(N, M)`.
#[derive(Debug, Clone)]
pub struct AmplitudeTable {
    config: ModelConfig,
    b: Vec<Vec<ExactRational>>,
    phase: Vec<i64>,
    multiplicity: Vec<BigInt>,
    // floating copies used by every evaluation; b_float is row-major [n][m]
    b_float: Vec<f64>,
    multiplicity_float: Vec<f64>,
}

impl AmplitudeTable {
    pub fn new(config: ModelConfig) -> Self {
        let n_dots = i64::from(config.dots());
        let m_exc = i64::from(config.excitations());
        let rank = config.schmidt_rank();
        let bin = |x: i64, y: i64| binomial(x, y).expect("upper index is nonnegative in range");

        // b[n][m] = sum_k (-1)^k C(m,k) / C(N-2k, M-k) * [C(N+1-2k, n-k) - 2 C(N-2k, n-k-1)]
        let b = (0..rank as i64)
            .map(|n| {
                (0..rank as i64)
                    .map(|m| {
                        (0..=m)
                            .map(|k| {
                                let sign = if k % 2 == 0 { 1 } else { -1 };
                                let numerator = BigInt::from(sign)
                                    * bin(m, k)
                                    * (bin(n_dots + 1 - 2 * k, n - k)
                                        - BigInt::from(2) * bin(n_dots - 2 * k, n - k - 1));
                                ExactRational::new(numerator, bin(n_dots - 2 * k, m_exc - k))
                            })
                            .sum()
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();

        let phase = (0..rank as i64)
            .map(|n| n * (n_dots + 1 - n) - m_exc * (n_dots - m_exc))
            .collect();

        let multiplicity = (0..rank as i64)
            .map(|m| bin(m_exc, m) * bin(n_dots - m_exc, m))
            .collect::<Vec<_>>();

        let mut table = Self {
            config,
            b,
            phase,
            multiplicity,
            b_float: Vec::new(),
            multiplicity_float: Vec::new(),
        };
        table.refresh_floats();
        table
    }

    fn refresh_floats(&mut self) {
        self.b_float = self.b.iter().flatten().map(ExactRational::to_f64).collect();
        self.multiplicity_float = self
            .multiplicity
            .iter()
            .map(|w| w.to_f64().unwrap_or(f64::INFINITY))
            .collect();
    }

    pub fn config(&self) -> ModelConfig {
        self.config
    }

    pub fn rank(&self) -> usize {
        self.phase.len()
    }

    /// `b[n][m]`.
    pub fn amplitude(&self, n: usize, m: usize) -> &ExactRational {
        &self.b[n][m]
    }

    pub fn amplitudes(&self) -> &[Vec<ExactRational>] {
        &self.b
    }

    /// `n(N + 1 - n) - M(N - M)` for `n = 0..=M'`.
    pub fn phase_integers(&self) -> &[i64] {
        &self.phase
    }

    /// `C(M, m) * C(N - M, m)`, the number of product states behind Schmidt
    /// index `m`.
    pub fn multiplicities(&self) -> &[BigInt] {
        &self.multiplicity
    }

    /// Exact column sums `sum_n b[n][m]`, the coefficients at `kt = 0`.
    pub fn column_sums(&self) -> Vec<ExactRational> {
        (0..self.rank())
            .map(|m| self.b.iter().map(|row| &row[m]).sum())
            .collect()
    }

    /// Exact `C_m` at `kt = j * pi`, where every phase factor is `+-1`.
    pub fn coefficients_at_pi_multiple_exact(&self, j: i64) -> Vec<ExactRational> {
        (0..self.rank())
            .map(|m| {
                self.b
                    .iter()
                    .zip(&self.phase)
                    .map(|(row, &p)| {
                        if (p * j).rem_euclid(2) == 0 {
                            row[m].clone()
                        } else {
                            -row[m].clone()
                        }
                    })
                    .sum()
            })
            .collect()
    }

    fn phase_factors(&self, kt: f64) -> Vec<Complex64> {
        self.phase
            .iter()
            .map(|&p| Complex64::from_polar(1.0, p as f64 * kt))
            .collect()
    }

    /// Superposition coefficients `C_0..C_{M'}` at `kt`.
    pub fn coefficients(&self, kt: f64) -> Vec<Complex64> {
        let factors = self.phase_factors(kt);
        let rank = self.rank();
        let mut out = vec![Complex64::new(0.0, 0.0); rank];
        for (n, factor) in factors.iter().enumerate() {
            let row = &self.b_float[n * rank..(n + 1) * rank];
            for (c, &b) in out.iter_mut().zip(row) {
                *c += factor * b;
            }
        }
        out
    }

    /// Schmidt weights across the cut between the initially excited dots and
    /// the rest, ordered by Schmidt index.
    pub fn schmidt_spectrum(&self, kt: f64) -> Result<SchmidtSpectrum> {
        if !kt.is_finite() {
            return Err(Error::NonFiniteTime(kt));
        }
        let weights: Vec<f64> = self
            .coefficients(kt)
            .iter()
            .zip(&self.multiplicity_float)
            .map(|(c, w)| (w * c.norm_sqr()).min(1.0))
            .collect();
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::Normalization { time: kt, sum });
        }
        Ok(SchmidtSpectrum { time: kt, weights })
    }

    /// Entanglement entropy in ebits at `kt`.
    pub fn entropy_at(&self, kt: f64) -> Result<f64> {
        Ok(entanglement(&self.schmidt_spectrum(kt)?))
    }

    /// Analytic `dE/d(kt)` in ebits per unit `kt`.
    pub fn entropy_rate(&self, kt: f64) -> f64 {
        let factors = self.phase_factors(kt);
        let rank = self.rank();
        let mut c = vec![Complex64::new(0.0, 0.0); rank];
        let mut dc = vec![Complex64::new(0.0, 0.0); rank];
        for (n, factor) in factors.iter().enumerate() {
            let dfactor = factor * Complex64::new(0.0, self.phase[n] as f64);
            let row = &self.b_float[n * rank..(n + 1) * rank];
            for m in 0..rank {
                c[m] += factor * row[m];
                dc[m] += dfactor * row[m];
            }
        }
        (0..rank)
            .map(|m| {
                let w = self.multiplicity_float[m];
                let p = w * c[m].norm_sqr();
                if p <= 0.0 {
                    return 0.0;
                }
                let dp = 2.0 * w * (c[m].conj() * dc[m]).re;
                -dp * p.log2()
            })
            .sum()
    }

    /// Entropy and spectra on `steps + 1` uniform samples of `[0, kt_max]`.
    pub fn trace(&self, kt_max: f64, steps: usize) -> Result<EntanglementTrace> {
        if !kt_max.is_finite() {
            return Err(Error::NonFiniteTime(kt_max));
        }
        let times: Vec<f64> = (0..=steps)
            .map(|i| kt_max * i as f64 / steps.max(1) as f64)
            .collect();
        let spectra = times
            .iter()
            .map(|&t| self.schmidt_spectrum(t))
            .collect::<Result<Vec<_>>>()?;
        let entropies = spectra.iter().map(entanglement).collect();
        Ok(EntanglementTrace {
            config: self.config,
            times,
            entropies,
            spectra,
        })
    }

    /// Copy of the table with `delta` added to `b[n][m]`. Exists so the
    /// verification harness can be shown to catch a wrong table.
    #[doc(hidden)]
    pub fn with_perturbed_amplitude(&self, n: usize, m: usize, delta: ExactRational) -> Self {
        let mut out = self.clone();
        out.b[n][m] = &out.b[n][m] + &delta;
        out.refresh_floats();
        out
    }
}

/// Schmidt weights `P_0..P_{M'}` at one time, ordered by Schmidt index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchmidtSpectrum {
    pub time: f64,
    pub weights: Vec<f64>,
}

impl SchmidtSpectrum {
    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementTrace {
    pub config: ModelConfig,
    pub times: Vec<f64>,
    pub entropies: Vec<f64>,
    pub spectra: Vec<SchmidtSpectrum>,
}

/// Shannon entropy (base 2) of a probability vector, `0 log 0 = 0`.
pub fn shannon_entropy(weights: &[f64]) -> f64 {
    let h: f64 = weights
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum();
    // -0.0 from a single unit weight
    h.max(0.0)
}

/// Entanglement entropy of a spectrum in ebits.
pub fn entanglement(spectrum: &SchmidtSpectrum) -> f64 {
    shannon_entropy(&spectrum.weights)
}

/// `log2(M' + 1)`, the entropy of a maximally entangled state of the cut.
pub fn mes_entropy(config: ModelConfig) -> f64 {
    f64::from(config.reduced_excitations() + 1).log2()
}

/// Entropy relative to the maximally entangled bound.
pub fn relative_entanglement(entropy: f64, config: ModelConfig) -> Result<f64> {
    if !config.has_dynamics() {
        return Err(Error::NoDynamics {
            dots: config.dots(),
            excitations: config.excitations(),
        });
    }
    Ok(entropy / mes_entropy(config))
}
