use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use qdent_core::analysis::{critical_n, find_max, SearchOptions};
use qdent_core::closed_form::{mes_time_m1, p1_single_excitation, peak_entropy_m1, pi_time_magnitudes};
use qdent_core::oracle::{reduced_spectrum, SectorBasis, SectorHamiltonian};
use qdent_core::{AmplitudeTable, ModelConfig};

fn cfg(n: u32, m: u32) -> ModelConfig {
    ModelConfig::new(n, m).unwrap()
}

#[test]
fn closed_form_frequencies_are_sector_eigenvalues() {
    for n in 2..=10 {
        for m in 0..=n {
            let table = AmplitudeTable::new(cfg(n, m));
            let h = SectorHamiltonian::new(SectorBasis::new(n, m).unwrap());
            let energies = h.propagator().unwrap().energies().clone();
            for &p in table.phase_integers() {
                let target = -(p as f64);
                let closest = energies
                    .iter()
                    .map(|e| (e - target).abs())
                    .fold(f64::INFINITY, f64::min);
                assert!(closest < 1e-10, "N={n} M={m}: {target} missing");
            }
        }
    }
}

#[test]
fn reduced_density_eigenvalues_are_schmidt_weights() {
    for (n, m) in [(4, 2), (6, 1), (7, 3), (8, 5), (9, 4)] {
        let table = AmplitudeTable::new(cfg(n, m));
        let propagator = SectorHamiltonian::new(SectorBasis::new(n, m).unwrap())
            .propagator()
            .unwrap();
        for i in 0..12 {
            let kt = 0.29 * i as f64;
            let mut weights = table.schmidt_spectrum(kt).unwrap().weights;
            weights.sort_by(|a, b| b.total_cmp(a));
            let eigen = reduced_spectrum(&propagator.evolve(kt), m).unwrap();
            for (j, lambda) in eigen.iter().enumerate() {
                let expected = weights.get(j).copied().unwrap_or(0.0);
                assert_abs_diff_eq!(*lambda, expected, epsilon = 1e-10);
            }
        }
    }
}

#[test]
fn single_excitation_matches_compact_formula() {
    for n in 2..=12 {
        let table = AmplitudeTable::new(cfg(n, 1));
        for i in 0..64 {
            let kt = 0.05 * i as f64;
            let s = table.schmidt_spectrum(kt).unwrap();
            let p1 = p1_single_excitation(n, kt).unwrap();
            assert_abs_diff_eq!(s.weights[1], p1, epsilon = 1e-12);
            assert_abs_diff_eq!(s.weights[0], 1.0 - p1, epsilon = 1e-12);
        }
    }
}

#[test]
fn coefficients_at_pi_match_compact_moduli_for_all_odd_sizes() {
    for n in (1..=21).step_by(2) {
        for m in 0..=n {
            let c = cfg(n, m);
            let evolved = AmplitudeTable::new(c).coefficients(PI);
            for (x, y) in evolved.iter().zip(pi_time_magnitudes(c).unwrap()) {
                assert_abs_diff_eq!(x.norm(), y, epsilon = 1e-12);
            }
        }
    }
}

#[test]
fn single_excitation_maxima() {
    for n in 2..=6 {
        let r = find_max(cfg(n, 1), SearchOptions::default()).unwrap();
        assert_abs_diff_eq!(r.max_entropy, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.kt_star, mes_time_m1(n).unwrap().unwrap(), epsilon = 1e-8);
    }
    for n in 7..=20 {
        let r = find_max(cfg(n, 1), SearchOptions::default()).unwrap();
        assert_abs_diff_eq!(r.kt_star, PI / f64::from(n), epsilon = 1e-8);
        assert_abs_diff_eq!(r.max_entropy, peak_entropy_m1(n).unwrap(), epsilon = 1e-9);
    }
}

#[test]
fn large_odd_systems_peak_at_pi() {
    for m in 2..=4u32 {
        let first = critical_n(m).unwrap() + 1;
        for n in (first..=first + 8).filter(|n| n % 2 == 1) {
            let c = cfg(n, m);
            let r = find_max(c, SearchOptions::default()).unwrap();
            assert_abs_diff_eq!(r.kt_star, PI, epsilon = 1e-6);
            let mags = pi_time_magnitudes(c).unwrap();
            let table = AmplitudeTable::new(c);
            for (mm, (w, mag)) in r.spectrum_at_max.weights.iter().zip(mags).enumerate() {
                let multiplicity = table.multiplicities()[mm].to_f64().unwrap();
                assert_abs_diff_eq!(*w, multiplicity * mag * mag, epsilon = 1e-9);
            }
        }
    }
}

#[test]
fn even_systems_disentangle_at_multiples_of_pi() {
    for n in (4..=16).step_by(2) {
        for m in 2..=n - 2 {
            let table = AmplitudeTable::new(cfg(n, m));
            for k in 0..4 {
                assert!(table.entropy_at(k as f64 * PI).unwrap() < 1e-9);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_agrees_at_random_times(n in 2u32..=9, m_frac in 0.0f64..=1.0, kt in 0.0f64..10.0) {
        let m = (m_frac * f64::from(n)).round() as u32;
        let closed = AmplitudeTable::new(cfg(n, m)).entropy_at(kt).unwrap();
        let oracle = qdent_core::oracle::oracle_entanglement(n, m, kt).unwrap();
        prop_assert!((closed - oracle).abs() < 1e-9);
    }
}
