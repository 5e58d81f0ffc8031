use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use num_traits::ToPrimitive;

/// Largest dot count the oracle accepts by default (`C(16, 8) = 12870`).
pub const DEFAULT_MAX_DOTS: u32 = 16;

/// Ordered enumeration of the `N`-dot configurations with exactly `M`
/// excited dots.
///
/// A configuration is an integer whose bit `N - 1 - i` is set when dot `i`
/// is excited, so the binary string reads dot 0 first and `|1..1 0..0>` is
/// the largest state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorBasis {
    dots: u32,
    excitations: u32,
    states: Vec<u64>,
}

impl SectorBasis {
    pub fn new(dots: u32, excitations: u32) -> Result<Self> {
        Self::with_budget(dots, excitations, DEFAULT_MAX_DOTS)
    }

    pub fn with_budget(dots: u32, excitations: u32, max_dots: u32) -> Result<Self> {
        if dots == 0 || excitations > dots {
            return Err(Error::InvalidConfig { dots, excitations });
        }
        let dimension = binomial(i64::from(dots), i64::from(excitations))?
            .to_usize()
            .unwrap_or(usize::MAX);
        if dots > max_dots || dots > 63 {
            return Err(Error::BudgetExceeded { dots, dimension, max_dots });
        }

        let mut states = Vec::with_capacity(dimension);
        if excitations == 0 {
            states.push(0);
        } else {
            let end = 1u64 << dots;
            let mut s = (1u64 << excitations) - 1;
            while s < end {
                states.push(s);
                // next integer with the same popcount
                let lowest = s & s.wrapping_neg();
                let ripple = s + lowest;
                s = ripple | (((s ^ ripple) >> 2) / lowest);
            }
        }
        debug_assert_eq!(states.len(), dimension);
        Ok(Self { dots, excitations, states })
    }

    pub fn dots(&self) -> u32 {
        self.dots
    }

    pub fn excitations(&self) -> u32 {
        self.excitations
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[u64] {
        &self.states
    }

    pub fn index_of(&self, state: u64) -> Option<usize> {
        self.states.binary_search(&state).ok()
    }

    /// Bit mask of dot `site`.
    pub fn site_mask(&self, site: u32) -> u64 {
        1u64 << (self.dots - 1 - site)
    }

    /// The product state with the first `M` dots excited.
    pub fn initial_state(&self) -> u64 {
        (0..self.excitations).fold(0, |acc, i| acc | self.site_mask(i))
    }

    /// Binary string of a configuration, dot 0 first.
    pub fn label(&self, state: u64) -> String {
        format!("{:0width$b}", state, width = self.dots as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(b: &SectorBasis) -> Vec<String> {
        b.states().iter().map(|&s| b.label(s)).collect()
    }

    #[test]
    fn small_sectors() {
        assert_eq!(labels(&SectorBasis::new(2, 1).unwrap()), ["01", "10"]);
        assert_eq!(
            labels(&SectorBasis::new(4, 2).unwrap()),
            ["0011", "0101", "0110", "1001", "1010", "1100"]
        );
        assert_eq!(labels(&SectorBasis::new(5, 0).unwrap()), ["00000"]);
        assert_eq!(labels(&SectorBasis::new(3, 3).unwrap()), ["111"]);
    }

    #[test]
    fn enumeration_is_complete_and_sorted() {
        for n in 1..=12u32 {
            for m in 0..=n {
                let b = SectorBasis::new(n, m).unwrap();
                let brute: Vec<u64> = (0..1u64 << n).filter(|s| s.count_ones() == m).collect();
                assert_eq!(b.states(), &brute[..]);
                for (i, &s) in b.states().iter().enumerate() {
                    assert_eq!(b.index_of(s), Some(i));
                }
            }
        }
    }

    #[test]
    fn initial_state_is_leading_ones() {
        let b = SectorBasis::new(6, 2).unwrap();
        assert_eq!(b.label(b.initial_state()), "110000");
        assert_eq!(b.index_of(b.initial_state()), Some(b.len() - 1));
    }

    #[test]
    fn budget() {
        assert!(matches!(
            SectorBasis::new(17, 8),
            Err(Error::BudgetExceeded { dots: 17, dimension: 24310, max_dots: 16 })
        ));
        assert!(SectorBasis::with_budget(18, 2, 20).is_ok());
        assert!(SectorBasis::new(4, 5).is_err());
    }
}
