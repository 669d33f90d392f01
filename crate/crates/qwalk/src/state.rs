//! Walker wavefunction on the integer lattice.
//!
//! The state is a sparse map from lattice position to a coin-amplitude
//! vector; a walk after `t` steps occupies at most `2t + 1` sites, so no
//! lattice bounds are needed.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{QwalkError, Result};

pub type Amplitude = Complex64;

/// Ordered coin basis. The slot order is the order of `labels`, and every
/// matrix and shift rule is compiled against labels rather than raw slot
/// indices, so an unusual ordering cannot silently transpose anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinBasis {
    labels: Vec<String>,
}

impl CoinBasis {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(QwalkError::Validation("coin basis has no labels".into()));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(QwalkError::Validation(format!(
                    "duplicate coin label \"{a}\""
                )));
            }
        }
        Ok(Self { labels })
    }

    /// Two-state coin, slot order [|0>, |1>].
    pub fn qubit() -> Self {
        Self {
            labels: vec!["0".into(), "1".into()],
        }
    }

    /// Three-state coin, slot order [|1>, |0>, |2>].
    pub fn qutrit() -> Self {
        Self {
            labels: vec!["1".into(), "0".into(), "2".into()],
        }
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn slot_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Sparse walker wavefunction: position -> coin-amplitude vector.
///
/// Immutable once constructed; evolution produces new states.
#[derive(Clone, Debug)]
pub struct WalkerState {
    basis: CoinBasis,
    amplitudes: BTreeMap<i64, Vec<Amplitude>>,
}

/// One position's probabilities in a distribution snapshot.
#[derive(Debug, Clone, Serialize)]
pub struct DistributionRecord {
    pub position: i64,
    pub probabilities: BTreeMap<String, f64>,
    pub total: f64,
}

impl WalkerState {
    /// State with all mass at `position` and the given coin vector.
    ///
    /// The coin vector must already be normalized (squared norm within
    /// 1e-12 of 1); there is no silent renormalization.
    pub fn new_localized(
        position: i64,
        coin_amplitudes: Vec<Amplitude>,
        basis: CoinBasis,
    ) -> Result<Self> {
        if coin_amplitudes.len() != basis.dimension() {
            return Err(QwalkError::DimensionMismatch {
                operator: coin_amplitudes.len(),
                basis: basis.dimension(),
            });
        }
        if coin_amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(QwalkError::Validation(
                "coin amplitudes must be finite".into(),
            ));
        }
        let norm_sq: f64 = coin_amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-12 {
            return Err(QwalkError::NotNormalized { norm_sq });
        }
        let mut amplitudes = BTreeMap::new();
        amplitudes.insert(position, coin_amplitudes);
        Ok(Self { basis, amplitudes })
    }

    pub(crate) fn from_map(basis: CoinBasis, amplitudes: BTreeMap<i64, Vec<Amplitude>>) -> Self {
        Self { basis, amplitudes }
    }

    pub fn basis(&self) -> &CoinBasis {
        &self.basis
    }

    /// Occupied positions with their amplitude vectors, ascending position.
    pub fn occupied(&self) -> impl Iterator<Item = (i64, &[Amplitude])> {
        self.amplitudes.iter().map(|(&n, v)| (n, v.as_slice()))
    }

    /// Amplitude at (position, slot); zero off the support.
    pub fn amplitude(&self, position: i64, slot: usize) -> Amplitude {
        self.amplitudes
            .get(&position)
            .map_or(Amplitude::new(0.0, 0.0), |v| v[slot])
    }

    /// Total squared norm, sum over all positions and coin slots.
    pub fn total_norm(&self) -> f64 {
        self.amplitudes
            .values()
            .flat_map(|v| v.iter())
            .map(|a| a.norm_sqr())
            .sum()
    }

    /// Probability of finding the walker at `position` (summed over coin
    /// slots); zero for unoccupied positions.
    pub fn position_probability(&self, position: i64) -> f64 {
        self.amplitudes
            .get(&position)
            .map_or(0.0, |v| v.iter().map(|a| a.norm_sqr()).sum())
    }

    /// Dense view for oracle comparison: (leftmost position, row per site).
    pub fn to_dense(&self) -> (i64, Vec<Vec<Amplitude>>) {
        match (self.amplitudes.keys().next(), self.amplitudes.keys().last()) {
            (Some(&lo), Some(&hi)) => {
                let d = self.basis.dimension();
                let mut rows = vec![vec![Amplitude::new(0.0, 0.0); d]; (hi - lo + 1) as usize];
                for (&n, v) in &self.amplitudes {
                    rows[(n - lo) as usize].clone_from_slice(v);
                }
                (lo, rows)
            }
            _ => (0, Vec::new()),
        }
    }

    /// Distribution snapshot: per-label and total probability at every
    /// occupied position, ascending.
    pub fn distribution(&self) -> Vec<DistributionRecord> {
        self.amplitudes
            .iter()
            .map(|(&position, v)| {
                let probabilities: BTreeMap<String, f64> = self
                    .basis
                    .labels()
                    .iter()
                    .zip(v.iter())
                    .map(|(l, a)| (l.clone(), a.norm_sqr()))
                    .collect();
                let total = v.iter().map(|a| a.norm_sqr()).sum();
                DistributionRecord {
                    position,
                    probabilities,
                    total,
                }
            })
            .collect()
    }

    /// Distribution snapshot serialized as a JSON array, positions ascending.
    pub fn distribution_json(&self) -> String {
        serde_json::to_string_pretty(&self.distribution()).expect("distribution serializes")
    }
}
