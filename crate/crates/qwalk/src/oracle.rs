//! Brute-force verifier for the evolution engine.
//!
//! Expands the walk as an explicit sum over all d^N coin-outcome paths and
//! accumulates amplitudes per (position, coin slot). Shares no algorithmic
//! structure with `apply_coin`/`apply_shift`, so the two cannot share bugs.
//! Summation order is fixed, making the result bit-reproducible.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::coin::CoinMatrix;
use crate::error::{QwalkError, Result};
use crate::evolve::{CoinSelector, GameSchedule, ShiftRule};
use crate::state::{CoinBasis, WalkerState};

/// Path count cap; 3^10 and 2^12 both fit comfortably.
pub const MAX_PATHS: u64 = 600_000;

#[derive(Clone, Debug)]
pub struct PathSumConfig {
    pub basis: CoinBasis,
    pub initial_position: i64,
    pub initial_amplitudes: Vec<Complex64>,
    pub coin_a: CoinMatrix,
    pub coin_b: CoinMatrix,
    pub schedule: GameSchedule,
    pub shift: ShiftRule,
    pub steps: u32,
}

impl PathSumConfig {
    fn path_count(&self) -> Option<u64> {
        let d = self.basis.dimension() as u64;
        let mut total = 1u64;
        for _ in 0..self.steps {
            total = total.checked_mul(d)?;
            if total > MAX_PATHS {
                return None;
            }
        }
        Some(total)
    }
}

/// Full path-sum state: amplitude per (position, slot).
pub fn oracle_state(config: &PathSumConfig) -> Result<BTreeMap<(i64, usize), Complex64>> {
    let d = config.basis.dimension();
    let n = config.steps as usize;
    if config.path_count().is_none() {
        return Err(QwalkError::OracleBoundExceeded {
            dimension: d,
            steps: config.steps,
            max: MAX_PATHS,
        });
    }
    let disp = config.shift.compile(&config.basis)?;
    let coins: Vec<&CoinMatrix> = (0..config.steps as u64)
        .map(|t| match config.schedule.coin_for_step(t) {
            CoinSelector::A => &config.coin_a,
            CoinSelector::B => &config.coin_b,
        })
        .collect();

    let mut out: BTreeMap<(i64, usize), Complex64> = BTreeMap::new();
    if n == 0 {
        for (slot, &a) in config.initial_amplitudes.iter().enumerate() {
            out.insert((config.initial_position, slot), a);
        }
        return Ok(out);
    }

    // path[t] = coin slot occupied after step t, t = 0..n-1
    let mut path = vec![0usize; n];
    loop {
        let position: i64 = config.initial_position + path.iter().map(|&s| disp[s]).sum::<i64>();
        let final_slot = path[n - 1];
        // chain the coin-matrix elements along the path from every initial slot
        for (s0, &a0) in config.initial_amplitudes.iter().enumerate() {
            let mut amp = a0;
            let mut prev = s0;
            for (t, &s) in path.iter().enumerate() {
                amp *= coins[t].entry(s, prev);
                prev = s;
            }
            *out.entry((position, final_slot))
                .or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        // next path in mixed-radix order
        let mut i = 0;
        loop {
            path[i] += 1;
            if path[i] < d {
                break;
            }
            path[i] = 0;
            i += 1;
            if i == n {
                return Ok(out);
            }
        }
    }
}

/// Amplitude at (position, label) after `steps` path-sum steps.
pub fn oracle_amplitude(config: &PathSumConfig, position: i64, label: &str) -> Result<Complex64> {
    let slot = config
        .basis
        .slot_of(label)
        .ok_or_else(|| QwalkError::ShiftLabelMissing {
            label: label.to_string(),
        })?;
    let state = oracle_state(config)?;
    Ok(state
        .get(&(position, slot))
        .copied()
        .unwrap_or(Complex64::new(0.0, 0.0)))
}

/// Max absolute amplitude difference between the path sum and an engine
/// state over the union of both supports.
pub fn compare_with_engine(config: &PathSumConfig, engine_state: &WalkerState) -> Result<f64> {
    let oracle = oracle_state(config)?;
    let zero = Complex64::new(0.0, 0.0);
    let mut worst = 0.0f64;
    for (&(pos, slot), &amp) in &oracle {
        worst = worst.max((engine_state.amplitude(pos, slot) - amp).norm());
    }
    for (pos, v) in engine_state.occupied() {
        for slot in 0..v.len() {
            let o = oracle.get(&(pos, slot)).copied().unwrap_or(zero);
            worst = worst.max((engine_state.amplitude(pos, slot) - o).norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::{build_qutrit, game_a_params, game_b_params, KTermConvention};
    use crate::evolve::evolve;
    use crate::state::WalkerState;

    fn config(steps: u32, schedule: GameSchedule) -> PathSumConfig {
        let s = 1.0 / 3f64.sqrt();
        PathSumConfig {
            basis: CoinBasis::qutrit(),
            initial_position: 0,
            initial_amplitudes: vec![
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(0.0, -s),
            ],
            coin_a: build_qutrit(game_a_params(), KTermConvention::Corrected).unwrap(),
            coin_b: build_qutrit(game_b_params(), KTermConvention::Corrected).unwrap(),
            schedule,
            shift: ShiftRule::qutrit_s(),
            steps,
        }
    }

    #[test]
    fn zero_steps_returns_initial_amplitudes() {
        let cfg = config(0, GameSchedule::periodic(2).unwrap());
        let a = oracle_amplitude(&cfg, 0, "2").unwrap();
        assert!((a - Complex64::new(0.0, -1.0 / 3f64.sqrt())).norm() < 1e-15);
        assert_eq!(oracle_amplitude(&cfg, 3, "0").unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn one_step_matches_hand_value() {
        // position +1, label |0> -> (-1+2i)/(3√3)
        let cfg = config(1, GameSchedule::pattern("A").unwrap());
        let a = oracle_amplitude(&cfg, 1, "0").unwrap();
        let want = Complex64::new(-1.0, 2.0) / (3.0 * 3f64.sqrt());
        assert!((a - want).norm() < 1e-14);
    }

    #[test]
    fn oracle_norm_is_one() {
        let cfg = config(8, GameSchedule::periodic(2).unwrap());
        let norm: f64 = oracle_state(&cfg)
            .unwrap()
            .values()
            .map(|a| a.norm_sqr())
            .sum();
        assert!((norm - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn agrees_with_engine_small_n() {
        for n in [0u32, 1, 2, 3, 8] {
            let cfg = config(n, GameSchedule::periodic(2).unwrap());
            let init = WalkerState::new_localized(
                cfg.initial_position,
                cfg.initial_amplitudes.clone(),
                cfg.basis.clone(),
            )
            .unwrap();
            let traj = evolve(
                &init,
                &cfg.coin_a,
                &cfg.coin_b,
                &cfg.schedule,
                &cfg.shift,
                u64::from(n),
            )
            .unwrap();
            let diff = compare_with_engine(&cfg, traj.last().unwrap()).unwrap();
            assert!(diff <= 1e-12, "n={n} diff={diff:e}");
        }
    }

    #[test]
    fn detects_corrupted_engine_state() {
        // harness self-test: flip one amplitude's sign and the comparison
        // must report a large difference
        let cfg = config(3, GameSchedule::periodic(2).unwrap());
        let init = WalkerState::new_localized(
            0,
            cfg.initial_amplitudes.clone(),
            cfg.basis.clone(),
        )
        .unwrap();
        let traj = evolve(&init, &cfg.coin_a, &cfg.coin_b, &cfg.schedule, &cfg.shift, 3).unwrap();
        let good = traj.last().unwrap();
        let mut corrupted = std::collections::BTreeMap::new();
        for (n, v) in good.occupied() {
            corrupted.insert(n, v.to_vec());
        }
        let target = corrupted.values_mut().find(|v| v[0].norm() > 0.05).unwrap();
        target[0] = -target[0];
        let bad = WalkerState::from_map(cfg.basis.clone(), corrupted);
        assert!(compare_with_engine(&cfg, &bad).unwrap() > 1e-10);
        assert!(compare_with_engine(&cfg, good).unwrap() <= 1e-12);
    }

    #[test]
    fn bound_enforced() {
        let cfg = config(13, GameSchedule::periodic(2).unwrap());
        assert!(matches!(
            oracle_state(&cfg),
            Err(QwalkError::OracleBoundExceeded { .. })
        ));
    }
}
