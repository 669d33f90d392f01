//! One walk step is coin then shift; a game schedule picks coin A or B for
//! each time step. Coin selection uses the current step index `t`, so `t = 0`
//! plays A under a periodic schedule.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::coin::CoinMatrix;
use crate::error::{QwalkError, Result};
use crate::state::{Amplitude, CoinBasis, WalkerState};

/// Coin-conditioned displacement rule, expressed against coin labels and
/// compiled to slots only against a concrete basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRule {
    displacement: BTreeMap<String, i64>,
}

impl ShiftRule {
    pub fn new(displacement: BTreeMap<String, i64>) -> Result<Self> {
        for (label, &d) in &displacement {
            if !(-1..=1).contains(&d) {
                return Err(QwalkError::ShiftDisplacementOutOfRange {
                    label: label.clone(),
                    displacement: d,
                });
            }
        }
        Ok(Self { displacement })
    }

    fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Self {
            displacement: pairs
                .iter()
                .map(|&(l, d)| (l.to_string(), d))
                .collect(),
        }
    }

    /// Qubit shift S: |0> -> +1, |1> -> -1.
    pub fn qubit_s() -> Self {
        Self::from_pairs(&[("0", 1), ("1", -1)])
    }

    /// Qutrit shift S': |0> -> +1, |1> waits, |2> -> -1.
    pub fn qutrit_s() -> Self {
        Self::from_pairs(&[("0", 1), ("1", 0), ("2", -1)])
    }

    /// Qutrit shift S'1: |1> -> +1, |0> waits, |2> -> -1.
    pub fn qutrit_s1() -> Self {
        Self::from_pairs(&[("1", 1), ("0", 0), ("2", -1)])
    }

    /// Qutrit shift S'2: |1> -> +1, |0> -> -1, |2> waits.
    pub fn qutrit_s2() -> Self {
        Self::from_pairs(&[("1", 1), ("0", -1), ("2", 0)])
    }

    pub fn displacement_of(&self, label: &str) -> Option<i64> {
        self.displacement.get(label).copied()
    }

    /// Per-slot displacements for `basis`; every basis label must be covered.
    pub fn compile(&self, basis: &CoinBasis) -> Result<Vec<i64>> {
        basis
            .labels()
            .iter()
            .map(|l| {
                self.displacement
                    .get(l)
                    .copied()
                    .ok_or_else(|| QwalkError::ShiftLabelMissing { label: l.clone() })
            })
            .collect()
    }

    /// Rule with every displacement negated; applying both is the identity.
    pub fn inverse(&self) -> Self {
        Self {
            displacement: self
                .displacement
                .iter()
                .map(|(l, &d)| (l.clone(), -d))
                .collect(),
        }
    }
}

/// Which game's coin a schedule picks at a given step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinSelector {
    A,
    B,
}

/// Coin assignment per time step: either A at t ≡ 0 (mod q) and B
/// otherwise, or an explicit pattern over {A, B} repeated cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameSchedule {
    Periodic { q: u32 },
    Pattern(String),
}

impl GameSchedule {
    pub fn periodic(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(QwalkError::ZeroPeriod);
        }
        Ok(GameSchedule::Periodic { q })
    }

    pub fn pattern(p: &str) -> Result<Self> {
        if p.is_empty() || p.chars().any(|c| c != 'A' && c != 'B') {
            return Err(QwalkError::InvalidPattern {
                pattern: p.to_string(),
            });
        }
        Ok(GameSchedule::Pattern(p.to_string()))
    }

    pub fn coin_for_step(&self, t: u64) -> CoinSelector {
        match self {
            GameSchedule::Periodic { q } => {
                if t.is_multiple_of(u64::from(*q)) {
                    CoinSelector::A
                } else {
                    CoinSelector::B
                }
            }
            GameSchedule::Pattern(p) => {
                let idx = (t % p.len() as u64) as usize;
                if p.as_bytes()[idx] == b'A' {
                    CoinSelector::A
                } else {
                    CoinSelector::B
                }
            }
        }
    }
}

/// Applies the coin to the amplitude vector at every occupied position.
pub fn apply_coin(state: &WalkerState, coin: &CoinMatrix) -> Result<WalkerState> {
    if coin.dimension() != state.basis().dimension() {
        return Err(QwalkError::DimensionMismatch {
            operator: coin.dimension(),
            basis: state.basis().dimension(),
        });
    }
    let map: BTreeMap<i64, Vec<Amplitude>> = state
        .occupied()
        .map(|(n, v)| (n, coin.apply(v)))
        .collect();
    Ok(WalkerState::from_map(state.basis().clone(), map))
}

/// Moves each coin slot's amplitude by its displacement; a pure permutation
/// of basis states, so the norm is preserved exactly.
pub fn apply_shift(state: &WalkerState, rule: &ShiftRule) -> Result<WalkerState> {
    let disp = rule.compile(state.basis())?;
    let dim = state.basis().dimension();
    let zero = vec![Complex64::new(0.0, 0.0); dim];
    let mut map: BTreeMap<i64, Vec<Amplitude>> = BTreeMap::new();
    for (n, v) in state.occupied() {
        for (slot, &a) in v.iter().enumerate() {
            if a != Complex64::new(0.0, 0.0) {
                map.entry(n + disp[slot]).or_insert_with(|| zero.clone())[slot] += a;
            }
        }
    }
    Ok(WalkerState::from_map(state.basis().clone(), map))
}

/// One step at time `t`: coin picked by the schedule, then the shift.
pub fn step(
    state: &WalkerState,
    coin_a: &CoinMatrix,
    coin_b: &CoinMatrix,
    schedule: &GameSchedule,
    rule: &ShiftRule,
    t: u64,
) -> Result<WalkerState> {
    let coin = match schedule.coin_for_step(t) {
        CoinSelector::A => coin_a,
        CoinSelector::B => coin_b,
    };
    apply_shift(&apply_coin(state, coin)?, rule)
}

/// Streaming evolution: visits (t, state) for t = 0..=steps and returns the
/// final state. Norm drift beyond 1e-9 at any step is surfaced as an error.
pub fn evolve_with<F>(
    initial: &WalkerState,
    coin_a: &CoinMatrix,
    coin_b: &CoinMatrix,
    schedule: &GameSchedule,
    rule: &ShiftRule,
    steps: u64,
    mut visit: F,
) -> Result<WalkerState>
where
    F: FnMut(u64, &WalkerState),
{
    let mut current = initial.clone();
    visit(0, &current);
    for t in 0..steps {
        current = step(&current, coin_a, coin_b, schedule, rule, t)?;
        let norm = current.total_norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(QwalkError::NormDrift { step: t + 1, norm });
        }
        visit(t + 1, &current);
    }
    Ok(current)
}

/// Full-retention evolution: trajectory of length `steps + 1`, index = t.
pub fn evolve(
    initial: &WalkerState,
    coin_a: &CoinMatrix,
    coin_b: &CoinMatrix,
    schedule: &GameSchedule,
    rule: &ShiftRule,
    steps: u64,
) -> Result<Vec<WalkerState>> {
    let mut trajectory = Vec::with_capacity(steps as usize + 1);
    evolve_with(initial, coin_a, coin_b, schedule, rule, steps, |_, st| {
        trajectory.push(st.clone())
    })?;
    Ok(trajectory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::{build_qutrit, game_a_params, game_b_params, KTermConvention};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn eq5_state() -> WalkerState {
        let s = 1.0 / 3f64.sqrt();
        WalkerState::new_localized(
            0,
            vec![c(s, 0.0), c(s, 0.0), c(0.0, -s)],
            CoinBasis::qutrit(),
        )
        .unwrap()
    }

    fn coin_a() -> CoinMatrix {
        build_qutrit(game_a_params(), KTermConvention::Corrected).unwrap()
    }

    fn coin_b() -> CoinMatrix {
        build_qutrit(game_b_params(), KTermConvention::Corrected).unwrap()
    }

    #[test]
    fn periodic_q2_alternates() {
        let s = GameSchedule::periodic(2).unwrap();
        let got: Vec<_> = (0..4).map(|t| s.coin_for_step(t)).collect();
        use CoinSelector::*;
        assert_eq!(got, vec![A, B, A, B]);
    }

    #[test]
    fn periodic_q4_abbb() {
        let s = GameSchedule::periodic(4).unwrap();
        use CoinSelector::*;
        let got: Vec<_> = (0..8).map(|t| s.coin_for_step(t)).collect();
        assert_eq!(got, vec![A, B, B, B, A, B, B, B]);
    }

    #[test]
    fn pattern_abb_cycles() {
        let s = GameSchedule::pattern("ABB").unwrap();
        use CoinSelector::*;
        let got: Vec<_> = (0..6).map(|t| s.coin_for_step(t)).collect();
        assert_eq!(got, vec![A, B, B, A, B, B]);
    }

    #[test]
    fn bad_schedules_rejected() {
        assert!(GameSchedule::periodic(0).is_err());
        assert!(GameSchedule::pattern("").is_err());
        assert!(GameSchedule::pattern("ABC").is_err());
    }

    #[test]
    fn identity_coin_leaves_state_unchanged() {
        let st = eq5_state();
        let out = apply_coin(&st, &CoinMatrix::identity(3)).unwrap();
        for (n, v) in st.occupied() {
            for (slot, &a) in v.iter().enumerate() {
                assert_eq!(out.amplitude(n, slot), a);
            }
        }
    }

    #[test]
    fn coin_a_on_eq5_state() {
        // coin vector (slots |1>,|0>,|2>) becomes ((-1+2i)/3, (-1+2i)/3, (-4-i)/3)/√3
        let out = apply_coin(&eq5_state(), &coin_a()).unwrap();
        let s = 1.0 / 3f64.sqrt();
        let want = [
            c(-1.0 / 3.0, 2.0 / 3.0) * s,
            c(-1.0 / 3.0, 2.0 / 3.0) * s,
            c(-4.0 / 3.0, -1.0 / 3.0) * s,
        ];
        for (slot, w) in want.iter().enumerate() {
            assert!((out.amplitude(0, slot) - w).norm() < 1e-14);
        }
        assert!((out.total_norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coin_b_on_basis_vector_gives_column() {
        let st = WalkerState::new_localized(
            0,
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            CoinBasis::qutrit(),
        )
        .unwrap();
        let b = coin_b();
        let out = apply_coin(&st, &b).unwrap();
        for slot in 0..3 {
            assert!((out.amplitude(0, slot) - b.entry(slot, 0)).norm() < 1e-15);
        }
        assert!((out.total_norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coin_dimension_mismatch() {
        let st = eq5_state();
        assert!(matches!(
            apply_coin(&st, &CoinMatrix::identity(2)),
            Err(QwalkError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn qutrit_shift_moves_label_0_right() {
        let st = WalkerState::new_localized(
            0,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)], // |0> is slot 1
            CoinBasis::qutrit(),
        )
        .unwrap();
        let out = apply_shift(&st, &ShiftRule::qutrit_s()).unwrap();
        assert_eq!(out.amplitude(1, 1), c(1.0, 0.0));
        assert_eq!(out.position_probability(0), 0.0);
    }

    #[test]
    fn s2_wait_state_stays_put() {
        let st = WalkerState::new_localized(
            0,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], // |2> is slot 2
            CoinBasis::qutrit(),
        )
        .unwrap();
        let out = apply_shift(&st, &ShiftRule::qutrit_s2()).unwrap();
        assert_eq!(out.amplitude(0, 2), c(1.0, 0.0));
    }

    #[test]
    fn qubit_shift_splits_superposition() {
        let s = 1.0 / 2f64.sqrt();
        let st =
            WalkerState::new_localized(0, vec![c(s, 0.0), c(s, 0.0)], CoinBasis::qubit()).unwrap();
        let out = apply_shift(&st, &ShiftRule::qubit_s()).unwrap();
        assert!((out.amplitude(1, 0) - s).norm() < 1e-15);
        assert!((out.amplitude(-1, 1) - s).norm() < 1e-15);
        assert_eq!(out.position_probability(0), 0.0);
    }

    #[test]
    fn one_step_coin_a_mass_split() {
        // mass 5/27 at +1, 5/27 at 0, 17/27 at -1
        let out = step(
            &eq5_state(),
            &coin_a(),
            &coin_b(),
            &GameSchedule::periodic(2).unwrap(),
            &ShiftRule::qutrit_s(),
            0,
        )
        .unwrap();
        assert!((out.position_probability(1) - 5.0 / 27.0).abs() < 1e-14);
        assert!((out.position_probability(0) - 5.0 / 27.0).abs() < 1e-14);
        assert!((out.position_probability(-1) - 17.0 / 27.0).abs() < 1e-14);
    }

    #[test]
    fn equal_coins_make_schedule_irrelevant() {
        let a = coin_a();
        let sched1 = GameSchedule::periodic(2).unwrap();
        let sched2 = GameSchedule::pattern("BAB").unwrap();
        let rule = ShiftRule::qutrit_s();
        let t1 = evolve(&eq5_state(), &a, &a, &sched1, &rule, 10).unwrap();
        let t2 = evolve(&eq5_state(), &a, &a, &sched2, &rule, 10).unwrap();
        for (s1, s2) in t1.iter().zip(&t2) {
            for (n, v) in s1.occupied() {
                for slot in 0..v.len() {
                    assert_eq!(s1.amplitude(n, slot), s2.amplitude(n, slot));
                }
            }
        }
    }

    #[test]
    fn zero_step_evolution_is_initial() {
        let traj = evolve(
            &eq5_state(),
            &coin_a(),
            &coin_b(),
            &GameSchedule::periodic(2).unwrap(),
            &ShiftRule::qutrit_s(),
            0,
        )
        .unwrap();
        assert_eq!(traj.len(), 1);
        assert_eq!(traj[0].position_probability(0), eq5_state().position_probability(0));
    }

    #[test]
    fn shift_inverse_restores_state() {
        let st = apply_coin(&eq5_state(), &coin_a()).unwrap();
        let rule = ShiftRule::qutrit_s1();
        let back = apply_shift(&apply_shift(&st, &rule).unwrap(), &rule.inverse()).unwrap();
        for (n, v) in st.occupied() {
            for slot in 0..v.len() {
                assert!((back.amplitude(n, slot) - st.amplitude(n, slot)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn schedule_equivalence_periodic2_pattern_ab() {
        let (a, b) = (coin_a(), coin_b());
        let rule = ShiftRule::qutrit_s();
        let t1 = evolve(&eq5_state(), &a, &b, &GameSchedule::periodic(2).unwrap(), &rule, 20)
            .unwrap();
        let t2 = evolve(&eq5_state(), &a, &b, &GameSchedule::pattern("AB").unwrap(), &rule, 20)
            .unwrap();
        for (s1, s2) in t1.iter().zip(&t2) {
            for (n, v) in s1.occupied() {
                for slot in 0..v.len() {
                    assert_eq!(s1.amplitude(n, slot), s2.amplitude(n, slot));
                }
            }
        }
    }

    #[test]
    fn translation_covariance() {
        let s = 1.0 / 3f64.sqrt();
        let shifted = WalkerState::new_localized(
            7,
            vec![c(s, 0.0), c(s, 0.0), c(0.0, -s)],
            CoinBasis::qutrit(),
        )
        .unwrap();
        let (a, b) = (coin_a(), coin_b());
        let sched = GameSchedule::periodic(2).unwrap();
        let rule = ShiftRule::qutrit_s();
        let t0 = evolve(&eq5_state(), &a, &b, &sched, &rule, 15).unwrap();
        let t7 = evolve(&shifted, &a, &b, &sched, &rule, 15).unwrap();
        for (s0, s7) in t0.iter().zip(&t7) {
            for (n, _) in s0.occupied() {
                assert!(
                    (s0.position_probability(n) - s7.position_probability(n + 7)).abs() < 1e-13
                );
            }
        }
    }

    #[test]
    fn light_cone_and_norm_over_50_steps() {
        let (a, b) = (coin_a(), coin_b());
        let sched = GameSchedule::periodic(2).unwrap();
        let rule = ShiftRule::qutrit_s();
        evolve_with(&eq5_state(), &a, &b, &sched, &rule, 50, |t, st| {
            assert!((st.total_norm() - 1.0).abs() <= 1e-9);
            for (n, _) in st.occupied() {
                assert!(n.unsigned_abs() <= t, "support outside light cone at t={t}");
            }
        })
        .unwrap();
    }

    #[test]
    fn qubit_parity_support() {
        let s = 1.0 / 2f64.sqrt();
        let init =
            WalkerState::new_localized(0, vec![c(s, 0.0), c(0.0, -s)], CoinBasis::qubit()).unwrap();
        let a = crate::coin::build_su2(crate::coin::Su2Params::from_degrees(-45.0, 45.0, 0.0));
        let b = crate::coin::build_su2(crate::coin::Su2Params::from_degrees(0.0, 88.0, -15.0));
        evolve_with(
            &init,
            &a,
            &b,
            &GameSchedule::periodic(2).unwrap(),
            &ShiftRule::qubit_s(),
            40,
            |t, st| {
                for (n, _) in st.occupied() {
                    assert_eq!(
                        n.rem_euclid(2) as u64,
                        t % 2,
                        "qubit walk occupied n={n} at t={t}"
                    );
                }
            },
        )
        .unwrap();
    }
}
