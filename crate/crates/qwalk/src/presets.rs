//! Built-in figure presets: named, fully specified scenarios with the
//! qualitative outcome (sign of the payoff at the final step) each run
//! reproduces.
//!
//! Suffix `a` plays A only, `b` plays B only, `c` alternates per the
//! scenario's schedule. The `-alt` variants carry the alternate parameter
//! or initial-state readings noted in their descriptions.

use std::f64::consts::PI;

use crate::error::{QwalkError, Result};
use crate::payoff::Outcome;
use crate::scenario::{AngleUnit, CoinKind, ScenarioConfig, ScheduleSpec, ShiftSpec};

#[derive(Clone, Debug)]
pub struct FigurePreset {
    pub name: &'static str,
    /// Sign of the payoff at the preset's final step, as reproduced by the
    /// engine (`WIN` > 0, `LOSS` < 0, `DRAW` within 1e-10 of 0).
    pub expected: Outcome,
    pub config: ScenarioConfig,
}

fn qubit_initial() -> Vec<[f64; 2]> {
    // (|0> - i|1>)/√2, slot order [|0>, |1>]
    let s = 1.0 / 2f64.sqrt();
    vec![[s, 0.0], [0.0, -s]]
}

fn qutrit_initial_eq5() -> Vec<[f64; 2]> {
    // (|0> + |1> - i|2>)/√3, slot order [|1>, |0>, |2>]
    let s = 1.0 / 3f64.sqrt();
    vec![[s, 0.0], [s, 0.0], [0.0, -s]]
}

fn qutrit_initial_real() -> Vec<[f64; 2]> {
    // (|1> + |0> - |2>)/√3
    let s = 1.0 / 3f64.sqrt();
    vec![[s, 0.0], [s, 0.0], [-s, 0.0]]
}

fn qutrit_initial_i1() -> Vec<[f64; 2]> {
    // (i|1> + |0> - |2>)/√3
    let s = 1.0 / 3f64.sqrt();
    vec![[0.0, s], [s, 0.0], [-s, 0.0]]
}

fn qutrit_initial_i0() -> Vec<[f64; 2]> {
    // (i|0> + |1> - |2>)/√3 — alternate reading with the phase on |0>
    let s = 1.0 / 3f64.sqrt();
    vec![[s, 0.0], [0.0, s], [-s, 0.0]]
}

fn game_a() -> Vec<f64> {
    vec![PI, PI / 2.0, PI, PI]
}

fn game_b() -> Vec<f64> {
    vec![PI / 2.0, PI / 2.0, 3.0 * PI / 2.0, PI / 2.0]
}

fn qubit_config(coin_a: Vec<f64>, schedule: ScheduleSpec, steps: u64) -> ScenarioConfig {
    ScenarioConfig {
        coin_kind: CoinKind::Qubit,
        angle_unit: AngleUnit::Deg,
        coin_a,
        coin_b: vec![0.0, 88.0, -15.0],
        k_term_convention: Default::default(),
        schedule,
        shift: ShiftSpec::Named("S".into()),
        initial_position: 0,
        initial_amplitudes: qubit_initial(),
        steps,
    }
}

fn qutrit_config(
    coin_a: Vec<f64>,
    coin_b: Vec<f64>,
    schedule: ScheduleSpec,
    shift: &str,
    initial_amplitudes: Vec<[f64; 2]>,
    steps: u64,
) -> ScenarioConfig {
    ScenarioConfig {
        coin_kind: CoinKind::Qutrit,
        angle_unit: AngleUnit::Rad,
        coin_a,
        coin_b,
        k_term_convention: Default::default(),
        schedule,
        shift: ShiftSpec::Named(shift.into()),
        initial_position: 0,
        initial_amplitudes,
        steps,
    }
}

/// The three game-sequence variants (A-only, B-only, alternating) of one
/// figure, with their reproduced outcomes.
fn triple(
    base: &'static [(&'static str, Outcome); 3],
    make: impl Fn(ScheduleSpec) -> ScenarioConfig,
) -> Vec<FigurePreset> {
    let schedules = [
        ScheduleSpec::Pattern("A".into()),
        ScheduleSpec::Pattern("B".into()),
        ScheduleSpec::Periodic(2),
    ];
    base.iter()
        .zip(schedules)
        .map(|(&(name, expected), schedule)| FigurePreset {
            name,
            expected,
            config: make(schedule),
        })
        .collect()
}

/// All bundled presets, in listing order.
pub fn all_presets() -> Vec<FigurePreset> {
    use Outcome::*;
    let mut out = vec![
        FigurePreset {
            name: "fig2a",
            expected: Loss,
            config: qubit_config(
                vec![-45.0, 45.0, 0.0],
                ScheduleSpec::Pattern("A".into()),
                100,
            ),
        },
        FigurePreset {
            name: "fig2b",
            expected: Loss,
            config: qubit_config(
                vec![-45.0, 45.0, 0.0],
                ScheduleSpec::Pattern("B".into()),
                100,
            ),
        },
        // The alternating qubit game wins early but loses asymptotically.
        // fig2c takes beta_A = 40 deg; fig2c-alt the alternate 45 deg reading.
        FigurePreset {
            name: "fig2c",
            expected: Loss,
            config: qubit_config(vec![-45.0, 40.0, 0.0], ScheduleSpec::Periodic(4), 500),
        },
        FigurePreset {
            name: "fig2c-alt",
            expected: Loss,
            config: qubit_config(vec![-45.0, 45.0, 0.0], ScheduleSpec::Periodic(4), 500),
        },
    ];
    out.extend(triple(
        &[("fig3a", Loss), ("fig3b", Loss), ("fig3c", Win)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime", qutrit_initial_eq5(), 500),
    ));
    out.extend(triple(
        &[("fig4a", Loss), ("fig4b", Loss), ("fig4c", Loss)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime", qutrit_initial_real(), 200),
    ));
    // fig5 puts the i phase on |1>; fig5*-alt is the alternate reading with
    // the phase on |0>. fig5a is left/right symmetric: an exact draw.
    out.extend(triple(
        &[("fig5a", Draw), ("fig5b", Loss), ("fig5c", Win)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime", qutrit_initial_i1(), 400),
    ));
    out.extend(triple(
        &[("fig5a-alt", Loss), ("fig5b-alt", Loss), ("fig5c-alt", Loss)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime", qutrit_initial_i0(), 400),
    ));
    out.extend(triple(
        &[("fig6a", Loss), ("fig6b", Loss), ("fig6c", Win)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime_1", qutrit_initial_eq5(), 400),
    ));
    out.extend(triple(
        &[("fig7a", Draw), ("fig7b", Win), ("fig7c", Loss)],
        |s| qutrit_config(game_a(), game_b(), s, "S_prime_2", qutrit_initial_eq5(), 400),
    ));
    out.extend(triple(
        &[("fig8a", Win), ("fig8b", Win), ("fig8c", Win)],
        |s| {
            qutrit_config(
                vec![PI / 8.0, 3.0 * PI / 8.0, 3.0 * PI / 4.0, PI / 4.0],
                vec![2.0 * PI / 3.0, 7.0 * PI, 3.0 * PI / 2.0, 2.0 * PI],
                s,
                "S_prime",
                qutrit_initial_eq5(),
                400,
            )
        },
    ));
    out.extend(triple(
        &[("fig9a", Win), ("fig9b", Loss), ("fig9c", Win)],
        |s| {
            qutrit_config(
                vec![PI / 8.0, 2.0 * PI / 8.0, 3.0 * PI / 4.0, 6.0 * PI / 4.0],
                vec![2.0 * PI, 3.0 * PI, 2.0 * PI, PI],
                s,
                "S_prime",
                qutrit_initial_eq5(),
                400,
            )
        },
    ));
    out
}

pub fn preset(name: &str) -> Result<FigurePreset> {
    all_presets()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| QwalkError::UnknownPreset(name.to_string()))
}
