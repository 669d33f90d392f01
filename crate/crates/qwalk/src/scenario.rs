//! Scenario configuration and execution: the JSON schema behind the CLI,
//! figure presets, payoff-CSV emission, and parameter sweeps.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coin::{
    build_qutrit, build_su2, CoinMatrix, KTermConvention, QutritParams, Su2Params,
};
use crate::error::{QwalkError, Result};
use crate::evolve::{evolve_with, GameSchedule, ShiftRule};
use crate::payoff::{classify, payoff_point, Outcome, PayoffPoint, DEFAULT_DRAW_TOLERANCE};
use crate::state::{CoinBasis, WalkerState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoinKind {
    Qubit,
    Qutrit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleUnit {
    Rad,
    Deg,
}

/// Schedule in config form: `{"periodic": 2}` or `{"pattern": "ABB"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScheduleSpec {
    Periodic(u32),
    Pattern(String),
}

impl ScheduleSpec {
    pub fn build(&self) -> Result<GameSchedule> {
        match self {
            ScheduleSpec::Periodic(q) => GameSchedule::periodic(*q),
            ScheduleSpec::Pattern(p) => GameSchedule::pattern(p),
        }
    }
}

/// Shift in config form: a built-in name (`"S"`, `"S_prime"`, `"S_prime_1"`,
/// `"S_prime_2"`) or an explicit label-to-displacement map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShiftSpec {
    Named(String),
    Explicit(std::collections::BTreeMap<String, i64>),
}

impl ShiftSpec {
    pub fn build(&self) -> Result<ShiftRule> {
        match self {
            ShiftSpec::Named(name) => match name.as_str() {
                "S" => Ok(ShiftRule::qubit_s()),
                "S_prime" => Ok(ShiftRule::qutrit_s()),
                "S_prime_1" => Ok(ShiftRule::qutrit_s1()),
                "S_prime_2" => Ok(ShiftRule::qutrit_s2()),
                other => Err(QwalkError::UnknownShift(other.to_string())),
            },
            ShiftSpec::Explicit(map) => ShiftRule::new(map.clone()),
        }
    }
}

/// Complete description of one run. Complex amplitudes are `[re, im]`
/// pairs, ordered per the coin basis slot order (qubit `[|0>, |1>]`,
/// qutrit `[|1>, |0>, |2>]`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub coin_kind: CoinKind,
    pub angle_unit: AngleUnit,
    /// 3 angles for a qubit coin, 4 for a qutrit coin.
    pub coin_a: Vec<f64>,
    pub coin_b: Vec<f64>,
    #[serde(default)]
    pub k_term_convention: KTermConvention,
    pub schedule: ScheduleSpec,
    pub shift: ShiftSpec,
    #[serde(default)]
    pub initial_position: i64,
    pub initial_amplitudes: Vec<[f64; 2]>,
    pub steps: u64,
}

/// A validated, executable scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub basis: CoinBasis,
    pub coin_a: CoinMatrix,
    pub coin_b: CoinMatrix,
    pub schedule: GameSchedule,
    pub shift: ShiftRule,
    pub initial: WalkerState,
    pub steps: u64,
}

fn build_coin(
    kind: CoinKind,
    unit: AngleUnit,
    params: &[f64],
    convention: KTermConvention,
    which: &str,
) -> Result<CoinMatrix> {
    let to_rad = |v: f64| match unit {
        AngleUnit::Rad => v,
        AngleUnit::Deg => v.to_radians(),
    };
    match kind {
        CoinKind::Qubit => {
            let [a, b, g]: [f64; 3] = params.try_into().map_err(|_| {
                QwalkError::Validation(format!(
                    "coin {which}: qubit coin takes 3 angles, got {}",
                    params.len()
                ))
            })?;
            Ok(build_su2(Su2Params::new(to_rad(a), to_rad(b), to_rad(g))))
        }
        CoinKind::Qutrit => {
            let [a, b, g, t]: [f64; 4] = params.try_into().map_err(|_| {
                QwalkError::Validation(format!(
                    "coin {which}: qutrit coin takes 4 angles, got {}",
                    params.len()
                ))
            })?;
            build_qutrit(
                QutritParams::new(to_rad(a), to_rad(b), to_rad(g), to_rad(t)),
                convention,
            )
        }
    }
}

impl ScenarioConfig {
    pub fn build(&self) -> Result<Scenario> {
        let basis = match self.coin_kind {
            CoinKind::Qubit => CoinBasis::qubit(),
            CoinKind::Qutrit => CoinBasis::qutrit(),
        };
        let coin_a = build_coin(
            self.coin_kind,
            self.angle_unit,
            &self.coin_a,
            self.k_term_convention,
            "A",
        )?;
        let coin_b = build_coin(
            self.coin_kind,
            self.angle_unit,
            &self.coin_b,
            self.k_term_convention,
            "B",
        )?;
        let schedule = self.schedule.build()?;
        let shift = self.shift.build()?;
        shift.compile(&basis)?; // shift labels must cover the basis
        let amplitudes: Vec<Complex64> = self
            .initial_amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let initial = WalkerState::new_localized(self.initial_position, amplitudes, basis.clone())?;
        Ok(Scenario {
            basis,
            coin_a,
            coin_b,
            schedule,
            shift,
            initial,
            steps: self.steps,
        })
    }
}

/// Parses and validates a scenario document.
pub fn load_scenario(json: &str) -> Result<(ScenarioConfig, Scenario)> {
    let config: ScenarioConfig = serde_json::from_str(json)?;
    let scenario = config.build()?;
    Ok((config, scenario))
}

#[derive(Clone, Debug)]
pub struct ScenarioRun {
    pub series: Vec<PayoffPoint>,
    pub final_state: WalkerState,
}

/// Runs the scenario, streaming the payoff series (the trajectory itself is
/// not retained).
pub fn run_scenario(scenario: &Scenario) -> Result<ScenarioRun> {
    let mut series = Vec::with_capacity(scenario.steps as usize + 1);
    let final_state = evolve_with(
        &scenario.initial,
        &scenario.coin_a,
        &scenario.coin_b,
        &scenario.schedule,
        &scenario.shift,
        scenario.steps,
        |t, st| series.push(payoff_point(t, st)),
    )?;
    Ok(ScenarioRun {
        series,
        final_state,
    })
}

// ---------------------------------------------------------------------------
// Parameter sweep
// ---------------------------------------------------------------------------

/// Axis values for one qutrit coin in a sweep grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamGrid {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub theta: Vec<f64>,
}

impl ParamGrid {
    fn points(&self) -> Vec<QutritParams> {
        let mut out = Vec::new();
        for &a in &self.alpha {
            for &b in &self.beta {
                for &g in &self.gamma {
                    for &t in &self.theta {
                        out.push(QutritParams::new(a, b, g, t));
                    }
                }
            }
        }
        out
    }
}

/// Sweep over qutrit coin parameters with a fixed shift, initial state, and
/// step count. Angles are radians.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub steps: u64,
    pub shift: ShiftSpec,
    #[serde(default)]
    pub initial_position: i64,
    pub initial_amplitudes: Vec<[f64; 2]>,
    #[serde(default)]
    pub k_term_convention: KTermConvention,
    pub coin_a: ParamGrid,
    pub coin_b: ParamGrid,
}

pub const SWEEP_CSV_HEADER: &str =
    "alphaA,betaA,gammaA,thetaA,alphaB,betaB,gammaB,thetaB,outcome_AAAA,outcome_BBBB,outcome_ABAB,paradox";

fn final_outcome(
    initial: &WalkerState,
    coin_a: &CoinMatrix,
    coin_b: &CoinMatrix,
    schedule: &GameSchedule,
    shift: &ShiftRule,
    steps: u64,
) -> Result<Outcome> {
    let final_state = evolve_with(initial, coin_a, coin_b, schedule, shift, steps, |_, _| {})?;
    Ok(classify(
        crate::payoff::payoff(&final_state),
        DEFAULT_DRAW_TOLERANCE,
    ))
}

/// Classification table over the A×B parameter grid. Rows follow grid order
/// (A-point major, B-point minor) regardless of evaluation order; grid
/// points whose coins fail the unitarity gate are emitted as
/// `SKIPPED_NONUNITARY`.
pub fn sweep(grid: &GridSpec) -> Result<String> {
    let shift = grid.shift.build()?;
    let basis = CoinBasis::qutrit();
    shift.compile(&basis)?;
    let amplitudes: Vec<Complex64> = grid
        .initial_amplitudes
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    let initial = WalkerState::new_localized(grid.initial_position, amplitudes, basis)?;

    let points: Vec<(QutritParams, QutritParams)> = grid
        .coin_a
        .points()
        .into_iter()
        .flat_map(|pa| grid.coin_b.points().into_iter().map(move |pb| (pa, pb)))
        .collect();

    let aaaa = GameSchedule::pattern("A")?;
    let bbbb = GameSchedule::pattern("B")?;
    let abab = GameSchedule::periodic(2)?;

    let rows: Vec<String> = points
        .par_iter()
        .map(|&(pa, pb)| -> Result<String> {
            let prefix = format!(
                "{},{},{},{},{},{},{},{}",
                pa.alpha, pa.beta, pa.gamma, pa.theta, pb.alpha, pb.beta, pb.gamma, pb.theta
            );
            let coins = build_qutrit(pa, grid.k_term_convention)
                .and_then(|a| build_qutrit(pb, grid.k_term_convention).map(|b| (a, b)));
            let (coin_a, coin_b) = match coins {
                Ok(c) => c,
                Err(QwalkError::NonUnitary { .. }) => {
                    return Ok(format!(
                        "{prefix},SKIPPED_NONUNITARY,SKIPPED_NONUNITARY,SKIPPED_NONUNITARY,false"
                    ));
                }
                Err(e) => return Err(e),
            };
            let o_a = final_outcome(&initial, &coin_a, &coin_b, &aaaa, &shift, grid.steps)?;
            let o_b = final_outcome(&initial, &coin_a, &coin_b, &bbbb, &shift, grid.steps)?;
            let o_ab = final_outcome(&initial, &coin_a, &coin_b, &abab, &shift, grid.steps)?;
            let paradox =
                o_a == Outcome::Loss && o_b == Outcome::Loss && o_ab == Outcome::Win;
            Ok(format!("{prefix},{o_a},{o_b},{o_ab},{paradox}"))
        })
        .collect::<Result<_>>()?;

    let mut csv = String::from(SWEEP_CSV_HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    Ok(csv)
}
