//! Deterministic simulator for one-dimensional discrete-time quantum walks
//! with two-state (qubit) and three-state (qutrit) coins.
//!
//! A walk alternates a unitary coin operation on the internal coin space
//! with a coin-conditioned shift on the integer lattice. Two coins A and B
//! are assigned to time steps by a game schedule, and the payoff of the
//! resulting game is P_R - P_L: the probability mass strictly right of the
//! origin minus the mass strictly left of it. Qutrit walks have a wait
//! state (a coin state with zero displacement), and alternating two
//! individually losing qutrit games can yield a winning one.
//!
//! Modules:
//! - [`state`]: sparse walker wavefunction and probability queries
//! - [`coin`]: SU(2) qubit and four-angle qutrit coin construction with a
//!   unitarity gate
//! - [`evolve`]: shift rules, game schedules, and the step/evolve engine
//! - [`payoff`]: probability split, payoff, win/loss/draw classification,
//!   CSV emission
//! - [`oracle`]: independent brute-force path-sum verifier
//! - [`scenario`] / [`presets`]: JSON scenario configs, figure presets,
//!   and parameter sweeps

pub mod coin;
pub mod error;
pub mod evolve;
pub mod oracle;
pub mod payoff;
pub mod presets;
pub mod scenario;
pub mod state;

pub use coin::{
    build_qutrit, build_su2, qutrit_entries, unitarity_defect, CoinMatrix, KTermConvention,
    QutritEntries, QutritParams, Su2Params, UNITARITY_TOLERANCE,
};
pub use error::{QwalkError, Result};
pub use evolve::{
    apply_coin, apply_shift, evolve, evolve_with, step, CoinSelector, GameSchedule, ShiftRule,
};
pub use oracle::{compare_with_engine, oracle_amplitude, oracle_state, PathSumConfig};
pub use payoff::{
    classify, payoff, payoff_series, split_probabilities, Outcome, PayoffPoint,
    DEFAULT_DRAW_TOLERANCE,
};
pub use presets::{all_presets, preset, FigurePreset};
pub use scenario::{load_scenario, run_scenario, sweep, GridSpec, Scenario, ScenarioConfig};
pub use state::{Amplitude, CoinBasis, WalkerState};
