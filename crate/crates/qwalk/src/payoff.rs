//! Left/origin/right probability split and the P_R - P_L payoff.
//!
//! Origin mass counts toward neither side, so a symmetric distribution is
//! an exact draw.

use std::io::Write;

use crate::state::WalkerState;

/// Separates exact symmetry (zero to roundoff) from genuine small biases.
pub const DEFAULT_DRAW_TOLERANCE: f64 = 1e-10;

/// One row of a payoff time series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PayoffPoint {
    pub t: u64,
    pub p_left: f64,
    pub p_origin: f64,
    pub p_right: f64,
    pub payoff: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Win,
    Loss,
    Draw,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::Win => write!(f, "WIN"),
            Outcome::Loss => write!(f, "LOSS"),
            Outcome::Draw => write!(f, "DRAW"),
        }
    }
}

/// (p_left, p_origin, p_right): mass strictly left of the origin, at the
/// origin, and strictly right of it.
pub fn split_probabilities(state: &WalkerState) -> (f64, f64, f64) {
    let (mut left, mut origin, mut right) = (0.0, 0.0, 0.0);
    for (n, v) in state.occupied() {
        let p: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        match n.cmp(&0) {
            std::cmp::Ordering::Less => left += p,
            std::cmp::Ordering::Equal => origin += p,
            std::cmp::Ordering::Greater => right += p,
        }
    }
    (left, origin, right)
}

/// P_R - P_L.
pub fn payoff(state: &WalkerState) -> f64 {
    let (left, _, right) = split_probabilities(state);
    right - left
}

/// Win if the payoff is above the draw band, Loss below, Draw inside it.
pub fn classify(payoff_value: f64, draw_tolerance: f64) -> Outcome {
    assert!(draw_tolerance >= 0.0);
    if payoff_value.abs() <= draw_tolerance {
        Outcome::Draw
    } else if payoff_value > 0.0 {
        Outcome::Win
    } else {
        Outcome::Loss
    }
}

pub fn payoff_point(t: u64, state: &WalkerState) -> PayoffPoint {
    let (p_left, p_origin, p_right) = split_probabilities(state);
    PayoffPoint {
        t,
        p_left,
        p_origin,
        p_right,
        payoff: p_right - p_left,
    }
}

/// One point per trajectory entry, t ascending.
pub fn payoff_series(trajectory: &[WalkerState]) -> Vec<PayoffPoint> {
    trajectory
        .iter()
        .enumerate()
        .map(|(t, st)| payoff_point(t as u64, st))
        .collect()
}

/// CSV emission: `step,p_left,p_origin,p_right,payoff`, one row per step,
/// 17 significant digits, LF line endings.
pub fn write_csv<W: Write>(points: &[PayoffPoint], mut w: W) -> std::io::Result<()> {
    w.write_all(b"step,p_left,p_origin,p_right,payoff\n")?;
    for p in points {
        writeln!(
            w,
            "{},{:.16e},{:.16e},{:.16e},{:.16e}",
            p.t, p.p_left, p.p_origin, p.p_right, p.payoff
        )?;
    }
    Ok(())
}

pub fn csv_string(points: &[PayoffPoint]) -> String {
    let mut buf = Vec::new();
    write_csv(points, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}
