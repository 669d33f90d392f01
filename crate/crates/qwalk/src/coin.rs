//! Coin operator construction.
//!
//! Two families: the three-angle SU(2) qubit coin and the four-angle qutrit
//! coin built from a real circulant part plus an imaginary part. Every
//! constructed matrix passes a unitarity gate; a defect above
//! [`UNITARITY_TOLERANCE`] is a construction error, never a warning.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QwalkError, Result};

/// Max-entry magnitude of C†C - I allowed at construction. Double-precision
/// trigonometry leaves defects below ~1e-14; anything past 1e-10 is a
/// formula error rather than roundoff.
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su2Params {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Su2Params {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn from_degrees(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::new(
            alpha.to_radians(),
            beta.to_radians(),
            gamma.to_radians(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QutritParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub theta: f64,
}

impl QutritParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, theta: f64) -> Self {
        Self {
            alpha,
            beta,
            gamma,
            theta,
        }
    }
}

/// The six real entries the qutrit coin is assembled from. Each is an
/// average of three cosines/sines, so each lies in [-1, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QutritEntries {
    pub i: f64,
    pub j: f64,
    pub k: f64,
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

/// Phase offset used in the K entry.
///
/// `Corrected` (the default) uses 4π/3, completing the equally spaced
/// (0, 2π/3, 4π/3) phase pattern that the imaginary R/G/B triple already
/// follows; `AsPrinted` uses π/3 and produces non-unitary matrices for
/// several of the bundled game parameters. It is kept behind this explicit
/// flag for inspection and negative tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KTermConvention {
    #[default]
    Corrected,
    AsPrinted,
}

impl KTermConvention {
    fn k_phase(self) -> f64 {
        match self {
            KTermConvention::Corrected => 4.0 * std::f64::consts::PI / 3.0,
            KTermConvention::AsPrinted => std::f64::consts::PI / 3.0,
        }
    }
}

/// A d×d complex matrix validated unitary at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct CoinMatrix {
    dimension: usize,
    entries: Vec<Complex64>, // row-major
}

impl CoinMatrix {
    /// Validates the unitarity gate. `params` is carried into the error for
    /// diagnostics and may be empty for hand-built matrices.
    pub fn try_new(dimension: usize, entries: Vec<Complex64>, params: &[f64]) -> Result<Self> {
        assert_eq!(entries.len(), dimension * dimension);
        let defect = unitarity_defect(dimension, &entries);
        if defect > UNITARITY_TOLERANCE {
            return Err(QwalkError::NonUnitary {
                defect,
                tolerance: UNITARITY_TOLERANCE,
                params: params.to_vec(),
            });
        }
        Ok(Self { dimension, entries })
    }

    pub fn identity(dimension: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dimension * dimension];
        for i in 0..dimension {
            entries[i * dimension + i] = Complex64::new(1.0, 0.0);
        }
        Self { dimension, entries }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dimension + col]
    }

    /// Matrix-vector product against a coin-amplitude vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(v.len(), self.dimension);
        (0..self.dimension)
            .map(|r| {
                (0..self.dimension)
                    .map(|c| self.entry(r, c) * v[c])
                    .sum()
            })
            .collect()
    }

    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(self.dimension, &self.entries)
    }
}

/// Max-entry magnitude of C†C - I for a square matrix candidate.
pub fn unitarity_defect(dimension: usize, entries: &[Complex64]) -> f64 {
    assert_eq!(entries.len(), dimension * dimension);
    let mut worst = 0.0f64;
    for r in 0..dimension {
        for c in 0..dimension {
            // (C†C)_rc = Σ_m conj(C_mr) C_mc
            let mut sum = Complex64::new(0.0, 0.0);
            for m in 0..dimension {
                sum += entries[m * dimension + r].conj() * entries[m * dimension + c];
            }
            if r == c {
                sum -= 1.0;
            }
            worst = worst.max(sum.norm());
        }
    }
    worst
}

/// 2×2 SU(2)-style coin:
///
/// ```text
/// [ e^{iα} cos β   -e^{-iγ} sin β ]
/// [ e^{iγ} sin β    e^{-iα} cos β ]
/// ```
pub fn build_su2(p: Su2Params) -> CoinMatrix {
    let (cb, sb) = (p.beta.cos(), p.beta.sin());
    let entries = vec![
        Complex64::from_polar(cb, p.alpha),
        -Complex64::from_polar(sb, -p.gamma),
        Complex64::from_polar(sb, p.gamma),
        Complex64::from_polar(cb, -p.alpha),
    ];
    CoinMatrix::try_new(2, entries, &[p.alpha, p.beta, p.gamma])
        .expect("SU(2) coin is unitary for all parameters")
}

/// The six entries of the qutrit coin:
///
/// ```text
/// 3I = cos γ + 2 cos θ cos α
/// 3J = cos γ + 2 cos θ cos(α + 2π/3)
/// 3K = cos γ + 2 cos θ cos(α + φ)      φ = 4π/3 corrected, π/3 as printed
/// 3R = sin γ + 2 sin θ cos β
/// 3G = sin γ + 2 sin θ cos(β + 2π/3)
/// 3B = sin γ + 2 sin θ cos(β + 4π/3)
/// ```
pub fn qutrit_entries(p: QutritParams, convention: KTermConvention) -> QutritEntries {
    let two_pi_3 = 2.0 * std::f64::consts::PI / 3.0;
    let four_pi_3 = 4.0 * std::f64::consts::PI / 3.0;
    let (cg, sg) = (p.gamma.cos(), p.gamma.sin());
    let (ct, st) = (p.theta.cos(), p.theta.sin());
    QutritEntries {
        i: (cg + 2.0 * ct * p.alpha.cos()) / 3.0,
        j: (cg + 2.0 * ct * (p.alpha + two_pi_3).cos()) / 3.0,
        k: (cg + 2.0 * ct * (p.alpha + convention.k_phase()).cos()) / 3.0,
        r: (sg + 2.0 * st * p.beta.cos()) / 3.0,
        g: (sg + 2.0 * st * (p.beta + two_pi_3).cos()) / 3.0,
        b: (sg + 2.0 * st * (p.beta + four_pi_3).cos()) / 3.0,
    }
}

/// 3×3 qutrit coin, real circulant part plus imaginary part:
///
/// ```text
/// [ I J K ]     [ R B G ]
/// [ K I J ] + i [ B G R ]
/// [ J K I ]     [ G R B ]
/// ```
///
/// Fails the unitarity gate (with the defect and offending parameters in
/// the error) whenever the entries do not compose a unitary.
pub fn build_qutrit(p: QutritParams, convention: KTermConvention) -> Result<CoinMatrix> {
    let e = qutrit_entries(p, convention);
    let m = |re: f64, im: f64| Complex64::new(re, im);
    let entries = vec![
        m(e.i, e.r), m(e.j, e.b), m(e.k, e.g),
        m(e.k, e.b), m(e.i, e.g), m(e.j, e.r),
        m(e.j, e.g), m(e.k, e.r), m(e.i, e.b),
    ];
    CoinMatrix::try_new(3, entries, &[p.alpha, p.beta, p.gamma, p.theta])
}

/// Game-A qutrit parameters (π, π/2, π, π).
pub fn game_a_params() -> QutritParams {
    use std::f64::consts::PI;
    QutritParams::new(PI, PI / 2.0, PI, PI)
}

/// Game-B qutrit parameters (π/2, π/2, 3π/2, π/2).
pub fn game_b_params() -> QutritParams {
    use std::f64::consts::PI;
    QutritParams::new(PI / 2.0, PI / 2.0, 3.0 * PI / 2.0, PI / 2.0)
}
