//! Montel-normalized modulus bounds and the Koebe-domain boundary.
//!
//! Setting `v = r₀` (so `f(v) = r₀`) and `u = r e^{iθ}` in the two-point
//! bound gives
//!
//! ```text
//! M(r, θ) = 2r (1−r₀²)^{2b} / ( (1+|b|) |1−r₀re^{iθ}|^{2b−2} [|1−r₀re^{iθ}| + |re^{iθ}−r₀|]² )
//! ```
//!
//! and the boundary radius is the limit `r → 1⁻`. Because `r₀` is real,
//! `|1 − r₀e^{iθ}| = |e^{iθ} − r₀|`, the bracket tends to `2|1 − r₀e^{iθ}|`
//! and `|1 − r₀e^{iθ}|² = 1 − 2r₀cos θ + r₀²`, so
//!
//! ```text
//! R(θ) = (1−r₀²)^{2b} / ( 2(1+|b|) (1 − 2r₀cos θ + r₀²)^{b} ).
//! ```
//!
//! The exponent on the θ-factor is `b`, not `2b`.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::Bracket;
use crate::complex_core::{pos_powf, BoundaryPoint, OrderParameter};
use crate::{KoebeError, Result};

/// The Montel fixed point `r₀ ∈ (0, 1)` together with the order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MontelConfig {
    r0: f64,
    order: OrderParameter,
}

impl MontelConfig {
    pub fn new(r0: f64, order: OrderParameter) -> Result<Self> {
        if !(r0 > 0.0 && r0 < 1.0) {
            return Err(KoebeError::InvalidParameter(format!(
                "r0 must lie strictly between 0 and 1, got {r0}"
            )));
        }
        Ok(Self { r0, order })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn order(&self) -> OrderParameter {
        self.order
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(KoebeError::InvalidParameter(format!(
            "r must lie strictly between 0 and 1, got {r}"
        )))
    }
}

/// One member of the Montel-normalized modulus bound at `z = r e^{iθ}`.
pub fn montel_bound(
    r: f64,
    theta: BoundaryPoint,
    cfg: &MontelConfig,
    bracket: Bracket,
) -> Result<f64> {
    check_radius(r)?;
    let z = Complex64::from_polar(r, theta.theta());
    let r0 = cfg.r0;
    let a = (1.0 - r0 * z).norm();
    let d = (z - r0).norm();
    if d == 0.0 {
        return Err(KoebeError::Degenerate("r·e^(iθ) coincides with r0"));
    }
    let b = cfg.order;
    let br = match bracket {
        Bracket::Plus => a + d,
        Bracket::Minus => a - d,
    };
    Ok(2.0 * r * pos_powf(1.0 - r0 * r0, 2.0 * b.re())
        / ((1.0 + b.modulus()) * pos_powf(a, 2.0 * b.re() - 2.0) * br * br))
}

/// Lower bound `M(r, θ)` on `|f(r e^{iθ})|`.
pub fn montel_lower_m(r: f64, theta: BoundaryPoint, cfg: &MontelConfig) -> Result<f64> {
    montel_bound(r, theta, cfg, Bracket::Plus)
}

/// Upper bound on `|f(r e^{iθ})|`; grows without bound as `r → 1⁻`.
pub fn montel_upper(r: f64, theta: BoundaryPoint, cfg: &MontelConfig) -> Result<f64> {
    montel_bound(r, theta, cfg, Bracket::Minus)
}

/// Boundary radius `R(θ)` of the Montel-normalized Koebe domain.
pub fn koebe_radius(theta: BoundaryPoint, cfg: &MontelConfig) -> f64 {
    let r0 = cfg.r0;
    let b = cfg.order;
    // 1 − 2r₀cosθ + r₀² = |1 − r₀e^{iθ}|² ≥ (1 − r₀)² > 0
    let q = 1.0 - 2.0 * r0 * theta.theta().cos() + r0 * r0;
    pos_powf(1.0 - r0 * r0, 2.0 * b.re()) / (2.0 * (1.0 + b.modulus()) * pos_powf(q, b.re()))
}

/// `|M(1 − ε, θ) − R(θ)|` for each `ε`.
pub fn limit_check(
    theta: BoundaryPoint,
    cfg: &MontelConfig,
    epsilons: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let radius = koebe_radius(theta, cfg);
    epsilons
        .iter()
        .map(|&eps| {
            if !(eps > 0.0 && eps < 1.0 - cfg.r0) {
                return Err(KoebeError::InvalidParameter(format!(
                    "epsilon must lie in (0, 1 - r0), got {eps}"
                )));
            }
            let m = montel_lower_m(1.0 - eps, theta, cfg)?;
            Ok((eps, (m - radius).abs()))
        })
        .collect()
}

/// Named specializations of the order parameter.
///
/// | case | order `b`              | `R(θ)`                                                     |
/// |------|------------------------|------------------------------------------------------------|
/// | I    | `1`                    | `(1−r₀²)² / (4(1−2r₀cosθ+r₀²))`                            |
/// | II   | `1−α`                  | `(1−r₀²)^{2(1−α)} / (2(2−α)(1−2r₀cosθ+r₀²)^{1−α})`         |
/// | III  | `cos λ·e^{−iλ}`        | `(1−r₀²)^{2cos²λ} / (2(1+cos λ)(1−2r₀cosθ+r₀²)^{cos²λ})`   |
/// | IV   | `(1−α)cos λ·e^{−iλ}`   | general formula with `|b| = (1−α)cos λ`, `Re b = (1−α)cos²λ` |
///
/// Complex orders enter through `|b|` and `Re b` only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialCase {
    /// Starlike.
    I,
    /// Starlike of order `α ∈ [0, 1)`.
    II { alpha: f64 },
    /// Spirallike, `|λ| < π/2`.
    III { lambda: f64 },
    /// Spirallike of order `α`.
    IV { alpha: f64, lambda: f64 },
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(KoebeError::InvalidParameter(format!(
            "alpha must lie in [0, 1), got {alpha}"
        )))
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.abs() < FRAC_PI_2 {
        Ok(())
    } else {
        Err(KoebeError::InvalidParameter(format!(
            "lambda must satisfy |lambda| < pi/2, got {lambda}"
        )))
    }
}

impl SpecialCase {
    pub fn order(&self) -> Result<OrderParameter> {
        match *self {
            SpecialCase::I => OrderParameter::real(1.0),
            SpecialCase::II { alpha } => {
                check_alpha(alpha)?;
                OrderParameter::real(1.0 - alpha)
            }
            SpecialCase::III { lambda } => {
                check_lambda(lambda)?;
                OrderParameter::spiral(lambda)
            }
            SpecialCase::IV { alpha, lambda } => {
                check_alpha(alpha)?;
                check_lambda(lambda)?;
                OrderParameter::new((1.0 - alpha) * OrderParameter::spiral(lambda)?.value())
            }
        }
    }
}

/// `R(θ)` for a named case, through [`koebe_radius`].
pub fn special_case_radius(case: SpecialCase, theta: BoundaryPoint, r0: f64) -> Result<f64> {
    let cfg = MontelConfig::new(r0, case.order()?)?;
    Ok(koebe_radius(theta, &cfg))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileSample {
    pub theta: f64,
    pub radius: f64,
}

/// `R(θᵢ)` on the uniform half-open grid `θᵢ = 2πi/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct KoebeProfile {
    pub config: MontelConfig,
    pub samples: Vec<ProfileSample>,
}

impl KoebeProfile {
    pub fn min(&self) -> Option<ProfileSample> {
        self.samples
            .iter()
            .copied()
            .min_by(|a, b| a.radius.total_cmp(&b.radius))
    }

    pub fn max(&self) -> Option<ProfileSample> {
        self.samples
            .iter()
            .copied()
            .max_by(|a, b| a.radius.total_cmp(&b.radius))
    }
}

pub fn boundary_profile(cfg: &MontelConfig, n_samples: usize) -> Result<KoebeProfile> {
    if n_samples < 2 {
        return Err(KoebeError::InvalidParameter(format!(
            "samples must be at least 2, got {n_samples}"
        )));
    }
    let samples = (0..n_samples)
        .map(|i| {
            let theta = TAU * i as f64 / n_samples as f64;
            ProfileSample {
                theta,
                radius: koebe_radius(BoundaryPoint::new(theta), cfg),
            }
        })
        .collect();
    Ok(KoebeProfile {
        config: *cfg,
        samples,
    })
}
