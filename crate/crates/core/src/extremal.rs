//! Candidate functions and the starlikeness functional
//! `Φ(z) = 1 + (1/b)(z f'(z)/f(z) − 1)`.
//!
//! The extremal function is `f*(z) = z/(1 − z)^{2b}`. Its functional is
//! `(1 + z)/(1 − z)` for every `b`, which makes it a good regression check on
//! branch handling.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex_core::{normalize_angle, right_half_power, DiskPoint, OrderParameter};
use crate::{KoebeError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    Identity,
    Extremal,
    RotatedExtremal,
}

impl CandidateKind {
    pub fn name(&self) -> &'static str {
        match self {
            CandidateKind::Identity => "identity",
            CandidateKind::Extremal => "extremal",
            CandidateKind::RotatedExtremal => "rotated",
        }
    }
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CandidateKind {
    type Err = KoebeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(CandidateKind::Identity),
            "extremal" => Ok(CandidateKind::Extremal),
            "rotated" | "rotated-extremal" => Ok(CandidateKind::RotatedExtremal),
            other => Err(KoebeError::InvalidParameter(format!(
                "unknown candidate '{other}' (expected identity, extremal or rotated)"
            ))),
        }
    }
}

/// A member of S*(1 − b) used as a test function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateFunction {
    kind: CandidateKind,
    order: OrderParameter,
    rotation: f64,
}

impl CandidateFunction {
    /// Build a candidate, checking `f(0) = 0` and `f'(0) = 1` numerically.
    pub fn new(kind: CandidateKind, order: OrderParameter, rotation: f64) -> Result<Self> {
        if !rotation.is_finite() {
            return Err(KoebeError::NonFinite("rotation angle"));
        }
        let rotation = match kind {
            CandidateKind::RotatedExtremal => normalize_angle(rotation),
            _ => 0.0,
        };
        let f = Self {
            kind,
            order,
            rotation,
        };
        f.check_normalization()?;
        Ok(f)
    }

    pub fn identity(order: OrderParameter) -> Self {
        Self {
            kind: CandidateKind::Identity,
            order,
            rotation: 0.0,
        }
    }

    pub fn extremal(order: OrderParameter) -> Self {
        Self {
            kind: CandidateKind::Extremal,
            order,
            rotation: 0.0,
        }
    }

    pub fn rotated(order: OrderParameter, alpha: f64) -> Self {
        Self {
            kind: CandidateKind::RotatedExtremal,
            order,
            rotation: normalize_angle(alpha),
        }
    }

    pub fn kind(&self) -> CandidateKind {
        self.kind
    }

    pub fn order(&self) -> OrderParameter {
        self.order
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    fn check_normalization(&self) -> Result<()> {
        const H: f64 = 1e-6;
        for k in 0..4 {
            let z = DiskPoint::from_polar(H, TAU * k as f64 / 4.0)?;
            let defect = (evaluate(self, z) / z.value() - 1.0).norm();
            if defect.is_nan() || defect >= 1e-5 {
                return Err(KoebeError::InvalidParameter(format!(
                    "{} candidate fails f'(0) = 1 (defect {defect:e})",
                    self.kind
                )));
            }
        }
        if evaluate(self, DiskPoint::ORIGIN).norm() != 0.0 {
            return Err(KoebeError::InvalidParameter(format!(
                "{} candidate fails f(0) = 0",
                self.kind
            )));
        }
        Ok(())
    }

    /// `|f(r₀) − r₀|`. Candidates are not rescaled to satisfy the Montel
    /// condition, so this is generally nonzero.
    pub fn montel_defect(&self, r0: f64) -> Result<f64> {
        let p = DiskPoint::from_parts(r0, 0.0)?;
        Ok((evaluate(self, p) - r0).norm())
    }

    #[inline]
    fn unrotate(&self, z: Complex64) -> Complex64 {
        z * Complex64::from_polar(1.0, -self.rotation)
    }
}

/// `f(z)`.
pub fn evaluate(f: &CandidateFunction, z: DiskPoint) -> Complex64 {
    z.value() * quotient(f, z)
}

/// `f(z)/z`, continued to `1` at the origin.
pub fn quotient(f: &CandidateFunction, z: DiskPoint) -> Complex64 {
    let z = z.value();
    let two_b = 2.0 * f.order.value();
    match f.kind {
        CandidateKind::Identity => Complex64::new(1.0, 0.0),
        CandidateKind::Extremal => right_half_power(1.0 - z, -two_b),
        CandidateKind::RotatedExtremal => right_half_power(1.0 - f.unrotate(z), -two_b),
    }
}

/// `q'(z)/q(z)` for the quotient `q(z) = f(z)/z`. Regular at the origin, so
/// callers never divide `z f'/f − 1` by `z` themselves.
pub(crate) fn quotient_log_derivative(f: &CandidateFunction, z: DiskPoint) -> Complex64 {
    let z = z.value();
    let two_b = 2.0 * f.order.value();
    match f.kind {
        CandidateKind::Identity => Complex64::new(0.0, 0.0),
        CandidateKind::Extremal => two_b / (1.0 - z),
        CandidateKind::RotatedExtremal => {
            let e = Complex64::from_polar(1.0, -f.rotation);
            two_b * e / (1.0 - e * z)
        }
    }
}

/// `z f'(z)/f(z)` in closed form; equals `1` at the origin.
pub fn log_derivative(f: &CandidateFunction, z: DiskPoint) -> Complex64 {
    let z = z.value();
    let two_b = 2.0 * f.order.value();
    match f.kind {
        CandidateKind::Identity => Complex64::new(1.0, 0.0),
        CandidateKind::Extremal => 1.0 + two_b * z / (1.0 - z),
        CandidateKind::RotatedExtremal => {
            let w = f.unrotate(z);
            1.0 + two_b * w / (1.0 - w)
        }
    }
}

/// `Φ(z) = 1 + (1/b)(z f'(z)/f(z) − 1)`; membership at `z` means `Re Φ > 0`.
pub fn starlikeness_functional(f: &CandidateFunction, z: DiskPoint) -> Complex64 {
    functional_from_log_derivative(log_derivative(f, z), f.order)
}

pub(crate) fn functional_from_log_derivative(
    log_derivative: Complex64,
    order: OrderParameter,
) -> Complex64 {
    1.0 + (log_derivative - 1.0) / order.value()
}
