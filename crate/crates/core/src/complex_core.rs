//! Branch-disciplined complex primitives and the unit-disk automorphism.
//!
//! Every complex exponent in this crate goes through [`principal_power`],
//! i.e. `w^c = exp(c · Log w)` with `Im Log w ∈ (−π, π]`. The bases that
//! occur downstream are `1 − z` and `1 − u·v̄` with `z, u, v` in the disk,
//! which all have strictly positive real part, so no branch cut is crossed.
//!
//! Bound values (which are positive reals) use [`pos_power`]: for `x > 0`,
//! `|x^c| = x^{Re c}`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::{KoebeError, Result};

/// The complex order datum `b ≠ 0`, with `|b|` and `Re b` cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderParameter {
    b: Complex64,
    modulus: f64,
}

impl OrderParameter {
    pub fn new(b: Complex64) -> Result<Self> {
        if !b.re.is_finite() || !b.im.is_finite() {
            return Err(KoebeError::NonFinite("order parameter"));
        }
        if b.re == 0.0 && b.im == 0.0 {
            return Err(KoebeError::ZeroOrder);
        }
        Ok(Self {
            b,
            modulus: b.norm(),
        })
    }

    pub fn real(b: f64) -> Result<Self> {
        Self::new(Complex64::new(b, 0.0))
    }

    /// `b = cos λ · e^{−iλ}`, the spirallike order.
    pub fn spiral(lambda: f64) -> Result<Self> {
        Self::new(lambda.cos() * Complex64::from_polar(1.0, -lambda))
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.b
    }

    #[inline]
    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.b.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.b.im
    }

    /// True when `b` is a positive real (`Re b = |b|`).
    pub fn is_positive_real(&self) -> bool {
        self.b.im == 0.0 && self.b.re > 0.0
    }
}

impl fmt::Display for OrderParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.b.re, self.b.im)
    }
}

/// A point of the open unit disk. No epsilon slack: `|z| < 1` strictly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Complex64 { re: 0.0, im: 0.0 });

    pub fn new(z: Complex64) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(KoebeError::NonFinite("disk point"));
        }
        if z.norm() >= 1.0 {
            return Err(KoebeError::OutsideDisk { re: z.re, im: z.im });
        }
        Ok(Self(z))
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    #[inline]
    pub fn is_origin(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    /// Rotate by `e^{iφ}`; rotations preserve the disk.
    pub fn rotate(&self, phi: f64) -> DiskPoint {
        DiskPoint(self.0 * Complex64::from_polar(1.0, phi))
    }
}

/// A direction `θ`, normalized into `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BoundaryPoint(f64);

impl BoundaryPoint {
    pub fn new(theta: f64) -> Self {
        Self(normalize_angle(theta))
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.0
    }

    #[inline]
    pub fn unit(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.0)
    }
}

/// Reduce an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Principal logarithm with `Im ∈ (−π, π]`.
pub fn principal_log(w: Complex64) -> Complex64 {
    let mut arg = w.im.atan2(w.re);
    // atan2(-0.0, x<0) yields -π; the principal value is +π
    if arg <= -PI {
        arg = PI;
    }
    Complex64::new(w.norm().ln(), arg)
}

/// `w^c = exp(c · Log w)` on the principal branch.
///
/// For `w = 0` the value is `0` when `Re c > 0` (continuity) and an error
/// otherwise.
pub fn principal_power(w: Complex64, c: Complex64) -> Result<Complex64> {
    if w.re == 0.0 && w.im == 0.0 {
        return if c.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(KoebeError::ZeroBase)
        };
    }
    if c.re == 0.0 && c.im == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok((c * principal_log(w)).exp())
}

/// Principal power for a base known to lie in the right half-plane.
///
/// All bases in the bound and extremal formulas (`1 − z`, `1 − u v̄`,
/// `1 + v̄ z`) satisfy this, so the branch cut is never approached.
pub(crate) fn right_half_power(w: Complex64, c: Complex64) -> Complex64 {
    debug_assert!(w.re > 0.0, "base {w} is not in the right half-plane");
    (c * principal_log(w)).exp()
}

/// `x^{Re c}` for `x > 0`, i.e. `|x^c|`.
pub fn pos_power(x: f64, c: Complex64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(KoebeError::NonPositiveBase(x));
    }
    Ok(x.powf(c.re))
}

/// `x^{e}` for a positive real base where positivity is structural.
#[inline]
pub(crate) fn pos_powf(x: f64, e: f64) -> f64 {
    debug_assert!(x > 0.0);
    x.powf(e)
}

/// `u = (z + v)/(1 + v̄ z)`, the automorphism sending `0 ↦ v`.
pub fn mobius_from_disk(z: DiskPoint, v: DiskPoint) -> DiskPoint {
    let (z, v) = (z.value(), v.value());
    DiskPoint((z + v) / (1.0 + v.conj() * z))
}

/// `z = (u − v)/(1 − u v̄)`, the inverse of [`mobius_from_disk`].
pub fn mobius_to_disk(u: DiskPoint, v: DiskPoint) -> DiskPoint {
    let (u, v) = (u.value(), v.value());
    DiskPoint((u - v) / (1.0 - u * v.conj()))
}
