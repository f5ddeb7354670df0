//! Growth bound, the conjugated auxiliary function and the two-point
//! distortion bound.
//!
//! For `f` starlike of complex order `1 − b` and a fixed `v ≠ 0`, conjugating
//! with the automorphism `u = (z + v)/(1 + v̄ z)` gives
//!
//! ```text
//! F(z) = v (1 − u v̄)^{2b−1} (u − v) f(u) / ( u (1 − |v|²)^{2b} f(v) ).
//! ```
//!
//! Applying the growth bound
//! `2|z|/((1+|b|)(1+|z|)²) ≤ |F(z)| ≤ 2|z|/((1+|b|)(1−|z|)²)` to `F` and
//! unwinding the conjugation yields
//!
//! ```text
//! |f(u)/f(v)| ≷ 2|u|(1−|v|²)^{2b} / ( (1+|b|) |v| |1−u v̄|^{2b−2} [|1−u v̄| ± |u−v|]² ).
//! ```
//!
//! Bound values are positive reals, so powers of positive bases contribute
//! their modulus `x^{Re c}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex_core::{
    mobius_from_disk, mobius_to_disk, pos_powf, principal_power, right_half_power, DiskPoint,
    OrderParameter,
};
use crate::extremal::{
    functional_from_log_derivative, quotient, quotient_log_derivative, CandidateFunction,
};
use crate::{KoebeError, Result};

/// A two-sided bound, optionally carrying the bounded quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle: Option<f64>,
}

impl BoundPair {
    pub fn new(lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "lower {lower} exceeds upper {upper}");
        Self {
            lower,
            upper,
            middle: None,
        }
    }

    pub fn with_middle(mut self, middle: f64) -> Self {
        self.middle = Some(middle);
        self
    }

    /// `min(ln(middle/lower), ln(upper/middle))`: the relative slack of the
    /// sandwich, negative when violated. `None` without a middle or when any
    /// member is not strictly positive.
    pub fn log_margin(&self) -> Option<f64> {
        let m = self.middle?;
        if !(self.lower > 0.0 && m > 0.0 && self.upper > 0.0) {
            return None;
        }
        Some((m / self.lower).ln().min((self.upper / m).ln()))
    }

    /// True when `lower·(1 − tol) ≤ middle ≤ upper·(1 + tol)`.
    pub fn contains_middle(&self, rel_tol: f64) -> bool {
        match self.middle {
            Some(m) => self.lower * (1.0 - rel_tol) <= m && m <= self.upper * (1.0 + rel_tol),
            None => false,
        }
    }
}

/// Which bracket of the two-point bound: `[|1−u v̄| + |u−v|]²` gives the
/// lower bound, `[|1−u v̄| − |u−v|]²` the upper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bracket {
    Plus,
    Minus,
}

impl Bracket {
    #[inline]
    fn sign(self) -> f64 {
        match self {
            Bracket::Plus => 1.0,
            Bracket::Minus => -1.0,
        }
    }
}

/// One-point growth bound on `|F(z)|`. Both members vanish at `z = 0`.
pub fn growth_bounds(z: DiskPoint, b: OrderParameter) -> BoundPair {
    let r = z.norm();
    let scale = 2.0 * r / (1.0 + b.modulus());
    BoundPair::new(
        scale / ((1.0 + r) * (1.0 + r)),
        scale / ((1.0 - r) * (1.0 - r)),
    )
}

fn require_nonzero(p: DiskPoint, msg: &'static str) -> Result<()> {
    if p.is_origin() {
        Err(KoebeError::Degenerate(msg))
    } else {
        Ok(())
    }
}

/// The auxiliary function `F(z)` built from `f` by conjugation with the
/// automorphism centred at `v`. `F(0) = 0` and `F'(0) = 1`.
pub fn auxiliary_f(f: &CandidateFunction, v: DiskPoint, z: DiskPoint) -> Result<Complex64> {
    require_nonzero(v, "v must be nonzero")?;
    let u = mobius_from_disk(z, v);
    if u.is_origin() {
        return Err(KoebeError::Degenerate(
            "u = 0 (z = -v) is a removable point of F",
        ));
    }
    let b = f.order().value();
    let (uc, vc) = (u.value(), v.value());
    let one_minus_uv = 1.0 - uc * vc.conj();
    let rho = 1.0 - v.norm() * v.norm();

    let num = vc
        * right_half_power(one_minus_uv, 2.0 * b - 1.0)
        * (uc - vc)
        * crate::extremal::evaluate(f, u);
    let den =
        uc * principal_power(Complex64::new(rho, 0.0), 2.0 * b)? * crate::extremal::evaluate(f, v);
    Ok(num / den)
}

/// `z F'(z)/F(z)` for the auxiliary function, in closed form.
///
/// With `q(w) = f(w)/w` one has `F(z) = C · z · q(u(z)) · (1 + v̄ z)^{−2b}`, so
/// `zF'/F = 1 + z u'(z) q'(u)/q(u) − 2b v̄ z/(1 + v̄ z)` with
/// `u'(z) = (1 − |v|²)/(1 + v̄ z)²`.
pub fn auxiliary_log_derivative(
    f: &CandidateFunction,
    v: DiskPoint,
    z: DiskPoint,
) -> Result<Complex64> {
    require_nonzero(v, "v must be nonzero")?;
    let u = mobius_from_disk(z, v);
    let (zc, vc) = (z.value(), v.value());
    let w = 1.0 + vc.conj() * zc;
    let du = (1.0 - v.norm() * v.norm()) / (w * w);
    let b = f.order().value();
    Ok(1.0 + zc * du * quotient_log_derivative(f, u) - 2.0 * b * vc.conj() * zc / w)
}

/// Starlikeness functional `Φ_F(z)` of the auxiliary function.
pub fn auxiliary_functional(
    f: &CandidateFunction,
    v: DiskPoint,
    z: DiskPoint,
) -> Result<Complex64> {
    Ok(functional_from_log_derivative(
        auxiliary_log_derivative(f, v, z)?,
        f.order(),
    ))
}

fn check_pair(u: DiskPoint, v: DiskPoint) -> Result<()> {
    require_nonzero(v, "v must be nonzero")?;
    require_nonzero(u, "u must be nonzero")?;
    if u == v {
        return Err(KoebeError::Degenerate("u must differ from v"));
    }
    Ok(())
}

/// One side of the two-point bound on `|f(u)/f(v)|`.
pub fn two_point_bound(
    u: DiskPoint,
    v: DiskPoint,
    b: OrderParameter,
    bracket: Bracket,
) -> Result<f64> {
    check_pair(u, v)?;
    let (uc, vc) = (u.value(), v.value());
    let a = (1.0 - uc * vc.conj()).norm();
    let d = (uc - vc).norm();
    let re_b = b.re();
    let rho = 1.0 - v.norm() * v.norm();
    let br = a + bracket.sign() * d;
    Ok(2.0 * u.norm() * pos_powf(rho, 2.0 * re_b)
        / ((1.0 + b.modulus()) * v.norm() * pos_powf(a, 2.0 * re_b - 2.0) * br * br))
}

/// Two-point bound `lower ≤ |f(u)/f(v)| ≤ upper`.
pub fn two_point_bounds(u: DiskPoint, v: DiskPoint, b: OrderParameter) -> Result<BoundPair> {
    Ok(BoundPair::new(
        two_point_bound(u, v, b, Bracket::Plus)?,
        two_point_bound(u, v, b, Bracket::Minus)?,
    ))
}

/// The same bound reached the long way: growth bound at `z = (u−v)/(1−u v̄)`
/// divided by the modulus of the conjugation factor
/// `|v| |1−u v̄|^{2b−1} |u−v| / (|u| (1−|v|²)^{2b})`.
pub fn two_point_bounds_via_conjugation(
    u: DiskPoint,
    v: DiskPoint,
    b: OrderParameter,
) -> Result<BoundPair> {
    check_pair(u, v)?;
    let z = mobius_to_disk(u, v);
    let g = growth_bounds(z, b);
    let (uc, vc) = (u.value(), v.value());
    let re_b = b.re();
    let factor =
        v.norm() * pos_powf((1.0 - uc * vc.conj()).norm(), 2.0 * re_b - 1.0) * (uc - vc).norm()
            / (u.norm() * pos_powf(1.0 - v.norm() * v.norm(), 2.0 * re_b));
    Ok(BoundPair::new(g.lower / factor, g.upper / factor))
}

/// `|f(u)/f(v)|`, computed through the quotients `f(w)/w`.
pub fn ratio_modulus(f: &CandidateFunction, u: DiskPoint, v: DiskPoint) -> Result<f64> {
    require_nonzero(v, "v must be nonzero")?;
    Ok(u.norm() / v.norm() * (quotient(f, u) / quotient(f, v)).norm())
}

/// Two-point bounds with `|f(u)/f(v)|` filled in as the middle member.
pub fn two_point_sandwich(f: &CandidateFunction, u: DiskPoint, v: DiskPoint) -> Result<BoundPair> {
    let pair = two_point_bounds(u, v, f.order())?;
    Ok(pair.with_middle(ratio_modulus(f, u, v)?))
}
