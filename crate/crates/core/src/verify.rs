//! Seeded verification suites.
//!
//! Each suite evaluates a batch of checks, each with a signed margin
//! (negative means the inequality failed), and folds them into a
//! [`VerificationReport`]. Checks may be evaluated in parallel; the fold runs
//! over the checks in generation order and breaks margin ties by the
//! lexicographically smallest input tuple, so reports are reproducible bit
//! for bit.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bounds::{
    auxiliary_f, auxiliary_functional, growth_bounds, two_point_sandwich, BoundPair,
};
use crate::complex_core::{BoundaryPoint, DiskPoint, OrderParameter};
use crate::extremal::{starlikeness_functional, CandidateFunction};
use crate::koebe::{koebe_radius, limit_check, MontelConfig};
use crate::{KoebeError, Result};

/// Sampling radius for the randomized suites.
pub const SAMPLING_RADIUS: f64 = 0.95;

/// Default tolerance for all suites.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Step sizes for the `r → 1⁻` limit check.
pub const LIMIT_EPSILONS: [f64; 4] = [1e-2, 1e-3, 1e-4, 1e-5];

/// Minimum shrink factor of the limit gap per decade of `ε`.
pub const LIMIT_MIN_SHRINK: f64 = 5.0;

/// Largest admissible final gap, relative to `R(θ)`.
pub const LIMIT_FINAL_REL_GAP: f64 = 1e-3;

/// Centres `v` used to build the auxiliary function.
pub fn v_panel() -> [DiskPoint; 4] {
    [
        Complex64::new(0.5, 0.0),
        Complex64::new(-0.25, 0.6),
        Complex64::new(-0.8, 0.0),
        Complex64::new(0.1, -0.3),
    ]
    .map(|v| DiskPoint::new(v).expect("panel point inside the disk"))
}

/// Complex orders the suites are exercised on beyond the real ones.
pub fn complex_order_panel() -> Vec<OrderParameter> {
    let mut panel =
        vec![OrderParameter::new(Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2)).unwrap()];
    for lambda in [PI / 6.0, -PI / 6.0, PI / 3.0, -PI / 3.0] {
        panel.push(OrderParameter::spiral(lambda).unwrap());
    }
    panel
}

/// Inputs at which a suite attained its worst margin.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub labels: &'static [&'static str],
    pub values: Vec<f64>,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.labels.len()))?;
        for (k, v) in self.labels.iter().zip(&self.values) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderRecord {
    pub re: f64,
    pub im: f64,
}

impl From<OrderParameter> for OrderRecord {
    fn from(b: OrderParameter) -> Self {
        Self {
            re: b.re(),
            im: b.im(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<String>,
    pub b: OrderRecord,
    pub n_checks: usize,
    pub n_skipped: usize,
    pub n_violations: usize,
    pub worst_margin: f64,
    pub witness: Option<Witness>,
    pub tolerance: f64,
    pub seed: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.n_violations == 0
    }
}

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq)]
struct Check {
    inputs: Vec<f64>,
    margin: f64,
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

struct Fold {
    n_checks: usize,
    n_violations: usize,
    worst: Option<Check>,
}

fn fold(checks: Vec<Check>, tolerance: f64) -> Fold {
    let mut acc = Fold {
        n_checks: 0,
        n_violations: 0,
        worst: None,
    };
    for mut c in checks {
        if c.margin.is_nan() {
            c.margin = f64::NEG_INFINITY;
        }
        acc.n_checks += 1;
        if c.margin < -tolerance {
            acc.n_violations += 1;
        }
        let replace = match &acc.worst {
            None => true,
            Some(w) => match c.margin.total_cmp(&w.margin) {
                Ordering::Less => true,
                Ordering::Equal => lex_cmp(&c.inputs, &w.inputs) == Ordering::Less,
                Ordering::Greater => false,
            },
        };
        if replace {
            acc.worst = Some(c);
        }
    }
    acc
}

struct ReportHeader<'a> {
    suite: &'static str,
    candidate: Option<&'a CandidateFunction>,
    order: OrderParameter,
    labels: &'static [&'static str],
    tolerance: f64,
    seed: u64,
}

fn assemble(h: ReportHeader<'_>, checks: Vec<Check>, n_skipped: usize) -> VerificationReport {
    let f = fold(checks, h.tolerance);
    VerificationReport {
        suite: h.suite.to_string(),
        candidate: h.candidate.map(|c| c.kind().name().to_string()),
        b: h.order.into(),
        n_checks: f.n_checks,
        n_skipped,
        n_violations: f.n_violations,
        worst_margin: f.worst.as_ref().map_or(f64::INFINITY, |w| w.margin),
        witness: f.worst.map(|w| Witness {
            labels: h.labels,
            values: w.inputs,
        }),
        tolerance: h.tolerance,
        seed: h.seed,
    }
}

fn check_tolerance(tol: f64) -> Result<()> {
    if tol >= 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(KoebeError::InvalidParameter(format!(
            "tolerance must be a finite nonnegative number, got {tol}"
        )))
    }
}

fn require_positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(KoebeError::InvalidParameter(format!(
            "{name} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

/// Polar grid: radii `k/(n+1)`, `k = 1..=n`, angles `2πj/n`.
pub fn polar_grid(n: usize) -> Vec<DiskPoint> {
    let mut pts = Vec::with_capacity(n * n);
    for k in 1..=n {
        let r = k as f64 / (n + 1) as f64;
        for j in 0..n {
            pts.push(
                DiskPoint::from_polar(r, TAU * j as f64 / n as f64).expect("grid radius below 1"),
            );
        }
    }
    pts
}

/// `Re Φ > 0` for `f` and for the auxiliary functions built from `f` at
/// each centre of [`v_panel`]. Margins are absolute.
pub fn verify_starlikeness(
    f: &CandidateFunction,
    grid_n: usize,
    tolerance: f64,
    seed: u64,
) -> Result<VerificationReport> {
    require_positive("grid size", grid_n)?;
    check_tolerance(tolerance)?;
    let grid = polar_grid(grid_n);
    let panel = v_panel();

    let mut jobs: Vec<(usize, DiskPoint)> = grid.iter().map(|&z| (0, z)).collect();
    for k in 0..panel.len() {
        jobs.extend(grid.iter().map(|&z| (k + 1, z)));
    }

    let results: Vec<Option<Check>> = jobs
        .par_iter()
        .map(|&(source, z)| {
            let (phi, v) = if source == 0 {
                (starlikeness_functional(f, z), Complex64::new(0.0, 0.0))
            } else {
                let v = panel[source - 1];
                (auxiliary_functional(f, v, z).ok()?, v.value())
            };
            Some(Check {
                inputs: vec![source as f64, v.re, v.im, z.value().re, z.value().im],
                margin: phi.re,
            })
        })
        .collect();

    let n_skipped = results.iter().filter(|c| c.is_none()).count();
    Ok(assemble(
        ReportHeader {
            suite: "starlike",
            candidate: Some(f),
            order: f.order(),
            labels: &["source", "v_re", "v_im", "z_re", "z_im"],
            tolerance,
            seed,
        },
        results.into_iter().flatten().collect(),
        n_skipped,
    ))
}

/// A point uniform in area on the disk of radius [`SAMPLING_RADIUS`].
fn sample_disk<R: Rng>(rng: &mut R) -> DiskPoint {
    let r = rng.gen::<f64>().sqrt() * SAMPLING_RADIUS;
    let t = rng.gen::<f64>() * TAU;
    DiskPoint::from_polar(r, t).expect("sampling radius below 1")
}

/// `n` seeded pairs `(u, v)` with `u ≠ v`, `u ≠ 0`, `v ≠ 0`.
pub fn sample_pairs(n: usize, seed: u64) -> Vec<(DiskPoint, DiskPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = sample_disk(&mut rng);
        let v = sample_disk(&mut rng);
        if u == v || u.is_origin() || v.is_origin() {
            continue;
        }
        out.push((u, v));
    }
    out
}

/// Two-point sandwich on explicitly supplied pairs. Margins are
/// `min(ln(middle/lower), ln(upper/middle))`, i.e. relative.
pub fn verify_two_point_pairs(
    f: &CandidateFunction,
    pairs: &[(DiskPoint, DiskPoint)],
    tolerance: f64,
    seed: u64,
) -> Result<VerificationReport> {
    check_tolerance(tolerance)?;
    let results: Vec<Option<Check>> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let s = two_point_sandwich(f, u, v).ok()?;
            let (u, v) = (u.value(), v.value());
            Some(Check {
                inputs: vec![u.re, u.im, v.re, v.im],
                margin: s.log_margin().unwrap_or(f64::NAN),
            })
        })
        .collect();
    let n_skipped = results.iter().filter(|c| c.is_none()).count();
    Ok(assemble(
        ReportHeader {
            suite: "two-point",
            candidate: Some(f),
            order: f.order(),
            labels: &["u_re", "u_im", "v_re", "v_im"],
            tolerance,
            seed,
        },
        results.into_iter().flatten().collect(),
        n_skipped,
    ))
}

/// Two-point sandwich on `n_pairs` seeded pairs.
pub fn verify_two_point(
    f: &CandidateFunction,
    n_pairs: usize,
    seed: u64,
    tolerance: f64,
) -> Result<VerificationReport> {
    require_positive("pair count", n_pairs)?;
    verify_two_point_pairs(f, &sample_pairs(n_pairs, seed), tolerance, seed)
}

/// The sandwich for a single pair, with `|f(u)/f(v)|` as the middle member.
pub fn forced_pair(f: &CandidateFunction, u: DiskPoint, v: DiskPoint) -> Result<BoundPair> {
    two_point_sandwich(f, u, v)
}

/// Number of directions per centre in the growth suite.
pub const GROWTH_ANGLES: usize = 16;

/// Growth sandwich on `|F(z)|` for the auxiliary functions of
/// [`v_panel`], along `GROWTH_ANGLES` rays at radii `k/(n+1)`.
pub fn verify_growth(
    f: &CandidateFunction,
    n_radii: usize,
    tolerance: f64,
    seed: u64,
) -> Result<VerificationReport> {
    require_positive("radius count", n_radii)?;
    check_tolerance(tolerance)?;
    let panel = v_panel();
    let mut jobs = Vec::with_capacity(panel.len() * GROWTH_ANGLES * n_radii);
    for (k, &v) in panel.iter().enumerate() {
        for j in 0..GROWTH_ANGLES {
            let t = TAU * j as f64 / GROWTH_ANGLES as f64;
            for i in 1..=n_radii {
                let r = i as f64 / (n_radii + 1) as f64;
                jobs.push((k, v, DiskPoint::from_polar(r, t).expect("radius below 1")));
            }
        }
    }
    let results: Vec<Option<Check>> = jobs
        .par_iter()
        .map(|&(k, v, z)| {
            let big_f = auxiliary_f(f, v, z).ok()?;
            let s = growth_bounds(z, f.order()).with_middle(big_f.norm());
            let (v, z) = (v.value(), z.value());
            Some(Check {
                inputs: vec![k as f64, v.re, v.im, z.re, z.im],
                margin: s.log_margin()?,
            })
        })
        .collect();
    let n_skipped = results.iter().filter(|c| c.is_none()).count();
    Ok(assemble(
        ReportHeader {
            suite: "growth",
            candidate: Some(f),
            order: f.order(),
            labels: &["panel", "v_re", "v_im", "z_re", "z_im"],
            tolerance,
            seed,
        },
        results.into_iter().flatten().collect(),
        n_skipped,
    ))
}

/// Decades of `ε` used by [`verify_limit`]: [`LIMIT_EPSILONS`], shifted
/// down when `r₀` is so close to 1 that `1 − ε` would not exceed it.
pub fn limit_epsilons(r0: f64) -> [f64; 4] {
    let mut start = LIMIT_EPSILONS[0];
    while start >= 1.0 - r0 {
        start /= 10.0;
    }
    [start, start / 10.0, start / 100.0, start / 1000.0]
}

/// Per-direction margin of the limit check: the worse of
/// `ln(gap_k/gap_{k+1}) − ln 5` over consecutive decades and
/// `ln(10⁻³·R(θ)/gap_final)`.
pub fn limit_margin(gaps: &[(f64, f64)], radius: f64) -> f64 {
    let mut margin = f64::INFINITY;
    for w in gaps.windows(2) {
        let (a, b) = (w[0].1, w[1].1);
        let m = if b == 0.0 {
            f64::INFINITY
        } else {
            (a / b).ln() - LIMIT_MIN_SHRINK.ln()
        };
        margin = margin.min(m);
    }
    if let Some(&(_, last)) = gaps.last() {
        let m = if last == 0.0 {
            f64::INFINITY
        } else {
            (LIMIT_FINAL_REL_GAP * radius / last).ln()
        };
        margin = margin.min(m);
    }
    margin
}

/// `M(1 − ε, θ) → R(θ)` on `theta_grid_n` uniform directions.
pub fn verify_limit(
    cfg: &MontelConfig,
    theta_grid_n: usize,
    tolerance: f64,
    seed: u64,
) -> Result<VerificationReport> {
    require_positive("theta grid size", theta_grid_n)?;
    check_tolerance(tolerance)?;
    let eps = limit_epsilons(cfg.r0());
    let results: Vec<Result<Check>> = (0..theta_grid_n)
        .into_par_iter()
        .map(|j| {
            let theta = BoundaryPoint::new(TAU * j as f64 / theta_grid_n as f64);
            let gaps = limit_check(theta, cfg, &eps)?;
            Ok(Check {
                inputs: vec![theta.theta()],
                margin: limit_margin(&gaps, koebe_radius(theta, cfg)),
            })
        })
        .collect();
    let checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(assemble(
        ReportHeader {
            suite: "limit",
            candidate: None,
            order: cfg.order(),
            labels: &["theta"],
            tolerance,
            seed,
        },
        checks,
        0,
    ))
}
