//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p koebe --test acceptance -- --nocapture --test-threads=1`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use koebe::bounds::{growth_bounds, two_point_bounds, two_point_bounds_via_conjugation};
use koebe::extremal::{evaluate, starlikeness_functional, CandidateFunction};
use koebe::koebe::{
    koebe_radius, limit_check, montel_lower_m, special_case_radius, MontelConfig, SpecialCase,
};
use koebe::verify::{forced_pair, polar_grid, sample_pairs, verify_starlikeness, verify_two_point};
use koebe::{BoundaryPoint, Complex64, DiskPoint, OrderParameter};

fn report(id: u32, name: &str, ok: bool, detail: &str, elapsed: Duration, budget: Duration) {
    let timed_ok = elapsed <= budget;
    let status = if ok && timed_ok { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {id}: {name} ({detail}; {:.3}s of {:.0}s budget)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(ok, "criterion {id} failed: {detail}");
    assert!(timed_ok, "criterion {id} exceeded its runtime budget");
}

fn real(b: f64) -> OrderParameter {
    OrderParameter::real(b).unwrap()
}

fn theta(t: f64) -> BoundaryPoint {
    BoundaryPoint::new(t)
}

#[test]
fn criterion_1_classical_koebe_constant() {
    let start = Instant::now();
    let cfg = MontelConfig::new(1e-12, real(1.0)).unwrap();
    let worst = (0..360)
        .map(|i| (koebe_radius(theta(TAU * i as f64 / 360.0), &cfg) - 0.25).abs())
        .fold(0.0, f64::max);
    report(
        1,
        "R(θ) → 1/4 as r₀ → 0 with b = 1",
        worst <= 1e-9,
        &format!("max |R − 0.25| = {worst:.3e}"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_case_one_spot_values() {
    let start = Instant::now();
    let cfg = MontelConfig::new(0.5, real(1.0)).unwrap();
    // (1 − r₀²)² / (4(1 − 2r₀cosθ + r₀²)) by hand: 0.5625/1 and 0.5625/9
    let r0 = koebe_radius(theta(0.0), &cfg);
    let rpi = koebe_radius(theta(PI), &cfg);
    let ok = (r0 - 0.5625).abs() <= 1e-12 && (rpi - 0.0625).abs() <= 1e-12;
    report(
        2,
        "case I spot values",
        ok,
        &format!("R(0) = {r0}, R(π) = {rpi}"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_limit_identity() {
    let start = Instant::now();
    let eps = [1e-2, 1e-3, 1e-4, 1e-5];
    let mut failures = Vec::new();
    let mut worst_rel = 0.0f64;
    for b in [1.0, 0.5] {
        for r0 in [0.25, 0.5, 0.75] {
            let cfg = MontelConfig::new(r0, real(b)).unwrap();
            for j in 0..16 {
                let th = theta(TAU * j as f64 / 16.0);
                let gaps = limit_check(th, &cfg, &eps).unwrap();
                let radius = koebe_radius(th, &cfg);
                let decreasing = gaps.windows(2).all(|w| w[1].1 < w[0].1);
                let last = gaps.last().unwrap().1;
                worst_rel = worst_rel.max(last / radius);
                if !decreasing || last >= 1e-3 * radius {
                    failures.push(format!("b={b} r0={r0} j={j}: {gaps:?}"));
                }
                // the limit with exponent b, not 2b, is what M approaches
                let with_2b = (1.0 - r0 * r0).powf(2.0 * b)
                    / (2.0
                        * (1.0 + b)
                        * (1.0 - 2.0 * r0 * th.theta().cos() + r0 * r0).powf(2.0 * b));
                let m = montel_lower_m(1.0 - 1e-5, th, &cfg).unwrap();
                if (m - radius).abs() >= (m - with_2b).abs() && (radius - with_2b).abs() > 1e-9 {
                    failures.push(format!("b={b} r0={r0} j={j}: 2b exponent fits better"));
                }
            }
        }
    }
    report(
        3,
        "M(1 − ε, θ) → R(θ) with exponent b",
        failures.is_empty(),
        &format!("96 directions, worst final gap/R = {worst_rel:.3e}, failures: {failures:?}"),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_4_two_point_sandwich() {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut ok = true;
    for b in [1.0, 0.75, 0.5] {
        let f = CandidateFunction::extremal(real(b));
        let r = verify_two_point(&f, 10_000, 7, 1e-9).unwrap();
        ok &= r.passed();
        detail.push(format!(
            "b={b}: {} violations, worst ln-margin {:.3e}",
            r.n_violations, r.worst_margin
        ));
    }
    let f = CandidateFunction::extremal(real(1.0));
    let p = forced_pair(
        &f,
        DiskPoint::from_parts(0.25, 0.0).unwrap(),
        DiskPoint::from_parts(0.5, 0.0).unwrap(),
    )
    .unwrap();
    let m = p.middle.unwrap();
    let sharp = (m - p.lower).abs() <= 1e-10 && (m - 0.222_222_222_222).abs() <= 1e-10;
    ok &= sharp;
    detail.push(format!("forced pair middle={m} lower={}", p.lower));
    report(
        4,
        "two-point sandwich for f*",
        ok,
        &detail.join("; "),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_growth_bound_attainment() {
    let start = Instant::now();
    let b = real(1.0);
    let z = DiskPoint::from_parts(0.5, 0.0).unwrap();
    let upper = growth_bounds(z, b).upper;
    let value = evaluate(&CandidateFunction::extremal(b), z).norm();
    let ok = (upper - 2.0).abs() <= 1e-12 && (value - 2.0).abs() <= 1e-12;
    report(
        5,
        "growth upper bound attained by the Koebe function",
        ok,
        &format!("upper = {upper}, |f*(0.5)| = {value}"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_6_starlikeness_certification() {
    let start = Instant::now();
    let panel = [
        real(1.0),
        real(0.5),
        OrderParameter::spiral(PI / 6.0).unwrap(),
        OrderParameter::spiral(PI / 3.0).unwrap(),
    ];
    let grid = polar_grid(64);
    let mut failures = Vec::new();
    let mut worst_margin = f64::INFINITY;
    let mut worst_dev = 0.0f64;
    for b in panel {
        for f in [
            CandidateFunction::identity(b),
            CandidateFunction::extremal(b),
            CandidateFunction::rotated(b, 1.0),
        ] {
            let direct = grid
                .iter()
                .map(|&z| starlikeness_functional(&f, z).re)
                .fold(f64::INFINITY, f64::min);
            let r = verify_starlikeness(&f, 64, 0.0, 0).unwrap();
            worst_margin = worst_margin.min(direct).min(r.worst_margin);
            if direct.is_nan() || direct <= 0.0 || !r.passed() || r.worst_margin <= 0.0 {
                failures.push(format!("{:?} b={b}", f.kind()));
            }
        }
        let f = CandidateFunction::extremal(b);
        for &z in &grid {
            let expect = (1.0 + z.value()) / (1.0 - z.value());
            let dev = (starlikeness_functional(&f, z) - expect).norm();
            worst_dev = worst_dev.max(dev);
        }
    }
    if worst_dev > 1e-10 {
        failures.push(format!("b-independence deviation {worst_dev:e}"));
    }
    report(
        6,
        "Re Φ > 0 on a 64×64 polar grid, Φ_f* = (1+z)/(1−z)",
        failures.is_empty(),
        &format!("min Re Φ = {worst_margin:.4e}, max |Φ_f* − (1+z)/(1−z)| = {worst_dev:.2e}, failures: {failures:?}"),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_7_theorem_equals_conjugated_growth_bound() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for (b, seed) in [(1.0, 7u64), (0.5, 8u64)] {
        for (u, v) in sample_pairs(10_000, seed) {
            let direct = two_point_bounds(u, v, real(b)).unwrap();
            let routed = two_point_bounds_via_conjugation(u, v, real(b)).unwrap();
            worst = worst
                .max((direct.lower - routed.lower).abs() / direct.lower)
                .max((direct.upper - routed.upper).abs() / direct.upper);
        }
    }
    report(
        7,
        "two-point bound equals growth bound through the conjugation",
        worst <= 1e-10,
        &format!("max relative difference {worst:.3e} over 2×10⁴ pairs"),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_8_specialization_consistency() {
    let start = Instant::now();
    let r0 = 0.5;
    let thetas: Vec<f64> = (0..10).map(|i| TAU * i as f64 / 10.0).collect();
    let alphas: Vec<f64> = (0..10).map(|k| k as f64 / 10.0).collect();
    let lambdas: Vec<f64> = (0..10)
        .map(|k| -FRAC_PI_2 + PI * (k as f64 + 0.5) / 10.0)
        .collect();

    // b written out directly for each case
    let spiral = |alpha: f64, lambda: f64| {
        let m = (1.0 - alpha) * lambda.cos();
        Complex64::new(m * lambda.cos(), -m * lambda.sin())
    };
    let mut worst = 0.0f64;
    let mut compare = |case: SpecialCase, b: Complex64, t: f64| {
        let cfg = MontelConfig::new(r0, OrderParameter::new(b).unwrap()).unwrap();
        let expect = koebe_radius(theta(t), &cfg);
        let got = special_case_radius(case, theta(t), r0).unwrap();
        worst = worst.max((got - expect).abs() / expect);
    };
    for &t in &thetas {
        for k in 0..10 {
            compare(SpecialCase::I, Complex64::new(1.0, 0.0), t);
            compare(
                SpecialCase::II { alpha: alphas[k] },
                Complex64::new(1.0 - alphas[k], 0.0),
                t,
            );
            compare(
                SpecialCase::III { lambda: lambdas[k] },
                spiral(0.0, lambdas[k]),
                t,
            );
            compare(
                SpecialCase::IV {
                    alpha: alphas[k],
                    lambda: lambdas[k],
                },
                spiral(alphas[k], lambdas[k]),
                t,
            );
        }
    }
    let mut collapse = true;
    for &t in &thetas {
        let one = special_case_radius(SpecialCase::I, theta(t), r0).unwrap();
        let three0 = special_case_radius(SpecialCase::III { lambda: 0.0 }, theta(t), r0).unwrap();
        collapse &= one == three0;
        for &l in &lambdas {
            let three = special_case_radius(SpecialCase::III { lambda: l }, theta(t), r0).unwrap();
            let four = special_case_radius(
                SpecialCase::IV {
                    alpha: 0.0,
                    lambda: l,
                },
                theta(t),
                r0,
            )
            .unwrap();
            collapse &= three == four;
        }
    }
    report(
        8,
        "special cases agree with the general radius",
        worst <= 1e-14 && collapse,
        &format!("max relative difference {worst:.2e}, exact collapses: {collapse}"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_9_cli_determinism() {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_koebe"))
            .args([
                "boundary",
                "--samples",
                "360",
                "--r0",
                "0.5",
                "--b-re",
                "1",
                "--format",
                "csv",
            ])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let text = String::from_utf8(a.stdout.clone()).unwrap();
    let identical = a.stdout == b.stdout;
    let header = text.lines().next() == Some("theta,radius");
    let zero_row = text.lines().any(|l| l == "0,0.5625");
    let ok = a.status.code() == Some(0)
        && identical
        && header
        && zero_row
        && text.lines().count() == 361;
    report(
        9,
        "boundary CSV is byte-deterministic",
        ok,
        &format!("identical={identical}, header={header}, row 0,0.5625 present={zero_row}"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}
