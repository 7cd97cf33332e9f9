//! The `verify` suites. Each returns a list of named checks.

use clap::ValueEnum;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{fmt_f64, Check, CliError, RunConfig};
use crate::crosscheck::{ch_families, cp_families, round_trip_sweep};
use crate::error::Result;
use crate::existence::{a1_auxiliary_identity, boundary_identities, probe_identities};
use crate::family::{cot_quadruple_errors, trace_shape_squared, HypersurfaceFamily};
use crate::precise::{Precision, Real};
use crate::quartic::build_quartic;
use crate::residual::{ch_grid, ch_limit_residual, chn_scan};
use crate::stability::{
    asymptotic_check, biharmonic_radii, index_threshold_scan, stability_report, tube_certificate,
    Branch,
};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Exact,
    Cross,
    ChNonexistence,
    Trig,
    Biharmonic,
    All,
}

/// Seed of the random radii in the trig suite.
pub const TRIG_SEED: u64 = 0x686f7066;

pub fn run(config: &RunConfig) -> std::result::Result<Vec<Check>, CliError> {
    let prec = config.precision();
    let suites: &[Suite] = match config.suite {
        Suite::All => &[
            Suite::Exact,
            Suite::Cross,
            Suite::ChNonexistence,
            Suite::Trig,
            Suite::Biharmonic,
        ],
        ref s => std::slice::from_ref(s),
    };
    let mut out = Vec::new();
    for s in suites {
        let mut checks = match s {
            Suite::Exact => exact_suite(config.n_max.unwrap_or(200)),
            Suite::Cross => cross_suite(
                config.n_max.unwrap_or(20),
                config.r_max.unwrap_or(30),
                1000,
                1e-9,
                prec,
            )?,
            Suite::ChNonexistence => ch_suite(
                config.n_max.unwrap_or(10),
                config.r_max.unwrap_or(20),
                10_000,
            )?,
            Suite::Trig => trig_suite(1000, TRIG_SEED, config.tolerance, prec),
            Suite::Biharmonic => {
                biharmonic_suite(config.n_max.unwrap_or(60), config.tolerance, prec)?
            }
            Suite::All => unreachable!(),
        };
        out.append(&mut checks);
    }
    Ok(out)
}

fn summarize(tag: &str, name: &str, results: impl IntoIterator<Item = (bool, String)>) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for (ok, label) in results {
        total += 1;
        if !ok {
            failures.push(label);
        }
    }
    let detail = if failures.is_empty() {
        format!("{total} cases")
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
    };
    Check::new(tag, name, failures.is_empty(), detail)
}

/// Probe, boundary, biquadratic and auxiliary identities in exact
/// arithmetic for `2 <= n <= n_max`.
pub fn exact_suite(n_max: u32) -> Vec<Check> {
    let orders = [2u64, 3, 17, 1000];
    let ns: Vec<u32> = (2..=n_max).collect();
    let probes: Vec<(bool, String)> = ns
        .par_iter()
        .flat_map_iter(|&n| orders.iter().flat_map(move |&r| probe_identities(n, r)))
        .map(|id| (id.holds(), id.name))
        .collect();
    let bounds: Vec<(bool, String)> = ns
        .par_iter()
        .flat_map_iter(|&n| orders.iter().flat_map(move |&r| boundary_identities(n, r)))
        .map(|id| (id.holds(), id.name))
        .collect();
    let aux: Vec<(bool, String)> = ns
        .par_iter()
        .flat_map_iter(|&n| orders.iter().map(move |&r| a1_auxiliary_identity(n, r)))
        .map(|id| (id.holds(), id.name))
        .collect();
    let mut relation = Vec::new();
    for n in [3u32, 5, 7, 9] {
        let fam = HypersurfaceFamily::cp_a2(n, (n - 1) / 2).expect("odd n");
        for r in 2..=40 {
            let q = build_quartic(&fam, r).expect("projective");
            relation.push((q.biquadratic_relation().is_zero(), format!("n={n} r={r}")));
        }
    }
    vec![
        summarize(
            "exact/probe-values",
            "quartic values at the special radii",
            probes,
        ),
        summarize(
            "exact/boundary-values",
            "quartic values at x = 0 and x = 1",
            bounds,
        ),
        summarize(
            "exact/biquadratic-relation",
            "A2 with 2k+1 = n is biquadratic after the shift",
            relation,
        ),
        summarize(
            "exact/a1-auxiliary",
            "A1 quartic just above the minimal radius",
            aux,
        ),
    ]
}

/// Root and residual round trips for every projective family.
pub fn cross_suite(
    n_max: u32,
    r_max: u64,
    grid: usize,
    residual_tol: f64,
    prec: Precision,
) -> Result<Vec<Check>> {
    let fams = cp_families(n_max);
    let trips = round_trip_sweep(&fams, 2..=r_max, grid, prec)?;
    let worst = trips.iter().map(|t| t.max_abs_residual).fold(0.0, f64::max);
    let residual = summarize(
        "cross/root-residual",
        "certified roots are residual zeros",
        trips.iter().map(|t| {
            (
                t.max_abs_residual <= residual_tol,
                format!(
                    "{} r={} residual {}",
                    t.family,
                    t.r,
                    fmt_f64(t.max_abs_residual)
                ),
            )
        }),
    );
    let mut residual = residual;
    residual.detail = format!("{}, max |residual| {}", residual.detail, fmt_f64(worst));
    let scan = summarize(
        "cross/sign-scan",
        "every residual sign change lies in a certified interval",
        trips
            .iter()
            .map(|t| (t.unexplained == 0, format!("{} r={}", t.family, t.r))),
    );
    Ok(vec![residual, scan])
}

/// Residual negativity for every hyperbolic family on a grid over
/// `[1e-3, 12]` plus the horosphere limit.
pub fn ch_suite(n_max: u32, r_max: u64, points: usize) -> Result<Vec<Check>> {
    let fams = ch_families(n_max);
    let mut results = Vec::new();
    let mut worst = f64::NEG_INFINITY;
    for fam in &fams {
        let grid = ch_grid(fam, 1e-3, 12.0, points);
        for r in 2..=r_max {
            let scan = chn_scan(fam, r, &grid)?;
            let limit = ch_limit_residual(fam, r)?;
            let m = scan.max_residual.max(limit);
            worst = worst.max(m);
            results.push((m < -1e-6, format!("{fam} r={r} max {}", fmt_f64(m))));
        }
    }
    let mut check = summarize(
        "ch/nonexistence",
        "residual is negative on every hyperbolic family",
        results,
    );
    check.detail = format!("{}, max residual {}", check.detail, fmt_f64(worst));
    Ok(vec![check])
}

/// Random radii in `(0, pi/4)`, seeded.
pub fn trig_points(count: usize, seed: u64, prec: Precision) -> Vec<Real> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quarter = Real::pi(prec) / Real::from_i64(4, prec);
    (0..count)
        .map(|_| {
            let mut u: f64 = rng.random();
            while u == 0.0 {
                u = rng.random();
            }
            &quarter * Real::from_f64(u, prec)
        })
        .collect()
}

/// The two shifted-cotangent identities at `count` random radii.
pub fn trig_suite(count: usize, seed: u64, tol: f64, prec: Precision) -> Vec<Check> {
    let pts = trig_points(count, seed, prec);
    let errs: Vec<(f64, f64)> = pts
        .par_iter()
        .map(|t| {
            let (a, b) = cot_quadruple_errors(t);
            (a.to_f64(), b.to_f64())
        })
        .collect();
    let (w1, w2) = errs
        .iter()
        .fold((0.0f64, 0.0f64), |(a, b), (x, y)| (a.max(*x), b.max(*y)));
    vec![
        Check::new(
            "trig/cot-sum",
            "sum of cot(t - j pi/4) is 4 cot 4t",
            w1 <= tol,
            format!("{count} points, max relative error {}", fmt_f64(w1)),
        ),
        Check::new(
            "trig/cot-square-sum",
            "sum of cot^2(t - j pi/4) is 12 + 16 cot^2 4t",
            w2 <= tol,
            format!("{count} points, max relative error {}", fmt_f64(w2)),
        ),
    ]
}

/// Biharmonic tubes for `2 <= n <= n_max`, the stability thresholds for
/// `p <= 3` up to `n = 500`, and the large-`n` expansions.
pub fn biharmonic_suite(n_max: u32, tol: f64, prec: Precision) -> Result<Vec<Check>> {
    let pairs: Vec<(u32, u32)> = (2..=n_max)
        .flat_map(|n| (1..n).map(move |p| (n, p)))
        .collect();
    let target = |n: u32| Real::from_i64(2 * (i64::from(n) + 1), prec);
    let tube_results: Vec<Vec<(bool, bool, bool, String)>> = pairs
        .par_iter()
        .map(|&(n, p)| -> Result<_> {
            let radii = biharmonic_radii(n, p, prec)?;
            radii
                .tubes
                .iter()
                .map(|tube| {
                    let label = format!("n={n} p={p} {}", tube.branch);
                    let tr2 = trace_shape_squared(&tube.spectrum()?);
                    let ident = (tr2 - target(n)).abs().to_f64() <= tol;
                    let root = tube_certificate(tube, 1e-25)?.is_some();
                    let unstable = stability_report(tube)?.is_unstable();
                    Ok((ident, root, unstable, label))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let flat: Vec<_> = tube_results.into_iter().flatten().collect();
    let mut checks = vec![
        summarize(
            "biharmonic/trace-identity",
            "tr S^2 = 2(n+1) on every tube",
            flat.iter().map(|(i, _, _, l)| (*i, l.clone())),
        ),
        summarize(
            "biharmonic/quartic-root",
            "every tube is a root of the r = 2 quartic",
            flat.iter().map(|(_, r, _, l)| (*r, l.clone())),
        ),
        summarize(
            "biharmonic/unstable",
            "constant variation destabilizes every tube",
            flat.iter().map(|(_, _, u, l)| (*u, l.clone())),
        ),
    ];

    let radii = biharmonic_radii(2, 1, prec)?;
    let s13 = Real::from_i64(13, prec).sqrt();
    let twelve = Real::from_i64(12, prec);
    let mut dev = 0.0f64;
    for tube in &radii.tubes {
        let sign = if tube.branch == Branch::Plus { 1 } else { -1 };
        let want = (Real::from_i64(7, prec) + &s13 * Real::from_i64(sign, prec)) / &twelve;
        dev = dev.max((&tube.cos_sq_t - want).abs().to_f64());
    }
    checks.push(Check::new(
        "biharmonic/closed-form-n2",
        "n = 2, p = 1 radii are (7 +- sqrt 13)/12",
        radii.tubes.len() == 2 && dev <= 1e-15,
        format!("{} tubes, deviation {}", radii.tubes.len(), fmt_f64(dev)),
    ));

    for p in 1..=3u32 {
        let scan = index_threshold_scan(p, 500, prec)?;
        checks.push(Check::new(
            "stability/threshold",
            format!("stability condition holds from some n <= 500 on, p = {p}"),
            scan.threshold().is_some(),
            format!(
                "threshold {}, last failure {}",
                scan.threshold().map_or("none".into(), |v| v.to_string()),
                scan.last_failure.map_or("none".into(), |v| v.to_string())
            ),
        ));
    }

    for p in 1..=3u32 {
        let small = asymptotic_check(p, 10_000, prec)?;
        let large = asymptotic_check(p, 160_000, prec)?;
        let ok = small
            .metrics()
            .iter()
            .zip(large.metrics())
            .all(|(a, b)| b * 2.0 <= *a);
        let detail = small
            .metrics()
            .iter()
            .zip(large.metrics())
            .map(|(a, b)| format!("{} -> {}", fmt_f64(*a), fmt_f64(b)))
            .collect::<Vec<_>>()
            .join(", ");
        checks.push(Check::new(
            "stability/asymptotics",
            format!("expansion errors shrink from n = 1e4 to 16e4, p = {p}"),
            ok,
            detail,
        ));
    }
    Ok(checks)
}
