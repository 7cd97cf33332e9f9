//! Agreement between the characteristic quartics and the residual.
//!
//! Every certified quartic root must map to a radius where the residual
//! vanishes, and a dense residual sign scan must not find a zero that no
//! certificate accounts for.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::family::{FamilyKind, HypersurfaceFamily};
use crate::precise::{Precision, Real};
use crate::quartic::{build_quartic, isolate_and_refine_prec};
use crate::residual::residual;

/// Every projective family with `n <= n_max` (and `n >= 2`), all admissible
/// `k`, ordered by kind, then `n`, then `k`.
pub fn cp_families(n_max: u32) -> Vec<HypersurfaceFamily> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.push(HypersurfaceFamily::cp_a1(n).expect("valid"));
    }
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            out.push(HypersurfaceFamily::cp_a2(n, k).expect("valid"));
        }
    }
    for n in 2..=n_max {
        out.push(HypersurfaceFamily::cp_b(n).expect("valid"));
    }
    for n in (5..=n_max).step_by(2) {
        out.push(HypersurfaceFamily::cp_c(n).expect("valid"));
    }
    if n_max >= 9 {
        out.push(HypersurfaceFamily::cp_d());
    }
    if n_max >= 15 {
        out.push(HypersurfaceFamily::cp_e());
    }
    out
}

/// Every hyperbolic family with `2 <= n <= n_max`, all admissible `k`.
pub fn ch_families(n_max: u32) -> Vec<HypersurfaceFamily> {
    let mut out = Vec::new();
    for kind in [
        FamilyKind::ChA0,
        FamilyKind::ChA1Geodesic,
        FamilyKind::ChA1Point,
        FamilyKind::ChA2,
        FamilyKind::ChB,
    ] {
        for n in 2..=n_max {
            if kind == FamilyKind::ChA2 {
                for k in 1..=n.saturating_sub(2) {
                    out.push(HypersurfaceFamily::new(kind, n, Some(k)).expect("valid"));
                }
            } else {
                out.push(HypersurfaceFamily::new(kind, n, None).expect("valid"));
            }
        }
    }
    out
}

/// Width to which roots are refined at a given working precision.
pub fn refinement_width(prec: Precision) -> f64 {
    10f64.powi(-(prec.decimal_digits() as i32 - 5))
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTrip {
    pub family: HypersurfaceFamily,
    pub r: u64,
    pub roots: usize,
    /// Largest `|residual|` over the certified radii.
    pub max_abs_residual: f64,
    pub sign_changes: usize,
    /// Residual sign changes on the grid with no certified radius inside.
    pub unexplained: usize,
}

impl RoundTrip {
    pub fn passes(&self, residual_tol: f64) -> bool {
        self.max_abs_residual <= residual_tol && self.unexplained == 0
    }
}

/// Certify the roots of `family`'s quartic at order `r`, evaluate the
/// residual at each radius, and scan the residual's sign on `grid_points`
/// interior radii.
pub fn round_trip(
    family: &HypersurfaceFamily,
    r: u64,
    grid_points: usize,
    prec: Precision,
) -> Result<RoundTrip> {
    let quartic = build_quartic(family, r)?;
    let certs = isolate_and_refine_prec(
        &quartic,
        &BigRational::zero(),
        &BigRational::one(),
        refinement_width(prec),
        prec,
    )?;
    let sub = quartic.substitution().expect("family quartic");
    let mut max_abs = 0.0f64;
    let mut spans = Vec::with_capacity(certs.len());
    for c in &certs {
        let res = c
            .residual
            .as_ref()
            .map_or(f64::INFINITY, |v| v.abs().to_f64());
        max_abs = max_abs.max(res);
        // t is monotone in x, so the interval maps to an interval
        let ta = sub.radius_from_x(&Real::from_ratio(&c.interval.0, prec).to_f64());
        let tb = sub.radius_from_x(&Real::from_ratio(&c.interval.1, prec).to_f64());
        spans.push((ta.min(tb), ta.max(tb)));
    }

    let upper = family
        .radius_domain()
        .upper(&1.0f64)
        .expect("projective domains are bounded");
    let ts: Vec<f64> = (0..grid_points)
        .map(|i| upper * (i as f64 + 0.5) / grid_points as f64)
        .collect();
    let signs: Vec<f64> = ts
        .iter()
        .map(|t| residual(family, t, r).map(|rep| rep.residual.signum()))
        .collect::<Result<_>>()?;
    let mut changes = 0;
    let mut unexplained = 0;
    for i in 0..grid_points.saturating_sub(1) {
        if signs[i] * signs[i + 1] < 0.0 || signs[i] == 0.0 {
            changes += 1;
            let (a, b) = (ts[i], ts[i + 1]);
            // f64 radii of the spans carry ~1e-15 error
            let slack = 1e-12;
            if !spans
                .iter()
                .any(|(lo, hi)| *lo <= b + slack && *hi >= a - slack)
            {
                unexplained += 1;
            }
        }
    }
    Ok(RoundTrip {
        family: *family,
        r,
        roots: certs.len(),
        max_abs_residual: max_abs,
        sign_changes: changes,
        unexplained,
    })
}

/// [`round_trip`] over every family in `families` and every `r` in `orders`,
/// in parallel, returned in input order.
pub fn round_trip_sweep(
    families: &[HypersurfaceFamily],
    orders: std::ops::RangeInclusive<u64>,
    grid_points: usize,
    prec: Precision,
) -> Result<Vec<RoundTrip>> {
    let jobs: Vec<(HypersurfaceFamily, u64)> = families
        .iter()
        .flat_map(|f| orders.clone().map(move |r| (*f, r)))
        .collect();
    jobs.par_iter()
        .map(|(f, r)| round_trip(f, *r, grid_points, prec))
        .collect()
}
