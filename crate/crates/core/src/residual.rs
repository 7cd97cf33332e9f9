//! The `r`-harmonicity residual of a homogeneous Hopf hypersurface.
//!
//! A tube of radius `t` is `r`-harmonic (`r >= 2`) iff it is minimal or
//!
//! ```text
//! (4/c)(tr S^2)^2 - 2(n+1) tr S^2 - (r-2)(tr S)^2 - 3 alpha (r-2) tr S = 0
//! ```
//!
//! with `c = 4` on `CP^n` and `c = -4` on `CH^n`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{
    ch_b_excluded_radius, curvature_spectrum, trace_shape, trace_shape_squared, FamilyKind,
    HypersurfaceFamily, RadiusDomain, SpaceForm,
};
use crate::precise::Scalar;

pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport<T> {
    pub residual: T,
    pub trace: T,
    pub trace_sq: T,
    pub alpha: T,
    pub r: u64,
    pub is_minimal: bool,
}

/// Residual from precomputed traces. `space` fixes the sign of `c`.
pub fn residual_from_traces<T: Scalar>(
    space: SpaceForm,
    n: u32,
    r: u64,
    trace: &T,
    trace_sq: &T,
    alpha: &T,
) -> T {
    let like = trace;
    let quad = match space {
        SpaceForm::Projective => trace_sq.square(),
        SpaceForm::Hyperbolic => -trace_sq.square(),
    };
    let rm2 = T::int(r as i64 - 2, like);
    quad - T::int(2 * (i64::from(n) + 1), like) * trace_sq.clone()
        - rm2 * (trace.square() + T::int(3, like) * alpha.clone() * trace.clone())
}

/// `(tr S)^2 + 3 alpha tr S`: the residual drops by this much per unit of `r`.
pub fn order_slope<T: Scalar>(trace: &T, alpha: &T) -> T {
    trace.square() + T::int(3, trace) * alpha.clone() * trace.clone()
}

pub fn residual<T: Scalar>(
    family: &HypersurfaceFamily,
    t: &T,
    r: u64,
) -> Result<ResidualReport<T>> {
    if r < 2 {
        return Err(Error::InvalidOrder(r));
    }
    let spectrum = curvature_spectrum(family, t)?;
    let trace = trace_shape(&spectrum);
    let trace_sq = trace_shape_squared(&spectrum);
    let value = residual_from_traces(
        family.space_form(),
        family.n(),
        r,
        &trace,
        &trace_sq,
        &spectrum.alpha,
    );
    let is_minimal = trace.abs().to_f64() < DEFAULT_TOL;
    Ok(ResidualReport {
        residual: value,
        trace,
        trace_sq,
        alpha: spectrum.alpha,
        r,
        is_minimal,
    })
}

/// `|residual| <= tol` and `|tr S| > tol`.
pub fn is_proper_r_harmonic<T: Scalar>(
    family: &HypersurfaceFamily,
    t: &T,
    r: u64,
    tol: f64,
) -> Result<bool> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance);
    }
    let rep = residual(family, t, r)?;
    Ok(rep.residual.abs().to_f64() <= tol && rep.trace.abs().to_f64() > tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChScan {
    pub max_residual: f64,
    pub t_at_max: f64,
    pub points: usize,
}

impl ChScan {
    pub fn all_negative(&self) -> bool {
        self.max_residual < 0.0
    }
}

/// Maximum residual of a hyperbolic family over `grid`.
pub fn chn_scan(family: &HypersurfaceFamily, r: u64, grid: &[f64]) -> Result<ChScan> {
    if family.space_form() != SpaceForm::Hyperbolic {
        return Err(Error::UnsupportedFamily(family.kind()));
    }
    if r < 2 {
        return Err(Error::InvalidOrder(r));
    }
    let values: Vec<f64> = grid
        .par_iter()
        .map(|t| residual(family, t, r).map(|rep| rep.residual))
        .collect::<Result<_>>()?;
    let mut best = ChScan {
        max_residual: f64::NEG_INFINITY,
        t_at_max: f64::NAN,
        points: grid.len(),
    };
    // sequential reduction keeps ties deterministic
    for (t, v) in grid.iter().zip(values) {
        if v > best.max_residual || v.is_nan() {
            best.max_residual = v;
            best.t_at_max = *t;
        }
    }
    Ok(best)
}

/// Uniform grid of `points` radii on `[t_lo, t_hi]` inside the family's
/// domain. Points within `1e-9` of the excluded `CH_B` radius are nudged
/// off it.
pub fn ch_grid(family: &HypersurfaceFamily, t_lo: f64, t_hi: f64, points: usize) -> Vec<f64> {
    let excluded = match family.radius_domain() {
        RadiusDomain::Open {
            excludes_special: true,
            ..
        } => Some(ch_b_excluded_radius(&1.0f64)),
        _ => None,
    };
    let step = if points > 1 {
        (t_hi - t_lo) / (points - 1) as f64
    } else {
        0.0
    };
    (0..points)
        .map(|i| {
            let t = t_lo + step * i as f64;
            match excluded {
                Some(e) if (t - e).abs() < 1e-9 => e + 2e-9,
                _ => t,
            }
        })
        .collect()
}

/// Residual of the `t -> infinity` limit of a hyperbolic family: every
/// principal curvature tends to the horosphere values.
pub fn ch_limit_residual(family: &HypersurfaceFamily, r: u64) -> Result<f64> {
    if family.space_form() != SpaceForm::Hyperbolic {
        return Err(Error::UnsupportedFamily(family.kind()));
    }
    let horo = HypersurfaceFamily::new(FamilyKind::ChA0, family.n(), None)?;
    Ok(residual(&horo, &1.0f64, r)?.residual)
}
