//! Proper biharmonic tubes in `CP^n` and their normal stability.
//!
//! The biharmonic (`r = 2`) tubes are the tubes of radius `t_±` over a
//! totally geodesic `CP^{n-p}`. All of them are unstable, witnessed by
//! constant normal variations. When the scalar stability condition holds the
//! normal index is exactly one.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{
    curvature_spectrum, trace_shape, trace_shape_squared, CurvatureSpectrum, HypersurfaceFamily,
};
use crate::precise::{Precision, Real, Scalar};
use crate::quartic::{build_quartic, isolate_and_refine_prec, RootCertificate, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BiharmonicTube {
    pub n: u32,
    pub p: u32,
    pub branch: Branch,
    pub cos_sq_t: Real,
    pub t: Real,
}

impl BiharmonicTube {
    /// `CP_A1` for `p = 1`, otherwise `CP_A2` with `k = n - p`.
    pub fn family(&self) -> Result<HypersurfaceFamily> {
        tube_family(self.n, self.p)
    }

    /// The tube's value of the characteristic quartic's variable.
    pub fn quartic_x(&self) -> Real {
        match self.family().ok().and_then(|f| f.substitution()) {
            Some(Substitution::SinSqT) => Real::one(self.cos_sq_t.precision()) - &self.cos_sq_t,
            _ => self.cos_sq_t.clone(),
        }
    }

    pub fn spectrum(&self) -> Result<CurvatureSpectrum<Real>> {
        curvature_spectrum(&self.family()?, &self.t)
    }
}

pub fn tube_family(n: u32, p: u32) -> Result<HypersurfaceFamily> {
    if p == 1 {
        HypersurfaceFamily::cp_a1(n)
    } else if p < n {
        HypersurfaceFamily::cp_a2(n, n - p)
    } else {
        Err(Error::InvalidFamily(format!(
            "need 1 <= p <= n - 1, got n = {n}, p = {p}"
        )))
    }
}

/// Both branches of the biharmonic radius; branches with `cos^2 t` outside
/// `(0, 1)` are listed in `degenerate`.
#[derive(Clone, Debug)]
pub struct BiharmonicRadii {
    pub tubes: Vec<BiharmonicTube>,
    pub degenerate: Vec<(Branch, Real)>,
}

/// `cos^2 t_± = (3(n+1) - 2p ± sqrt(n^2 + 6n - 4(n+1)p + 4p^2 + 5)) / (4(n+1))`.
pub fn biharmonic_radii(n: u32, p: u32, prec: Precision) -> Result<BiharmonicRadii> {
    if n < 2 || p < 1 || p >= n {
        return Err(Error::InvalidFamily(format!(
            "need n >= 2 and 1 <= p <= n - 1, got n = {n}, p = {p}"
        )));
    }
    let (ni, pi) = (i64::from(n), i64::from(p));
    let disc = ni * ni + 6 * ni - 4 * (ni + 1) * pi + 4 * pi * pi + 5;
    if disc < 0 {
        return Err(Error::NoBiharmonicTube { n, p });
    }
    let root = Real::from_i64(disc, prec).sqrt();
    let base = Real::from_i64(3 * (ni + 1) - 2 * pi, prec);
    let den = Real::from_i64(4 * (ni + 1), prec);
    let zero = Real::zero(prec);
    let one = Real::one(prec);
    let mut out = BiharmonicRadii {
        tubes: Vec::new(),
        degenerate: Vec::new(),
    };
    for branch in [Branch::Plus, Branch::Minus] {
        let c = (&base + &root * Real::from_i64(branch.sign(), prec)) / &den;
        if c > zero && c < one {
            let t = c.sqrt().acos();
            out.tubes.push(BiharmonicTube {
                n,
                p,
                branch,
                cos_sq_t: c,
                t,
            });
        } else {
            out.degenerate.push((branch, c));
        }
    }
    Ok(out)
}

/// The non-degenerate tube on `branch`, or [`Error::DegenerateTube`].
pub fn biharmonic_tube(n: u32, p: u32, branch: Branch, prec: Precision) -> Result<BiharmonicTube> {
    biharmonic_radii(n, p, prec)?
        .tubes
        .into_iter()
        .find(|t| t.branch == branch)
        .ok_or(Error::DegenerateTube { n, p })
}

/// The curvature whose square is smallest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureSource {
    Hopf,
    /// Index into the spectrum's branches.
    Branch(usize),
}

/// `min({alpha^2} ∪ {lambda_i^2})` and the curvature attaining it.
pub fn lambda_min_squared<T: Scalar>(spectrum: &CurvatureSpectrum<T>) -> (T, CurvatureSource) {
    let mut best = spectrum.alpha.square();
    let mut src = CurvatureSource::Hopf;
    for (i, b) in spectrum.branches.iter().enumerate() {
        let v = b.value.square();
        if v < best {
            best = v;
            src = CurvatureSource::Branch(i);
        }
    }
    (best, src)
}

/// `(n + 1) - |tr S| / 2`, a lower bound on the first positive eigenvalue
/// of the Laplacian of a hypersurface in `CP^n`.
pub fn first_eigenvalue_bound<T: Scalar>(n: u32, spectrum: &CurvatureSpectrum<T>) -> T {
    let tr = trace_shape(spectrum);
    first_eigenvalue_bound_from_trace(n, &tr)
}

pub fn first_eigenvalue_bound_from_trace<T: Scalar>(n: u32, trace: &T) -> T {
    T::int(i64::from(n) + 1, trace) - trace.abs() / T::int(2, trace)
}

/// `mu^2 + 4 lambda_min^2 mu - 4 tr S (tr S + 3 alpha)`; positive at every
/// eigenvalue `mu >= mu_1` when the stability condition holds.
pub fn normal_quadratic<T: Scalar>(mu: &T, lambda_min_sq: &T, witness: &T) -> T {
    mu.square() + T::int(4, mu) * lambda_min_sq.clone() * mu.clone()
        - T::int(4, mu) * witness.clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IndexClaim {
    #[serde(rename = "unstable_index_ge_1")]
    AtLeastOne,
    #[serde(rename = "index_exactly_1")]
    ExactlyOne,
}

impl fmt::Display for IndexClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexClaim::AtLeastOne => "unstable_index_ge_1",
            IndexClaim::ExactlyOne => "index_exactly_1",
        })
    }
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub n: u32,
    pub p: u32,
    pub branch: Branch,
    pub cos_sq_t: Real,
    pub t: Real,
    pub alpha: Real,
    pub trace: Real,
    pub trace_sq: Real,
    pub lambda_min_sq: Real,
    pub lambda_min_source: CurvatureSource,
    /// Principal curvature attaining `lambda_min_sq`.
    pub lambda_min: Real,
    /// `(n+1)(4 lambda_min^2 + n + 1)`
    pub lhs: Real,
    /// `(15/4)(tr S)^2 + (2 lambda_min^2 + n + 1)|tr S| + 12 alpha tr S`
    pub rhs: Real,
    pub mu1_lower_bound: Real,
    /// `tr S (tr S + 3 alpha)`; positive means a constant variation
    /// decreases the bienergy.
    pub witness: Real,
    pub condition_holds: bool,
    pub index_claim: IndexClaim,
}

impl StabilityReport {
    pub fn is_unstable(&self) -> bool {
        self.witness.is_positive()
    }
}

pub fn stability_report(tube: &BiharmonicTube) -> Result<StabilityReport> {
    let spectrum = tube.spectrum()?;
    let prec = tube.t.precision();
    let int = |v: i64| Real::from_i64(v, prec);
    let n1 = int(i64::from(tube.n) + 1);
    let trace = trace_shape(&spectrum);
    let trace_sq = trace_shape_squared(&spectrum);
    let (lms, src) = lambda_min_squared(&spectrum);
    let lambda_min = match src {
        CurvatureSource::Hopf => spectrum.alpha.clone(),
        CurvatureSource::Branch(i) => spectrum.branches[i].value.clone(),
    };
    let abs_tr = trace.abs();
    let lhs = &n1 * (int(4) * &lms + &n1);
    let rhs = int(15) / int(4) * &trace * &trace
        + (int(2) * &lms + &n1) * &abs_tr
        + int(12) * &spectrum.alpha * &trace;
    let witness = &trace * (&trace + int(3) * &spectrum.alpha);
    let condition_holds = lhs > rhs;
    Ok(StabilityReport {
        n: tube.n,
        p: tube.p,
        branch: tube.branch,
        cos_sq_t: tube.cos_sq_t.clone(),
        t: tube.t.clone(),
        alpha: spectrum.alpha.clone(),
        mu1_lower_bound: first_eigenvalue_bound_from_trace(tube.n, &trace),
        trace,
        trace_sq,
        lambda_min_sq: lms,
        lambda_min_source: src,
        lambda_min,
        lhs,
        rhs,
        witness,
        condition_holds,
        index_claim: if condition_holds {
            IndexClaim::ExactlyOne
        } else {
            IndexClaim::AtLeastOne
        },
    })
}

pub fn stability_condition(
    n: u32,
    p: u32,
    branch: Branch,
    prec: Precision,
) -> Result<StabilityReport> {
    stability_report(&biharmonic_tube(n, p, branch, prec)?)
}

/// The certificate of the `r = 2` quartic whose interval contains the
/// tube's `x`, if any.
pub fn tube_certificate(tube: &BiharmonicTube, tol: f64) -> Result<Option<RootCertificate>> {
    let fam = tube.family()?;
    let quartic = build_quartic(&fam, 2)?;
    let prec = tube.t.precision();
    let zero = num_rational::BigRational::from_integer(0.into());
    let one = num_rational::BigRational::from_integer(1.into());
    let certs = isolate_and_refine_prec(&quartic, &zero, &one, tol, prec)?;
    let x = tube.quartic_x();
    Ok(certs.into_iter().find(|c| {
        Real::from_ratio(&c.interval.0, prec) <= x && x <= Real::from_ratio(&c.interval.1, prec)
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdScan {
    pub p: u32,
    pub n_max: u32,
    /// Smallest scanned `n` where the condition holds on the plus branch.
    pub first_hold: Option<u32>,
    /// Largest scanned `n` where it fails.
    pub last_failure: Option<u32>,
    /// `first_hold` is set and no failure occurs above it.
    pub holds_above: bool,
}

impl ThresholdScan {
    /// The empirical constant: the first `n` from which the condition holds
    /// throughout the scan.
    pub fn threshold(&self) -> Option<u32> {
        if self.holds_above {
            self.first_hold
        } else {
            None
        }
    }
}

/// Scan `n` in `(p + 1, n_max]` for the plus-branch stability condition.
pub fn index_threshold_scan(p: u32, n_max: u32, prec: Precision) -> Result<ThresholdScan> {
    if p < 1 || n_max <= p + 1 {
        return Err(Error::InvalidFamily(format!(
            "need p >= 1 and n_max > p + 1, got p = {p}, n_max = {n_max}"
        )));
    }
    let results: Vec<(u32, bool)> = (p + 2..=n_max)
        .into_par_iter()
        .map(|n| stability_condition(n, p, Branch::Plus, prec).map(|r| (n, r.condition_holds)))
        .collect::<Result<_>>()?;
    let first_hold = results.iter().find(|(_, h)| *h).map(|(n, _)| *n);
    let last_failure = results.iter().rev().find(|(_, h)| !*h).map(|(n, _)| *n);
    let holds_above = match (first_hold, last_failure) {
        (Some(f), Some(l)) => l < f,
        (Some(_), None) => true,
        _ => false,
    };
    Ok(ThresholdScan {
        p,
        n_max,
        first_hold,
        last_failure,
        holds_above,
    })
}

/// Scaled errors of the large-`n` expansions on the plus branch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub p: u32,
    pub n: u32,
    /// `|4 cot^2 2t - 2n/(2p-1)| / n`
    pub cot_sq_2t: f64,
    /// `|cot^2 t - 2n/(2p-1)| / n`
    pub cot_sq_t: f64,
    /// `|tan^2 t - (2p-1)/(2n)| n`
    pub tan_sq_t: f64,
    /// `|tr S - 2 sqrt(4p-2) / sqrt(n)| sqrt(n)`
    pub trace: f64,
}

impl AsymptoticReport {
    pub fn metrics(&self) -> [f64; 4] {
        [self.cot_sq_2t, self.cot_sq_t, self.tan_sq_t, self.trace]
    }
}

pub fn asymptotic_check(p: u32, n: u32, prec: Precision) -> Result<AsymptoticReport> {
    let tube = biharmonic_tube(n, p, Branch::Plus, prec)?;
    let int = |v: i64| Real::from_i64(v, prec);
    let (ni, pi) = (i64::from(n), i64::from(p));
    let nr = int(ni);
    let sqrt_n = nr.sqrt();
    let two_t = &tube.t + &tube.t;
    let cot2 = Real::one(prec) / two_t.tan();
    let tan_t = tube.t.tan();
    let lead = int(2 * ni) / int(2 * pi - 1);
    let e1 = (int(4) * &cot2 * &cot2 - &lead).abs() / &nr;
    let cot_t = Real::one(prec) / &tan_t;
    let e2 = (&cot_t * &cot_t - &lead).abs() / &nr;
    let e3 = (&tan_t * &tan_t - int(2 * pi - 1) / int(2 * ni)).abs() * &nr;
    let trace = trace_shape(&tube.spectrum()?);
    let e4 = (trace - int(2) * int(4 * pi - 2).sqrt() / &sqrt_n).abs() * &sqrt_n;
    Ok(AsymptoticReport {
        p,
        n,
        cot_sq_2t: e1.to_f64(),
        cot_sq_t: e2.to_f64(),
        tan_sq_t: e3.to_f64(),
        trace: e4.to_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residual::residual;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn n2_p1_radii() {
        let radii = biharmonic_radii(2, 1, prec()).unwrap();
        assert_eq!(radii.tubes.len(), 2);
        let s13 = 13f64.sqrt();
        let want = [(7.0 + s13) / 12.0, (7.0 - s13) / 12.0];
        for (tube, w) in radii.tubes.iter().zip(want) {
            assert!((tube.cos_sq_t.to_f64() - w).abs() < 1e-15);
            let tr2 = trace_shape_squared(&tube.spectrum().unwrap());
            assert!((tr2.to_f64() - 6.0).abs() < 1e-25);
            assert!(tube_certificate(tube, 1e-30).unwrap().is_some());
        }
    }

    #[test]
    fn n3_p2_radii_are_quarter_and_three_quarters() {
        let radii = biharmonic_radii(3, 2, prec()).unwrap();
        assert!(radii.degenerate.is_empty());
        let c: Vec<f64> = radii.tubes.iter().map(|t| t.cos_sq_t.to_f64()).collect();
        assert_eq!(c, vec![0.75, 0.25]);
    }

    #[test]
    fn biharmonic_identity_and_residual() {
        for n in 2..=12 {
            for p in 1..n {
                for tube in biharmonic_radii(n, p, prec()).unwrap().tubes {
                    let fam = tube.family().unwrap();
                    let s = tube.spectrum().unwrap();
                    let tr2 = trace_shape_squared(&s).to_f64();
                    assert!((tr2 - 2.0 * f64::from(n + 1)).abs() < 1e-20);
                    let res = residual(&fam, &tube.t, 2).unwrap().residual;
                    assert!(res.abs().to_f64() < 1e-20);
                    let rep = stability_report(&tube).unwrap();
                    assert!(rep.is_unstable());
                }
            }
        }
    }

    #[test]
    fn lambda_min_examples() {
        let a1 = HypersurfaceFamily::cp_a1(2).unwrap();
        let s = curvature_spectrum(&a1, &std::f64::consts::FRAC_PI_4).unwrap();
        let (v, src) = lambda_min_squared(&s);
        assert!(v.abs() < 1e-30);
        assert_eq!(src, CurvatureSource::Hopf);
        let h = HypersurfaceFamily::ch_a0(2).unwrap();
        let s = curvature_spectrum(&h, &0.0).unwrap();
        assert_eq!(lambda_min_squared(&s), (1.0, CurvatureSource::Branch(0)));
        let tube = biharmonic_tube(2, 1, Branch::Plus, prec()).unwrap();
        let rep = stability_report(&tube).unwrap();
        let tan = tube.t.tan();
        assert_eq!(rep.lambda_min_source, CurvatureSource::Branch(0));
        assert!((rep.lambda_min_sq.clone() - &tan * &tan).abs().to_f64() < 1e-30);
    }

    #[test]
    fn eigenvalue_bound_examples() {
        assert_eq!(first_eigenvalue_bound_from_trace(2, &4.0), 1.0);
        assert_eq!(first_eigenvalue_bound_from_trace(2, &0.0), 3.0);
        assert_eq!(first_eigenvalue_bound_from_trace(2, &-4.0), 1.0);
    }

    #[test]
    fn stability_claims() {
        let small = stability_condition(2, 1, Branch::Plus, prec()).unwrap();
        assert_eq!(small.index_claim, IndexClaim::AtLeastOne);
        let large = stability_condition(200, 1, Branch::Plus, prec()).unwrap();
        assert!(large.condition_holds);
        assert_eq!(large.index_claim, IndexClaim::ExactlyOne);
        let q = normal_quadratic(&large.mu1_lower_bound, &large.lambda_min_sq, &large.witness);
        assert!(q.is_positive());
    }

    #[test]
    fn threshold_scan_small() {
        let scan = index_threshold_scan(1, 40, prec()).unwrap();
        assert_eq!(scan.threshold(), Some(7));
        assert!(index_threshold_scan(3, 4, prec()).is_err());
    }

    #[test]
    fn asymptotics_shrink() {
        let a = asymptotic_check(1, 1000, prec()).unwrap();
        let b = asymptotic_check(1, 4000, prec()).unwrap();
        for (x, y) in a.metrics().iter().zip(b.metrics()) {
            assert!(y < *x, "{x} -> {y}");
        }
    }
}
