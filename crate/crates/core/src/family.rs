//! Principal-curvature data of the homogeneous Hopf hypersurface families in
//! `CH^n(-4)` and `CP^n(4)`, plus the traces derived from it.
//!
//! Every family is a tube of radius `t` over a focal submanifold. All
//! principal curvatures are rational functions of a single transcendental,
//! `tan t` on the projective side and `tanh t` on the hyperbolic side, so a
//! spectrum costs one trig evaluation at any precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precise::{Precision, Real, Scalar};
use crate::quartic::Substitution;

/// Sign of the holomorphic sectional curvature of the ambient space form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpaceForm {
    /// `CP^n(4)`
    Projective,
    /// `CH^n(-4)`
    Hyperbolic,
}

impl SpaceForm {
    pub fn sign(self) -> i32 {
        match self {
            SpaceForm::Projective => 1,
            SpaceForm::Hyperbolic => -1,
        }
    }

    /// The normalized holomorphic sectional curvature used by the tables.
    pub fn c(self) -> i64 {
        4 * i64::from(self.sign())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    /// Horosphere.
    ChA0,
    /// Tube over a totally geodesic `CH^{n-1}` (`lambda = tanh t`).
    ChA1Geodesic,
    /// Geodesic sphere, i.e. tube over a point (`lambda = coth t`).
    ChA1Point,
    ChA2,
    ChB,
    CpA1,
    CpA2,
    CpB,
    CpC,
    CpD,
    CpE,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 11] = [
        FamilyKind::ChA0,
        FamilyKind::ChA1Geodesic,
        FamilyKind::ChA1Point,
        FamilyKind::ChA2,
        FamilyKind::ChB,
        FamilyKind::CpA1,
        FamilyKind::CpA2,
        FamilyKind::CpB,
        FamilyKind::CpC,
        FamilyKind::CpD,
        FamilyKind::CpE,
    ];

    pub fn space_form(self) -> SpaceForm {
        match self {
            FamilyKind::ChA0
            | FamilyKind::ChA1Geodesic
            | FamilyKind::ChA1Point
            | FamilyKind::ChA2
            | FamilyKind::ChB => SpaceForm::Hyperbolic,
            _ => SpaceForm::Projective,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::ChA0 => "CH_A0",
            FamilyKind::ChA1Geodesic => "CH_A1_geodesic",
            FamilyKind::ChA1Point => "CH_A1_point",
            FamilyKind::ChA2 => "CH_A2",
            FamilyKind::ChB => "CH_B",
            FamilyKind::CpA1 => "CP_A1",
            FamilyKind::CpA2 => "CP_A2",
            FamilyKind::CpB => "CP_B",
            FamilyKind::CpC => "CP_C",
            FamilyKind::CpD => "CP_D",
            FamilyKind::CpE => "CP_E",
        }
    }

    pub fn takes_k(self) -> bool {
        matches!(self, FamilyKind::CpA2 | FamilyKind::ChA2)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Accepts the full tags (`CP_A1`, `CH_A1_point`, ...) case-insensitively,
    /// with `-` and `_` interchangeable. Bare letters (`A1`, `B`, ...) name the
    /// projective families.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let kind = match norm.as_str() {
            "A1" | "CP_A1" => FamilyKind::CpA1,
            "A2" | "CP_A2" => FamilyKind::CpA2,
            "B" | "CP_B" => FamilyKind::CpB,
            "C" | "CP_C" => FamilyKind::CpC,
            "D" | "CP_D" => FamilyKind::CpD,
            "E" | "CP_E" => FamilyKind::CpE,
            "CH_A0" | "A0" => FamilyKind::ChA0,
            "CH_A1_GEODESIC" => FamilyKind::ChA1Geodesic,
            "CH_A1_POINT" => FamilyKind::ChA1Point,
            "CH_A2" => FamilyKind::ChA2,
            "CH_B" => FamilyKind::ChB,
            _ => return Err(Error::InvalidFamily(format!("unknown family type '{s}'"))),
        };
        Ok(kind)
    }
}

/// Upper end of an admissible radius interval `(0, upper)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomainEnd {
    HalfPi,
    QuarterPi,
    Infinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RadiusDomain {
    /// `(0, end)`, optionally minus the excluded CH_B radius.
    Open {
        end: DomainEnd,
        excludes_special: bool,
    },
    /// The horosphere has no radius; any value is accepted and ignored.
    Unparameterized,
}

impl RadiusDomain {
    /// Upper endpoint as a scalar; `None` for unbounded or unparameterized domains.
    pub fn upper<T: Scalar>(&self, like: &T) -> Option<T> {
        match self {
            RadiusDomain::Open { end, .. } => match end {
                DomainEnd::HalfPi => Some(T::pi_like(like) / T::int(2, like)),
                DomainEnd::QuarterPi => Some(T::pi_like(like) / T::int(4, like)),
                DomainEnd::Infinity => None,
            },
            RadiusDomain::Unparameterized => None,
        }
    }

    pub fn contains<T: Scalar>(&self, t: &T) -> bool {
        match self {
            RadiusDomain::Unparameterized => true,
            RadiusDomain::Open { .. } => {
                let zero = T::int(0, t);
                if !(t.clone() > zero) || !t.is_finite_value() {
                    return false;
                }
                match self.upper(t) {
                    Some(u) => t.clone() < u,
                    None => true,
                }
            }
        }
    }
}

/// The radius `t = ln(2 + sqrt 3) / 2` at which the CH_B tube degenerates.
pub fn ch_b_excluded_radius<T: Scalar>(like: &T) -> T {
    let three = T::int(3, like);
    (T::int(2, like) + three.sqrt()).ln() / T::int(2, like)
}

/// One homogeneous Hopf family with its dimension parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HypersurfaceFamily {
    kind: FamilyKind,
    n: u32,
    k: Option<u32>,
}

impl HypersurfaceFamily {
    /// Validates the table constraints on `(n, k)` for `kind`.
    ///
    /// `CP_A1` also accepts `n = 1`, the curve case in `CP^1`.
    pub fn new(kind: FamilyKind, n: u32, k: Option<u32>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFamily(format!("{kind}: {msg}")));
        if kind.takes_k() {
            let Some(kv) = k else {
                return bad("k is required".into());
            };
            if n < 3 || kv < 1 || kv > n - 2 {
                return bad(format!(
                    "need n >= 3 and 1 <= k <= n - 2, got n = {n}, k = {kv}"
                ));
            }
        } else if k.is_some() {
            return bad("k only applies to A2 families".into());
        }
        match kind {
            FamilyKind::CpA1 if n < 1 => return bad(format!("need n >= 1, got {n}")),
            FamilyKind::CpB
            | FamilyKind::ChA0
            | FamilyKind::ChA1Geodesic
            | FamilyKind::ChA1Point
            | FamilyKind::ChB
                if n < 2 =>
            {
                return bad(format!("need n >= 2, got {n}"))
            }
            FamilyKind::CpC if n < 5 || n % 2 == 0 => {
                return bad(format!("need odd n = 2k + 1 >= 5, got {n}"))
            }
            FamilyKind::CpD if n != 9 => return bad(format!("lives in CP^9, got n = {n}")),
            FamilyKind::CpE if n != 15 => return bad(format!("lives in CP^15, got n = {n}")),
            _ => {}
        }
        Ok(Self { kind, n, k })
    }

    pub fn cp_a1(n: u32) -> Result<Self> {
        Self::new(FamilyKind::CpA1, n, None)
    }
    pub fn cp_a2(n: u32, k: u32) -> Result<Self> {
        Self::new(FamilyKind::CpA2, n, Some(k))
    }
    pub fn cp_b(n: u32) -> Result<Self> {
        Self::new(FamilyKind::CpB, n, None)
    }
    pub fn cp_c(n: u32) -> Result<Self> {
        Self::new(FamilyKind::CpC, n, None)
    }
    pub fn cp_d() -> Self {
        Self {
            kind: FamilyKind::CpD,
            n: 9,
            k: None,
        }
    }
    pub fn cp_e() -> Self {
        Self {
            kind: FamilyKind::CpE,
            n: 15,
            k: None,
        }
    }
    pub fn ch_a0(n: u32) -> Result<Self> {
        Self::new(FamilyKind::ChA0, n, None)
    }
    pub fn ch_a1_geodesic(n: u32) -> Result<Self> {
        Self::new(FamilyKind::ChA1Geodesic, n, None)
    }
    pub fn ch_a1_point(n: u32) -> Result<Self> {
        Self::new(FamilyKind::ChA1Point, n, None)
    }
    pub fn ch_a2(n: u32, k: u32) -> Result<Self> {
        Self::new(FamilyKind::ChA2, n, Some(k))
    }
    pub fn ch_b(n: u32) -> Result<Self> {
        Self::new(FamilyKind::ChB, n, None)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    pub fn space_form(&self) -> SpaceForm {
        self.kind.space_form()
    }

    pub fn is_projective(&self) -> bool {
        self.space_form() == SpaceForm::Projective
    }

    pub fn radius_domain(&self) -> RadiusDomain {
        use FamilyKind::*;
        match self.kind {
            ChA0 => RadiusDomain::Unparameterized,
            ChA1Geodesic | ChA1Point | ChA2 => RadiusDomain::Open {
                end: DomainEnd::Infinity,
                excludes_special: false,
            },
            ChB => RadiusDomain::Open {
                end: DomainEnd::Infinity,
                excludes_special: true,
            },
            CpA1 | CpA2 => RadiusDomain::Open {
                end: DomainEnd::HalfPi,
                excludes_special: false,
            },
            CpB | CpC | CpD | CpE => RadiusDomain::Open {
                end: DomainEnd::QuarterPi,
                excludes_special: false,
            },
        }
    }

    /// The variable linking the characteristic quartic to the radius.
    pub fn substitution(&self) -> Option<Substitution> {
        use FamilyKind::*;
        match self.kind {
            CpA1 => Some(Substitution::SinSqT),
            CpA2 => Some(Substitution::CosSqT),
            CpB | CpC | CpD | CpE => Some(Substitution::CosSq2T),
            _ => None,
        }
    }

    /// Hypersurface dimension `2n - 1`.
    pub fn dimension(&self) -> u32 {
        2 * self.n - 1
    }

    /// Multiplicities `m_1, m_2, ...` of the non-Hopf principal curvatures in
    /// table order, zero entries included.
    pub fn multiplicities(&self) -> Vec<u32> {
        use FamilyKind::*;
        let n = self.n;
        let k = self.k.unwrap_or(0);
        match self.kind {
            ChA0 | ChA1Geodesic | ChA1Point | CpA1 => vec![2 * n - 2],
            ChA2 | CpA2 => vec![2 * (n - k - 1), 2 * k],
            ChB | CpB => vec![n - 1, n - 1],
            CpC => vec![2, 2, n - 3, n - 3],
            CpD => vec![4, 4, 4, 4],
            CpE => vec![6, 6, 8, 8],
        }
    }
}

impl fmt::Display for HypersurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}(n={}, k={})", self.kind, self.n, k),
            None => write!(f, "{}(n={})", self.kind, self.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalCurvature<T> {
    pub value: T,
    pub multiplicity: u32,
}

/// Hopf curvature plus the remaining principal curvatures with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSpectrum<T> {
    pub alpha: T,
    pub branches: Vec<PrincipalCurvature<T>>,
}

impl<T: Scalar> CurvatureSpectrum<T> {
    /// `1 + sum of multiplicities`.
    pub fn dimension(&self) -> u32 {
        1 + self.branches.iter().map(|b| b.multiplicity).sum::<u32>()
    }

    pub fn trace(&self) -> T {
        trace_shape(self)
    }

    pub fn trace_sq(&self) -> T {
        trace_shape_squared(self)
    }

    /// Spectrum in the space form of holomorphic curvature `c` (same sign as
    /// the table's): every curvature scales by `sqrt(|c|) / 2`.
    pub fn rescaled(&self, c: &T) -> Self {
        let factor = c.abs().sqrt() / T::int(2, c);
        CurvatureSpectrum {
            alpha: self.alpha.clone() * factor.clone(),
            branches: self
                .branches
                .iter()
                .map(|b| PrincipalCurvature {
                    value: b.value.clone() * factor.clone(),
                    multiplicity: b.multiplicity,
                })
                .collect(),
        }
    }

    /// Index of the smallest and largest non-Hopf curvature.
    pub fn branch_extremes(&self) -> Option<(usize, usize)> {
        if self.branches.is_empty() {
            return None;
        }
        let mut lo = 0;
        let mut hi = 0;
        for (i, b) in self.branches.iter().enumerate() {
            if b.value < self.branches[lo].value {
                lo = i;
            }
            if b.value > self.branches[hi].value {
                hi = i;
            }
        }
        Some((lo, hi))
    }
}

/// `alpha + sum m_i lambda_i`.
pub fn trace_shape<T: Scalar>(spectrum: &CurvatureSpectrum<T>) -> T {
    spectrum
        .branches
        .iter()
        .fold(spectrum.alpha.clone(), |acc, b| {
            acc + T::int(i64::from(b.multiplicity), &b.value) * b.value.clone()
        })
}

/// `alpha^2 + sum m_i lambda_i^2`.
pub fn trace_shape_squared<T: Scalar>(spectrum: &CurvatureSpectrum<T>) -> T {
    spectrum
        .branches
        .iter()
        .fold(spectrum.alpha.square(), |acc, b| {
            acc + T::int(i64::from(b.multiplicity), &b.value) * b.value.square()
        })
}

fn check_radius<T: Scalar>(family: &HypersurfaceFamily, t: &T) -> Result<()> {
    let domain = family.radius_domain();
    if !domain.contains(t) {
        return Err(Error::RadiusOutOfDomain {
            kind: family.kind,
            t: t.to_f64(),
        });
    }
    if let RadiusDomain::Open {
        excludes_special: true,
        ..
    } = domain
    {
        let gap = (t.clone() - ch_b_excluded_radius(t)).abs();
        if gap <= T::eps_like(t) {
            return Err(Error::ExcludedRadius {
                kind: family.kind,
                t: t.to_f64(),
            });
        }
    }
    Ok(())
}

/// Principal curvatures of `family` at radius `t`.
///
/// Zero-multiplicity branches (the `n = 1` curve, `C` with `n = 3` is
/// rejected earlier) are dropped.
pub fn curvature_spectrum<T: Scalar>(
    family: &HypersurfaceFamily,
    t: &T,
) -> Result<CurvatureSpectrum<T>> {
    use FamilyKind::*;
    check_radius(family, t)?;
    let one = T::int(1, t);
    let two = T::int(2, t);
    let mults = family.multiplicities();

    let (alpha, values): (T, Vec<T>) = match family.kind {
        ChA0 => (two, vec![one]),
        ChA1Geodesic | ChA1Point | ChA2 | ChB => {
            let h = t.tanh();
            let inv = one.clone() / h.clone();
            match family.kind {
                // 2 coth 2t = tanh t + coth t
                ChA1Geodesic => (h.clone() + inv, vec![h]),
                ChA1Point => (h.clone() + inv.clone(), vec![inv]),
                ChA2 => (h.clone() + inv.clone(), vec![inv, h]),
                // 2 tanh 2t = 4h / (1 + h^2)
                _ => (T::int(4, t) * h.clone() / (one + h.square()), vec![inv, h]),
            }
        }
        CpA1 | CpA2 | CpB | CpC | CpD | CpE => {
            let u = t.tan();
            let cot = one.clone() / u.clone();
            // 2 cot 2t = cot t - tan t
            let two_cot_2t = cot.clone() - u.clone();
            match family.kind {
                CpA1 => (two_cot_2t, vec![-u]),
                CpA2 => (two_cot_2t, vec![cot, -u]),
                // 2 tan 2t = 4u / (1 - u^2)
                CpB => (T::int(4, t) * u.clone() / (one - u.square()), vec![-cot, u]),
                _ => {
                    // cot(t - pi/4), cot(t - 3pi/4), cot(t - pi/2), cot t
                    let l1 = (one.clone() + u.clone()) / (u.clone() - one.clone());
                    let l2 = (one.clone() - u.clone()) / (one + u.clone());
                    (two_cot_2t, vec![l1, l2, -u, cot])
                }
            }
        }
    };

    let branches = values
        .into_iter()
        .zip(mults)
        .filter(|(_, m)| *m > 0)
        .map(|(value, multiplicity)| PrincipalCurvature {
            value,
            multiplicity,
        })
        .collect();
    Ok(CurvatureSpectrum { alpha, branches })
}

/// Relative errors of the two shifted-cotangent identities
/// `sum_j cot(t - j pi/4) = 4 cot 4t` and
/// `sum_j cot^2(t - j pi/4) = 12 + 16 cot^2 4t`, `j = 0..3`.
pub fn cot_quadruple_errors<T: Scalar>(t: &T) -> (T, T) {
    let quarter = T::pi_like(t) / T::int(4, t);
    let mut sum = T::int(0, t);
    let mut sum_sq = T::int(0, t);
    for j in 0..4 {
        let c = (t.clone() - T::int(j, t) * quarter.clone()).cot();
        sum_sq = sum_sq + c.square();
        sum = sum + c;
    }
    let c4 = (T::int(4, t) * t.clone()).cot();
    let want = T::int(4, t) * c4.clone();
    let want_sq = T::int(12, t) + T::int(16, t) * c4.square();
    let rel = |got: T, want: T| (got - want.clone()).abs() / want.abs();
    (rel(sum, want), rel(sum_sq, want_sq))
}

/// Radii at which the r-harmonicity equation loses its dependence on `r`.
#[derive(Clone, Debug)]
pub struct SpecialRadii {
    /// `x` with `tr S = 0`, in the family's quartic variable.
    pub x_minimal: BigRational,
    /// `x` with `tr S + 3 alpha = 0`.
    pub x_r_independent: BigRational,
    pub t_minimal: Option<Real>,
    pub t_r_independent: Option<Real>,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact `x` of the minimal radius (`tr S = 0`) for a projective family.
pub fn minimal_x(family: &HypersurfaceFamily) -> Result<BigRational> {
    let n = i64::from(family.n);
    let k = i64::from(family.k.unwrap_or(0));
    let (a, b) = match family.kind {
        FamilyKind::CpA1 => return Ok(ratio(1, 2 * n)),
        FamilyKind::CpA2 => return Ok(ratio(2 * k + 1, 2 * n)),
        FamilyKind::CpB => return Ok(ratio(1, n)),
        kind @ (FamilyKind::CpC | FamilyKind::CpD | FamilyKind::CpE) => cde_split(kind, n),
        kind => return Err(Error::UnsupportedFamily(kind)),
    };
    // tr S = 2(1 + b) cot 2t - 2a tan 2t
    Ok(ratio(a, 1 + a + b))
}

/// Exact `x` where `tr S + 3 alpha = 0` for a projective family.
pub fn r_independent_x(family: &HypersurfaceFamily) -> Result<BigRational> {
    let n = i64::from(family.n);
    let k = i64::from(family.k.unwrap_or(0));
    let (a, b) = match family.kind {
        FamilyKind::CpA1 => return Ok(ratio(2, n + 3)),
        FamilyKind::CpA2 => return Ok(ratio(k + 2, n + 3)),
        FamilyKind::CpB => return Ok(ratio(4, n + 3)),
        kind @ (FamilyKind::CpC | FamilyKind::CpD | FamilyKind::CpE) => cde_split(kind, n),
        kind => return Err(Error::UnsupportedFamily(kind)),
    };
    Ok(ratio(a, 4 + a + b))
}

/// Shared multiplicities `(m_1 = m_2, m_3 = m_4)` of the C/D/E families.
fn cde_split(kind: FamilyKind, n: i64) -> (i64, i64) {
    match kind {
        FamilyKind::CpC => (2, n - 3),
        FamilyKind::CpD => (4, 4),
        _ => (6, 8),
    }
}

/// Minimal and `r`-independent radii of a projective family, computed
/// exactly in the quartic variable and converted to `t` at `prec`.
pub fn special_radii(family: &HypersurfaceFamily, prec: Precision) -> Result<SpecialRadii> {
    let sub = family
        .substitution()
        .ok_or(Error::UnsupportedFamily(family.kind))?;
    let x_minimal = minimal_x(family)?;
    let x_r_independent = r_independent_x(family)?;
    let to_t = |x: &BigRational| {
        let t = sub.radius_from_x(&Real::from_ratio(x, prec));
        family.radius_domain().contains(&t).then_some(t)
    };
    Ok(SpecialRadii {
        t_minimal: to_t(&x_minimal),
        t_r_independent: to_t(&x_r_independent),
        x_minimal,
        x_r_independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn cp_a1_at_quarter_pi() {
        let fam = HypersurfaceFamily::cp_a1(2).unwrap();
        let s = curvature_spectrum(&fam, &std::f64::consts::FRAC_PI_4).unwrap();
        assert!(s.alpha.abs() < 1e-15);
        assert_eq!(s.branches.len(), 1);
        assert!(close(s.branches[0].value, -1.0, 1e-15));
        assert_eq!(s.branches[0].multiplicity, 2);
        assert!(close(trace_shape_squared(&s), 2.0, 1e-14));
    }

    #[test]
    fn horosphere_ignores_radius() {
        let fam = HypersurfaceFamily::ch_a0(2).unwrap();
        for t in [0.0, -3.0, 17.5] {
            let s = curvature_spectrum(&fam, &t).unwrap();
            assert_eq!(s.alpha, 2.0);
            assert_eq!(
                s.branches,
                vec![PrincipalCurvature {
                    value: 1.0,
                    multiplicity: 2
                }]
            );
            assert_eq!(trace_shape(&s), 4.0);
            assert_eq!(trace_shape_squared(&s), 6.0);
        }
    }

    #[test]
    fn cp_b_at_eighth_pi() {
        let fam = HypersurfaceFamily::cp_b(3).unwrap();
        let s = curvature_spectrum(&fam, &(std::f64::consts::PI / 8.0)).unwrap();
        let r2 = 2f64.sqrt();
        assert!(close(s.alpha, 2.0, 1e-14));
        assert!(close(s.branches[0].value, -(1.0 + r2), 1e-14));
        assert!(close(s.branches[1].value, r2 - 1.0, 1e-14));
        assert_eq!(s.branches[0].multiplicity, 2);
        assert_eq!(s.branches[1].multiplicity, 2);
    }

    #[test]
    fn cp_a1_trace_vanishes_at_sixth_pi_for_n2() {
        let fam = HypersurfaceFamily::cp_a1(2).unwrap();
        let t = Real::pi(Precision::default()) / Real::from_i64(6, Precision::default());
        let s = curvature_spectrum(&fam, &t).unwrap();
        assert!(trace_shape(&s).abs().to_f64() < 1e-28);
    }

    #[test]
    fn table_rows_match_direct_trig() {
        // the rational tan-form must agree with the literal table formulas
        let cot = |x: f64| 1.0 / x.tan();
        let t = 0.37;
        let fam = HypersurfaceFamily::cp_c(7).unwrap();
        let s = curvature_spectrum(&fam, &t).unwrap();
        let pi = std::f64::consts::PI;
        let want = [
            cot(t - pi / 4.0),
            cot(t - 3.0 * pi / 4.0),
            cot(t - pi / 2.0),
            cot(t),
        ];
        assert!(close(s.alpha, 2.0 * cot(2.0 * t), 1e-13));
        for (b, w) in s.branches.iter().zip(want) {
            assert!(close(b.value, w, 1e-13), "{} vs {w}", b.value);
        }
        let chb = curvature_spectrum(&HypersurfaceFamily::ch_b(4).unwrap(), &t).unwrap();
        assert!(close(chb.alpha, 2.0 * (2.0 * t).tanh(), 1e-13));
        let cha2 = curvature_spectrum(&HypersurfaceFamily::ch_a2(5, 2).unwrap(), &t).unwrap();
        assert!(close(cha2.alpha, 2.0 / (2.0 * t).tanh(), 1e-13));
        assert!(close(cha2.branches[0].value, 1.0 / t.tanh(), 1e-13));
        assert!(close(cha2.branches[1].value, t.tanh(), 1e-13));
        let cpb = curvature_spectrum(&HypersurfaceFamily::cp_b(4).unwrap(), &t).unwrap();
        assert!(close(cpb.alpha, 2.0 * (2.0 * t).tan(), 1e-13));
    }

    #[test]
    fn dimension_counts_every_family() {
        let fams = [
            HypersurfaceFamily::ch_a0(4).unwrap(),
            HypersurfaceFamily::ch_a1_geodesic(3).unwrap(),
            HypersurfaceFamily::ch_a1_point(3).unwrap(),
            HypersurfaceFamily::ch_a2(6, 2).unwrap(),
            HypersurfaceFamily::ch_b(5).unwrap(),
            HypersurfaceFamily::cp_a1(1).unwrap(),
            HypersurfaceFamily::cp_a1(7).unwrap(),
            HypersurfaceFamily::cp_a2(7, 3).unwrap(),
            HypersurfaceFamily::cp_b(5).unwrap(),
            HypersurfaceFamily::cp_c(5).unwrap(),
            HypersurfaceFamily::cp_d(),
            HypersurfaceFamily::cp_e(),
        ];
        for fam in fams {
            let s = curvature_spectrum(&fam, &0.3).unwrap();
            assert_eq!(s.dimension(), fam.dimension(), "{fam}");
        }
    }

    #[test]
    fn n1_curve_has_only_hopf_curvature() {
        let fam = HypersurfaceFamily::cp_a1(1).unwrap();
        let s = curvature_spectrum(&fam, &0.4).unwrap();
        assert!(s.branches.is_empty());
        assert!(close(s.alpha, 2.0 / (0.8f64).tan(), 1e-14));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(HypersurfaceFamily::cp_a2(3, 2).is_err());
        assert!(HypersurfaceFamily::cp_a2(2, 1).is_err());
        assert!(HypersurfaceFamily::cp_c(6).is_err());
        assert!(HypersurfaceFamily::cp_c(3).is_err());
        assert!(HypersurfaceFamily::new(FamilyKind::CpD, 8, None).is_err());
        assert!(HypersurfaceFamily::new(FamilyKind::CpB, 3, Some(1)).is_err());
        assert!(HypersurfaceFamily::cp_b(1).is_err());
        assert!(HypersurfaceFamily::ch_a2(4, 3).is_err());
    }

    #[test]
    fn domain_violations() {
        let fam = HypersurfaceFamily::cp_b(3).unwrap();
        assert!(matches!(
            curvature_spectrum(&fam, &0.8),
            Err(Error::RadiusOutOfDomain { .. })
        ));
        assert!(matches!(
            curvature_spectrum(&fam, &0.0),
            Err(Error::RadiusOutOfDomain { .. })
        ));
        let a1 = HypersurfaceFamily::cp_a1(3).unwrap();
        assert!(curvature_spectrum(&a1, &1.5).is_ok());
        assert!(curvature_spectrum(&a1, &1.6).is_err());
        let chb = HypersurfaceFamily::ch_b(2).unwrap();
        let bad = 0.5 * (2.0 + 3f64.sqrt()).ln();
        assert!(matches!(
            curvature_spectrum(&chb, &bad),
            Err(Error::ExcludedRadius { .. })
        ));
        let prec = Precision::default();
        let bad_hp = ch_b_excluded_radius(&Real::one(prec));
        assert!(matches!(
            curvature_spectrum(&chb, &bad_hp),
            Err(Error::ExcludedRadius { .. })
        ));
        assert!(curvature_spectrum(&chb, &(bad + 1e-6)).is_ok());
    }

    #[test]
    fn special_radii_closed_forms() {
        let prec = Precision::default();
        for n in 2..=12u32 {
            let fam = HypersurfaceFamily::cp_a1(n).unwrap();
            let sr = special_radii(&fam, prec).unwrap();
            let nf = f64::from(n);
            let t0 = (1.0 / (2.0 * nf - 1.0)).sqrt().atan();
            let t2 = (2.0 / (nf + 1.0)).sqrt().atan();
            assert!(close(sr.t_minimal.unwrap().to_f64(), t0, 1e-14));
            assert!(close(sr.t_r_independent.unwrap().to_f64(), t2, 1e-14));
            let b = HypersurfaceFamily::cp_b(n).unwrap();
            let sb = special_radii(&b, prec).unwrap();
            let t1 = 0.5 * (nf - 1.0).sqrt().atan();
            assert!(close(sb.t_minimal.unwrap().to_f64(), t1, 1e-14));
        }
        let ch = HypersurfaceFamily::ch_a0(3).unwrap();
        assert!(matches!(
            special_radii(&ch, prec),
            Err(Error::UnsupportedFamily(FamilyKind::ChA0))
        ));
    }

    #[test]
    fn special_radii_annihilate_traces() {
        let prec = Precision::default();
        let mut fams = vec![HypersurfaceFamily::cp_d(), HypersurfaceFamily::cp_e()];
        for n in 2..=20 {
            fams.push(HypersurfaceFamily::cp_a1(n).unwrap());
            fams.push(HypersurfaceFamily::cp_b(n).unwrap());
            if n >= 5 && n % 2 == 1 {
                fams.push(HypersurfaceFamily::cp_c(n).unwrap());
            }
            for k in 1..n.saturating_sub(1) {
                fams.push(HypersurfaceFamily::cp_a2(n, k).unwrap());
            }
        }
        for fam in fams {
            let sr = special_radii(&fam, prec).unwrap();
            let s = curvature_spectrum(&fam, sr.t_minimal.as_ref().unwrap()).unwrap();
            assert!(trace_shape(&s).abs().to_f64() < 1e-12, "{fam}");
            let s = curvature_spectrum(&fam, sr.t_r_independent.as_ref().unwrap()).unwrap();
            let w = trace_shape(&s) + Real::from_i64(3, prec) * s.alpha.clone();
            assert!(w.abs().to_f64() < 1e-12, "{fam}");
        }
    }

    #[test]
    fn cot_quadruple_identities() {
        let prec = Precision::default();
        for k in 1..40 {
            let t = Real::from_f64(f64::from(k) * 0.0195, prec);
            let (e1, e2) = cot_quadruple_errors(&t);
            assert!(e1.to_f64() < 1e-25 && e2.to_f64() < 1e-25, "t = {t}");
        }
    }

    #[test]
    fn parse_family_tags() {
        assert_eq!("A1".parse::<FamilyKind>().unwrap(), FamilyKind::CpA1);
        assert_eq!("cp-a2".parse::<FamilyKind>().unwrap(), FamilyKind::CpA2);
        assert_eq!(
            "CH_A1_point".parse::<FamilyKind>().unwrap(),
            FamilyKind::ChA1Point
        );
        assert!("F".parse::<FamilyKind>().is_err());
        for kind in FamilyKind::ALL {
            assert_eq!(kind.tag().parse::<FamilyKind>().unwrap(), kind);
        }
    }
}
