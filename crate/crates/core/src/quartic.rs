//! Characteristic quartics of the projective families and certified root
//! isolation in exact rational arithmetic.
//!
//! For a projective family and an order `r`, the radii of proper
//! `r`-harmonic tubes are the roots in `(0, 1)` of a quartic `P(x)` in a
//! trigonometric variable `x` of the radius. Roots are counted with Sturm
//! chains of the square-free part and enclosed by plain bisection on dyadic
//! rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{FamilyKind, HypersurfaceFamily};
use crate::poly::{sturm_count, RatPoly};
use crate::precise::{Precision, Real, Scalar};
use crate::residual::residual;

/// Relation between the quartic variable `x` and the radius `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Substitution {
    /// `x = sin^2 t`
    #[serde(rename = "SIN2_T")]
    SinSqT,
    /// `x = cos^2 t`
    #[serde(rename = "COS2_T")]
    CosSqT,
    /// `x = cos^2 2t`
    #[serde(rename = "COS2_2T")]
    CosSq2T,
}

impl Substitution {
    pub fn tag(self) -> &'static str {
        match self {
            Substitution::SinSqT => "SIN2_T",
            Substitution::CosSqT => "COS2_T",
            Substitution::CosSq2T => "COS2_2T",
        }
    }

    pub fn x_from_radius<T: Scalar>(self, t: &T) -> T {
        match self {
            Substitution::SinSqT => t.sin().square(),
            Substitution::CosSqT => t.cos().square(),
            Substitution::CosSq2T => (T::int(2, t) * t.clone()).cos().square(),
        }
    }

    /// Inverse of [`x_from_radius`](Self::x_from_radius) on the family's
    /// radius domain. `x` is expected in `[0, 1]`.
    pub fn radius_from_x<T: Scalar>(self, x: &T) -> T {
        let s = x.sqrt();
        match self {
            Substitution::SinSqT => s.asin(),
            Substitution::CosSqT => s.acos(),
            Substitution::CosSq2T => s.acos() / T::int(2, x),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticPoly {
    /// `[a4, a3, a2, a1, a0]`
    coeffs: [BigRational; 5],
    substitution: Option<Substitution>,
    family: Option<HypersurfaceFamily>,
    r: Option<u64>,
}

impl QuarticPoly {
    /// Bare quartic from `a4, ..., a0`, not tied to any family.
    pub fn new(coeffs: [BigRational; 5]) -> Self {
        Self {
            coeffs,
            substitution: None,
            family: None,
            r: None,
        }
    }

    pub fn from_ints(coeffs: [i64; 5]) -> Self {
        Self::new(coeffs.map(|c| BigRational::from_integer(c.into())))
    }

    pub fn coeffs(&self) -> &[BigRational; 5] {
        &self.coeffs
    }

    pub fn a4(&self) -> &BigRational {
        &self.coeffs[0]
    }
    pub fn a3(&self) -> &BigRational {
        &self.coeffs[1]
    }
    pub fn a2(&self) -> &BigRational {
        &self.coeffs[2]
    }
    pub fn a1(&self) -> &BigRational {
        &self.coeffs[3]
    }
    pub fn a0(&self) -> &BigRational {
        &self.coeffs[4]
    }

    pub fn substitution(&self) -> Option<Substitution> {
        self.substitution
    }

    pub fn family(&self) -> Option<&HypersurfaceFamily> {
        self.family.as_ref()
    }

    pub fn r(&self) -> Option<u64> {
        self.r
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn eval_real(&self, x: &Real) -> Real {
        let prec = x.precision();
        self.coeffs.iter().fold(Real::zero(prec), |acc, c| {
            acc * x + Real::from_ratio(c, prec)
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let c = self.coeffs.iter().map(crate::precise::ratio_to_f64);
        c.fold(0.0, |acc, c| acc * x + c)
    }

    /// `a3^3 - 4 a4 a3 a2 + 8 a4^2 a1`, the numerator of the depressed
    /// linear coefficient. Zero exactly when the quartic is biquadratic
    /// after the shift.
    pub fn biquadratic_relation(&self) -> BigRational {
        let [a4, a3, a2, a1, _] = &self.coeffs;
        a3 * a3 * a3 - BigRational::from_integer(4.into()) * a4 * a3 * a2
            + BigRational::from_integer(8.into()) * a4 * a4 * a1
    }
}

impl fmt::Display for QuarticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Integer coefficients `[a4, a3, a2, a1, a0]` of the characteristic
/// quartic as polynomials in `(n, k, r)`, without admissibility checks.
pub fn table_coefficients(kind: FamilyKind, n: i64, k: i64, r: i64) -> Result<[i128; 5]> {
    let (n, k, r) = (i128::from(n), i128::from(k), i128::from(r));
    let a1_lead = 4 * (n * n + 3 * n) * r - 8 * (n - 1);
    let c = match kind {
        FamilyKind::CpA1 => [
            a1_lead,
            -2 * (2 * n * n + 11 * n + 3) * r + 4 * (n * n + 3 * n - 4),
            10 * (n + 1) * r - 2 * (3 * n - 5),
            -4 * r - 2 * (n + 1),
            1,
        ],
        FamilyKind::CpA2 => [
            a1_lead,
            -2 * (2 * n * n + (4 * k + 11) * n + 6 * k + 3) * r + 4 * (n * n - (2 * k - 3) * n - 4),
            2 * ((4 * k + 5) * n + 2 * k * k + 11 * k + 5) * r
                + 2 * ((2 * k - 3) * n + 4 * k * k + 4 * k + 5),
            -2 * (2 * k * k + 5 * k + 2) * r - 2 * ((2 * k + 1) * n + (2 * k + 1) * (2 * k + 1)),
            (2 * k + 1) * (2 * k + 1),
        ],
        FamilyKind::CpB => [
            n * (n + 3) * r - 2 * (n - 1),
            -(n * n + 8 * n + 3) * r + 4 * n * n + 2 * n - 10,
            (5 * n + 7) * r - 2 * (5 * n - 11),
            -4 * r + 2 * (n - 7),
            4,
        ],
        FamilyKind::CpC => [
            n * (n + 3) * r - 2 * (n - 1),
            -(n * n + 7 * n + 6) * r + 4 * (n * n - 3 * n - 4),
            2 * (2 * n + 5) * r - 2 * (3 * n - 41),
            -4 * r + 4 * (n - 17),
            16,
        ],
        FamilyKind::CpD => [27 * r - 4, -48 * r + 11, 25 * r + 46, -4 * r - 44, 16],
        FamilyKind::CpE => [
            135 * r - 14,
            -234 * r + 100,
            117 * r + 184,
            -18 * r - 180,
            72,
        ],
        other => return Err(Error::UnsupportedFamily(other)),
    };
    Ok(c)
}

/// The characteristic quartic of `family` at order `r`.
pub fn build_quartic(family: &HypersurfaceFamily, r: u64) -> Result<QuarticPoly> {
    if r < 2 {
        return Err(Error::InvalidOrder(r));
    }
    let sub = family
        .substitution()
        .ok_or(Error::UnsupportedFamily(family.kind()))?;
    let c = table_coefficients(
        family.kind(),
        i64::from(family.n()),
        i64::from(family.k().unwrap_or(0)),
        r as i64,
    )?;
    Ok(QuarticPoly {
        coeffs: c.map(|v| BigRational::from_integer(BigInt::from(v))),
        substitution: Some(sub),
        family: Some(*family),
        r: Some(r),
    })
}

/// `y^4 + p2 y^2 + p1 y + p0` with `y = x + shift`, for the monic quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedQuartic {
    pub p2: BigRational,
    pub p1: BigRational,
    pub p0: BigRational,
    /// `a3 / (4 a4)`
    pub shift: BigRational,
}

impl DepressedQuartic {
    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(vec![
            self.p0.clone(),
            self.p1.clone(),
            self.p2.clone(),
            BigRational::zero(),
            BigRational::one(),
        ])
    }

    pub fn is_biquadratic(&self) -> bool {
        self.p1.is_zero()
    }
}

pub fn depress(poly: &QuarticPoly) -> Result<DepressedQuartic> {
    let [a4, a3, a2, a1, a0] = poly.coeffs();
    if a4.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let int = |v: i64| BigRational::from_integer(v.into());
    let a4_2 = a4 * a4;
    let a4_3 = &a4_2 * a4;
    let a3_2 = a3 * a3;
    let p2 = (int(8) * a4 * a2 - int(3) * &a3_2) / (int(8) * &a4_2);
    let p1 = poly.biquadratic_relation() / (int(8) * &a4_3);
    let p0 = (int(16) * a4 * &a3_2 * a2 - int(64) * &a4_2 * a3 * a1 - int(3) * &a3_2 * &a3_2
        + int(256) * &a4_3 * a0)
        / (int(256) * &a4_3 * a4);
    Ok(DepressedQuartic {
        p2,
        p1,
        p0,
        shift: a3 / (int(4) * a4),
    })
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let root = |v: &BigInt| {
        let s = v.sqrt();
        (&s * &s == *v).then_some(s)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

/// Which of the two `y^2` candidates `(-p2 ± sqrt(p2^2 - 4 p0)) / 2` are
/// real and nonnegative, decided exactly. Returns `(plus_ok, minus_ok)`.
fn y_sq_admissible(p2: &BigRational, p0: &BigRational) -> Option<(bool, bool)> {
    let disc = p2 * p2 - BigRational::from_integer(4.into()) * p0;
    if disc.is_negative() {
        return None;
    }
    let plus = !p2.is_positive() || !p0.is_positive();
    let minus = !p2.is_positive() && !p0.is_negative();
    Some((plus, minus))
}

/// Real roots of `y^4 + p2 y^2 + p0`, ascending and without repeats.
pub fn biquadratic_roots(p2: &BigRational, p0: &BigRational, prec: Precision) -> Vec<Real> {
    let Some((plus, minus)) = y_sq_admissible(p2, p0) else {
        return Vec::new();
    };
    let half = Real::from_ratio(&BigRational::new(1.into(), 2.into()), prec);
    let disc = p2 * p2 - BigRational::from_integer(4.into()) * p0;
    let sd = Real::from_ratio(&disc, prec).sqrt();
    let mp2 = Real::from_ratio(&-p2, prec);
    let mut y_sq = Vec::new();
    if plus {
        y_sq.push((&mp2 + &sd) * &half);
    }
    if minus && !disc.is_zero() {
        y_sq.push((&mp2 - &sd) * &half);
    }
    let mut out = Vec::new();
    for v in y_sq {
        if v.is_zero() || v.is_negative() {
            // admissible but rounded through zero: the exact value is 0
            out.push(Real::zero(prec));
        } else {
            let y = v.sqrt();
            out.push(-&y);
            out.push(y);
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    out.dedup_by(|a, b| a == b);
    out
}

/// Exact version of [`biquadratic_roots`] when every root is rational.
pub fn biquadratic_roots_exact(p2: &BigRational, p0: &BigRational) -> Option<Vec<BigRational>> {
    let Some((plus, minus)) = y_sq_admissible(p2, p0) else {
        return Some(Vec::new());
    };
    let two = BigRational::from_integer(2.into());
    let disc = p2 * p2 - BigRational::from_integer(4.into()) * p0;
    let sd = rational_sqrt(&disc)?;
    let mut out = Vec::new();
    let mut candidates = Vec::new();
    if plus {
        candidates.push((-p2 + &sd) / &two);
    }
    if minus {
        candidates.push((-p2 - &sd) / &two);
    }
    for v in candidates {
        let y = rational_sqrt(&v)?;
        out.push(-y.clone());
        out.push(y);
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// `1 + max |a_i / a4|`, a bound on the modulus of every root.
pub fn cauchy_bound(poly: &QuarticPoly) -> Result<BigRational> {
    let a4 = poly.a4();
    if a4.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let max = poly.coeffs()[1..]
        .iter()
        .map(|c| (c / a4).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(BigRational::one() + max)
}

/// Endpoint perturbation applied when the polynomial vanishes at `lo` or `hi`.
pub fn endpoint_epsilon() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32u32)
}

struct Prepared {
    square_free: RatPoly,
    chain: Vec<RatPoly>,
    lo: BigRational,
    hi: BigRational,
}

fn prepare(poly: &QuarticPoly, lo: &BigRational, hi: &BigRational) -> Result<Prepared> {
    if lo >= hi {
        return Err(Error::InvalidInterval);
    }
    let p = poly.to_poly();
    if p.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let eps = endpoint_epsilon();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    if p.sign_at(&lo) == 0 {
        lo += &eps;
    }
    if p.sign_at(&hi) == 0 {
        hi -= &eps;
    }
    if lo >= hi {
        return Err(Error::InvalidInterval);
    }
    for e in [&lo, &hi] {
        if p.sign_at(e) == 0 {
            return Err(Error::EndpointRoot(e.to_string()));
        }
    }
    let square_free = p.square_free();
    let chain = square_free.sturm_chain();
    Ok(Prepared {
        square_free,
        chain,
        lo,
        hi,
    })
}

/// Number of distinct real roots of `poly` in `(lo, hi)`.
///
/// An endpoint where the polynomial vanishes is moved inward by
/// [`endpoint_epsilon`] first.
pub fn count_real_roots(poly: &QuarticPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    let prep = prepare(poly, lo, hi)?;
    Ok(sturm_count(&prep.chain, &prep.lo, &prep.hi))
}

/// Certified enclosure of one real root.
#[derive(Clone, Debug)]
pub struct RootCertificate {
    /// Isolating interval: exactly one root of the polynomial inside, and a
    /// strict sign change of its square-free part across it.
    pub interval: (BigRational, BigRational),
    pub root: Real,
    /// Set when bisection landed on the root exactly.
    pub exact_root: Option<BigRational>,
    /// Radius for the root, when the quartic belongs to a family.
    pub radius: Option<Real>,
    /// `r`-harmonicity residual at `radius`.
    pub residual: Option<Real>,
}

impl RootCertificate {
    pub fn width(&self) -> BigRational {
        &self.interval.1 - &self.interval.0
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.interval.0 < *x && *x < self.interval.1
    }
}

fn dyadic_tol(tol: f64) -> Result<BigRational> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::InvalidTolerance);
    }
    BigRational::from_float(tol).ok_or(Error::InvalidTolerance)
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// A split point of `(a, b)` where `p` does not vanish.
fn split_point(p: &RatPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    // a quartic has at most four roots, so one of five candidates works
    for (num, den) in [(1, 2), (3, 7), (4, 7), (2, 5), (3, 5)] {
        let m = a + &w * BigRational::new(num.into(), den.into());
        if p.sign_at(&m) != 0 {
            return m;
        }
    }
    a + &w * BigRational::new(5.into(), 11.into())
}

/// Isolate every distinct real root of `poly` in `(lo, hi)` and refine each
/// enclosure to width below `tol`, at the default working precision.
pub fn isolate_and_refine(
    poly: &QuarticPoly,
    lo: &BigRational,
    hi: &BigRational,
    tol: f64,
) -> Result<Vec<RootCertificate>> {
    isolate_and_refine_prec(poly, lo, hi, tol, Precision::default())
}

pub fn isolate_and_refine_prec(
    poly: &QuarticPoly,
    lo: &BigRational,
    hi: &BigRational,
    tol: f64,
    prec: Precision,
) -> Result<Vec<RootCertificate>> {
    let tol_q = dyadic_tol(tol)?;
    let prep = prepare(poly, lo, hi)?;
    let sf = &prep.square_free;

    let mut isolated = Vec::new();
    let mut stack = vec![(prep.lo.clone(), prep.hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match sturm_count(&prep.chain, &a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let m = split_point(sf, &a, &b);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));

    let full = poly.to_poly();
    let mut out = Vec::with_capacity(isolated.len());
    for (a, b) in isolated {
        let (interval, exact) = refine(sf, &full, a, b, &tol_q);
        let root = match &exact {
            Some(x) => Real::from_ratio(x, prec),
            None => Real::from_ratio(&((&interval.0 + &interval.1) * half()), prec),
        };
        let (radius, res) = radius_and_residual(poly, &root, prec);
        out.push(RootCertificate {
            interval,
            root,
            exact_root: exact,
            radius,
            residual: res,
        });
    }
    Ok(out)
}

type Interval = (BigRational, BigRational);

fn refine(
    sf: &RatPoly,
    full: &RatPoly,
    mut a: BigRational,
    mut b: BigRational,
    tol: &BigRational,
) -> (Interval, Option<BigRational>) {
    let sa = sf.sign_at(&a);
    loop {
        let mid = (&a + &b) * half();
        let width = &b - &a;
        if width < *tol && full.eval(&mid).abs() <= *tol {
            return ((a, b), None);
        }
        let sm = sf.sign_at(&mid);
        if sm == 0 {
            let delta = std::cmp::min(tol.clone(), width) / BigRational::from_integer(4.into());
            return ((&mid - &delta, &mid + &delta), Some(mid));
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
}

fn radius_and_residual(
    poly: &QuarticPoly,
    x: &Real,
    prec: Precision,
) -> (Option<Real>, Option<Real>) {
    let (Some(fam), Some(r)) = (poly.family.as_ref(), poly.r) else {
        return (None, None);
    };
    let Ok(t) = root_to_radius(fam, x) else {
        return (None, None);
    };
    let t = t.with_precision(prec);
    let res = residual(fam, &t, r).ok().map(|rep| rep.residual);
    (Some(t), res)
}

/// Radius `t` with quartic variable `x`, via the family's substitution.
pub fn root_to_radius(family: &HypersurfaceFamily, x: &Real) -> Result<Real> {
    let sub = family
        .substitution()
        .ok_or(Error::UnsupportedFamily(family.kind()))?;
    if !(x.is_positive() && *x < Real::one(x.precision())) {
        return Err(Error::RootOutOfRange(x.to_f64()));
    }
    let t = sub.radius_from_x(x);
    if !family.radius_domain().contains(&t) {
        return Err(Error::RootOutOfRange(x.to_f64()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::HypersurfaceFamily;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(p: &QuarticPoly) -> Vec<i64> {
        p.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer().try_into().unwrap()
            })
            .collect()
    }

    #[test]
    fn builds_table_rows() {
        let d = build_quartic(&HypersurfaceFamily::cp_d(), 32).unwrap();
        assert_eq!(ints(&d), vec![860, -1525, 846, -172, 16]);
        let a2 = build_quartic(&HypersurfaceFamily::cp_a2(3, 1).unwrap(), 2).unwrap();
        assert_eq!(ints(&a2), vec![128, -256, 200, -72, 9]);
        let a1 = build_quartic(&HypersurfaceFamily::cp_a1(2).unwrap(), 2).unwrap();
        assert_eq!(ints(&a1), vec![72, -108, 58, -14, 1]);
        assert_eq!(a1.substitution(), Some(Substitution::SinSqT));
        assert_eq!(a2.substitution(), Some(Substitution::CosSqT));
        assert_eq!(d.substitution(), Some(Substitution::CosSq2T));
    }

    #[test]
    fn build_rejects_ch_and_low_order() {
        let ch = HypersurfaceFamily::ch_b(3).unwrap();
        assert!(matches!(
            build_quartic(&ch, 3),
            Err(Error::UnsupportedFamily(FamilyKind::ChB))
        ));
        let a1 = HypersurfaceFamily::cp_a1(3).unwrap();
        assert!(matches!(build_quartic(&a1, 1), Err(Error::InvalidOrder(1))));
    }

    #[test]
    fn n1_quartic_factors() {
        // (2x - 1)^2 (4r x^2 - 4r x + 1)
        for r in 2..20i64 {
            let p = build_quartic(&HypersurfaceFamily::cp_a1(1).unwrap(), r as u64).unwrap();
            assert_eq!(ints(&p), vec![16 * r, -32 * r, 20 * r + 4, -4 * r - 4, 1]);
        }
    }

    #[test]
    fn depress_examples() {
        let monic = QuarticPoly::new([q(1, 1), q(0, 1), q(3, 2), q(-5, 1), q(7, 3)]);
        let d = depress(&monic).unwrap();
        assert_eq!((d.p2, d.p1, d.p0), (q(3, 2), q(-5, 1), q(7, 3)));
        let d = depress(&QuarticPoly::from_ints([128, -256, 200, -72, 9])).unwrap();
        assert_eq!(
            (d.p2.clone(), d.p1.clone(), d.p0.clone()),
            (q(1, 16), q(0, 1), q(-1, 128))
        );
        assert_eq!(d.shift, q(-1, 2));
        let d = depress(&QuarticPoly::from_ints([1, -4, 6, -4, 1])).unwrap();
        assert!(d.p2.is_zero() && d.p1.is_zero() && d.p0.is_zero());
        assert!(matches!(
            depress(&QuarticPoly::from_ints([0, 1, 2, 3, 4])),
            Err(Error::DegenerateLeadingCoefficient)
        ));
    }

    #[test]
    fn depressed_expansion_identity() {
        let p = QuarticPoly::from_ints([27, -48, 25, -4, 16]);
        let d = depress(&p).unwrap();
        for xv in [-3, -1, 0, 2, 5] {
            let x = q(xv, 1);
            let y = &x + &d.shift;
            let lhs = p.eval(&x) / p.a4();
            assert_eq!(lhs, d.to_poly().eval(&y));
        }
    }

    #[test]
    fn biquadratic_examples() {
        let prec = Precision::default();
        let r = biquadratic_roots(&q(1, 16), &q(-1, 128), prec);
        assert_eq!(r.len(), 2);
        assert!((r[0].to_f64() + 0.25).abs() < 1e-30);
        assert!((r[1].to_f64() - 0.25).abs() < 1e-30);
        let z = biquadratic_roots(&q(0, 1), &q(0, 1), prec);
        assert_eq!(z.len(), 1);
        assert!(z[0].is_zero());
        assert!(biquadratic_roots(&q(1, 1), &q(1, 1), prec).is_empty());
        assert_eq!(
            biquadratic_roots_exact(&q(1, 16), &q(-1, 128)),
            Some(vec![q(-1, 4), q(1, 4)])
        );
        // y^4 - 5 y^2 + 4 = (y^2 - 1)(y^2 - 4)
        assert_eq!(
            biquadratic_roots_exact(&q(-5, 1), &q(4, 1)).unwrap(),
            vec![q(-2, 1), q(-1, 1), q(1, 1), q(2, 1)]
        );
        assert_eq!(biquadratic_roots(&q(-5, 1), &q(4, 1), prec).len(), 4);
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(
            cauchy_bound(&QuarticPoly::from_ints([72, -108, 58, -14, 1])).unwrap(),
            q(5, 2)
        );
        assert_eq!(
            cauchy_bound(&QuarticPoly::from_ints([1, 0, 0, 0, 0])).unwrap(),
            q(1, 1)
        );
        assert_eq!(
            cauchy_bound(&QuarticPoly::from_ints([860, -1525, 846, -84, 16])).unwrap(),
            q(477, 172)
        );
    }

    #[test]
    fn count_examples() {
        let zero = q(0, 1);
        let one = q(1, 1);
        let a2 = QuarticPoly::from_ints([128, -256, 200, -72, 9]);
        assert_eq!(count_real_roots(&a2, &zero, &one).unwrap(), 2);
        let a1 = QuarticPoly::from_ints([72, -108, 58, -14, 1]);
        assert_eq!(count_real_roots(&a1, &zero, &one).unwrap(), 2);
        let p = QuarticPoly::from_ints([1, 0, -1, 0, 0]);
        assert_eq!(count_real_roots(&p, &q(-2, 1), &q(2, 1)).unwrap(), 3);
        // endpoint roots get nudged inward
        assert_eq!(count_real_roots(&p, &q(-1, 1), &q(1, 1)).unwrap(), 1);
        assert!(matches!(
            count_real_roots(&p, &one, &zero),
            Err(Error::InvalidInterval)
        ));
    }

    #[test]
    fn refine_examples() {
        let zero = q(0, 1);
        let one = q(1, 1);
        let a2 = QuarticPoly::from_ints([128, -256, 200, -72, 9]);
        let certs = isolate_and_refine(&a2, &zero, &one, 1e-20).unwrap();
        assert_eq!(certs.len(), 2);
        assert!(certs[0].contains(&q(1, 4)));
        assert!(certs[1].contains(&q(3, 4)));

        let quad = QuarticPoly::from_ints([1, -4, 6, -4, 1]);
        let certs = isolate_and_refine(&quad, &zero, &q(2, 1), 1e-10).unwrap();
        assert_eq!(certs.len(), 1);
        assert!(certs[0].contains(&one));

        let a1 = QuarticPoly::from_ints([72, -108, 58, -14, 1]);
        let certs = isolate_and_refine(&a1, &zero, &one, 1e-15).unwrap();
        assert_eq!(certs.len(), 2);
        let r0 = certs[0].root.to_f64();
        let r1 = certs[1].root.to_f64();
        assert!(0.1 < r0 && r0 < 0.15, "{r0}");
        assert!(0.7 < r1 && r1 < 0.75, "{r1}");
        for c in &certs {
            assert!(c.width() < q(1, 1_000_000_000_000_000));
            assert!(a1.eval_real(&c.root).abs().to_f64() <= 1e-15);
        }
    }

    #[test]
    fn certificates_carry_radius_and_residual() {
        let fam = HypersurfaceFamily::cp_a2(3, 1).unwrap();
        let p = build_quartic(&fam, 2).unwrap();
        let certs = isolate_and_refine(&p, &q(0, 1), &q(1, 1), 1e-25).unwrap();
        let pi = std::f64::consts::PI;
        let t: Vec<f64> = certs
            .iter()
            .map(|c| c.radius.as_ref().unwrap().to_f64())
            .collect();
        assert!((t[0] - pi / 3.0).abs() < 1e-14);
        assert!((t[1] - pi / 6.0).abs() < 1e-14);
        for c in &certs {
            assert!(c.residual.as_ref().unwrap().abs().to_f64() < 1e-20);
        }
    }

    #[test]
    fn radius_examples() {
        let prec = Precision::default();
        let pi = std::f64::consts::PI;
        let x = |n, d| Real::from_ratio(&q(n, d), prec);
        let a1 = HypersurfaceFamily::cp_a1(2).unwrap();
        assert!((root_to_radius(&a1, &x(1, 2)).unwrap().to_f64() - pi / 4.0).abs() < 1e-15);
        let a2 = HypersurfaceFamily::cp_a2(4, 1).unwrap();
        assert!((root_to_radius(&a2, &x(3, 4)).unwrap().to_f64() - pi / 6.0).abs() < 1e-15);
        let b = HypersurfaceFamily::cp_b(3).unwrap();
        assert!((root_to_radius(&b, &x(1, 4)).unwrap().to_f64() - pi / 6.0).abs() < 1e-15);
        assert!(matches!(
            root_to_radius(&b, &x(0, 1)),
            Err(Error::RootOutOfRange(_))
        ));
        assert!(matches!(
            root_to_radius(&b, &x(3, 2)),
            Err(Error::RootOutOfRange(_))
        ));
    }
}
