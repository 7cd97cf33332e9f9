//! Existence and exact counts of proper `r`-harmonic tubes in `CP^n`.
//!
//! Counts come from Sturm chains of the characteristic quartic on `(0, 1)`.
//! The probe reports reproduce the intermediate-value witnesses behind the
//! guaranteed thresholds: at five increasing rational points the quartic
//! alternates in sign, which forces four roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{
    curvature_spectrum, minimal_x, trace_shape, trace_shape_squared, FamilyKind, HypersurfaceFamily,
};
use crate::precise::{Precision, Real};
use crate::quartic::{
    build_quartic, count_real_roots, isolate_and_refine_prec, rational_sqrt, table_coefficients,
    QuarticPoly, RootCertificate,
};

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn qi(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Position of `k` relative to the irrational cut points `k1 < k2` of the
/// `A2` family in `CP^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum A2Regime {
    BelowK1,
    AboveK2,
    Between,
}

/// `13 n^2 - 8 n + 4`, the radicand shared by `k1` and `k2`.
fn k_radicand(n: i128) -> i128 {
    13 * n * n - 8 * n + 4
}

/// Exact test of `k < k1(n)`.
pub fn below_k1(n: u32, k: u32) -> bool {
    let (n, k) = (i128::from(n), i128::from(k));
    // k < k1  <=>  n sqrt(D) < 5n^2 - 4n + 2 - 4(n-1)k
    let a = 5 * n * n - 4 * n + 2 - 4 * (n - 1) * k;
    a > 0 && n * n * k_radicand(n) < a * a
}

/// Exact test of `k > k2(n)`.
pub fn above_k2(n: u32, k: u32) -> bool {
    let (n, k) = (i128::from(n), i128::from(k));
    // k > k2  <=>  4(n-1)k + n^2 + 4n - 2 > n sqrt(D)
    let b = 4 * (n - 1) * k + n * n + 4 * n - 2;
    b > 0 && b * b > n * n * k_radicand(n)
}

pub fn a2_regime(n: u32, k: u32) -> A2Regime {
    if below_k1(n, k) {
        A2Regime::BelowK1
    } else if above_k2(n, k) {
        A2Regime::AboveK2
    } else {
        A2Regime::Between
    }
}

#[derive(Clone, Debug)]
pub struct KThresholds {
    pub k1: Real,
    pub k2: Real,
}

/// `k1 = (5n^2 - 4n + 2 - n sqrt(13n^2 - 8n + 4)) / (4(n-1))` and
/// `k2 = (n sqrt(13n^2 - 8n + 4) - n^2 - 4n + 2) / (4(n-1))`.
pub fn a2_k_thresholds(n: u32, prec: Precision) -> Result<KThresholds> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!(
            "k thresholds need n >= 3, got {n}"
        )));
    }
    let ni = i64::from(n);
    let root = Real::from_i64(13 * ni * ni - 8 * ni + 4, prec).sqrt() * Real::from_i64(ni, prec);
    let den = Real::from_i64(4 * (ni - 1), prec);
    let k1 = (Real::from_i64(5 * ni * ni - 4 * ni + 2, prec) - &root) / &den;
    let k2 = (root - Real::from_i64(ni * ni + 4 * ni - 2, prec)) / den;
    Ok(KThresholds { k1, k2 })
}

/// `4(n-1)k^2 - (10n^2 - 8n + 4)k + 3n^3 - 5n^2 + 3n - 1`.
pub fn eta1(n: i64, k: i64) -> i128 {
    let (n, k) = (i128::from(n), i128::from(k));
    4 * (n - 1) * k * k - (10 * n * n - 8 * n + 4) * k + 3 * n * n * n - 5 * n * n + 3 * n - 1
}

/// `4(n-1)k^2 + 2(n^2 + 4n - 2)k - 3n^3 + n^2 + 3n - 1`.
pub fn eta2(n: i64, k: i64) -> i128 {
    let (n, k) = (i128::from(n), i128::from(k));
    4 * (n - 1) * k * k + 2 * (n * n + 4 * n - 2) * k - 3 * n * n * n + n * n + 3 * n - 1
}

/// Interior probe points and the sign each must take, together with the
/// exact quartic values there.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub family: HypersurfaceFamily,
    pub r: u64,
    /// Increasing points in `[0, 1]`, endpoints included.
    #[serde(serialize_with = "ser_ratios")]
    pub points: Vec<BigRational>,
    #[serde(serialize_with = "ser_ratios")]
    pub values: Vec<BigRational>,
    pub signs: Vec<i8>,
    pub expected: Vec<i8>,
}

fn ser_ratios<S: serde::Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl ProbeReport {
    pub fn matches_expected(&self) -> bool {
        self.signs == self.expected
    }

    /// `+-+-+` style rendering of the observed signs.
    pub fn pattern(&self) -> String {
        self.signs
            .iter()
            .map(|s| match s {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect()
    }

    /// Number of sign alternations, a lower bound on the root count.
    pub fn sign_changes(&self) -> usize {
        self.signs.windows(2).filter(|w| w[0] * w[1] < 0).count()
    }
}

/// The three interior probe points for `family` at order `r`.
pub fn probe_points(family: &HypersurfaceFamily, r: u64) -> Result<Vec<BigRational>> {
    if r < 2 {
        return Err(Error::InvalidOrder(r));
    }
    let n = i64::from(family.n());
    let ri = r as i64;
    let one = BigRational::one();
    let inv_r = q(1, ri);
    let interior = match family.kind() {
        FamilyKind::CpA1 => {
            let x0 = q(1, 2 * n);
            vec![x0.clone(), x0 + q(1, n * ri), q(2, n + 3)]
        }
        FamilyKind::CpB => vec![q(2, ri), q(1, n), &one - q(5, ri)],
        FamilyKind::CpC => vec![q(5, ri), q(2, n), &one - q(4, ri)],
        FamilyKind::CpD => vec![q(5, ri), q(4, 9), &one - q(3, ri)],
        FamilyKind::CpE => vec![q(5, ri), q(2, 5), &one - q(4, ri)],
        FamilyKind::CpA2 => {
            let k = family.k().expect("A2 carries k");
            let xs = q(2 * i64::from(k) + 1, 2 * n);
            match a2_regime(family.n(), k) {
                A2Regime::BelowK1 => vec![xs.clone(), &xs + &inv_r, &one - &inv_r],
                A2Regime::AboveK2 => vec![inv_r.clone(), &xs - &inv_r, xs],
                A2Regime::Between => vec![xs],
            }
        }
        kind => return Err(Error::UnsupportedFamily(kind)),
    };
    let mut points = Vec::with_capacity(interior.len() + 2);
    points.push(BigRational::zero());
    points.extend(interior);
    points.push(one);
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ProbesCollide { r });
    }
    Ok(points)
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact quartic values and signs at the probe points.
pub fn probe_values(family: &HypersurfaceFamily, r: u64) -> Result<ProbeReport> {
    let poly = build_quartic(family, r)?;
    let points = probe_points(family, r)?;
    let values: Vec<BigRational> = points.iter().map(|x| poly.eval(x)).collect();
    let signs = values.iter().map(sign).collect();
    let expected = (0..points.len())
        .map(|i| if i % 2 == 0 { 1 } else { -1 })
        .collect();
    Ok(ProbeReport {
        family: *family,
        r,
        points,
        values,
        signs,
        expected,
    })
}

/// Orders beyond which at least two (`r_two`) and exactly four (`r_four`)
/// proper solutions are guaranteed. `r_four` is `None` where no order
/// yields four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdPair {
    pub r_two: u64,
    pub r_four: Option<u64>,
}

/// Exact-four bound for `A2` with `k < k1`.
pub fn a2_bound_below(k: u64) -> u64 {
    4 * (22 * k.pow(4) + 85 * k.pow(3) + 123 * k * k + 54 * k + 8) * k * k
}

/// Exact-four bound for `A2` with `k > k2`.
pub fn a2_bound_above(k: u64) -> u64 {
    4 * (6 * k.pow(4) + 19 * k.pow(3) + 39 * k * k + 8 * k + 2) * (2 * k + 1) * k
}

/// The `n`-only bound `18n^2 + 65n + 16` for the `A2` families.
pub fn a2_uniform_bound(n: u64) -> u64 {
    18 * n * n + 65 * n + 16
}

pub fn guaranteed_thresholds(family: &HypersurfaceFamily) -> Result<ThresholdPair> {
    let n = u64::from(family.n());
    let pair = |r_two, r_four| ThresholdPair {
        r_two,
        r_four: Some(r_four),
    };
    let out = match family.kind() {
        FamilyKind::CpA1 if n == 1 => ThresholdPair {
            r_two: 2,
            r_four: None,
        },
        FamilyKind::CpA1 => pair(2, 2 * n + 13),
        FamilyKind::CpB => {
            let b = 12 * n * n + 16 * n - 19;
            pair(b.min(6001), b.max(6001))
        }
        FamilyKind::CpC => pair(300, (1125 * n * n + 375 * n - 1996).div_ceil(4)),
        FamilyKind::CpD => pair(32, 89),
        FamilyKind::CpE => pair(27, 100),
        FamilyKind::CpA2 => {
            let k = family.k().expect("A2 carries k");
            if 2 * u64::from(k) + 1 == n {
                ThresholdPair {
                    r_two: 2,
                    r_four: None,
                }
            } else {
                match a2_regime(family.n(), k) {
                    A2Regime::BelowK1 => pair(2, a2_bound_below(u64::from(k))),
                    A2Regime::AboveK2 => pair(2, a2_bound_above(u64::from(k))),
                    A2Regime::Between => {
                        return Err(Error::NoExactCountGuarantee { n: family.n(), k })
                    }
                }
            }
        }
        kind => return Err(Error::UnsupportedFamily(kind)),
    };
    Ok(out)
}

fn unit_interval() -> (BigRational, BigRational) {
    (BigRational::zero(), BigRational::one())
}

/// Number of proper `r`-harmonic radii: roots of the quartic in `(0, 1)`,
/// excluding the minimal radius.
pub fn count_solutions(family: &HypersurfaceFamily, r: u64) -> Result<usize> {
    let poly = build_quartic(family, r)?;
    let (lo, hi) = unit_interval();
    let total = count_real_roots(&poly, &lo, &hi)?;
    let xm = minimal_x(family)?;
    Ok(if poly.eval(&xm).is_zero() {
        total - 1
    } else {
        total
    })
}

/// One proper `r`-harmonic tube with its certificate.
#[derive(Clone, Debug)]
pub struct Solution {
    pub certificate: RootCertificate,
    pub radius: Real,
    pub residual: Real,
    pub trace: Real,
    pub trace_sq: Real,
}

/// Certified proper radii for `family` at order `r`, sorted by `x`.
pub fn proper_solutions(
    family: &HypersurfaceFamily,
    r: u64,
    tol: f64,
    prec: Precision,
) -> Result<Vec<Solution>> {
    let poly = build_quartic(family, r)?;
    let (lo, hi) = unit_interval();
    let xm = minimal_x(family)?;
    let minimal_is_root = poly.eval(&xm).is_zero();
    let certs = isolate_and_refine_prec(&poly, &lo, &hi, tol, prec)?;
    let mut out = Vec::with_capacity(certs.len());
    for cert in certs {
        if minimal_is_root && cert.interval.0 <= xm && xm <= cert.interval.1 {
            continue;
        }
        let (Some(radius), Some(residual)) = (cert.radius.clone(), cert.residual.clone()) else {
            return Err(Error::RootOutOfRange(cert.root.to_f64()));
        };
        let spectrum = curvature_spectrum(family, &radius)?;
        out.push(Solution {
            trace: trace_shape(&spectrum),
            trace_sq: trace_shape_squared(&spectrum),
            certificate: cert,
            radius,
            residual,
        });
    }
    Ok(out)
}

/// Closed-form roots of the `A2` quartic with `2k + 1 = n`.
#[derive(Clone, Debug)]
pub struct A2ClosedForm {
    /// `(n+3)^2 r^2 - 8n(n+3) r + 16(n^2 + 2n - 2)`
    pub omega: BigInt,
    pub x_plus: Real,
    pub x_minus: Real,
    pub cos_4t: Real,
}

/// Same as [`A2ClosedForm`] when every radicand is a perfect square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2ExactForm {
    pub x_plus: BigRational,
    pub x_minus: BigRational,
    pub cos_4t: BigRational,
}

fn a2_half_check(n: u32, r: u64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::NotApplicable(format!(
            "the closed form needs odd n >= 3, got n = {n}"
        )));
    }
    if r < 2 {
        return Err(Error::InvalidOrder(r));
    }
    Ok(())
}

/// `(omega, num, den, cos_num, cos_den)` with
/// `(2x - 1)^2 = (num + n sqrt(omega)) / den` and
/// `cos 4t = (n sqrt(omega) - cos_num) / cos_den`.
fn a2_parts(n: u32, r: u64) -> (i128, i128, i128, i128, i128) {
    let (n, r) = (i128::from(n), i128::from(r));
    let omega = (n + 3) * (n + 3) * r * r - 8 * n * (n + 3) * r + 16 * (n * n + 2 * n - 2);
    let num = n * (n + 3) * r - 4 * (n * n + n - 1);
    let den = 2 * n * (n + 3) * r - 4 * (n - 1);
    let cos_num = 2 * (2 * n - 1) * (n + 1);
    let cos_den = n * (n + 3) * r - 2 * (n - 1);
    (omega, num, den, cos_num, cos_den)
}

pub fn a2_closed_form(n: u32, r: u64, prec: Precision) -> Result<A2ClosedForm> {
    a2_half_check(n, r)?;
    let (omega, num, den, cos_num, cos_den) = a2_parts(n, r);
    let real = |v: i128| Real::from_bigint(&BigInt::from(v), prec);
    let n_sqrt_omega = real(omega).sqrt() * real(i128::from(n));
    let spread = ((real(num) + &n_sqrt_omega) / real(den)).sqrt();
    let half = Real::one(prec) / Real::from_i64(2, prec);
    let x_plus = &half + &spread * &half;
    let x_minus = &half - &spread * &half;
    let cos_4t = (n_sqrt_omega - real(cos_num)) / real(cos_den);
    Ok(A2ClosedForm {
        omega: BigInt::from(omega),
        x_plus,
        x_minus,
        cos_4t,
    })
}

/// Exact closed form, or `None` when a radicand is not a rational square.
pub fn a2_closed_form_exact(n: u32, r: u64) -> Result<Option<A2ExactForm>> {
    a2_half_check(n, r)?;
    let (omega, num, den, cos_num, cos_den) = a2_parts(n, r);
    let Some(so) = rational_sqrt(&qi(omega)) else {
        return Ok(None);
    };
    let n_so = qi(i128::from(n)) * so;
    let Some(spread) = rational_sqrt(&((qi(num) + &n_so) / qi(den))) else {
        return Ok(None);
    };
    let half = q(1, 2);
    Ok(Some(A2ExactForm {
        x_plus: &half + &spread * &half,
        x_minus: &half - &spread * &half,
        cos_4t: (n_so - qi(cos_num)) / qi(cos_den),
    }))
}

/// Coefficients `[b4, b3, b2, b1, b0]` of
/// `2 n^4 r^4 P_A1(1/(2n) + 1/(nr))` as a polynomial in `r`.
pub fn a1_auxiliary_coefficients(n: i64) -> [i128; 5] {
    let n = i128::from(n);
    [
        (n - 1) * (n + 1) * (2 * n - 1),
        -2 * (2 * n.pow(4) + n.pow(3) - 2 * n * n + 7 * n - 4),
        -4 * (2 * n.pow(3) - 7 * n * n + 9 * n - 6),
        8 * (n.pow(3) + 4 * n * n - 5 * n + 4),
        -16 * (n - 1),
    ]
}

/// An exact rational identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn raw(kind: FamilyKind, n: i64, k: i64, r: i64) -> QuarticPoly {
    let c = table_coefficients(kind, n, k, r).expect("projective kind");
    QuarticPoly::new(c.map(qi))
}

/// Probe-value identities at dimension `n` and order `r`; the `A2` ones
/// for every `1 <= k <= n - 2`.
pub fn probe_identities(n: u32, r: u64) -> Vec<IdentityCheck> {
    let ni = i64::from(n);
    let nn = i128::from(n);
    let ri = r as i64;
    let n4 = qi(nn.pow(4));
    let mut out = Vec::new();
    let mut push = |name: String, lhs: BigRational, rhs: i128| {
        out.push(IdentityCheck {
            name,
            lhs,
            rhs: qi(rhs),
        })
    };

    let a1 = raw(FamilyKind::CpA1, ni, 0, ri);
    push(
        format!("A1 minimal probe n={n} r={r}"),
        qi(2) * &n4 * a1.eval(&q(1, 2 * ni)),
        -(nn - 1) * (2 * nn - 1).pow(2),
    );
    push(
        format!("A1 r-free probe n={n} r={r}"),
        qi((nn + 3).pow(4)) * a1.eval(&q(2, ni + 3)),
        -(3 * nn * nn + 2 * nn + 11) * (nn + 7) * (nn - 1),
    );
    let b = raw(FamilyKind::CpB, ni, 0, ri);
    push(
        format!("B minimal probe n={n} r={r}"),
        &n4 * b.eval(&q(1, ni)),
        2 * (3 * nn - 1) * (nn - 1).pow(3),
    );
    let c = raw(FamilyKind::CpC, ni, 0, ri);
    push(
        format!("C minimal probe n={n} r={r}"),
        &n4 * c.eval(&q(2, ni)),
        8 * (3 * nn - 1) * (nn - 1) * (nn - 2).pow(2),
    );
    for k in 1..=ni - 2 {
        let kk = i128::from(k);
        let a2 = raw(FamilyKind::CpA2, ni, k, ri);
        push(
            format!("A2 minimal probe n={n} k={k} r={r}"),
            qi(2) * &n4 * a2.eval(&q(2 * k + 1, 2 * ni)),
            -(nn - 1) * (2 * nn - 2 * kk - 1).pow(2) * (2 * kk + 1).pow(2),
        );
    }
    out
}

/// Exact values of each quartic at `x = 0` and `x = 1`.
pub fn boundary_identities(n: u32, r: u64) -> Vec<IdentityCheck> {
    let ni = i64::from(n);
    let nn = i128::from(n);
    let ri = r as i64;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut out = Vec::new();
    let mut both = |name: &str, p: QuarticPoly, at0: i128, at1: i128| {
        out.push(IdentityCheck {
            name: format!("{name} at 0, n={n} r={r}"),
            lhs: p.eval(&zero),
            rhs: qi(at0),
        });
        out.push(IdentityCheck {
            name: format!("{name} at 1, n={n} r={r}"),
            lhs: p.eval(&one),
            rhs: qi(at1),
        });
    };
    both(
        "A1",
        raw(FamilyKind::CpA1, ni, 0, ri),
        1,
        (2 * nn - 1).pow(2),
    );
    both("B", raw(FamilyKind::CpB, ni, 0, ri), 4, 4 * (nn - 1).pow(2));
    both(
        "C",
        raw(FamilyKind::CpC, ni, 0, ri),
        16,
        4 * (nn - 2).pow(2),
    );
    both("D", raw(FamilyKind::CpD, 9, 0, ri), 16, 25);
    for k in 1..=ni - 2 {
        let kk = i128::from(k);
        both(
            &format!("A2 k={k}"),
            raw(FamilyKind::CpA2, ni, k, ri),
            (2 * kk + 1).pow(2),
            (2 * kk - 2 * nn + 1).pow(2),
        );
    }
    out
}

/// `2 n^4 r^4 P_A1(x0 + 1/(nr))` against its expansion in `r`.
pub fn a1_auxiliary_identity(n: u32, r: u64) -> IdentityCheck {
    let ni = i64::from(n);
    let ri = r as i64;
    let p = raw(FamilyKind::CpA1, ni, 0, ri);
    let x1 = q(1, 2 * ni) + q(1, ni * ri);
    let rr = i128::from(ri);
    let lhs = qi(2 * i128::from(ni).pow(4) * rr.pow(4)) * p.eval(&x1);
    let b = a1_auxiliary_coefficients(ni);
    let rhs = b.iter().fold(0i128, |acc, c| acc * rr + c);
    IdentityCheck {
        name: format!("A1 auxiliary quartic n={n} r={r}"),
        lhs,
        rhs: qi(rhs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_identities_hold() {
        for n in 2..=30 {
            for r in [2, 5, 1000] {
                for id in probe_identities(n, r) {
                    assert!(id.holds(), "{}", id.name);
                }
                for id in boundary_identities(n, r) {
                    assert!(id.holds(), "{}", id.name);
                }
            }
        }
    }

    #[test]
    fn auxiliary_quartic_matches() {
        for n in 2..=20 {
            for r in [2, 7, 100] {
                let id = a1_auxiliary_identity(n, r);
                assert!(id.holds(), "{}: {} vs {}", id.name, id.lhs, id.rhs);
            }
        }
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            guaranteed_thresholds(&HypersurfaceFamily::cp_d()).unwrap(),
            ThresholdPair {
                r_two: 32,
                r_four: Some(89)
            }
        );
        assert_eq!(
            guaranteed_thresholds(&HypersurfaceFamily::cp_e()).unwrap(),
            ThresholdPair {
                r_two: 27,
                r_four: Some(100)
            }
        );
        assert_eq!(
            guaranteed_thresholds(&HypersurfaceFamily::cp_c(5).unwrap()).unwrap(),
            ThresholdPair {
                r_two: 300,
                r_four: Some(7001)
            }
        );
        assert_eq!(
            guaranteed_thresholds(&HypersurfaceFamily::cp_b(2).unwrap()).unwrap(),
            ThresholdPair {
                r_two: 61,
                r_four: Some(6001)
            }
        );
        assert_eq!(
            guaranteed_thresholds(&HypersurfaceFamily::cp_a2(3, 1).unwrap())
                .unwrap()
                .r_four,
            None
        );
    }

    #[test]
    fn a2_middle_range_has_no_guarantee() {
        // n = 6: k1 ~ 1.98, k2 ~ 3.83, so k = 2, 3 fall between
        let fam = HypersurfaceFamily::cp_a2(6, 2).unwrap();
        assert_eq!(a2_regime(6, 2), A2Regime::Between);
        assert!(matches!(
            guaranteed_thresholds(&fam),
            Err(Error::NoExactCountGuarantee { n: 6, k: 2 })
        ));
        assert_eq!(a2_regime(6, 1), A2Regime::BelowK1);
        assert_eq!(a2_regime(6, 4), A2Regime::AboveK2);
    }

    #[test]
    fn regimes_agree_with_real_thresholds() {
        let prec = Precision::default();
        for n in 3..=60u32 {
            let kt = a2_k_thresholds(n, prec).unwrap();
            for k in 1..=n - 2 {
                let kr = Real::from_i64(i64::from(k), prec);
                assert_eq!(below_k1(n, k), kr < kt.k1, "n={n} k={k}");
                assert_eq!(above_k2(n, k), kr > kt.k2, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn count_examples() {
        let a2 = HypersurfaceFamily::cp_a2(3, 1).unwrap();
        assert_eq!(count_solutions(&a2, 2).unwrap(), 2);
        let a1 = HypersurfaceFamily::cp_a1(2).unwrap();
        assert_eq!(count_solutions(&a1, 17).unwrap(), 4);
        assert_eq!(count_solutions(&a1, 2).unwrap(), 2);
        let curve = HypersurfaceFamily::cp_a1(1).unwrap();
        assert_eq!(count_solutions(&curve, 4).unwrap(), 2);
    }

    #[test]
    fn closed_form_n3_r2() {
        let exact = a2_closed_form_exact(3, 2).unwrap().unwrap();
        assert_eq!(exact.x_plus, q(3, 4));
        assert_eq!(exact.x_minus, q(1, 4));
        assert_eq!(exact.cos_4t, q(-1, 2));
        let cf = a2_closed_form(3, 2, Precision::default()).unwrap();
        assert_eq!(cf.omega, BigInt::from(64));
        assert!((cf.cos_4t.to_f64() + 0.5).abs() < 1e-30);
        assert!(matches!(
            a2_closed_form(4, 2, Precision::default()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn probe_patterns_above_thresholds() {
        let a1 = HypersurfaceFamily::cp_a1(4).unwrap();
        let rep = probe_values(&a1, 21).unwrap();
        assert!(rep.matches_expected(), "{}", rep.pattern());
        assert_eq!(rep.sign_changes(), 4);
        let d = probe_values(&HypersurfaceFamily::cp_d(), 89).unwrap();
        assert!(d.matches_expected(), "{}", d.pattern());
        let fam = HypersurfaceFamily::cp_a2(6, 2).unwrap();
        let mid = probe_values(&fam, 50).unwrap();
        assert_eq!(mid.points.len(), 3);
        assert!(mid.matches_expected());
    }

    #[test]
    fn small_orders_collide() {
        let b = HypersurfaceFamily::cp_b(3).unwrap();
        assert!(matches!(
            probe_values(&b, 4),
            Err(Error::ProbesCollide { r: 4 })
        ));
    }

    #[test]
    fn proper_solutions_exclude_minimal_root() {
        let curve = HypersurfaceFamily::cp_a1(1).unwrap();
        let sols = proper_solutions(&curve, 4, 1e-25, Precision::default()).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            let two_t = &s.radius + &s.radius;
            let v = two_t.sin();
            assert!(((&v * &v).to_f64() - 0.25).abs() < 1e-25);
            assert!(s.residual.abs().to_f64() < 1e-20);
        }
    }
}
