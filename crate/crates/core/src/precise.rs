//! High-precision real scalars and the [`Scalar`] abstraction shared by the
//! `f64` fast path and the certified `Real` path.
//!
//! Curvature evaluation is generic over [`Scalar`], so the same table code
//! drives dense `f64` sign scans and the 30+ digit evaluations used for
//! residual checks at certified roots.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float_num::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra binary digits carried on top of the requested decimal precision.
const GUARD_BITS: usize = 24;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision of a [`Real`], stored in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    bits: usize,
}

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 30;
    pub const MIN_DIGITS: u32 = 30;

    /// Precision holding at least `digits` significant decimal digits.
    pub fn digits(digits: u32) -> Self {
        let bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;
        // astro-float stores mantissas in 64-bit words
        Self {
            bits: bits.div_ceil(64) * 64,
        }
    }

    pub fn bits(self) -> usize {
        self.bits
    }

    /// Decimal digits this precision carries (guard bits excluded).
    pub fn decimal_digits(self) -> u32 {
        ((self.bits - GUARD_BITS) as f64 / std::f64::consts::LOG2_10).floor() as u32
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::digits(Self::DEFAULT_DIGITS)
    }
}

/// Arbitrary-precision binary floating point number.
///
/// Binary operations run at the larger precision of the two operands.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    prec: Precision,
}

impl Real {
    fn wrap(v: BigFloat, prec: Precision) -> Self {
        Self { v, prec }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec.bits), prec)
    }

    /// Exact conversion of an `f64` (every finite double is a dyadic rational).
    pub fn from_f64(v: f64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_f64(v, prec.bits), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: Precision) -> Self {
        // wide enough that integer inputs convert exactly
        let p = prec.bits.max((v.bits() as usize + 64).div_ceil(64) * 64);
        let parsed = with_consts(|cc| BigFloat::parse(&v.to_string(), Radix::Dec, p, RM, cc));
        let mut out = Self::wrap(parsed, prec);
        out.round_to(prec);
        out
    }

    pub fn from_ratio(q: &BigRational, prec: Precision) -> Self {
        let work = Precision {
            bits: prec.bits + 64,
        };
        let num = Self::from_bigint(q.numer(), work);
        let den = Self::from_bigint(q.denom(), work);
        let mut out = num / den;
        out.round_to(prec);
        out
    }

    fn div_into_one(&self) -> Self {
        Real::one(self.prec) / self
    }

    fn round_to(&mut self, prec: Precision) {
        // set_precision only fails on allocation errors
        let _ = self.v.set_precision(prec.bits, RM);
        self.prec = prec;
    }

    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut out = self.clone();
        out.round_to(prec);
        out
    }

    pub fn pi(prec: Precision) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec.bits, RM)), prec)
    }

    pub fn is_finite(&self) -> bool {
        !(self.v.is_nan() || self.v.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.prec.bits, RM), self.prec)
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.v.powi(n, self.prec.bits, RM), self.prec)
    }

    pub fn sin(&self) -> Self {
        self.unary(|v, p, cc| v.sin(p, RM, cc))
    }

    pub fn cos(&self) -> Self {
        self.unary(|v, p, cc| v.cos(p, RM, cc))
    }

    pub fn tan(&self) -> Self {
        self.unary(|v, p, cc| v.tan(p, RM, cc))
    }

    pub fn asin(&self) -> Self {
        self.unary(|v, p, cc| v.asin(p, RM, cc))
    }

    pub fn acos(&self) -> Self {
        self.unary(|v, p, cc| v.acos(p, RM, cc))
    }

    pub fn atan(&self) -> Self {
        self.unary(|v, p, cc| v.atan(p, RM, cc))
    }

    pub fn tanh(&self) -> Self {
        self.unary(|v, p, cc| v.tanh(p, RM, cc))
    }

    pub fn ln(&self) -> Self {
        self.unary(|v, p, cc| v.ln(p, RM, cc))
    }

    pub fn exp(&self) -> Self {
        self.unary(|v, p, cc| v.exp(p, RM, cc))
    }

    fn unary(&self, f: impl FnOnce(&BigFloat, usize, &mut Consts) -> BigFloat) -> Self {
        // a few extra bits absorb argument reduction loss before rounding back
        let work = self.prec.bits + 64;
        let mut arg = self.v.clone();
        let _ = arg.set_precision(work, RM);
        let mut out = Self::wrap(with_consts(|cc| f(&arg, work, cc)), self.prec);
        out.round_to(self.prec);
        out
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_inf_pos() {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
        }
        if self.v.is_zero() {
            return 0.0;
        }
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` significant digits in scientific form.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if !self.is_finite() {
            return format!("{}", self.to_f64());
        }
        let full = self.to_string();
        round_sci(&full, digits)
    }

    /// Nearest dyadic rational with `bits` fractional bits (exact for the
    /// value's binary expansion truncated to that scale).
    pub fn to_dyadic(&self, bits: u32) -> BigRational {
        let scaled = self.clone() * Real::from_i64(2, self.prec).powi(bits as usize);
        let rounded = scaled.v.round(0, RM);
        let s = Self::wrap(rounded, self.prec).to_string();
        let int = parse_sci_integer(&s);
        BigRational::new(int, BigInt::from(1u8) << bits)
    }
}

fn parse_sci_integer(s: &str) -> BigInt {
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (s, 0),
    };
    let negative = mant.starts_with('-');
    let mant = mant.trim_start_matches(['-', '+']);
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    let mut digits = format!("{ip}{fp}");
    let shift = exp - fp.len() as i64;
    if shift >= 0 {
        digits.extend(std::iter::repeat_n('0', shift as usize));
    } else {
        let keep = digits.len() as i64 + shift;
        digits.truncate(keep.max(0) as usize);
    }
    let v: BigInt = digits.parse().unwrap_or_else(|_| BigInt::zero());
    if negative {
        -v
    } else {
        v
    }
}

/// Round a scientific decimal string such as `1.2345e-3` to `digits`
/// significant digits, keeping scientific notation.
fn round_sci(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (s.to_string(), 0),
    };
    let negative = mant.starts_with('-');
    let mant = mant.trim_start_matches(['-', '+']);
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    let all: Vec<u8> = format!("{ip}{fp}").bytes().map(|b| b - b'0').collect();
    // position of the first nonzero digit
    let lead = all.iter().position(|&d| d != 0).unwrap_or(all.len());
    if lead == all.len() {
        return format!("{:.*e}", digits.saturating_sub(1), 0.0);
    }
    let mut exp10 = exp + ip.len() as i64 - 1 - lead as i64;
    let mut sig: Vec<u8> = all[lead..].to_vec();
    sig.resize(sig.len().max(digits + 1), 0);
    let round_up = sig[digits] >= 5;
    sig.truncate(digits);
    if round_up {
        let mut i = digits;
        loop {
            if i == 0 {
                sig.insert(0, 1);
                sig.truncate(digits);
                exp10 += 1;
                break;
            }
            i -= 1;
            if sig[i] == 9 {
                sig[i] = 0;
            } else {
                sig[i] += 1;
                break;
            }
        }
    }
    let text: String = sig.iter().map(|d| char::from(b'0' + d)).collect();
    let (head, tail) = text.split_at(1);
    let sign = if negative { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp10}")
    } else {
        format!("{sign}{head}.{tail}e{exp10}")
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Real({})",
            self.to_sci_string(self.prec.decimal_digits() as usize)
        )
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let prec = if self.prec.bits >= rhs.prec.bits {
                    self.prec
                } else {
                    rhs.prec
                };
                Real::wrap(self.v.$op(&rhs.v, prec.bits, RM), prec)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, add);
real_binop!(Sub, sub, sub);
real_binop!(Mul, mul, mul);
real_binop!(Div, div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.neg(), self.prec)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.prec)
    }
}

/// Minimal real-field interface needed by the curvature tables.
pub trait Scalar:
    Clone
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Integer constant carrying the precision of `like`.
    fn int(v: i64, like: &Self) -> Self;
    fn ratio(q: &BigRational, like: &Self) -> Self;
    fn pi_like(like: &Self) -> Self;
    /// Coincidence tolerance for radius comparisons at this precision.
    fn eps_like(like: &Self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn tan(&self) -> Self;
    fn tanh(&self) -> Self;
    fn asin(&self) -> Self;
    fn acos(&self) -> Self;
    fn atan(&self) -> Self;
    fn ln(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    fn cot(&self) -> Self {
        Self::int(1, self) / self.tan()
    }

    fn coth(&self) -> Self {
        Self::int(1, self) / self.tanh()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn is_finite_value(&self) -> bool {
        self.to_f64().is_finite()
    }
}

impl Scalar for f64 {
    fn int(v: i64, _: &Self) -> Self {
        v as f64
    }
    fn ratio(q: &BigRational, _: &Self) -> Self {
        ratio_to_f64(q)
    }
    fn pi_like(_: &Self) -> Self {
        std::f64::consts::PI
    }
    fn eps_like(_: &Self) -> Self {
        1e-13
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn tan(&self) -> Self {
        f64::tan(*self)
    }
    fn tanh(&self) -> Self {
        f64::tanh(*self)
    }
    fn asin(&self) -> Self {
        f64::asin(*self)
    }
    fn acos(&self) -> Self {
        f64::acos(*self)
    }
    fn atan(&self) -> Self {
        f64::atan(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Real {
    fn int(v: i64, like: &Self) -> Self {
        Real::from_i64(v, like.prec)
    }
    fn ratio(q: &BigRational, like: &Self) -> Self {
        Real::from_ratio(q, like.prec)
    }
    fn pi_like(like: &Self) -> Self {
        Real::pi(like.prec)
    }
    fn eps_like(like: &Self) -> Self {
        Real::from_i64(2, like.prec)
            .powi(like.prec.bits - 16)
            .div_into_one()
    }
    fn sin(&self) -> Self {
        Real::sin(self)
    }
    fn cos(&self) -> Self {
        Real::cos(self)
    }
    fn tan(&self) -> Self {
        Real::tan(self)
    }
    fn tanh(&self) -> Self {
        Real::tanh(self)
    }
    fn asin(&self) -> Self {
        Real::asin(self)
    }
    fn acos(&self) -> Self {
        Real::acos(self)
    }
    fn atan(&self) -> Self {
        Real::atan(self)
    }
    fn ln(&self) -> Self {
        Real::ln(self)
    }
    fn sqrt(&self) -> Self {
        Real::sqrt(self)
    }
    fn abs(&self) -> Self {
        Real::abs(self)
    }
    fn to_f64(&self) -> f64 {
        Real::to_f64(self)
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

/// Correctly scaled `f64` approximation of a big rational.
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let num = q.numer().abs();
    let den = q.denom();
    // shift so the quotient carries ~64 significant bits
    let shift = den.bits() as i64 - num.bits() as i64 + 64;
    let scaled = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        num / (den << (-shift) as usize)
    };
    let mant: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    let v = mant * 2f64.powi(-(shift as i32));
    if q.is_negative() {
        -v
    } else {
        v
    }
}
