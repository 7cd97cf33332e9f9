//! Dense univariate polynomials over `Q` with Sturm-sequence root counting.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::precise::Real;

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_real(&self, x: &Real) -> Real {
        let prec = x.precision();
        self.coeffs.iter().rev().fold(Real::zero(prec), |acc, c| {
            acc * x + Real::from_ratio(c, prec)
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + crate::precise::ratio_to_f64(c))
    }

    /// Sign of `self(x)` in `{-1, 0, 1}`, computed in integer arithmetic.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // clear the coefficient denominators, then homogenize in (num, den)
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = x.numer();
        let den = x.denom();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let ci = c.numer() * (&lcm / c.denom());
            acc = acc * num + ci * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    /// Quotient and remainder of Euclidean division.
    ///
    /// # Panics
    /// If `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * c;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().is_none_or(|d| d == 0) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Canonical Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone()];
        if self.degree().is_none_or(|d| d == 0) {
            return chain;
        }
        chain.push(self.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        chain
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Number of sign changes along a Sturm chain at `x` (zeros skipped).
pub fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of the chain's head in `(lo, hi]`.
pub fn sturm_count(chain: &[RatPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{sep}{a}")?,
                1 => write!(f, "{sep}{a}*x")?,
                _ => write!(f, "{sep}{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn division_roundtrip() {
        let a = RatPoly::from_ints([3, -2, 0, 5, 1]);
        let b = RatPoly::from_ints([1, 2, 3]);
        let (qt, r) = a.div_rem(&b);
        let mut back = vec![BigRational::zero(); 5];
        for (i, x) in qt.coeffs().iter().enumerate() {
            for (j, y) in b.coeffs().iter().enumerate() {
                back[i + j] += x * y;
            }
        }
        for (i, x) in r.coeffs().iter().enumerate() {
            back[i] += x;
        }
        assert_eq!(RatPoly::new(back), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn square_free_of_fourth_power() {
        let p = RatPoly::from_ints([1, -4, 6, -4, 1]);
        let s = p.square_free();
        assert_eq!(s.monic(), RatPoly::from_ints([-1, 1]));
    }

    #[test]
    fn sturm_counts_x2_x2_minus_1() {
        let p = RatPoly::from_ints([0, 0, -1, 0, 1]).square_free();
        let chain = p.sturm_chain();
        assert_eq!(sturm_count(&chain, &q(-2, 1), &q(2, 1)), 3);
        assert_eq!(sturm_count(&chain, &q(-1, 2), &q(2, 1)), 2);
    }

    #[test]
    fn sign_at_matches_eval() {
        let p = RatPoly::new(vec![q(1, 3), q(-7, 2), q(5, 4), q(2, 9)]);
        for (n, d) in [(0, 1), (1, 7), (-13, 5), (22, 3), (1, 1000)] {
            let x = q(n, d);
            let v = p.eval(&x);
            let s = if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            };
            assert_eq!(p.sign_at(&x), s);
        }
    }

    #[test]
    fn display_is_readable() {
        let p = RatPoly::from_ints([1, 0, -3, 2]);
        assert_eq!(p.to_string(), "2*x^3 - 3*x^2 + 1");
    }
}
