//! Fixed-precision real arithmetic over big rationals.
//!
//! Asymptotic validation compares quantities like C_3(200) (a 181-digit
//! integer) against alpha * 8^n / n at relative errors near 1e-7, so plain
//! f64 is out, and fully exact rationals blow up inside transcendental
//! series. `Real` is the compromise: a `BigRational` kept rounded to
//! [`PRECISION`] significant decimal digits after every operation, with the
//! handful of transcendental functions the crate needs (ln, exp, sqrt, pi)
//! computed by classical series to the same precision.
//!
//! Values are immutable; constants are computed once and cached.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Significant decimal digits carried by every `Real`.
pub const PRECISION: u32 = 40;

/// A positive rational below which series terms are considered spent.
fn series_eps() -> &'static BigRational {
    static EPS: OnceLock<BigRational> = OnceLock::new();
    EPS.get_or_init(|| {
        BigRational::new(BigInt::one(), BigInt::from(10u32).pow(PRECISION + 10))
    })
}

/// Round half away from zero to the nearest integer.
fn round_ratio_to_int(x: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let n = x.numer();
    let d = x.denom(); // positive by num-rational's invariant
    if n.sign() != Sign::Minus {
        (n * &two + d) / (d * &two)
    } else {
        -((-n * &two + d) / (d * &two))
    }
}

/// Round a rational to [`PRECISION`] significant decimal digits.
fn round_sig(x: BigRational) -> BigRational {
    if x.is_zero() {
        return x;
    }
    // |x| is within a factor of 2 of 2^e2, so its decimal exponent is
    // e2 * log10(2) up to +-1; a digit or two of slack is irrelevant here.
    let e2 = x.numer().magnitude().bits() as i64 - x.denom().magnitude().bits() as i64;
    let dec = (e2 * 30103).div_euclid(100000);
    let shift = PRECISION as i64 - 1 - dec;
    let ten = BigInt::from(10u32);
    if shift >= 0 {
        let scale = ten.pow(shift as u32);
        let mant = round_ratio_to_int(&(x * BigRational::from(scale.clone())));
        BigRational::new(mant, scale)
    } else {
        let scale = ten.pow((-shift) as u32);
        let mant = round_ratio_to_int(&(x / BigRational::from(scale.clone())));
        BigRational::from(mant * scale)
    }
}

/// A real number held to [`PRECISION`] significant decimal digits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Real(BigRational);

impl Real {
    pub fn zero() -> Self {
        Real(BigRational::zero())
    }

    pub fn one() -> Self {
        Real(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Real(BigRational::from(BigInt::from(n)))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Real(round_sig(BigRational::from(n.clone())))
    }

    pub fn from_rational(x: &BigRational) -> Self {
        Real(round_sig(x.clone()))
    }

    /// Exact ratio of two big integers, rounded once.
    pub fn from_ratio(n: &BigInt, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        Real(round_sig(BigRational::new(n.clone(), d.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// x^n for integer n by repeated squaring, rounding between steps.
    pub fn powi(&self, n: i64) -> Real {
        if n == 0 {
            return Real::one();
        }
        if n < 0 {
            return Real::one() / self.powi(-n);
        }
        let mut base = self.clone();
        let mut exp = n as u64;
        let mut acc = Real::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Principal square root by Newton iteration. Panics on negative input.
    pub fn sqrt(&self) -> Real {
        assert!(!self.0.is_negative(), "sqrt of a negative Real");
        if self.is_zero() {
            return Real::zero();
        }
        // seed with ~16 correct digits, or a power of two when out of f64 range
        let seed = match self.to_f64() {
            f if f.is_finite() && f > 0.0 => Real(round_sig(
                BigRational::from_float(f.sqrt()).expect("finite sqrt seed"),
            )),
            _ => {
                let e2 = self.0.numer().magnitude().bits() as i64
                    - self.0.denom().magnitude().bits() as i64;
                Real::from_int(2).powi(e2 / 2)
            }
        };
        let mut s = seed;
        let half = Real(BigRational::new(BigInt::one(), BigInt::from(2)));
        for _ in 0..6 {
            s = &(&s + &(self / &s)) * &half;
        }
        s
    }

    /// Natural logarithm. Panics on nonpositive input.
    ///
    /// Reduces to ln(m) + e*ln 2 with m in [1/2, 2), then sums the atanh
    /// series in z = (m-1)/(m+1), |z| <= 1/3.
    pub fn ln(&self) -> Real {
        assert!(self.0.is_positive(), "ln of a nonpositive Real");
        let e2 = self.0.numer().magnitude().bits() as i64
            - self.0.denom().magnitude().bits() as i64;
        let m = Real(round_sig(
            &self.0 / BigRational::from(BigInt::from(2)).pow(e2 as i32),
        ));
        let num = &m - &Real::one();
        let den = &m + &Real::one();
        let z = &num / &den;
        let z2 = &z * &z;
        let mut sum = Real::zero();
        let mut term = z.clone();
        let mut k: i64 = 0;
        loop {
            sum = &sum + &(&term / &Real::from_int(2 * k + 1));
            term = &term * &z2;
            k += 1;
            if term.0.abs() < *series_eps() {
                break;
            }
        }
        &(&sum * &Real::from_int(2)) + &(&Real::from_int(e2) * ln2())
    }

    /// Exponential, via 2^k * exp(r) with |r| <= (ln 2)/2.
    pub fn exp(&self) -> Real {
        let approx = self.to_f64();
        assert!(approx.is_finite(), "exp argument out of range");
        let k = (approx / std::f64::consts::LN_2).round() as i64;
        let r = self - &(&Real::from_int(k) * ln2());
        let mut sum = Real::one();
        let mut term = Real::one();
        let mut j: i64 = 1;
        loop {
            term = &(&term * &r) / &Real::from_int(j);
            sum = &sum + &term;
            j += 1;
            if term.0.abs() < *series_eps() {
                break;
            }
        }
        let two_k = Real(BigRational::from(BigInt::from(2)).pow(k as i32));
        &sum * &two_k
    }

    /// x^y for positive x.
    pub fn pow(&self, y: &Real) -> Real {
        if y.is_zero() {
            return Real::one();
        }
        (&self.ln() * y).exp()
    }

    /// Decimal string with `digits` significant digits, plain notation.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let x = self.0.abs();
        // decimal exponent: largest k with 10^k <= x
        let mut k: i64 = ((x.numer().magnitude().bits() as i64
            - x.denom().magnitude().bits() as i64)
            * 30103)
            .div_euclid(100000);
        let ten = BigRational::from(BigInt::from(10));
        let pow10 = |e: i64| -> BigRational {
            if e >= 0 {
                ten.pow(e as i32)
            } else {
                BigRational::one() / ten.pow((-e) as i32)
            }
        };
        while pow10(k) > x {
            k -= 1;
        }
        while pow10(k + 1) <= x {
            k += 1;
        }
        let mut mant = round_ratio_to_int(&(&x * pow10(digits as i64 - 1 - k)));
        // rounding can carry over, e.g. 999.96 -> 10000
        if mant >= BigInt::from(10u32).pow(digits) {
            mant /= 10;
            k += 1;
        }
        let ds = mant.to_string();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if k >= 0 {
            let int_len = (k + 1) as usize;
            if int_len >= ds.len() {
                out.push_str(&ds);
                out.push_str(&"0".repeat(int_len - ds.len()));
            } else {
                out.push_str(&ds[..int_len]);
                out.push('.');
                out.push_str(&ds[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-k - 1) as usize));
            out.push_str(&ds);
        }
        out
    }
}

/// ln 2 = 2 atanh(1/3), cached.
pub fn ln2() -> &'static Real {
    static LN2: OnceLock<Real> = OnceLock::new();
    LN2.get_or_init(|| {
        let third = Real(BigRational::new(BigInt::one(), BigInt::from(3)));
        let z2 = &third * &third;
        let mut sum = Real::zero();
        let mut term = third;
        let mut k: i64 = 0;
        loop {
            sum = &sum + &(&term / &Real::from_int(2 * k + 1));
            term = &term * &z2;
            k += 1;
            if term.0 < *series_eps() {
                break;
            }
        }
        &sum * &Real::from_int(2)
    })
}

/// pi by Machin's formula: pi/4 = 4 atan(1/5) - atan(1/239). Cached.
pub fn pi() -> &'static Real {
    static PI: OnceLock<Real> = OnceLock::new();
    PI.get_or_init(|| {
        let quarter =
            &(&Real::from_int(4) * &atan_recip(5)) - &atan_recip(239);
        &quarter * &Real::from_int(4)
    })
}

/// atan(1/x) for integer x >= 2, by the alternating Taylor series.
fn atan_recip(x: i64) -> Real {
    let inv = Real(BigRational::new(BigInt::one(), BigInt::from(x)));
    let minus_inv2 = &(&inv * &inv) * &Real::from_int(-1);
    let mut sum = Real::zero();
    let mut term = inv;
    let mut k: i64 = 0;
    loop {
        sum = &sum + &(&term / &Real::from_int(2 * k + 1));
        term = &term * &minus_inv2;
        k += 1;
        if term.0.abs() < *series_eps() {
            break;
        }
    }
    sum
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: Self) -> Real {
        Real(round_sig(&self.0 + &rhs.0))
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: Self) -> Real {
        Real(round_sig(&self.0 - &rhs.0))
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: Self) -> Real {
        Real(round_sig(&self.0 * &rhs.0))
    }
}

impl Div for &Real {
    type Output = Real;
    fn div(self, rhs: Self) -> Real {
        assert!(!rhs.0.is_zero(), "division by zero Real");
        Real(round_sig(&self.0 / &rhs.0))
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        &self / &rhs
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal_string(25))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(20))
    }
}
