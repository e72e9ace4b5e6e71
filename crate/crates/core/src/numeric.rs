//! Arbitrary-precision real and complex scalars.
//!
//! [`Real`] is a thin value type over [`astro_float::BigFloat`] that carries
//! its own working precision, so that arithmetic can be written with the
//! ordinary operators. Binary operations run at the larger of the two operand
//! precisions. Complex numbers are pairs of reals.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision, in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 50;

    pub const fn digits(digits: u32) -> Self {
        Precision(digits)
    }

    pub fn decimal_digits(self) -> u32 {
        self.0
    }

    /// Mantissa length used for this precision, including guard bits.
    pub fn bits(self) -> usize {
        (self.0 as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_DIGITS)
    }
}

#[derive(Clone)]
pub struct Real(BigFloat);

impl Real {
    fn wrap(v: BigFloat) -> Self {
        debug_assert!(!v.is_nan(), "NaN produced in Real arithmetic");
        Real(v)
    }

    pub fn bits(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(GUARD_BITS)
    }

    pub fn zero(prec: Precision) -> Self {
        Real(BigFloat::from_i64(0, prec.bits()))
    }

    pub fn one(prec: Precision) -> Self {
        Real(BigFloat::from_i64(1, prec.bits()))
    }

    pub fn from_i64(n: i64, prec: Precision) -> Self {
        Real(BigFloat::from_i64(n, prec.bits()))
    }

    pub fn from_u64(n: u64, prec: Precision) -> Self {
        Real(BigFloat::from_u64(n, prec.bits()))
    }

    pub fn from_f64(x: f64, prec: Precision) -> Self {
        Real(BigFloat::from_f64(x, prec.bits()))
    }

    pub fn from_ratio(r: &Rational64, prec: Precision) -> Self {
        Self::from_i64(*r.numer(), prec) / Self::from_i64(*r.denom(), prec)
    }

    pub fn from_bigint(n: &BigInt, prec: Precision) -> Self {
        let p = prec.bits();
        Real(with_consts(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, p, RM, cc)))
            .checked_finite()
    }

    pub fn from_big_ratio(r: &BigRational, prec: Precision) -> Self {
        Self::from_bigint(r.numer(), prec) / Self::from_bigint(r.denom(), prec)
    }

    /// Parses a decimal literal such as `"1e-30"` or `"-3.25"`.
    pub fn parse(s: &str, prec: Precision) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, prec.bits(), RM, cc));
        if v.is_nan() || v.is_inf() {
            None
        } else {
            Some(Real(v))
        }
    }

    fn checked_finite(self) -> Self {
        assert!(!self.0.is_nan() && !self.0.is_inf(), "non-finite value");
        self
    }

    pub fn pi(prec: Precision) -> Self {
        Real(with_consts(|cc| cc.pi(prec.bits(), RM)))
    }

    /// `10^-e` at the given precision.
    pub fn ten_pow_neg(e: u32, prec: Precision) -> Self {
        Self::one(prec) / Self::from_i64(10, prec).powi(e as usize)
    }

    pub fn sin(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.0.cos(p, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.0.sqrt(self.bits(), RM))
    }

    pub fn ln(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.0.ln(p, RM, cc)))
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.0.exp(p, RM, cc)))
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.0.powi(n, self.bits(), RM))
    }

    /// Real power `self^e` for positive `self`.
    pub fn powf(&self, e: &Real) -> Self {
        let p = self.bits().max(e.bits());
        Self::wrap(with_consts(|cc| self.0.pow(&e.0, p, RM, cc)))
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.0.reciprocal(self.bits(), RM))
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.0.is_zero() && self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_negative()
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest integer, if it fits in an `i64`.
    pub fn round_to_i64(&self) -> Option<i64> {
        let half = BigFloat::from_f64(0.5, self.bits());
        let shifted = self.0.add(&half, self.bits(), RM).floor();
        let s = with_consts(|cc| shifted.format(Radix::Dec, RM, cc)).ok()?;
        let (mant, exp) = split_sci(&s)?;
        let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        let negative = mant.starts_with('-');
        let int_len = 1 + exp;
        if int_len <= 0 {
            return Some(0);
        }
        let int_len = int_len as usize;
        let mut int_digits: String = digits.chars().take(int_len).collect();
        while int_digits.len() < int_len {
            int_digits.push('0');
        }
        let v: i64 = int_digits.parse().ok()?;
        Some(if negative { -v } else { v })
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        with_consts(|cc| self.0.format(Radix::Dec, RM, cc))
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    }

    /// Scientific notation with `digits` significant decimal digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.0.is_zero() {
            return format!("0.{}e0", "0".repeat(digits - 1));
        }
        let s = with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).expect("formatting");
        let (mant, mut exp) = split_sci(&s).expect("scientific output");
        let negative = mant.starts_with('-');
        let mut ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        // drop leading zeros (e.g. "0.0012e0" style output)
        while ds.len() > 1 && ds[0] == 0 {
            ds.remove(0);
            exp -= 1;
        }
        let round_up = ds.get(digits).is_some_and(|&d| d >= 5);
        ds.truncate(digits);
        while ds.len() < digits {
            ds.push(0);
        }
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        let body: String = ds.iter().map(|d| char::from(b'0' + d)).collect();
        let sign = if negative { "-" } else { "" };
        if digits == 1 {
            format!("{sign}{body}e{exp}")
        } else {
            format!("{sign}{}.{}e{exp}", &body[..1], &body[1..])
        }
    }
}

fn split_sci(s: &str) -> Option<(&str, i64)> {
    match s.find(['e', 'E']) {
        Some(pos) => Some((&s[..pos], s[pos + 1..].parse().ok()?)),
        None => Some((s, 0)),
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(40))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.bits().max(rhs.bits());
                Real::wrap(self.0.$method(&rhs.0, p, RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg())
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg())
    }
}

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(iter: I) -> Real {
        let mut it = iter;
        let first = it.next().expect("sum of an empty sequence");
        it.fold(first, |acc, x| acc + x)
    }
}

/// `|a - b| <= tol * max(|a|, |b|)`.
pub fn rel_close(a: &Real, b: &Real, tol: &Real) -> bool {
    let scale = a.abs().max(&b.abs());
    (a - b).abs() <= tol * scale
}

/// `|a - b| / max(|a|, |b|)`, or `|a - b|` when both vanish.
pub fn rel_diff(a: &Real, b: &Real) -> Real {
    let scale = a.abs().max(&b.abs());
    let d = (a - b).abs();
    if scale.is_zero() {
        d
    } else {
        d / scale
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Real(BigFloat::from_i64(0, re.bits()));
        Complex { re, im }
    }

    pub fn zero(prec: Precision) -> Self {
        Complex::new(Real::zero(prec), Real::zero(prec))
    }

    pub fn one(prec: Precision) -> Self {
        Complex::new(Real::one(prec), Real::zero(prec))
    }

    /// `exp(i * pi * t)` for a rational `t`, reduced exactly modulo 2 first.
    pub fn exp_i_pi(t: &Rational64, prec: Precision) -> Self {
        let two = Rational64::from_integer(2);
        let mut r = t % two;
        if r.is_negative() {
            r += two;
        }
        // exact values on the axes avoid spurious residues
        let (num, den) = (*r.numer(), *r.denom());
        match (num, den) {
            (0, 1) => return Complex::one(prec),
            (1, 1) => return Complex::new(Real::from_i64(-1, prec), Real::zero(prec)),
            (1, 2) => return Complex::new(Real::zero(prec), Real::one(prec)),
            (3, 2) => return Complex::new(Real::zero(prec), Real::from_i64(-1, prec)),
            _ => {}
        }
        let angle = Real::pi(prec) * Real::from_ratio(&r, prec);
        Complex::new(angle.cos(), angle.sin())
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: &Real) -> Self {
        Complex::new(&self.re * s, &self.im * s)
    }

    /// Multiplies by `i^n`.
    pub fn mul_i_pow(&self, n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => self.clone(),
            1 => Complex::new(-&self.im, self.re.clone()),
            2 => Complex::new(-&self.re, -&self.im),
            _ => Complex::new(self.im.clone(), -&self.re),
        }
    }

    pub fn powi(&self, n: u64) -> Self {
        let prec_bits = self.re.bits();
        let mut result = Complex::from_real(Real(BigFloat::from_i64(1, prec_bits)));
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Complex::new(num.re / &d, num.im / &d)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        &self + &rhs
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        &self - &rhs
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        &self * &rhs
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        &self / &rhs
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

/// Dense square matrix of complex numbers, row-major.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { n, data }
    }

    pub fn identity(n: usize, prec: Precision) -> Self {
        Self::from_fn(n, |i, j| if i == j { Complex::one(prec) } else { Complex::zero(prec) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let bits = self.data.first().map_or(GUARD_BITS, |c| c.re.bits());
        ComplexMatrix::from_fn(n, |i, j| {
            let mut re = BigFloat::from_i64(0, bits);
            let mut im = BigFloat::from_i64(0, bits);
            for k in 0..n {
                let a = self.get(i, k);
                let b = other.get(k, j);
                re = re
                    .add(&a.re.0.mul(&b.re.0, bits, RM), bits, RM)
                    .sub(&a.im.0.mul(&b.im.0, bits, RM), bits, RM);
                im = im
                    .add(&a.re.0.mul(&b.im.0, bits, RM), bits, RM)
                    .add(&a.im.0.mul(&b.re.0, bits, RM), bits, RM);
            }
            Complex::new(Real(re), Real(im))
        })
    }

    pub fn conj_transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Right multiplication by a diagonal matrix.
    pub fn mul_diag(&self, diag: &[Complex]) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| self.get(i, j) * &diag[j])
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Real {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .reduce(|m, x| m.max(&x))
            .expect("non-empty matrix")
    }
}

/// Converts a big rational to the nearest `f64`, for display.
pub fn big_ratio_to_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() && !d.is_zero() {
        n / d
    } else {
        Real::from_big_ratio(r, Precision::digits(30)).to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn decimal_formatting_rounds() {
        let x = Real::from_ratio(&Rational64::new(2, 3), p());
        assert_eq!(x.to_decimal(5), "6.6667e-1");
        let y = Real::from_i64(-9999, p());
        assert_eq!(y.to_decimal(2), "-1.0e4");
        assert_eq!(Real::zero(p()).to_decimal(3), "0.00e0");
    }

    #[test]
    fn pi_has_requested_digits() {
        let pi = Real::pi(p());
        assert_eq!(
            pi.to_decimal(50),
            "3.1415926535897932384626433832795028841971693993751e0"
        );
    }

    #[test]
    fn rounding_to_integer() {
        assert_eq!(Real::from_f64(41.9999, p()).round_to_i64(), Some(42));
        assert_eq!(Real::from_f64(-2.4, p()).round_to_i64(), Some(-2));
        assert_eq!(Real::from_f64(0.3, p()).round_to_i64(), Some(0));
        assert_eq!(Real::from_i64(123456789, p()).round_to_i64(), Some(123456789));
    }

    #[test]
    fn exp_i_pi_quadrants_are_exact() {
        let i = Complex::exp_i_pi(&Rational64::new(5, 2), p());
        assert!(i.re.is_zero());
        assert_eq!(i.im, Real::one(p()));
        let w = Complex::exp_i_pi(&Rational64::new(1, 3), p());
        let cube = w.powi(3);
        let tol = Real::ten_pow_neg(45, p());
        assert!((&cube.re + &Real::one(p())).abs() < tol);
        assert!(cube.im.abs() < tol);
    }

    #[test]
    fn bigint_conversion() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        let r = Real::from_bigint(&n, p());
        assert_eq!(r.to_decimal(30), "1.23456789012345678901234567890e29");
    }
}
