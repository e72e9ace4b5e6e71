//! q-numbers, q-factorials and quantum Lie superfactorials at `q = exp(iπ/κ)`.
//!
//! Single brackets `[x]_q = sin(xπ/κ) / sin(π/κ)` are evaluated as real sine
//! ratios. Double brackets `[[x]]_q = (1 - q^x) / (1 - q)` are complex.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lie_core::{Family, LieType};
use crate::numeric::{Complex, Precision, Real};

/// Altitude `κ = g + k` and working precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QContext {
    altitude: u32,
    precision: Precision,
}

impl QContext {
    pub const MIN_DIGITS: u32 = 30;

    pub fn new(altitude: u32, precision: Precision) -> Result<Self> {
        if altitude < 2 {
            return Err(Error::InvalidArgument(format!("altitude must be >= 2, got {altitude}")));
        }
        if precision.decimal_digits() < Self::MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {} digits, got {}",
                Self::MIN_DIGITS,
                precision.decimal_digits()
            )));
        }
        Ok(QContext { altitude, precision })
    }

    pub fn altitude(&self) -> u32 {
        self.altitude
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// `π / κ`.
    pub fn angle(&self) -> Real {
        Real::pi(self.precision) / Real::from_i64(self.altitude as i64, self.precision)
    }

    /// `q^x = exp(iπx/κ)` for rational `x`.
    pub fn q_pow(&self, x: Rational64) -> Complex {
        Complex::exp_i_pi(&(x / self.altitude as i64), self.precision)
    }

    fn check_window(&self, x: Rational64) -> Result<()> {
        if !x.is_positive() || x >= Rational64::from_integer(self.altitude as i64) {
            return Err(Error::OutsideUnitaryWindow {
                arg: x.to_string(),
                altitude: self.altitude,
            });
        }
        Ok(())
    }
}

/// `[x]_q = sin(xπ/κ) / sin(π/κ)`.
pub fn q_number(ctx: &QContext, x: Rational64) -> Real {
    let theta = ctx.angle();
    let p = ctx.precision;
    (&theta * Real::from_ratio(&x, p)).sin() / theta.sin()
}

/// `[[x]]` at base `q^b`: `(1 - q^{bx}) / (1 - q^b)`.
pub fn q_number_bb_at(ctx: &QContext, base_power: i64, x: Rational64) -> Complex {
    let one = Complex::one(ctx.precision);
    let num = &one - &ctx.q_pow(x * base_power);
    let den = &one - &ctx.q_pow(Rational64::from_integer(base_power));
    &num / &den
}

/// `[[n]]_q = (1 - q^n) / (1 - q)`.
pub fn q_number_bb(ctx: &QContext, n: i64) -> Result<Complex> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("double-bracket number needs n >= 0, got {n}")));
    }
    Ok(q_number_bb_at(ctx, 1, Rational64::from_integer(n)))
}

/// `[s]!_q = ∏_{n=1..s} [n]_q`, defined for `0 <= s < κ`.
pub fn q_factorial(ctx: &QContext, s: u32) -> Result<Real> {
    if s >= ctx.altitude {
        return Err(Error::OutsideUnitaryWindow {
            arg: s.to_string(),
            altitude: ctx.altitude,
        });
    }
    let mut acc = Real::one(ctx.precision);
    for n in 2..=s {
        acc = acc * q_number(ctx, Rational64::from_integer(n as i64));
    }
    Ok(acc)
}

/// `[[s]]!` at base `q^b`.
pub fn q_factorial_bb_at(ctx: &QContext, base_power: i64, s: u32) -> Complex {
    let mut acc = Complex::one(ctx.precision);
    for n in 2..=s {
        acc = &acc * &q_number_bb_at(ctx, base_power, Rational64::from_integer(n as i64));
    }
    acc
}

/// Arguments `x` of the factors `[x]_q` whose product is the quantum Lie
/// superfactorial of the given type.
pub fn superfactorial_arguments(t: LieType) -> Vec<Rational64> {
    let int = Rational64::from_integer;
    let n = t.rank as i64;
    let mut out = Vec::new();
    let factorial = |out: &mut Vec<Rational64>, s: i64| out.extend((1..=s).map(int));
    match t.family {
        Family::A => (1..=n).for_each(|s| factorial(&mut out, s)),
        Family::D => {
            (0..n - 1).for_each(|i| factorial(&mut out, 2 * i + 1));
            factorial(&mut out, n - 1);
        }
        Family::E => {
            let exps: &[i64] = match n {
                6 => &[1, 4, 5, 7, 8, 11],
                7 => &[1, 5, 7, 9, 11, 13, 17],
                _ => &[1, 7, 11, 13, 17, 19, 23, 29],
            };
            exps.iter().for_each(|&s| factorial(&mut out, s));
        }
        Family::B => {
            for i in 0..n {
                let s = 2 * i + 1;
                out.push(Rational64::new(s, 2));
                factorial(&mut out, s - 1);
            }
        }
        Family::C => {
            for i in 0..n {
                let s = 2 * i + 1;
                let middle = (s + 1) / 2;
                for j in 1..=s {
                    out.push(if j == middle { int(j) } else { Rational64::new(j, 2) });
                }
            }
        }
        Family::F => {
            let counts: [(i64, i64, usize); 14] = [
                (1, 2, 2),
                (1, 1, 3),
                (3, 2, 1),
                (2, 1, 3),
                (5, 2, 2),
                (3, 1, 3),
                (7, 2, 1),
                (4, 1, 2),
                (9, 2, 1),
                (5, 1, 2),
                (11, 2, 1),
                (6, 1, 1),
                (7, 1, 1),
                (8, 1, 1),
            ];
            for &(num, den, mult) in &counts {
                out.extend(std::iter::repeat_n(Rational64::new(num, den), mult));
            }
        }
        Family::G => out.extend([
            Rational64::new(5, 3),
            Rational64::new(4, 3),
            int(3),
            int(2),
            int(1),
            Rational64::new(1, 3),
        ]),
    }
    out.sort();
    out
}

/// `sf_G[q]`, the product of `[x]_q` over [`superfactorial_arguments`].
pub fn q_superfactorial(ctx: &QContext, t: LieType) -> Result<Real> {
    let args = superfactorial_arguments(t);
    for &x in &args {
        ctx.check_window(x)?;
    }
    let theta = ctx.angle();
    let p = ctx.precision;
    let denom = theta.sin();
    let mut acc = Real::one(p);
    for x in args {
        if x.is_one() {
            continue;
        }
        acc = acc * ((&theta * Real::from_ratio(&x, p)).sin() / &denom);
    }
    Ok(acc)
}

/// `Sf_G` at base `q^b`: every `[x]_q` replaced by `[[x]]_{q^b}`.
pub fn q_superfactorial_bb_at(ctx: &QContext, base_power: i64, t: LieType) -> Result<Complex> {
    let args = superfactorial_arguments(t);
    for &x in &args {
        ctx.check_window(x)?;
    }
    let mut acc = Complex::one(ctx.precision);
    for x in args {
        if x.is_one() {
            continue;
        }
        acc = &acc * &q_number_bb_at(ctx, base_power, x);
    }
    Ok(acc)
}

/// `Sf_G[q]` in the double-bracket convention.
pub fn q_superfactorial_bb(ctx: &QContext, t: LieType) -> Result<Complex> {
    q_superfactorial_bb_at(ctx, 1, t)
}

/// `Sf_q(r) = ∏_{s=1..r} [[s]]!_q` at base `q^b`.
pub fn q_superfactorial_a_bb_at(ctx: &QContext, base_power: i64, r: u32) -> Complex {
    let mut acc = Complex::one(ctx.precision);
    for s in 1..=r {
        acc = &acc * &q_factorial_bb_at(ctx, base_power, s);
    }
    acc
}

/// The superfactorial at `q = 1`, i.e. the product of the arguments, exactly.
pub fn classical_superfactorial(t: LieType) -> BigRational {
    superfactorial_arguments(t)
        .into_iter()
        .fold(BigRational::one(), |acc, x| {
            acc * BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
        })
}

/// `G_q(n)` at positive integers, from `G_q(1) = 1` and
/// `G_q(z+1) = Γ_q(z) G_q(z)` with `Γ_q(m) = [[m-1]]!_q`.
pub fn q_barnes_integer(ctx: &QContext, n: i64) -> Result<Complex> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("Barnes function evaluated at n = {n} < 1")));
    }
    let mut g = Complex::one(ctx.precision);
    let mut gamma = Complex::one(ctx.precision);
    for z in 1..n {
        // gamma = Γ_q(z) = [[z-1]]!
        if z >= 2 {
            gamma = &gamma * &q_number_bb_at(ctx, 1, Rational64::from_integer(z - 1));
        }
        g = &g * &gamma;
    }
    Ok(g)
}

/// `sin(π j / N)` for `j = 0..=N`.
#[derive(Clone, Debug)]
pub struct SineTable {
    modulus: i64,
    values: Vec<Real>,
}

impl SineTable {
    pub fn new(modulus: i64, prec: Precision) -> Self {
        let step = Real::pi(prec) / Real::from_i64(modulus, prec);
        let values = (0..=modulus)
            .map(|j| {
                if j == 0 || j == modulus {
                    Real::zero(prec)
                } else {
                    (&step * Real::from_i64(j, prec)).sin()
                }
            })
            .collect();
        SineTable { modulus, values }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// `sin(π j / N)` for any integer `j`.
    pub fn sin(&self, j: i64) -> Real {
        let two_n = 2 * self.modulus;
        let r = j.rem_euclid(two_n);
        if r <= self.modulus {
            self.values[r as usize].clone()
        } else {
            -&self.values[(r - self.modulus) as usize]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_close;

    fn ctx(k: u32) -> QContext {
        QContext::new(k, Precision::default()).unwrap()
    }

    fn tol() -> Real {
        Real::ten_pow_neg(30, Precision::default())
    }

    #[test]
    fn context_validation() {
        assert!(QContext::new(1, Precision::default()).is_err());
        assert!(QContext::new(5, Precision::digits(20)).is_err());
    }

    #[test]
    fn q_two_at_thirty() {
        let c = ctx(30);
        let v = q_number(&c, Rational64::from_integer(2));
        let want = (c.angle()).cos() * Real::from_i64(2, c.precision());
        assert!(rel_close(&v, &want, &tol()));
        assert_eq!(q_number(&c, Rational64::from_integer(1)), Real::one(c.precision()));
    }

    #[test]
    fn one_third_at_six() {
        let c = ctx(6);
        let p = c.precision();
        let v = q_number(&c, Rational64::new(1, 3));
        let want = (Real::pi(p) / Real::from_i64(18, p)).sin() / (Real::pi(p) / Real::from_i64(6, p)).sin();
        assert!(rel_close(&v, &want, &tol()));
    }

    #[test]
    fn double_bracket_edge_cases() {
        let c = ctx(9);
        assert!(q_number_bb(&c, 0).unwrap().abs().is_zero());
        let one = q_number_bb(&c, 1).unwrap();
        assert!((&one.re - &Real::one(c.precision())).abs() < tol());
        // q^κ = -1
        let at_k = q_number_bb(&c, 9).unwrap();
        let two = Complex::from_real(Real::from_i64(2, c.precision()));
        let want = &two / &(&Complex::one(c.precision()) - &c.q_pow(Rational64::from_integer(1)));
        assert!((&at_k - &want).abs() < tol());
    }

    #[test]
    fn factorial_window() {
        let c = ctx(5);
        assert!(q_factorial(&c, 4).is_ok());
        assert!(q_factorial(&c, 5).is_err());
        assert_eq!(q_factorial(&c, 0).unwrap(), Real::one(c.precision()));
    }

    #[test]
    fn sine_table_symmetry() {
        let t = SineTable::new(7, Precision::default());
        assert_eq!(t.sin(3), t.sin(4));
        assert_eq!(t.sin(-3), -&t.sin(3));
        assert_eq!(t.sin(17), t.sin(3));
    }

    #[test]
    fn g2_and_f4_argument_counts() {
        assert_eq!(superfactorial_arguments("G2".parse().unwrap()).len(), 6);
        assert_eq!(superfactorial_arguments("F4".parse().unwrap()).len(), 24);
        assert_eq!(superfactorial_arguments("C3".parse().unwrap()).len(), 9);
    }
}
