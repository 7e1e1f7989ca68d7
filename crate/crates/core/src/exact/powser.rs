//! Truncated power series with rational coefficients, used by the curve
//! kernel. A series stores coefficients of `u^0 .. u^{len-1}`; everything
//! beyond is unknown and operations truncate to the shorter operand.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series known through `u^{len-1}`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// The series `u` known through `u^{len-1}`.
    pub fn var(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set(&mut self, i: usize, v: Rational) {
        self.coeffs[i] = v;
    }

    pub fn truncate(&self, len: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..len.min(self.len())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `u^k`, keeping the same known length.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.len());
        for i in k..self.len() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn derivative(&self) -> Self {
        PowerSeries {
            coeffs: (1..self.len())
                .map(|i| &self.coeffs[i] * rat(i as i64))
                .collect(),
        }
    }

    /// `self^alpha` for a series with constant term 1 and any rational
    /// exponent, by the J.C.P. Miller recurrence.
    pub fn pow_rational(&self, alpha: &Rational) -> Self {
        assert!(
            self.coeffs.first().is_some_and(One::is_one),
            "constant term must be 1"
        );
        let len = self.len();
        let mut b = vec![Rational::zero(); len];
        b[0] = Rational::one();
        let a1 = alpha + Rational::one();
        for k in 1..len {
            let mut acc = Rational::zero();
            for t in 1..=k {
                if self.coeffs[t].is_zero() {
                    continue;
                }
                acc += (&a1 * rat(t as i64) - rat(k as i64)) * &self.coeffs[t] * &b[k - t];
            }
            b[k] = acc / rat(k as i64);
        }
        PowerSeries { coeffs: b }
    }

    /// Nonnegative integer power by repeated multiplication; any constant term.
    pub fn pow_u(&self, e: u32) -> Self {
        let mut acc = Self::one(self.len());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Self {
        assert!(
            self.coeffs.first().is_some_and(One::is_one),
            "constant term must be 1"
        );
        let len = self.len();
        // log(a)' = a'/a
        let inv = self.pow_rational(&rat(-1));
        let q = &self.derivative() * &inv.truncate(len - 1);
        let mut out = Self::zero(len);
        for i in 1..len {
            out.coeffs[i] = q.coeffs[i - 1].clone() / rat(i as i64);
        }
        out
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Self {
        let len = self.len();
        let mut out = Self::zero(len);
        if len == 0 {
            return out;
        }
        out.coeffs[0] = Rational::one();
        // e' = a' e
        for k in 1..len {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += rat(j as i64) * &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = acc / rat(k as i64);
        }
        out
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.len().min(rhs.len());
        PowerSeries {
            coeffs: (0..len).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.len().min(rhs.len());
        PowerSeries {
            coeffs: (0..len).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.len().min(rhs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn rational_power_inverts() {
        let a = PowerSeries::new(vec![rat(1), rat(2), ratio(1, 3), rat(-1), rat(0), rat(5)]);
        let half = a.pow_rational(&ratio(1, 2));
        assert_eq!(&half * &half, a);
        let inv = a.pow_rational(&rat(-1));
        assert_eq!(&inv * &a, PowerSeries::one(6));
        let cube = a.pow_rational(&rat(3));
        assert_eq!(cube, a.pow_u(3));
    }

    #[test]
    fn exp_log_round_trip() {
        let a = PowerSeries::new(vec![rat(1), ratio(1, 2), rat(-2), ratio(3, 7), rat(1)]);
        assert_eq!(a.log().exp(), a);
    }
}
