//! Dense univariate polynomials in the formal variable `n` over the rationals.
//!
//! Internally a polynomial is a vector of integer numerators sharing one
//! positive denominator. The pair is kept reduced: the content of the
//! numerators is coprime to the denominator, trailing zeros are trimmed and the
//! zero polynomial is `([], 1)`. Multiplication is then pure integer
//! convolution followed by a single reduction pass.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The polynomial `n`.
    pub fn n() -> Self {
        Poly {
            num: vec![BigInt::zero(), BigInt::one()],
            den: BigInt::one(),
        }
    }

    /// `n + c`
    pub fn n_plus(c: i64) -> Self {
        Poly {
            num: vec![BigInt::from(c), BigInt::one()],
            den: BigInt::one(),
        }
        .normalized()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(rat(c))
    }

    /// Builds a polynomial from coefficients listed lowest degree first.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Poly { num, den }.normalized()
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Poly {
            num: coeffs.into_iter().map(BigInt::from).collect(),
            den: BigInt::one(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.num.last().is_some_and(Zero::is_zero) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return self;
        }
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if !self.den.is_one() {
            let mut g = self.den.clone();
            for c in &self.num {
                if g.is_one() {
                    break;
                }
                if !c.is_zero() {
                    g = g.gcd(c);
                }
            }
            if !g.is_one() {
                self.den /= &g;
                for c in &mut self.num {
                    *c /= &g;
                }
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// Coefficient of `n^i`.
    pub fn coeff(&self, i: usize) -> Rational {
        match self.num.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    /// `(exponent, coefficient)` pairs for the nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, Rational::new(c.clone(), self.den.clone())))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc / Rational::from_integer(self.den.clone())
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() || self.is_zero() {
            return Poly::zero();
        }
        Poly {
            num: self.num.iter().map(|a| a * c.numer()).collect(),
            den: &self.den * c.denom(),
        }
        .normalized()
    }

    pub fn scale_i64(&self, c: i64) -> Poly {
        self.scale(&rat(c))
    }

    /// Multiplies by `n^k`.
    pub fn shift_degree(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut num = vec![BigInt::zero(); k];
        num.extend(self.num.iter().cloned());
        Poly {
            num,
            den: self.den.clone(),
        }
    }

    /// The polynomial `p(n + c)`.
    pub fn translate(&self, c: &Rational) -> Poly {
        // Horner in the polynomial ring: p(n + c) = (...(a_d (n+c) + a_{d-1})(n+c) + ...)
        let step = Poly::from_coeffs(vec![c.clone(), rat(1)]);
        let mut acc = Poly::zero();
        for i in (0..self.num.len()).rev() {
            acc = &acc * &step;
            acc += &Poly::constant(self.coeff(i));
        }
        acc
    }

    /// The polynomial `p(-n)`.
    pub fn reflect(&self) -> Poly {
        Poly {
            num: self
                .num
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
            den: self.den.clone(),
        }
    }

    /// Adds `a * b` into `self`.
    pub fn add_product(&mut self, a: &Poly, b: &Poly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Renders as e.g. `7*n^3 - 2/3*n + 1`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono));
            }
        }
        out
    }
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_pretty())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

fn add_scaled(a: &Poly, b: &Poly, sign: i8) -> Poly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign < 0 { -b } else { b.clone() };
    }
    let g = a.den.gcd(&b.den);
    let fa = &b.den / &g;
    let fb = &a.den / &g;
    let den = &a.den * &fa;
    let len = a.num.len().max(b.num.len());
    let mut num = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.num.get(i).map(|c| c * &fa).unwrap_or_default();
        let y = b.num.get(i).map(|c| c * &fb).unwrap_or_default();
        num.push(if sign < 0 { x - y } else { x + y });
    }
    Poly { num, den }.normalized()
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_scaled(self, rhs, 1)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_scaled(self, rhs, -1)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = add_scaled(self, rhs, 1);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = add_scaled(self, rhs, -1);
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        Poly {
            num,
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Serialized as an array of `"p/q"` strings, lowest degree first.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn zero_is_canonical() {
        let p = Poly::from_coeffs(vec![rat(0), rat(0)]);
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero());
        assert_eq!(p.degree(), None);
        let q = Poly::n() - Poly::n();
        assert_eq!(q, Poly::zero());
    }

    #[test]
    fn mixed_denominators_reduce() {
        let p = Poly::from_coeffs(vec![ratio(1, 2), ratio(1, 3)]);
        let q = Poly::from_coeffs(vec![ratio(1, 2), ratio(2, 3)]);
        let s = &p + &q;
        assert_eq!(s.coeffs(), vec![rat(1), rat(1)]);
        assert_eq!(s, Poly::n_plus(1));
    }

    #[test]
    fn multiplication_and_evaluation() {
        // (n+1)(n-1) = n^2 - 1
        let p = Poly::n_plus(1) * Poly::n_plus(-1);
        assert_eq!(p, Poly::from_integers([-1, 0, 1]));
        assert_eq!(p.eval_i64(5), rat(24));
    }

    #[test]
    fn translate_and_reflect() {
        let p = Poly::from_integers([0, 0, 1]); // n^2
        assert_eq!(p.translate(&rat(1)), Poly::from_integers([1, 2, 1]));
        assert_eq!(Poly::n_plus(3).reflect(), Poly::from_integers([3, -1]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(Poly::from_integers([0, 1, 0, 1]).to_pretty(), "n^3 + n");
        assert_eq!(
            Poly::from_coeffs(vec![rat(-1), ratio(-2, 3)]).to_pretty(),
            "-2/3*n - 1"
        );
    }

    #[test]
    fn serde_uses_rational_strings() {
        let p = Poly::from_coeffs(vec![ratio(1, 2), rat(0), rat(-3)]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["1/2","0","-3"]"#);
        let back: Poly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
